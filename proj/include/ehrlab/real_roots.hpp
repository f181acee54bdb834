#pragma once

#include <vector>

#include "ehrlab/poly.hpp"

namespace ehrlab {

/// p / gcd(p, p'), monic. Throws Error(ZeroPolynomial).
Poly squarefree_part(const Poly& p);

/// Sturm sequence of p (p, p', -rem, ...), each member scaled by a
/// positive constant to keep integer coefficients primitive.
std::vector<Poly> sturm_chain(const Poly& p);

/// Number of distinct real roots of p.
int count_real_roots(const Poly& p);

/// Number of distinct real roots in the half-open interval (lo, hi].
int count_real_roots(const Poly& p, const Rat& lo, const Rat& hi);

/// True iff every complex root of p is real. Throws Error(ZeroPolynomial).
/// Nonzero constants have no roots and are real-rooted.
bool is_real_rooted(const Poly& p);

/// N with p(x) > 0 for all real x >= N, from the Cauchy root bound
/// 1 + max |c_i / c_deg|. Throws Error(NonpositiveLeadingCoefficient).
Rat positivity_tail_bound(const Poly& p);

/// Half-open interval (lo, hi] holding exactly one real root.
struct RootInterval {
  Rat lo;
  Rat hi;
};

/// Disjoint isolating intervals for the distinct real roots of p, in
/// increasing order, each no wider than max_width.
std::vector<RootInterval> isolate_real_roots(const Poly& p, const Rat& max_width = Rat(1));

/// All rational roots of p (distinct, increasing).
std::vector<Rat> rational_roots(const Poly& p);

}  // namespace ehrlab
