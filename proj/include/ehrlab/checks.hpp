#pragma once

#include <span>
#include <string>
#include <vector>

#include "ehrlab/hstar.hpp"
#include "ehrlab/poly.hpp"

namespace ehrlab {

/// Outcome of an inequality check. A failed verdict always carries a
/// witness: indices, a composition, or an evaluation point, plus the
/// exact values that violate the inequality.
struct Verdict {
  bool holds = true;
  std::vector<long> witness;
  std::vector<Rat> values;
  std::string detail;

  explicit operator bool() const noexcept { return holds; }

  static Verdict pass(std::string detail = {});
  static Verdict fail(std::vector<long> witness, std::vector<Rat> values, std::string detail);
};

/// Single peak: c_0 <= ... <= c_j >= ... >= c_n. The witness of a failure
/// is the valley index (an interior local minimum after a strict descent).
Verdict is_unimodal(std::span<const Rat> c);

/// Strictly positive entries and c_i^2 >= c_{i-1} c_{i+1}. Witness: the
/// first offending index (a zero entry or a failed interior inequality).
Verdict is_log_concave(std::span<const Rat> c);

/// The inequality alone, zeros allowed. Not used in implication checks.
Verdict is_weakly_log_concave(std::span<const Rat> c);

/// All entries >= 0.
Verdict is_nonnegative(std::span<const Rat> c);

/// Minors of the upper-triangular Toeplitz matrix of h with rows
/// (0, i1, i1+i2, ...) and columns (i1, i1+i2, ..., i1+...+is), for all
/// compositions with i1+...+is <= max_total. Witness: the composition.
Verdict toeplitz_minor_check(const HStarVector& h, int max_total);
Verdict toeplitz_minor_check(const HStarVector& h);

/// The five general-polytope families, reported separately.
struct BatteryReport {
  Verdict hibi_partial_sums;     ///< h2+..+hi >= h_{d-1}+..+h_{d-i+1}
  Verdict stanley_partial_sums;  ///< h0+..+hi <= hs+..+h_{s-i}
  Verdict hibi_lower_bound;      ///< s = d: h1 <= hi
  Verdict stapledon;             ///< s <= d-1: h0+h1 <= hi+..+h_{i-(d-s)}
  Verdict h1_ge_hd;
  bool hibi_lower_bound_applies = false;
  bool stapledon_applies = false;
  /// Some Stapledon window reached below index 0; those terms count as 0.
  bool stapledon_window_truncated = false;

  bool all_hold() const;
};

BatteryReport general_inequality_battery(const HStarVector& h);

/// Log-concavity of E(0), E(1), E(2), ... decided with the tail bound of
/// g(x) = E(x)^2 - E(x-1)E(x+1). Witness: least violating m.
/// Throws Error(NonpositiveLeadingCoefficient) / Error(NonpositiveEvaluation).
Verdict series_log_concavity(const Poly& e);

/// Log-concavity of |E(-m)| for m >= codegree after checking the forced
/// zeros E(-1) = ... = E(-codegree+1) = 0. Witness: least violating m.
Verdict negative_evaluation_log_concavity(const Poly& e, int d);

/// All complex roots of E on Re(z) = -1/2, decided exactly.
bool cl_check(const Poly& e);

/// All complex roots of h on the unit circle, decided exactly.
bool roots_on_unit_circle(const Poly& h);

struct HurwitzVerdict {
  bool cl = false;
  bool nonnegative = false;
  /// cl implies nonnegative.
  bool consistent = true;
};

HurwitzVerdict hurwitz_implies_positive(const Poly& e);

/// g(x) = E(x)^2 - E(x-1)E(x+1).
Poly series_gap_poly(const Poly& e);

}  // namespace ehrlab
