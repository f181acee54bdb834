#include "ehrlab/counting.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "ehrlab/error.hpp"

namespace ehrlab {

namespace {

using i128 = __int128;

long narrow(const Integer& x) { return static_cast<long>(to_int64(x)); }

long narrow128(i128 v) {
  if (v > std::numeric_limits<long>::max() || v < std::numeric_limits<long>::min()) {
    throw Error(ErrorCode::ScaleLimit, "coordinate overflow in lattice enumeration");
  }
  return static_cast<long>(v);
}

i128 floor_div128(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 ceil_div128(i128 a, i128 b) { return -floor_div128(-a, b); }

// Parallelepiped data of the cone over a simplex with vertex 0 and the
// given other vertices: for each element of Z^d / W Z^d, the sum of the
// fractional coordinates, as a numerator over `denominator`.
struct SigmaData {
  std::vector<long> numerators;
  long denominator = 1;
  int dim = 0;
};

SigmaData sigma_data(const std::vector<IntVec>& others) {
  SigmaData out;
  const std::size_t d = others.size();
  out.dim = static_cast<int>(d);
  if (d == 0) {
    out.numerators = {0};
    return out;
  }
  IntMatrix w(d, IntVec(d));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) w[i][j] = others[j][i];
  SmithForm snf = smith_normal_form(w);
  if (snf.rank != static_cast<int>(d)) throw Error(ErrorCode::NotASimplex, "vertices are affinely dependent");
  // With U W V = S, representatives U^{-1} c have coordinates V S^{-1} c.
  const Integer big = snf.divisors.back();
  const long den = narrow(big);
  Integer order = 1;
  for (const auto& s : snf.divisors) order *= s;
  if (order > Integer(static_cast<long>(kDefaultBudget) * 10)) {
    throw Error(ErrorCode::ScaleLimit, "normalized volume " + order.get_str() + " is too large to enumerate");
  }
  out.denominator = den;
  std::vector<long> radix(d);
  std::vector<std::vector<long>> step(d, std::vector<long>(d));
  for (std::size_t i = 0; i < d; ++i) {
    radix[i] = narrow(snf.divisors[i]);
    Integer scale = big / snf.divisors[i];
    for (std::size_t j = 0; j < d; ++j) {
      Integer v = snf.v[j][i] * scale;
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), big.get_mpz_t());
      step[i][j] = narrow(r);
    }
  }
  std::vector<long> digit(d, 0);
  std::vector<long> lam(d, 0);  // D * fractional coordinates
  const long total = narrow(order);
  out.numerators.reserve(static_cast<std::size_t>(total));
  for (long e = 0; e < total; ++e) {
    long s = 0;
    for (long v : lam) s += v;
    out.numerators.push_back(s);
    // Odometer step; a wrapping digit also contributes step[i] modulo D.
    for (std::size_t i = 0; i < d; ++i) {
      if (radix[i] == 1) continue;
      for (std::size_t j = 0; j < d; ++j) {
        lam[j] += step[i][j];
        if (lam[j] >= den) lam[j] -= den;
      }
      if (++digit[i] < radix[i]) break;
      digit[i] = 0;
    }
  }
  return out;
}

HStarVector hstar_from_sigma(const std::vector<long>& numerators, long den, int d) {
  std::vector<Integer> h(static_cast<std::size_t>(d) + 1, Integer(0));
  for (long s : numerators) {
    long k = (s + den - 1) / den;
    h[static_cast<std::size_t>(k)] += 1;
  }
  return HStarVector(std::move(h), d);
}

std::vector<IntVec> nonzero_vertices_at_origin(const LatticePolytope& p) {
  if (!p.is_simplex()) throw Error(ErrorCode::NotASimplex, "polytope is not a simplex");
  std::vector<IntVec> out;
  for (std::size_t i = 1; i < p.reduced_vertices().size(); ++i) out.push_back(p.reduced_vertices()[i]);
  return out;
}

}  // namespace

LatticeCounter::LatticeCounter(const LatticePolytope& p) : r_(p.dim()) {
  if (r_ == 0) return;
  const auto& verts = p.reduced_vertices();
  // Narrow coordinates first; the widest one is counted as an interval.
  std::vector<Integer> width(static_cast<std::size_t>(r_));
  for (int c = 0; c < r_; ++c) {
    Integer lo = verts[0][static_cast<std::size_t>(c)], hi = lo;
    for (const auto& v : verts) {
      lo = std::min(lo, v[static_cast<std::size_t>(c)]);
      hi = std::max(hi, v[static_cast<std::size_t>(c)]);
    }
    width[static_cast<std::size_t>(c)] = hi - lo;
  }
  order_.resize(static_cast<std::size_t>(r_));
  std::iota(order_.begin(), order_.end(), 0);
  std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
    return width[static_cast<std::size_t>(a)] < width[static_cast<std::size_t>(b)];
  });

  levels_.resize(static_cast<std::size_t>(r_));
  for (int k = 1; k <= r_; ++k) {
    std::vector<IntVec> proj;
    for (const auto& v : verts) {
      IntVec q(static_cast<std::size_t>(k));
      for (int c = 0; c < k; ++c) q[static_cast<std::size_t>(c)] = v[static_cast<std::size_t>(order_[static_cast<std::size_t>(c)])];
      proj.push_back(std::move(q));
    }
    std::sort(proj.begin(), proj.end());
    proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
    FullDimFacets fd = full_dimensional_facets(proj);
    for (const auto& f : fd.facets) {
      Row row;
      for (const auto& x : f.a) row.a.push_back(narrow(x));
      row.b = narrow(f.b);
      levels_[static_cast<std::size_t>(k - 1)].push_back(std::move(row));
    }
  }
}

template <typename Leaf>
void LatticeCounter::walk(int level, long m, long slack, std::vector<long>& x, Leaf&& leaf) const {
  i128 lo = std::numeric_limits<long>::min();
  i128 hi = std::numeric_limits<long>::max();
  for (const auto& row : levels_[static_cast<std::size_t>(level)]) {
    i128 rhs = static_cast<i128>(m) * row.b - slack;
    for (int j = 0; j < level; ++j) rhs -= static_cast<i128>(row.a[static_cast<std::size_t>(j)]) * x[static_cast<std::size_t>(j)];
    const long c = row.a[static_cast<std::size_t>(level)];
    if (c == 0) {
      if (rhs < 0) return;
    } else if (c > 0) {
      hi = std::min(hi, floor_div128(rhs, c));
    } else {
      lo = std::max(lo, ceil_div128(rhs, c));
    }
    if (lo > hi) return;
  }
  if (level == r_ - 1) {
    leaf(narrow128(lo), narrow128(hi), x);
    return;
  }
  for (i128 v = lo; v <= hi; ++v) {
    x[static_cast<std::size_t>(level)] = static_cast<long>(v);
    walk(level + 1, m, slack, x, leaf);
  }
}

Integer LatticeCounter::count(long m, bool strict) const {
  if (m < 0) throw Error(ErrorCode::BadParameter, "negative dilation factor");
  if (r_ == 0) return 1;
  Integer total = 0;
  long small = 0;
  std::vector<long> x(static_cast<std::size_t>(r_), 0);
  walk(0, m, strict ? 1 : 0, x, [&](long lo, long hi, const std::vector<long>&) {
    small += hi - lo + 1;
    if (small > (1L << 60)) {
      total += small;
      small = 0;
    }
  });
  total += small;
  return total;
}

std::vector<std::vector<long>> LatticeCounter::enumerate(long m, bool strict, std::size_t budget) const {
  if (m < 0) throw Error(ErrorCode::BadParameter, "negative dilation factor");
  std::vector<std::vector<long>> out;
  if (r_ == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<long> x(static_cast<std::size_t>(r_), 0);
  walk(0, m, strict ? 1 : 0, x, [&](long lo, long hi, std::vector<long>& prefix) {
    if (out.size() + static_cast<std::size_t>(hi - lo + 1) > budget) {
      throw Error(ErrorCode::ScaleLimit, "more than " + std::to_string(budget) + " lattice points");
    }
    for (long v = lo; v <= hi; ++v) {
      std::vector<long> pt(static_cast<std::size_t>(r_));
      for (int k = 0; k + 1 < r_; ++k) pt[static_cast<std::size_t>(order_[static_cast<std::size_t>(k)])] = prefix[static_cast<std::size_t>(k)];
      pt[static_cast<std::size_t>(order_.back())] = v;
      out.push_back(std::move(pt));
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

Integer count(const LatticePolytope& p, long m, bool strict) { return LatticeCounter(p).count(m, strict); }

std::vector<IntVec> enumerate(const LatticePolytope& p, long m, bool strict, std::size_t budget) {
  LatticeCounter counter(p);
  const auto& basis = p.lattice();
  IntVec origin = basis.origin;
  for (auto& x : origin) x *= m;
  std::vector<IntVec> out;
  for (const auto& y : counter.enumerate(m, strict, budget)) {
    IntVec x = origin;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) x[i] += basis.from_reduced[i][j] * y[j];
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

EhrhartProfile ehrhart(const LatticePolytope& p) {
  LatticeCounter counter(p);
  EhrhartProfile prof;
  prof.d = p.dim();
  std::vector<std::pair<Rat, Rat>> pts;
  for (int m = 0; m <= prof.d; ++m) {
    prof.counts.push_back(counter.count(m));
    pts.emplace_back(Rat(m), Rat(prof.counts.back()));
  }
  prof.ehrhart = interpolate(pts);
  const Integer check = counter.count(prof.d + 1);
  if (prof.ehrhart(Rat(prof.d + 1)) != Rat(check)) {
    throw std::logic_error("lattice count at d+1 disagrees with the interpolated polynomial");
  }
  prof.hstar = HStarVector::from_poly(hstar_from_poly(prof.ehrhart, prof.d), prof.d);
  prof.s = prof.hstar.degree();
  prof.codegree = prof.d + 1 - prof.s;
  for (int m = 1; m <= prof.d + 1; ++m) {
    if (counter.count(m, true) > 0) {
      prof.lambda = m;
      break;
    }
  }
  return prof;
}

HStarVector simplex_hstar(const LatticePolytope& s) {
  SigmaData sd = sigma_data(nonzero_vertices_at_origin(s));
  return hstar_from_sigma(sd.numerators, sd.denominator, s.dim());
}

HStarVector free_sum_simplex_hstar(std::span<const LatticePolytope> summands) {
  if (summands.empty()) throw Error(ErrorCode::BadParameter, "free sum of nothing");
  std::vector<SigmaData> parts;
  int d = 0;
  for (const auto& p : summands) {
    if (p.dim() != p.ambient_dim()) throw Error(ErrorCode::BadParameter, "free sum summands must be full-dimensional");
    IntVec zero(static_cast<std::size_t>(p.ambient_dim()), Integer(0));
    if (std::find(p.vertices().begin(), p.vertices().end(), zero) == p.vertices().end()) {
      throw Error(ErrorCode::OriginNotVertex, "summand does not have the origin as a vertex");
    }
    if (!p.is_simplex()) throw Error(ErrorCode::NotASimplex, "free sum summand is not a simplex");
    std::vector<IntVec> others;
    for (const auto& v : p.vertices()) {
      if (v != zero) others.push_back(v);
    }
    parts.push_back(sigma_data(others));
    d += p.dim();
  }
  // Common denominator for all fractional sums.
  long den = 1;
  for (const auto& sd : parts) den = std::lcm(den, sd.denominator);
  auto scaled = [&](const SigmaData& sd) {
    std::map<long, long> hist;
    for (long s : sd.numerators) hist[narrow128(static_cast<i128>(s) * (den / sd.denominator))] += 1;
    return hist;
  };
  // Fold all summands but the last explicitly.
  std::map<long, Integer> folded{{0, Integer(1)}};
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    std::map<long, Integer> next;
    for (const auto& [s, c] : scaled(parts[i])) {
      for (const auto& [t, e] : folded) next[narrow128(static_cast<i128>(s) + t)] += e * c;
    }
    folded = std::move(next);
  }
  std::vector<long> last;
  for (const auto& [s, c] : scaled(parts.back())) last.insert(last.end(), static_cast<std::size_t>(c), s);
  std::sort(last.begin(), last.end());
  auto at_most = [&](i128 t) {
    return static_cast<long>(std::upper_bound(last.begin(), last.end(), t, [](i128 a, long b) { return a < b; }) - last.begin());
  };
  std::vector<Integer> h(static_cast<std::size_t>(d) + 1, Integer(0));
  for (const auto& [x, mult] : folded) {
    for (int k = 0; k <= d; ++k) {
      // ceil((x + y) / den) = k  <=>  (k-1) den < x + y <= k den
      i128 hi = static_cast<i128>(k) * den - x;
      i128 lo = static_cast<i128>(k - 1) * den - x;
      long c = at_most(hi) - at_most(lo);
      if (c) h[static_cast<std::size_t>(k)] += mult * c;
    }
  }
  return HStarVector(std::move(h), d);
}

Verdict reciprocity_check(const LatticePolytope& p, const EhrhartProfile& profile, int max_m) {
  LatticeCounter counter(p);
  for (int m = 1; m <= max_m; ++m) {
    Rat e = profile.ehrhart(Rat(-m));
    if (profile.d % 2 == 1) e = -e;
    Integer interior = counter.count(m, true);
    if (e != Rat(interior)) {
      return Verdict::fail({m}, {e, Rat(interior)}, "reciprocity fails at m = " + std::to_string(m));
    }
  }
  return Verdict::pass();
}

bool is_spanning(const LatticePolytope& p) {
  LatticeCounter counter(p);
  std::vector<IntVec> pts;
  for (const auto& y : counter.enumerate(1)) {
    IntVec v;
    for (long c : y) v.emplace_back(c);
    pts.push_back(std::move(v));
  }
  AffineLatticeBasis b = affine_lattice_basis(pts);
  return b.rank == p.dim() && b.spans();
}

Verdict is_idp(const LatticePolytope& p, std::size_t budget) {
  if (p.dim() < 1) throw Error(ErrorCode::BadParameter, "IDP test needs dimension at least 1");
  LatticeCounter counter(p);
  const auto s1 = counter.enumerate(1, false, budget);
  auto sk = s1;
  const int top = std::max(2, p.dim() - 1);
  for (int k = 2; k <= top; ++k) {
    auto target = counter.enumerate(k, false, budget);
    std::vector<std::vector<long>> sums;
    sums.reserve(std::min(budget, sk.size() * s1.size()));
    for (const auto& a : sk) {
      for (const auto& b : s1) {
        std::vector<long> c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
        sums.push_back(std::move(c));
      }
      if (sums.size() > 4 * budget) {
        std::sort(sums.begin(), sums.end());
        sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
        if (sums.size() > budget) throw Error(ErrorCode::ScaleLimit, "IDP sumset exceeds the budget");
      }
    }
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    if (sums.size() > budget) throw Error(ErrorCode::ScaleLimit, "IDP sumset exceeds the budget");
    if (sums != target) {
      // Smallest missing point, reported in ambient coordinates.
      const auto& basis = p.lattice();
      std::vector<IntVec> missing;
      for (const auto& t : target) {
        if (std::binary_search(sums.begin(), sums.end(), t)) continue;
        IntVec x = basis.origin;
        for (auto& c : x) c *= k;
        for (std::size_t i = 0; i < x.size(); ++i)
          for (std::size_t j = 0; j < t.size(); ++j) x[i] += basis.from_reduced[i][j] * t[j];
        missing.push_back(std::move(x));
      }
      auto smallest = *std::min_element(missing.begin(), missing.end());
      std::vector<long> witness{k};
      for (const auto& c : smallest) witness.push_back(narrow(c));
      return Verdict::fail(std::move(witness), {Rat(static_cast<long>(missing.size()))},
                           std::to_string(missing.size()) + " points of " + std::to_string(k) + "P are not sums");
    }
    sk = std::move(sums);
  }
  return Verdict::pass("checked k <= " + std::to_string(top));
}

bool is_reflexive(const LatticePolytope& p) {
  LatticeCounter counter(p);
  auto inner = counter.enumerate(1, true);
  if (inner.size() != 1) {
    throw Error(ErrorCode::NoUniqueInteriorPoint,
                "polytope has " + std::to_string(inner.size()) + " interior lattice points");
  }
  const auto& c = inner[0];
  for (const auto& f : p.reduced_facets()) {
    Integer v = f.b;
    for (std::size_t i = 0; i < c.size(); ++i) v -= f.a[i] * c[i];
    if (v != 1) return false;
  }
  return true;
}

bool gorenstein_via_hstar(const EhrhartProfile& profile) { return is_palindromic(profile.hstar); }

}  // namespace ehrlab
