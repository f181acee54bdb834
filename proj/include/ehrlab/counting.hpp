#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ehrlab/checks.hpp"
#include "ehrlab/hstar.hpp"
#include "ehrlab/polytope.hpp"

namespace ehrlab {

inline constexpr std::size_t kDefaultBudget = 10'000'000;

/// Lattice points of dilates mP, counted in the lattice of aff(P).
///
/// Coordinates are enumerated one at a time; the feasible range of each is
/// read off the facets of the projection of P onto the coordinates fixed
/// so far, and the last coordinate is counted as an interval.
class LatticeCounter {
 public:
  explicit LatticeCounter(const LatticePolytope& p);

  /// strict counts the relative interior.
  Integer count(long m, bool strict = false) const;
  /// Visits every point of mP (reduced coordinates) in lexicographic order
  /// of the internal coordinate order. Throws Error(ScaleLimit) after
  /// `budget` points.
  std::vector<std::vector<long>> enumerate(long m, bool strict = false, std::size_t budget = kDefaultBudget) const;

  int dim() const noexcept { return r_; }

 private:
  struct Row {
    std::vector<long> a;
    long b = 0;
  };
  int r_ = 0;
  std::vector<int> order_;  ///< level k fixes reduced coordinate order_[k]
  std::vector<std::vector<Row>> levels_;

  template <typename Leaf>
  void walk(int level, long m, long slack, std::vector<long>& x, Leaf&& leaf) const;
};

Integer count(const LatticePolytope& p, long m, bool strict = false);
/// Lattice points of mP in ambient coordinates, lexicographically sorted.
std::vector<IntVec> enumerate(const LatticePolytope& p, long m, bool strict = false, std::size_t budget = kDefaultBudget);

struct EhrhartProfile {
  Poly ehrhart;
  HStarVector hstar;
  int d = 0;
  int s = 0;
  int codegree = 0;
  /// Smallest m in 1..d+1 with an interior lattice point in mP.
  std::optional<int> lambda;
  /// E(0), ..., E(d) as counted.
  std::vector<Integer> counts;
};

EhrhartProfile ehrhart(const LatticePolytope& p);

/// Throws Error(NotASimplex).
HStarVector simplex_hstar(const LatticePolytope& s);

/// h* of the free sum of full-dimensional simplices that each have the
/// origin as a vertex, from the per-summand parallelepiped data.
HStarVector free_sum_simplex_hstar(std::span<const LatticePolytope> summands);

/// (-1)^d E(-m) equals the interior count of mP for m = 1..max_m.
Verdict reciprocity_check(const LatticePolytope& p, const EhrhartProfile& profile, int max_m);

bool is_spanning(const LatticePolytope& p);

/// Compares (P∩Z^n) + ... + (P∩Z^n) with kP∩Z^n for k = 2..max(2, d-1).
/// Witness of a failure: k followed by the smallest missing point.
Verdict is_idp(const LatticePolytope& p, std::size_t budget = kDefaultBudget);

/// Throws Error(NoUniqueInteriorPoint).
bool is_reflexive(const LatticePolytope& p);
bool gorenstein_via_hstar(const EhrhartProfile& profile);

}  // namespace ehrlab
