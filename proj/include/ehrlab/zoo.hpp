#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ehrlab/hstar.hpp"
#include "ehrlab/polytope.hpp"

namespace ehrlab {

/// Elements 1..n; (a, b) in covers means a is covered by b.
class Poset {
 public:
  /// Throws Error(BadParameter) on cycles, bad indices or covers implied
  /// by transitivity.
  static Poset make(int n, std::vector<std::pair<int, int>> covers);

  int size() const noexcept { return n_; }
  const std::vector<std::pair<int, int>>& covers() const noexcept { return covers_; }
  /// a < b strictly.
  bool less(int a, int b) const { return below_[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)]; }
  /// a < b implies a has the smaller label.
  bool naturally_labelled() const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<bool>> below_;
};

/// Simple graph on vertices 1..n.
class Graph {
 public:
  /// Throws Error(BadParameter) on loops, repeated edges or bad indices.
  static Graph make(int n, std::vector<std::pair<int, int>> edges);
  int size() const noexcept { return n_; }
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

/// "n; a-b, c-d, ..." with an optional empty pair list.
Poset parse_poset(const std::string& text);
Graph parse_graph(const std::string& text);
std::string to_text(const Poset& p);
std::string to_text(const Graph& g);

LatticePolytope reeve(long q);
/// Dimension 2k - 1.
LatticePolytope generalized_reeve(long q, int k);
LatticePolytope standard_reflexive_simplex(int d);
LatticePolytope cross_polytope(int d);
LatticePolytope cube(int d, long side);
/// Product of segments [0, c_i].
LatticePolytope prism(const std::vector<long>& sides);
LatticePolytope hypersimplex(int k, int n);

/// {x in [0,1]^n : x_a <= x_b whenever a < b}.
LatticePolytope order_polytope(const Poset& p);
/// Descent generating function of the linear extensions.
/// Throws Error(TooManyLinearExtensions) past `budget`.
HStarVector order_polytope_hstar(const Poset& p, std::size_t budget = 10'000'000);
Poset stembridge_poset();
/// One bottom element below n incomparable elements.
Poset fan_poset(int n);
/// Ehrhart polynomial of order_polytope(fan_poset(n)), a pyramid over [0,1]^n.
Poly fan_poset_ehrhart(int n);

/// Throws Error(EmptyGraph).
LatticePolytope edge_polytope(const Graph& g);
LatticePolytope symmetric_edge_polytope(const Graph& g);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

/// (1 + x + ... + x^(k+r)) (1 + x^k + ... + x^(k(b-1))).
Poly payne_hstar(long b, long k, long r);
Poly payne_d7();
Poly payne_d11();

/// Columns are the candidate vertices. With expected_dim >= 0 the
/// dimension is checked (Error(NotFullRankData) on mismatch).
LatticePolytope from_matrix(const IntMatrix& columns_as_rows, int expected_dim = -1);

/// Free sum of generalized Reeve simplices chosen so that the Ehrhart
/// series fails to be log-concave at m = n_i - 1 for every i.
struct SeriesFailureScheme {
  int k = 0;
  std::vector<int> n;
  std::vector<Integer> m;
  int d = 0;
  std::vector<int> predicted;
};

/// Smallest admissible m_i for the given exponents n_1 < ... < n_k.
SeriesFailureScheme series_failure_scheme(std::vector<int> n);
/// The standard exponents n_1 = 3k - 2, n_i = n_1 + 3(i - 1).
SeriesFailureScheme series_failure_scheme(int k);
std::vector<LatticePolytope> series_failure_summands(const SeriesFailureScheme& s);

/// Fixture with the values printed for it. An input descriptor rebuilds
/// it through resolve_polytope / the CLI.
struct Fixture {
  enum class Kind { Polytope, OrderHStar, Literal };
  std::string name;
  std::string family;
  std::string input;
  Kind kind = Kind::Polytope;
  int dim = 0;
  std::optional<Poly> ehrhart;
  std::vector<long> hstar;
  std::optional<bool> idp;
  std::optional<bool> spanning;
  std::optional<bool> reflexive;
  std::optional<bool> cl;
  std::optional<bool> unimodal;
  std::optional<bool> log_concave;
};

const std::vector<Fixture>& fixture_registry();
const Fixture& fixture(const std::string& name);
/// Names accepted after "registry:".
std::vector<std::string> registry_names();

/// "registry:name" or "family:args" (reeve:q, generalized_reeve:q,k,
/// reflexive_simplex:d, cross:d, cube:d,side, prism:c1,..., hypersimplex:k,n,
/// order:stembridge | order:fanN | order:<poset>, edge:<graph>, sep:<graph>).
/// Error(ParseError) on malformed input.
LatticePolytope resolve_polytope(const std::string& descriptor);
/// Poset named by "order:..." descriptors.
Poset resolve_poset(const std::string& descriptor);
/// Polynomial-only descriptors (payne:d7, payne:d11, payne:b,k,r).
std::optional<Poly> resolve_literal_hstar(const std::string& descriptor);

}  // namespace ehrlab
