#include "ehrlab/zoo.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <sstream>

#include "ehrlab/error.hpp"

namespace ehrlab {

namespace {

IntVec unit(int n, int i, long scale = 1) {
  IntVec v(static_cast<std::size_t>(n), Integer(0));
  v[static_cast<std::size_t>(i)] = scale;
  return v;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParameter, what);
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

long parse_long(const std::string& s) {
  long v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw Error(ErrorCode::ParseError, "expected an integer, got '" + s + "'");
  return v;
}

std::vector<long> parse_longs(const std::string& s) {
  std::vector<long> out;
  if (trim(s).empty()) return out;
  for (const auto& t : split(s, ',')) out.push_back(parse_long(t));
  return out;
}

// "n; a-b, c-d"
std::pair<int, std::vector<std::pair<int, int>>> parse_pairs(const std::string& text) {
  auto parts = split(text, ';');
  if (parts.size() > 2) throw Error(ErrorCode::ParseError, "expected 'n; a-b, ...'");
  const long n = parse_long(parts[0]);
  std::vector<std::pair<int, int>> pairs;
  if (parts.size() == 2 && !parts[1].empty()) {
    for (const auto& item : split(parts[1], ',')) {
      auto ab = split(item, '-');
      if (ab.size() != 2) throw Error(ErrorCode::ParseError, "bad pair '" + item + "'");
      pairs.emplace_back(static_cast<int>(parse_long(ab[0])), static_cast<int>(parse_long(ab[1])));
    }
  }
  return {static_cast<int>(n), std::move(pairs)};
}

std::string pairs_text(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::ostringstream os;
  os << n << ";";
  for (std::size_t i = 0; i < pairs.size(); ++i) os << (i ? ", " : " ") << pairs[i].first << "-" << pairs[i].second;
  return os.str();
}

}  // namespace

Poset Poset::make(int n, std::vector<std::pair<int, int>> covers) {
  require(n >= 0, "negative poset size");
  Poset p;
  p.n_ = n;
  const auto N = static_cast<std::size_t>(n);
  std::vector<std::vector<int>> up(N);
  for (auto [a, b] : covers) {
    require(a >= 1 && a <= n && b >= 1 && b <= n && a != b, "bad cover " + std::to_string(a) + "-" + std::to_string(b));
    up[static_cast<std::size_t>(a - 1)].push_back(b - 1);
  }
  // below_[b][a]: a < b. Kahn order detects cycles.
  std::vector<int> indeg(N, 0);
  for (const auto& u : up)
    for (int b : u) ++indeg[static_cast<std::size_t>(b)];
  std::vector<int> topo;
  for (int i = 0; i < n; ++i)
    if (indeg[static_cast<std::size_t>(i)] == 0) topo.push_back(i);
  for (std::size_t h = 0; h < topo.size(); ++h) {
    for (int b : up[static_cast<std::size_t>(topo[h])])
      if (--indeg[static_cast<std::size_t>(b)] == 0) topo.push_back(b);
  }
  require(topo.size() == N, "cover relation has a cycle");
  p.below_.assign(N, std::vector<bool>(N, false));
  for (int a : topo) {
    for (int b : up[static_cast<std::size_t>(a)]) {
      auto& row = p.below_[static_cast<std::size_t>(b)];
      row[static_cast<std::size_t>(a)] = true;
      for (std::size_t c = 0; c < N; ++c)
        if (p.below_[static_cast<std::size_t>(a)][c]) row[c] = true;
    }
  }
  std::sort(covers.begin(), covers.end());
  require(std::adjacent_find(covers.begin(), covers.end()) == covers.end(), "repeated cover");
  for (auto [a, b] : covers) {
    for (int c = 1; c <= n; ++c) {
      require(!(c != a && c != b && p.less(a, c) && p.less(c, b)),
              "cover " + std::to_string(a) + "-" + std::to_string(b) + " is implied by transitivity");
    }
  }
  p.covers_ = std::move(covers);
  return p;
}

bool Poset::naturally_labelled() const {
  return std::all_of(covers_.begin(), covers_.end(), [](const auto& c) { return c.first < c.second; });
}

Graph Graph::make(int n, std::vector<std::pair<int, int>> edges) {
  require(n >= 0, "negative graph size");
  for (auto& [a, b] : edges) {
    require(a >= 1 && a <= n && b >= 1 && b <= n, "edge endpoint out of range");
    require(a != b, "loop at " + std::to_string(a));
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  require(std::adjacent_find(edges.begin(), edges.end()) == edges.end(), "repeated edge");
  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  return g;
}

Poset parse_poset(const std::string& text) {
  auto [n, pairs] = parse_pairs(text);
  try {
    return Poset::make(n, std::move(pairs));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Graph parse_graph(const std::string& text) {
  auto [n, pairs] = parse_pairs(text);
  try {
    return Graph::make(n, std::move(pairs));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string to_text(const Poset& p) { return pairs_text(p.size(), p.covers()); }
std::string to_text(const Graph& g) { return pairs_text(g.size(), g.edges()); }

LatticePolytope reeve(long q) {
  require(q >= 0, "Reeve parameter must be >= 0");
  return LatticePolytope::from_points({to_int_vec({0, 0, 0}), to_int_vec({1, 0, 0}), to_int_vec({0, 1, 0}), to_int_vec({1, q, q + 1})});
}

LatticePolytope generalized_reeve(long q, int k) {
  require(q >= 0 && k >= 2, "generalized Reeve needs q >= 0, k >= 2");
  const int d = 2 * k - 1;
  std::vector<IntVec> v{IntVec(static_cast<std::size_t>(d), Integer(0))};
  for (int i = 0; i + 1 < d; ++i) v.push_back(unit(d, i));
  IntVec apex;
  for (int i = 0; i < k - 1; ++i) apex.emplace_back(1);
  for (int i = 0; i < k - 1; ++i) apex.emplace_back(q);
  apex.emplace_back(q + 1);
  v.push_back(std::move(apex));
  return LatticePolytope::from_points(std::move(v));
}

LatticePolytope standard_reflexive_simplex(int d) {
  require(d >= 1, "dimension must be >= 1");
  std::vector<IntVec> v;
  for (int i = 0; i < d; ++i) v.push_back(unit(d, i));
  v.emplace_back(static_cast<std::size_t>(d), Integer(-1));
  return LatticePolytope::from_points(std::move(v));
}

LatticePolytope cross_polytope(int d) {
  require(d >= 1, "dimension must be >= 1");
  std::vector<IntVec> v;
  for (int i = 0; i < d; ++i) {
    v.push_back(unit(d, i));
    v.push_back(unit(d, i, -1));
  }
  return LatticePolytope::from_points(std::move(v));
}

LatticePolytope cube(int d, long side) {
  require(d >= 1 && side >= 1, "cube needs d >= 1, side >= 1");
  return prism(std::vector<long>(static_cast<std::size_t>(d), side));
}

LatticePolytope prism(const std::vector<long>& sides) {
  require(!sides.empty() && sides.size() < 20, "prism needs 1..19 sides");
  for (long c : sides) require(c >= 1, "prism sides must be >= 1");
  const std::size_t d = sides.size();
  std::vector<IntVec> v;
  for (unsigned long mask = 0; mask < (1UL << d); ++mask) {
    IntVec p;
    for (std::size_t i = 0; i < d; ++i) p.emplace_back((mask >> i & 1) ? sides[i] : 0);
    v.push_back(std::move(p));
  }
  return LatticePolytope::from_points(std::move(v));
}

LatticePolytope hypersimplex(int k, int n) {
  require(n >= 2 && k >= 1 && k <= n - 1 && n < 25, "hypersimplex needs 1 <= k <= n - 1");
  std::vector<IntVec> v;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    if (__builtin_popcountl(mask) != k) continue;
    IntVec p;
    for (int i = 0; i < n; ++i) p.emplace_back(static_cast<long>(mask >> i & 1));
    v.push_back(std::move(p));
  }
  return LatticePolytope::from_points(std::move(v));
}

LatticePolytope order_polytope(const Poset& p) {
  const int n = p.size();
  require(n >= 1, "empty poset");
  // Vertices are indicator vectors of up-sets. Decide elements in a linear
  // extension order, largest first, so closure is checked against decided ones.
  std::vector<int> order;
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  while (static_cast<int>(order.size()) < n) {
    for (int b = 1; b <= n; ++b) {
      if (placed[static_cast<std::size_t>(b - 1)]) continue;
      bool maximal = true;
      for (int c = 1; c <= n; ++c)
        if (!placed[static_cast<std::size_t>(c - 1)] && p.less(b, c)) maximal = false;
      if (maximal) {
        placed[static_cast<std::size_t>(b - 1)] = true;
        order.push_back(b);
        break;
      }
    }
  }
  std::vector<IntVec> verts;
  IntVec x(static_cast<std::size_t>(n), Integer(0));
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (verts.size() > 100000) throw Error(ErrorCode::ScaleLimit, "too many order ideals");
    if (i == order.size()) {
      verts.push_back(x);
      return;
    }
    const int a = order[i];
    // a may join the up-set only if everything above it is in.
    bool can = true;
    for (int c = 1; c <= n; ++c)
      if (p.less(a, c) && x[static_cast<std::size_t>(c - 1)] == 0) can = false;
    x[static_cast<std::size_t>(a - 1)] = 0;
    rec(i + 1);
    if (can) {
      x[static_cast<std::size_t>(a - 1)] = 1;
      rec(i + 1);
      x[static_cast<std::size_t>(a - 1)] = 0;
    }
  };
  rec(0);
  return LatticePolytope::from_points(std::move(verts));
}

HStarVector order_polytope_hstar(const Poset& p, std::size_t budget) {
  const int n = p.size();
  require(n >= 1, "empty poset");
  // Natural labelling: position in a fixed linear extension.
  std::vector<int> label(static_cast<std::size_t>(n) + 1, 0);
  {
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (int next = 1; next <= n; ++next) {
      for (int a = 1; a <= n; ++a) {
        if (used[static_cast<std::size_t>(a)]) continue;
        bool minimal = true;
        for (int c = 1; c <= n; ++c)
          if (!used[static_cast<std::size_t>(c)] && p.less(c, a)) minimal = false;
        if (minimal) {
          used[static_cast<std::size_t>(a)] = true;
          label[static_cast<std::size_t>(a)] = next;
          break;
        }
      }
    }
  }
  std::vector<int> missing_below(static_cast<std::size_t>(n) + 1, 0);
  for (int a = 1; a <= n; ++a)
    for (int c = 1; c <= n; ++c)
      if (p.less(c, a)) ++missing_below[static_cast<std::size_t>(a)];
  std::vector<std::vector<int>> above(static_cast<std::size_t>(n) + 1);
  for (int a = 1; a <= n; ++a)
    for (int c = 1; c <= n; ++c)
      if (p.less(a, c)) above[static_cast<std::size_t>(a)].push_back(c);

  std::vector<long> hist(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::size_t total = 0;
  std::function<void(int, int, int)> rec = [&](int depth, int prev, int descents) {
    if (depth == n) {
      if (++total > budget) throw Error(ErrorCode::TooManyLinearExtensions, "more than " + std::to_string(budget) + " linear extensions");
      ++hist[static_cast<std::size_t>(descents)];
      return;
    }
    for (int a = 1; a <= n; ++a) {
      if (used[static_cast<std::size_t>(a)] || missing_below[static_cast<std::size_t>(a)] != 0) continue;
      used[static_cast<std::size_t>(a)] = true;
      for (int c : above[static_cast<std::size_t>(a)]) --missing_below[static_cast<std::size_t>(c)];
      const int la = label[static_cast<std::size_t>(a)];
      rec(depth + 1, la, descents + (prev > la ? 1 : 0));
      for (int c : above[static_cast<std::size_t>(a)]) ++missing_below[static_cast<std::size_t>(c)];
      used[static_cast<std::size_t>(a)] = false;
    }
  };
  rec(0, 0, 0);
  std::vector<Integer> h;
  for (long c : hist) h.emplace_back(c);
  return HStarVector(std::move(h), n);
}

Poset stembridge_poset() {
  return Poset::make(17, {{1, 3},  {1, 12},  {2, 3},   {2, 4},   {3, 5},   {3, 14},  {4, 5},   {4, 6},   {5, 7},
                          {5, 16}, {6, 7},   {6, 8},   {7, 9},   {8, 9},   {8, 10},  {9, 11},  {10, 11}, {10, 12},
                          {11, 13}, {12, 13}, {12, 14}, {13, 15}, {14, 16}, {14, 17}, {15, 17}});
}

Poset fan_poset(int n) {
  require(n >= 1, "fan poset needs n >= 1");
  std::vector<std::pair<int, int>> covers;
  for (int i = 2; i <= n + 1; ++i) covers.emplace_back(1, i);
  return Poset::make(n + 1, std::move(covers));
}

Poly fan_poset_ehrhart(int n) {
  require(n >= 1, "fan poset needs n >= 1");
  return pyramid_ehrhart(Poly{Rat(1), Rat(1)}.pow(static_cast<unsigned>(n)));
}

LatticePolytope edge_polytope(const Graph& g) {
  if (g.edges().empty()) throw Error(ErrorCode::EmptyGraph, "graph has no edges");
  std::vector<IntVec> v;
  for (auto [a, b] : g.edges()) {
    IntVec p = unit(g.size(), a - 1);
    p[static_cast<std::size_t>(b - 1)] = 1;
    v.push_back(std::move(p));
  }
  return LatticePolytope::from_points(std::move(v));
}

LatticePolytope symmetric_edge_polytope(const Graph& g) {
  if (g.edges().empty()) throw Error(ErrorCode::EmptyGraph, "graph has no edges");
  std::vector<IntVec> v;
  for (auto [a, b] : g.edges()) {
    IntVec p = unit(g.size(), a - 1);
    p[static_cast<std::size_t>(b - 1)] = -1;
    IntVec q = p;
    for (auto& x : q) x = -x;
    v.push_back(std::move(p));
    v.push_back(std::move(q));
  }
  return LatticePolytope::from_points(std::move(v));
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) e.emplace_back(a, b);
  return Graph::make(n, std::move(e));
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int a = 1; a < n; ++a) e.emplace_back(a, a + 1);
  return Graph::make(n, std::move(e));
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  auto e = path_graph(n).edges();
  e.emplace_back(1, n);
  return Graph::make(n, std::move(e));
}

Poly payne_hstar(long b, long k, long r) {
  require(b >= 3 && r >= 0 && k >= r + 2, "payne_hstar needs b >= 3, r >= 0, k >= r + 2");
  Poly left, right;
  for (long i = 0; i <= k + r; ++i) left += Poly::monomial(Rat(1), static_cast<int>(i));
  for (long j = 0; j < b; ++j) right += Poly::monomial(Rat(1), static_cast<int>(k * j));
  return left * right;
}

Poly payne_d7() {
  const long c[] = {1, 2, 6, 5, 5, 6, 2, 1};
  return Poly::from_integers(std::vector<long long>(std::begin(c), std::end(c)));
}

Poly payne_d11() {
  const long c[] = {1, 1, 4, 6, 4, 6, 6, 4, 6, 4, 1, 1};
  return Poly::from_integers(std::vector<long long>(std::begin(c), std::end(c)));
}

LatticePolytope from_matrix(const IntMatrix& rows, int expected_dim) {
  if (rows.empty() || rows[0].empty()) throw Error(ErrorCode::BadParameter, "empty matrix");
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) throw Error(ErrorCode::BadParameter, "ragged matrix");
  auto p = LatticePolytope::from_columns(rows);
  if (expected_dim >= 0 && p.dim() != expected_dim) {
    throw Error(ErrorCode::NotFullRankData,
                "expected dimension " + std::to_string(expected_dim) + ", got " + std::to_string(p.dim()));
  }
  return p;
}

SeriesFailureScheme series_failure_scheme(std::vector<int> n) {
  require(!n.empty(), "need at least one exponent");
  require(n[0] >= 2, "exponents must be >= 2");
  for (std::size_t i = 1; i < n.size(); ++i) require(n[i] > n[i - 1], "exponents must increase");
  if (n.size() >= 2) require(n.back() < n[0] + n[1], "need n_k < n_1 + n_2");
  SeriesFailureScheme s;
  s.k = static_cast<int>(n.size());
  for (int v : n) s.d += 2 * v - 1;
  const long d = s.d;
  auto c = [&](long top) { return top < d ? Integer(0) : binomial(Integer(top), static_cast<unsigned long>(d)); };
  for (std::size_t i = 0; i < n.size(); ++i) {
    const long ni = n[i];
    Integer a = c(ni + d - 1), b = c(ni + d - 2), cc = c(ni + d);
    for (std::size_t j = 0; j < i; ++j) {
      a += s.m[j] * c(ni + d - n[j] - 1);
      b += s.m[j] * c(ni + d - n[j] - 2);
      cc += s.m[j] * c(ni + d - n[j]);
    }
    // a^2 - b (cc + m) < 0
    Integer num = a * a - b * cc;
    Integer m;
    mpz_fdiv_q(m.get_mpz_t(), num.get_mpz_t(), b.get_mpz_t());
    m += 1;
    if (m < 1) m = 1;
    s.m.push_back(m);
    s.predicted.push_back(n[i] - 1);
  }
  s.n = std::move(n);
  return s;
}

SeriesFailureScheme series_failure_scheme(int k) {
  require(k >= 1, "k must be >= 1");
  std::vector<int> n;
  for (int i = 0; i < k; ++i) n.push_back(3 * k - 2 + 3 * i);
  return series_failure_scheme(std::move(n));
}

std::vector<LatticePolytope> series_failure_summands(const SeriesFailureScheme& s) {
  std::vector<LatticePolytope> out;
  for (std::size_t i = 0; i < s.n.size(); ++i) out.push_back(generalized_reeve(to_int64(s.m[i]), s.n[i]));
  return out;
}

namespace {

Poly rat_poly(std::initializer_list<std::pair<long, long>> c) {
  std::vector<Rat> v;
  for (auto [a, b] : c) v.push_back(make_rat(a, b));
  return Poly(std::move(v));
}

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m;
  for (auto r : rows) m.push_back(to_int_vec(r));
  return m;
}

const std::map<std::string, IntMatrix>& matrices() {
  static const std::map<std::string, IntMatrix> m{
      {"spanning_nonunimodal_5simplex",
       mat({{0, 1, 0, 0, 0, 5}, {0, 0, 1, 0, 0, 5}, {0, 0, 0, 1, 0, 5}, {0, 0, 0, 0, 1, 5}, {0, 0, 0, 0, 0, 8}})},
      {"very_ample_balletti", mat({{0, 1, 0, 0, 1, 0, 1, 1}, {0, 0, 1, 0, 0, 1, 1, 1}, {0, 0, 0, 1, 1, 1, 16, 17}})},
      {"reflexive_6simplex_payne", mat({{1, 0, 0, 0, 0, 0, -1},
                                        {0, 1, 0, 0, 0, 0, -1},
                                        {0, 0, 1, 0, 0, 0, -1},
                                        {0, 0, 0, 1, 0, 0, -1},
                                        {0, 0, 0, 0, 1, 0, -1},
                                        {0, 0, 0, 0, 0, 1, -3}})},
      {"gorenstein_gamma_not_lc", mat({{1, 0, 0, 1, -9}, {0, 1, 0, 1, -5}, {0, 0, 1, 1, -3}, {0, 0, 0, 2, -2}})},
      {"cl_4dim", mat({{1, 0, 0, 0, -1}, {0, 1, 0, 0, -1}, {0, 0, 1, 0, -1}, {0, 0, 0, 1, -2}})},
      {"cl_5dim",
       mat({{1, 0, 0, 0, 0, -1}, {0, 1, 0, 0, 0, -1}, {0, 0, 1, 0, 0, -1}, {0, 0, 0, 1, 0, -2}, {0, 0, 0, 0, 1, -2}})},
      {"minkowski_p", mat({{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 2}})},
      {"minkowski_q", mat({{0, -2}, {0, -2}, {0, -2}, {0, -2}})},
      {"series_unimodal_counterexample", mat({{1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
                                              {1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0},
                                              {0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0},
                                              {0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0},
                                              {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1},
                                              {0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1},
                                              {111, 112, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1}})},
      {"ehrpos_not_series_lc", mat({{0, 1, 0, 0, 1}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, -13}})},
      {"negative_eval_4simplex", mat({{1, 0, 0, 1, -2}, {0, 1, 0, 2, -3}, {0, 0, 1, 3, -4}, {0, 0, 0, 5, -5}})},
  };
  return m;
}

const std::map<std::string, int>& matrix_dims() {
  static const std::map<std::string, int> d{
      {"spanning_nonunimodal_5simplex", 5}, {"very_ample_balletti", 3}, {"reflexive_6simplex_payne", 6},
      {"gorenstein_gamma_not_lc", 4},       {"cl_4dim", 4},             {"cl_5dim", 5},
      {"minkowski_p", 4},                   {"minkowski_q", 1},         {"series_unimodal_counterexample", 5},
      {"ehrpos_not_series_lc", 3},          {"negative_eval_4simplex", 4},
  };
  return d;
}

std::vector<Fixture> build_registry() {
  using K = Fixture::Kind;
  std::vector<Fixture> r;
  auto add = [&](Fixture f) { r.push_back(std::move(f)); };

  for (long q : {1L, 2L, 12L, 34L}) {
    Fixture f;
    f.name = "reeve_" + std::to_string(q);
    f.family = "reeve";
    f.input = "reeve:" + std::to_string(q);
    f.dim = 3;
    f.ehrhart = Poly{Rat(1), make_rat(11 - q, 6), Rat(1), make_rat(q + 1, 6)};
    f.hstar = {1, 0, q};
    if (q == 1) f.unimodal = false;
    add(f);
  }
  for (auto [q, k] : {std::pair{3L, 2}, {2L, 3}, {5L, 3}}) {
    Fixture f;
    f.name = "generalized_reeve_" + std::to_string(q) + "_" + std::to_string(k);
    f.family = "reeve";
    f.input = "generalized_reeve:" + std::to_string(q) + "," + std::to_string(k);
    f.dim = 2 * k - 1;
    f.hstar.assign(static_cast<std::size_t>(k) + 1, 0);
    f.hstar[0] = 1;
    f.hstar[static_cast<std::size_t>(k)] = q;
    add(f);
  }
  add({.name = "spanning_nonunimodal_5simplex", .family = "registry", .input = "registry:spanning_nonunimodal_5simplex",
       .dim = 5, .hstar = {1, 1, 2, 1, 2, 1}, .spanning = true, .unimodal = false});
  add({.name = "very_ample_balletti", .family = "registry", .input = "registry:very_ample_balletti", .dim = 3,
       .hstar = {1, 4, 17}, .idp = false, .log_concave = false});
  add({.name = "reflexive_6simplex_payne", .family = "registry", .input = "registry:reflexive_6simplex_payne",
       .dim = 6, .hstar = {1, 1, 2, 1, 2, 1, 1}, .spanning = true, .reflexive = true, .unimodal = false});
  add({.name = "gorenstein_gamma_not_lc", .family = "registry", .input = "registry:gorenstein_gamma_not_lc",
       .dim = 4, .hstar = {1, 4, 22, 4, 1}, .log_concave = false});
  add({.name = "cl_4dim", .family = "registry", .input = "registry:cl_4dim", .dim = 4, .hstar = {1, 1, 2, 1, 1},
       .cl = true, .log_concave = false});
  add({.name = "cl_5dim", .family = "registry", .input = "registry:cl_5dim", .dim = 5,
       .hstar = {1, 1, 2, 2, 1, 1}, .cl = true, .log_concave = false});
  add({.name = "minkowski_p", .family = "registry", .input = "registry:minkowski_p", .dim = 4, .hstar = {1, 1}});
  add({.name = "minkowski_q", .family = "registry", .input = "registry:minkowski_q", .dim = 1, .hstar = {1, 1}});
  add({.name = "minkowski_pair", .family = "registry", .input = "registry:minkowski_pair", .dim = 4,
       .hstar = {1, 13, 20, 20, 4}});
  add({.name = "series_unimodal_counterexample", .family = "registry",
       .input = "registry:series_unimodal_counterexample", .dim = 5,
       .ehrhart = rat_poly({{1, 1}, {139, 20}, {33, 8}, {-2, 1}, {7, 8}, {21, 20}}), .hstar = {1, 6, 6, 113},
       .unimodal = true, .log_concave = false});
  add({.name = "ehrpos_not_series_lc", .family = "registry", .input = "registry:ehrpos_not_series_lc", .dim = 3,
       .ehrhart = rat_poly({{1, 1}, {1, 6}, {3, 2}, {7, 3}}), .hstar = {1, 1, 12}});
  add({.name = "negative_eval_4simplex", .family = "registry", .input = "registry:negative_eval_4simplex", .dim = 4,
       .ehrhart = rat_poly({{1, 1}, {5, 12}, {35, 24}, {25, 12}, {25, 24}}), .hstar = {1, 1, 21, 1, 1},
       .spanning = false, .reflexive = true});
  add({.name = "standard_reflexive_simplex_3", .family = "simplex", .input = "reflexive_simplex:3", .dim = 3,
       .hstar = {1, 1, 1, 1}, .idp = true, .reflexive = true});
  add({.name = "cross_polytope_3", .family = "cross", .input = "cross:3", .dim = 3, .hstar = {1, 3, 3, 1},
       .idp = true, .reflexive = true});
  add({.name = "cube_2_2", .family = "cube", .input = "cube:2,2", .dim = 2,
       .ehrhart = Poly{Rat(1), Rat(2)}.pow(2), .hstar = {1, 6, 1}, .idp = true});
  add({.name = "prism_1_2_3", .family = "cube", .input = "prism:1,2,3", .dim = 3,
       .ehrhart = Poly{Rat(1), Rat(1)} * Poly{Rat(1), Rat(2)} * Poly{Rat(1), Rat(3)}, .hstar = {1, 20, 15},
       .idp = true});
  add({.name = "hypersimplex_2_4", .family = "hypersimplex", .input = "hypersimplex:2,4", .dim = 3,
       .hstar = {1, 2, 1}, .idp = true});
  add({.name = "edge_polytope_k3", .family = "graph", .input = "edge:3; 1-2, 1-3, 2-3", .dim = 2, .hstar = {1}});
  add({.name = "symmetric_edge_polytope_k3", .family = "graph", .input = "sep:3; 1-2, 1-3, 2-3", .dim = 2,
       .hstar = {1, 4, 1}, .reflexive = true});
  add({.name = "symmetric_edge_polytope_path3", .family = "graph", .input = "sep:3; 1-2, 2-3", .dim = 2,
       .hstar = {1, 2, 1}, .reflexive = true});
  add({.name = "stembridge_order_polytope", .family = "order", .input = "order:stembridge", .kind = K::OrderHStar,
       .dim = 17, .hstar = {1, 32, 336, 1420, 2534, 1946, 658, 86, 3}, .unimodal = true});
  add({.name = "payne_d7", .family = "payne", .input = "payne:d7", .kind = K::Literal, .dim = 7,
       .hstar = {1, 2, 6, 5, 5, 6, 2, 1}, .cl = true, .unimodal = false});
  add({.name = "payne_d11", .family = "payne", .input = "payne:d11", .kind = K::Literal, .dim = 11,
       .hstar = {1, 1, 4, 6, 4, 6, 6, 4, 6, 4, 1, 1}, .cl = true, .unimodal = false});
  return r;
}

}  // namespace

const std::vector<Fixture>& fixture_registry() {
  static const std::vector<Fixture> r = build_registry();
  return r;
}

const Fixture& fixture(const std::string& name) {
  for (const auto& f : fixture_registry())
    if (f.name == name) return f;
  throw Error(ErrorCode::BadParameter, "unknown fixture '" + name + "'");
}

std::vector<std::string> registry_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : matrices()) out.push_back(k);
  out.push_back("minkowski_pair");
  std::sort(out.begin(), out.end());
  return out;
}

Poset resolve_poset(const std::string& descriptor) {
  const auto colon = descriptor.find(':');
  if (colon == std::string::npos || descriptor.substr(0, colon) != "order") {
    throw Error(ErrorCode::ParseError, "expected 'order:...', got '" + descriptor + "'");
  }
  const std::string arg = trim(descriptor.substr(colon + 1));
  if (arg == "stembridge") return stembridge_poset();
  if (arg.rfind("fan", 0) == 0) return fan_poset(static_cast<int>(parse_long(arg.substr(3))));
  return parse_poset(arg);
}

LatticePolytope resolve_polytope(const std::string& descriptor) {
  const auto colon = descriptor.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "expected 'family:args', got '" + descriptor + "'");
  const std::string family = trim(descriptor.substr(0, colon));
  const std::string arg = trim(descriptor.substr(colon + 1));
  auto nums = [&](std::size_t lo, std::size_t hi) {
    auto v = parse_longs(arg);
    if (v.size() < lo || v.size() > hi) throw Error(ErrorCode::ParseError, "wrong number of arguments for " + family);
    return v;
  };
  if (family == "registry") {
    if (arg == "minkowski_pair") return minkowski_sum(resolve_polytope("registry:minkowski_p"), resolve_polytope("registry:minkowski_q"));
    auto it = matrices().find(arg);
    if (it == matrices().end()) throw Error(ErrorCode::ParseError, "unknown registry entry '" + arg + "'");
    return from_matrix(it->second, matrix_dims().at(arg));
  }
  if (family == "reeve") return reeve(nums(1, 1)[0]);
  if (family == "generalized_reeve") {
    auto v = nums(2, 2);
    return generalized_reeve(v[0], static_cast<int>(v[1]));
  }
  if (family == "reflexive_simplex") return standard_reflexive_simplex(static_cast<int>(nums(1, 1)[0]));
  if (family == "cross") return cross_polytope(static_cast<int>(nums(1, 1)[0]));
  if (family == "cube") {
    auto v = nums(1, 2);
    return cube(static_cast<int>(v[0]), v.size() == 2 ? v[1] : 1);
  }
  if (family == "prism") return prism(nums(1, 19));
  if (family == "hypersimplex") {
    auto v = nums(2, 2);
    return hypersimplex(static_cast<int>(v[0]), static_cast<int>(v[1]));
  }
  if (family == "order") return order_polytope(resolve_poset(descriptor));
  if (family == "edge") return edge_polytope(parse_graph(arg));
  if (family == "sep") return symmetric_edge_polytope(parse_graph(arg));
  throw Error(ErrorCode::ParseError, "unknown family '" + family + "'");
}

std::optional<Poly> resolve_literal_hstar(const std::string& descriptor) {
  const auto colon = descriptor.find(':');
  if (colon == std::string::npos || trim(descriptor.substr(0, colon)) != "payne") return std::nullopt;
  const std::string arg = trim(descriptor.substr(colon + 1));
  if (arg == "d7") return payne_d7();
  if (arg == "d11") return payne_d11();
  auto v = parse_longs(arg);
  if (v.size() != 3) throw Error(ErrorCode::ParseError, "payne needs d7, d11 or b,k,r");
  return payne_hstar(v[0], v[1], v[2]);
}

}  // namespace ehrlab
