#include <functional>
#include <random>

#include "doctest.h"
#include "ehrlab/checks.hpp"
#include "ehrlab/counting.hpp"
#include "ehrlab/error.hpp"
#include "ehrlab/real_roots.hpp"
#include "ehrlab/zoo.hpp"

using namespace ehrlab;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

std::vector<Integer> padded(const std::vector<long>& v, int d) {
  std::vector<Integer> out(v.begin(), v.end());
  out.resize(static_cast<std::size_t>(d) + 1, Integer(0));
  return out;
}

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::BadParameter;
}

// Linear extensions by brute force over permutations, with descents read off
// a natural labelling taken from a topological order.
std::vector<long> extension_descents(const Poset& p) {
  const int n = p.size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<int> nat;
  {
    std::vector<int> rest = perm;
    while (!rest.empty()) {
      for (std::size_t i = 0; i < rest.size(); ++i) {
        bool minimal = true;
        for (int c : rest)
          if (p.less(c, rest[i])) minimal = false;
        if (minimal) {
          nat.push_back(rest[i]);
          rest.erase(rest.begin() + static_cast<long>(i));
          break;
        }
      }
    }
  }
  std::vector<int> label(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) label[static_cast<std::size_t>(nat[static_cast<std::size_t>(i)])] = i + 1;
  std::vector<long> hist(static_cast<std::size_t>(n), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if (p.less(perm[static_cast<std::size_t>(j)], perm[static_cast<std::size_t>(i)])) ok = false;
    if (!ok) continue;
    int des = 0;
    for (int i = 0; i + 1 < n; ++i)
      if (label[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] > label[static_cast<std::size_t>(perm[static_cast<std::size_t>(i) + 1])]) ++des;
    ++hist[static_cast<std::size_t>(des)];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return hist;
}

Poset random_poset(std::mt19937& rng, int n) {
  // Random DAG on a shuffled order, reduced to its cover relation.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution edge(0.35);
  std::vector<std::vector<bool>> lt(static_cast<std::size_t>(n) + 1, std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(rng)) lt[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])][static_cast<std::size_t>(order[static_cast<std::size_t>(j)])] = true;
  for (int k = 1; k <= n; ++k)
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        if (lt[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)] && lt[static_cast<std::size_t>(k)][static_cast<std::size_t>(b)]) lt[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
  std::vector<std::pair<int, int>> covers;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (!lt[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
      bool cover = true;
      for (int c = 1; c <= n; ++c)
        if (lt[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] && lt[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)]) cover = false;
      if (cover) covers.emplace_back(a, b);
    }
  return Poset::make(n, covers);
}

}  // namespace

TEST_CASE("registry fixtures reproduce their printed values") {
  for (const auto& f : fixture_registry()) {
    if (f.kind != Fixture::Kind::Polytope) continue;
    CAPTURE(f.name);
    auto p = resolve_polytope(f.input);
    auto prof = ehrhart(p);
    CHECK(prof.d == f.dim);
    CHECK(prof.hstar.h() == padded(f.hstar, f.dim));
    if (f.ehrhart) CHECK(prof.ehrhart == *f.ehrhart);
    if (f.spanning) CHECK(is_spanning(p) == *f.spanning);
    if (f.reflexive) CHECK(is_reflexive(p) == *f.reflexive);
    if (f.idp) CHECK(is_idp(p).holds == *f.idp);
    auto block = prof.hstar.leading_block();
    if (f.unimodal) CHECK(is_unimodal(block).holds == *f.unimodal);
    if (f.log_concave) CHECK(is_log_concave(block).holds == *f.log_concave);
    if (f.cl) CHECK(cl_check(prof.ehrhart) == *f.cl);
  }
}

TEST_CASE("Reeve constructors") {
  CHECK(ehrhart(reeve(0)).hstar.h() == ints({1, 0, 0, 0}));
  CHECK(ehrhart(reeve(12)).ehrhart.coeff(1) == make_rat(-1, 6));
  auto g = generalized_reeve(5, 3);
  CHECK(g.dim() == 5);
  CHECK(simplex_hstar(g).h() == ints({1, 0, 0, 5, 0, 0}));
  CHECK(generalized_reeve(7, 2) == reeve(7));
  CHECK(code_of([] { reeve(-1); }) == ErrorCode::BadParameter);
  CHECK(code_of([] { generalized_reeve(1, 1); }) == ErrorCode::BadParameter);
}

TEST_CASE("standard families") {
  CHECK(ehrhart(standard_reflexive_simplex(3)).hstar.h() == ints({1, 1, 1, 1}));
  CHECK(ehrhart(cross_polytope(3)).hstar.h() == ints({1, 3, 3, 1}));
  auto c = cube(2, 2);
  for (long m = 0; m <= 3; ++m) CHECK(count(c, m) == (2 * m + 1) * (2 * m + 1));
  CHECK(ehrhart(c).hstar.h() == ints({1, 6, 1}));
  for (int n = 2; n <= 5; ++n) CHECK(ehrhart(hypersimplex(1, n)).hstar.h() == padded({1}, n - 1));
  auto h24 = hypersimplex(2, 4);
  CHECK(h24.dim() == 3);
  CHECK(h24.hrep().equations.size() == 1);
  CHECK(is_idp(hypersimplex(2, 5)).holds);
  CHECK(code_of([] { hypersimplex(0, 3); }) == ErrorCode::BadParameter);
}

TEST_CASE("order polytopes: two algorithms agree") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 6;
    Poset p = random_poset(rng, n);
    CAPTURE(to_text(p));
    HStarVector fast = order_polytope_hstar(p);
    auto brute = extension_descents(p);
    CHECK(fast.h() == padded(brute, n));
    CHECK(ehrhart(order_polytope(p)).hstar.h() == fast.h());
  }
  // Antichain: cube, Eulerian numbers. Chain: unimodular simplex.
  CHECK(order_polytope_hstar(Poset::make(4, {})).h() == ints({1, 11, 11, 1, 0}));
  CHECK(order_polytope_hstar(Poset::make(4, {{1, 2}, {2, 3}, {3, 4}})).h() == ints({1, 0, 0, 0, 0}));
  CHECK(code_of([] { order_polytope_hstar(Poset::make(9, {}), 1000); }) == ErrorCode::TooManyLinearExtensions);
}

TEST_CASE("Stembridge poset") {
  Poset s = stembridge_poset();
  CHECK(s.size() == 17);
  CHECK(s.covers().size() == 25);
  CHECK(s.naturally_labelled());
  HStarVector h = order_polytope_hstar(s);
  CHECK(h.sum() == 7016);
  Poly hp = h.to_poly();
  CHECK(hp == Poly::from_integers(std::vector<long long>{1, 32, 336, 1420, 2534, 1946, 658, 86, 3}));
  CHECK_FALSE(is_real_rooted(hp));
  Poly b = type_b_transform(hp, 17);
  const std::vector<long> head{1, 145, 7432, 174888, 2128332, 14547884, 59233240, 148792184, 234916470};
  CHECK(b.degree() == 17);
  for (int i = 0; i < 9; ++i) {
    CHECK(b.coeff(i) == Rat(head[static_cast<std::size_t>(i)]));
    CHECK(b.coeff(17 - i) == Rat(head[static_cast<std::size_t>(i)]));
  }
  CHECK(is_palindromic(b.coeffs()));
  CHECK(is_log_concave(b.coeffs()).holds);
  CHECK_FALSE(is_real_rooted(b));
  // The non-real pair sits near -3.88091 +- 0.18448i: no real root in [-3.9, -3.86].
  CHECK(count_real_roots(b, make_rat(-39, 10), make_rat(-386, 100)) == 0);
}

TEST_CASE("fan posets") {
  for (int n = 1; n <= 4; ++n) {
    auto prof = ehrhart(order_polytope(fan_poset(n)));
    CHECK(prof.ehrhart == fan_poset_ehrhart(n));
    for (long m = 0; m <= 4; ++m) {
      Integer s = 0;
      for (long j = 0; j <= m; ++j) {
        Integer t = 1;
        for (int i = 0; i < n; ++i) t *= j + 1;
        s += t;
      }
      CHECK(Rat(s) == fan_poset_ehrhart(n)(Rat(m)));
    }
  }
  Poly e20 = fan_poset_ehrhart(20);
  bool negative = false;
  for (const auto& c : e20.coeffs()) negative = negative || c < 0;
  CHECK(negative);
  Poly e19 = fan_poset_ehrhart(19);
  bool neg19 = false;
  for (const auto& c : e19.coeffs()) neg19 = neg19 || c < 0;
  CHECK_FALSE(neg19);
}

TEST_CASE("graph polytopes") {
  auto k3 = complete_graph(3);
  auto e = edge_polytope(k3);
  CHECK(e.dim() == 2);
  CHECK(ehrhart(e).hstar.h() == ints({1, 0, 0}));
  auto sep = symmetric_edge_polytope(k3);
  CHECK(is_reflexive(sep));
  CHECK(is_palindromic(ehrhart(sep).hstar));
  CHECK(ehrhart(symmetric_edge_polytope(path_graph(3))).hstar.h() == ints({1, 2, 1}));
  for (int n = 3; n <= 5; ++n) {
    auto c = symmetric_edge_polytope(cycle_graph(n));
    CHECK(is_reflexive(c));
    CHECK(is_palindromic(ehrhart(c).hstar));
  }
  CHECK(code_of([] { edge_polytope(Graph::make(3, {})); }) == ErrorCode::EmptyGraph);
  CHECK(code_of([] { symmetric_edge_polytope(Graph::make(2, {})); }) == ErrorCode::EmptyGraph);
  CHECK(code_of([] { Graph::make(3, {{1, 1}}); }) == ErrorCode::BadParameter);
  CHECK(code_of([] { Graph::make(3, {{1, 2}, {2, 1}}); }) == ErrorCode::BadParameter);
}

TEST_CASE("text formats") {
  Poset s = stembridge_poset();
  Poset back = parse_poset(to_text(s));
  CHECK(back.covers() == s.covers());
  Graph g = parse_graph("4; 1-2, 3-4, 2-3");
  CHECK(g.edges().size() == 3);
  CHECK(parse_graph(to_text(g)).edges() == g.edges());
  CHECK(parse_poset("3").covers().empty());
  CHECK(code_of([] { parse_poset("3; 1-2, 2-3, 1-3"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_poset("2; 1-2, 2-1"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_graph("x; 1-2"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { resolve_polytope("nosuch:1"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { resolve_polytope("reeve"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { resolve_polytope("registry:nosuch"); }) == ErrorCode::ParseError);
}

TEST_CASE("Payne polynomials") {
  Poly p = payne_hstar(3, 2, 0);
  Poly expected = Poly{Rat(1), Rat(1), Rat(1)} * Poly{Rat(1), Rat(0), Rat(1), Rat(0), Rat(1)};
  CHECK(p == expected);
  for (long b = 3; b <= 5; ++b)
    for (long r = 0; r <= 2; ++r)
      for (long k = r + 2; k <= r + 4; ++k) {
        Poly h = payne_hstar(b, k, r);
        CHECK(h.degree() == b * k + r);
        CHECK(is_palindromic(h.coeffs()));
        CHECK_FALSE(is_unimodal(h.coeffs()).holds);
      }
  CHECK(payne_d7() == Poly::from_integers(std::vector<long long>{1, 2, 6, 5, 5, 6, 2, 1}));
  CHECK(payne_d11().degree() == 11);
  CHECK_FALSE(is_unimodal(payne_d7().coeffs()).holds);
  CHECK_FALSE(is_unimodal(payne_d11().coeffs()).holds);
  CHECK(code_of([] { payne_hstar(2, 3, 0); }) == ErrorCode::BadParameter);
  CHECK(code_of([] { payne_hstar(3, 1, 0); }) == ErrorCode::BadParameter);
}

TEST_CASE("from_matrix") {
  IntMatrix m{to_int_vec({0, 1, 0, 1}), to_int_vec({0, 0, 1, 1})};
  CHECK(from_matrix(m, 2).vertices().size() == 4);
  CHECK(code_of([&] { from_matrix(m, 3); }) == ErrorCode::NotFullRankData);
}

TEST_CASE("free-sum series failure scheme") {
  // Independent E(m) from the low part 1 + sum m_i x^{n_i} of h*, valid for
  // m < n_1 + n_2 - 1 where the remaining h*-coefficients cannot contribute.
  auto low_e = [](const SeriesFailureScheme& s, long m) -> Integer {
    auto c = [&](long top) { return top < s.d ? Integer(0) : binomial(Integer(top), static_cast<unsigned long>(s.d)); };
    Integer v = c(m + s.d);
    for (std::size_t i = 0; i < s.n.size(); ++i) v += s.m[i] * c(m + s.d - s.n[i]);
    return v;
  };
  auto gap = [&](const SeriesFailureScheme& s, long m) -> Integer {
    return low_e(s, m) * low_e(s, m) - low_e(s, m - 1) * low_e(s, m + 1);
  };

  SeriesFailureScheme s = series_failure_scheme(2);
  CHECK(s.n == std::vector<int>{4, 7});
  CHECK(s.d == 20);
  CHECK(s.predicted == std::vector<int>{3, 6});
  for (std::size_t i = 0; i < 2; ++i) {
    const long at = s.predicted[i];
    CHECK(gap(s, at) < 0);
    // Minimality: one less would not break log-concavity at this index.
    SeriesFailureScheme t = s;
    t.m[i] -= 1;
    CHECK(gap(t, at) >= 0);
  }

  auto parts = series_failure_summands(s);
  HStarVector h = free_sum_simplex_hstar(parts);
  CHECK(h.dim() == 20);
  CHECK(h[0] == 1);
  CHECK(h[4] == s.m[0]);
  CHECK(h[7] == s.m[1]);
  for (int i : {1, 2, 3, 5, 6, 8, 9}) CHECK(h[i] == 0);
  CHECK(h.sum() == (s.m[0] + 1) * (s.m[1] + 1));
  Poly e = hstar_to_ehrhart(h);
  for (long m = 0; m <= 9; ++m) CHECK(e(Rat(m)) == Rat(low_e(s, m)));
  for (int at : s.predicted) {
    CHECK(e(Rat(at)) * e(Rat(at)) < e(Rat(at - 1)) * e(Rat(at + 1)));
  }
  Verdict v = series_log_concavity(e);
  CHECK_FALSE(v.holds);
  CHECK(v.witness == std::vector<long>{3});
}

TEST_CASE("series failure scheme confirmed by counting") {
  SeriesFailureScheme s = series_failure_scheme(std::vector<int>{2, 3});
  CHECK(s.d == 8);
  auto parts = series_failure_summands(s);
  auto fs = free_sum(parts);
  CHECK(fs.dim() == 8);
  LatticeCounter counter(fs);
  Poly e = hstar_to_ehrhart(free_sum_simplex_hstar(parts));
  std::vector<Integer> counts;
  for (long m = 0; m <= 3; ++m) {
    counts.push_back(counter.count(m));
    CHECK(Rat(counts.back()) == e(Rat(m)));
  }
  CHECK(counts[1] * counts[1] < counts[0] * counts[2]);
  CHECK(counts[2] * counts[2] < counts[1] * counts[3]);
}
