#include <random>

#include "doctest.h"
#include "ehrlab/checks.hpp"
#include "ehrlab/error.hpp"
#include "ehrlab/hstar.hpp"
#include "ehrlab/real_roots.hpp"

using namespace ehrlab;

namespace {

Poly ints(std::initializer_list<long long> c) {
  std::vector<long long> v(c);
  return Poly::from_integers(v);
}

std::vector<Rat> rats(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return v;
}

// Truncated series (1-x)^(D+1) * sum_{m<=D} f(m) x^m.
Poly series_oracle(const Poly& f, int d) {
  std::vector<Rat> s;
  for (int m = 0; m <= d; ++m) s.push_back(f(Rat(m)));
  Poly prod = Poly(s) * Poly{Rat(1), Rat(-1)}.pow(static_cast<unsigned>(d + 1));
  std::vector<Rat> trunc;
  for (int i = 0; i <= d; ++i) trunc.push_back(prod.coeff(i));
  return Poly(trunc);
}

Poly wagner_f() {
  return Poly{Rat(1), make_rat(217, 60), make_rat(-5, 24), make_rat(67, 24), make_rat(-7, 24), make_rat(11, 120)};
}
Poly wagner_g() {
  return Poly{Rat(1), make_rat(101, 30), make_rat(1, 4), make_rat(61, 24), make_rat(-1, 4), make_rat(11, 120)};
}

Poly reeve_e(long q) {
  return Poly{Rat(1), make_rat(11 - q, 6), Rat(1), make_rat(q + 1, 6)};
}

}  // namespace

TEST_CASE("hstar from polynomial") {
  CHECK(hstar_from_poly(ints({1, 1}).pow(3)) == ints({1, 4, 1}));
  CHECK(hstar_from_poly(ints({1, 1}).pow(3)) == series_oracle(ints({1, 1}).pow(3), 3));
  CHECK(hstar_from_poly(wagner_f()) == ints({1, 1, 1, 1, 1, 6}));
  CHECK(hstar_from_poly(wagner_g()) == ints({1, 1, 1, 1, 2, 5}));
  Poly fg = wagner_f() * wagner_g();
  CHECK(hstar_from_poly(fg) == ints({1, 38, 300, 962, 2059, 7442, 7194, 7292, 4320, 854, 30}));
  CHECK(hstar_from_poly(fg) == series_oracle(fg, 10));
  CHECK_THROWS_AS(hstar_from_poly(Poly{}), Error);
}

TEST_CASE("hstar to ehrhart") {
  CHECK(hstar_to_ehrhart(HStarVector::from_ints({1}, 0)) == Poly::constant(Rat(1)));
  for (long q : {1L, 12L, 34L}) {
    CHECK(hstar_to_ehrhart(HStarVector::from_ints({1, 0, q}, 3)) == reeve_e(q));
  }
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> dim(0, 9);
  std::uniform_int_distribution<int> entry(0, 30);
  for (int trial = 0; trial < 500; ++trial) {
    int d = dim(rng);
    std::vector<Integer> h{1};
    for (int i = 1; i <= d; ++i) h.emplace_back(entry(rng));
    HStarVector hv(h, d);
    Poly e = hstar_to_ehrhart(hv);
    CHECK(hstar_from_poly(e, d) == hv.to_poly());
    CHECK(series_oracle(e, d) == hv.to_poly());
  }
}

TEST_CASE("unimodality") {
  auto a = rats({1, 1, 2, 1, 2, 1});
  Verdict v = is_unimodal(a);
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness.size() == 1);
  CHECK(v.witness[0] == 3);
  CHECK(is_unimodal(rats({1, 6, 6, 113})).holds);
  CHECK(is_unimodal(rats({1})).holds);
  auto fg = hstar_from_poly(wagner_f() * wagner_g());
  Verdict w = is_unimodal(fg.coeffs());
  CHECK_FALSE(w.holds);
  CHECK(w.witness[0] == 6);
  CHECK(w.values[0] == 7194);
}

TEST_CASE("log-concavity") {
  CHECK_FALSE(is_log_concave(rats({1, 0, 0, 1})).holds);
  CHECK(is_weakly_log_concave(rats({1, 0, 0, 1})).holds);
  CHECK_FALSE(is_weakly_log_concave(rats({1, 0, 1})).holds);
  CHECK(is_weakly_log_concave(rats({0, 0, 1})).holds);
  Verdict g = is_log_concave(rats({1, 4, 22, 4, 1}));
  CHECK_FALSE(g.holds);
  CHECK(g.witness[0] == 1);
  CHECK(g.values[0] == 16);
  CHECK(g.values[1] == 22);
  Verdict b = is_log_concave(rats({1, 4, 17}));
  CHECK_FALSE(b.holds);
  CHECK(b.witness[0] == 1);
  CHECK(is_log_concave(rats({1, 4, 1})).holds);
}

TEST_CASE("palindromes and gamma vectors") {
  CHECK(is_palindromic(HStarVector::from_ints({1, 0, 1}, 3)));
  CHECK(is_palindromic(HStarVector::from_ints({1, 4, 22, 4, 1}, 4)));
  CHECK_FALSE(is_palindromic(HStarVector::from_ints({1, 4, 17}, 3)));

  CHECK(gamma_vector(HStarVector::from_ints({1, 1}, 1)).gamma == rats({1}));
  GammaVector g = gamma_vector(HStarVector::from_ints({1, 4, 22, 4, 1}, 4));
  CHECK(g.gamma == rats({1, 0, 16}));
  CHECK(g.reconstruct() == ints({1, 4, 22, 4, 1}));
  CHECK(g.is_positive());
  GammaVector t = gamma_vector(ints({1, 1, 1}));
  CHECK(t.gamma == rats({1, -1}));
  CHECK_FALSE(t.is_positive());
  try {
    gamma_vector(HStarVector::from_ints({1, 4, 17}, 3));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPalindromic);
  }
}

TEST_CASE("magic expansion") {
  for (int d = 1; d <= 6; ++d) {
    MagicExpansion m = magic_expansion(ints({1, 1}).pow(static_cast<unsigned>(d)));
    std::vector<Rat> expected(static_cast<std::size_t>(d) + 1, Rat(0));
    expected[0] = 1;
    CHECK(m.a == expected);
  }
  MagicExpansion sq = magic_expansion(ints({1, 4, 4}));
  CHECK(sq.a == rats({1, 2, 1}));
  CHECK(sq.reconstruct() == ints({1, 4, 4}));
  MagicExpansion r12 = magic_expansion(reeve_e(12));
  CHECK(r12.reconstruct() == reeve_e(12));
  CHECK_FALSE(r12.is_positive());
}

TEST_CASE("K-vector") {
  KVector k = k_vector(ints({1, 1}));
  CHECK(k.a == rats({0, 1}));

  KVector r = k_vector(reeve_e(1));
  CHECK(r.reconstruct() == reeve_e(1));
  CHECK(r.sign_pattern_ok);
  CHECK(r.matches_shifted_hstar);
  // Oracle: expand h*(x+1) and read the coefficients backwards.
  Poly shifted = ints({1, 0, 1}).compose(ints({1, 1}));
  std::vector<Rat> expected_abs;
  for (int j = 0; j <= 3; ++j) expected_abs.push_back(shifted.coeff(3 - j));
  CHECK(r.abs_values() == expected_abs);
  CHECK(r.abs_values() == rats({0, 1, 2, 2}));

  Poly neg{Rat(1), make_rat(5, 12), make_rat(35, 24), make_rat(25, 12), make_rat(25, 24)};
  KVector kn = k_vector(neg);
  CHECK(kn.reconstruct() == neg);
  CHECK_FALSE(is_log_concave(kn.abs_values()).holds);
}

TEST_CASE("type B transform") {
  Poly out = type_b_transform(ints({1, 1}), 3);
  // (x+1)^3 + 4x(x+1)
  CHECK(out == ints({1, 1}).pow(3) + ints({0, 4}) * ints({1, 1}));
  CHECK_THROWS_AS(type_b_transform(ints({1, 1, 1}), 3), Error);
}

TEST_CASE("toeplitz minors") {
  // Composition (i, j) gives the 2x2 minor h_i h_j - h_0 h_{i+j}.
  HStarVector h = HStarVector::from_ints({1, 3, 4, 13, 1}, 4);
  Verdict v = toeplitz_minor_check(h, 3);
  CHECK_FALSE(v.holds);
  CHECK(v.witness == std::vector<long>{1, 2});
  CHECK(v.values[0] == 3 * 4 - 13);

  HStarVector ones = HStarVector::from_ints({1, 1, 1, 1, 1, 1, 1}, 6);
  CHECK(toeplitz_minor_check(ones).holds);

  Verdict b = toeplitz_minor_check(HStarVector::from_ints({1, 4, 17}, 3), 3);
  CHECK_FALSE(b.holds);
  CHECK(b.witness == std::vector<long>{1, 1});
  CHECK(b.values[0] == -1);
}

TEST_CASE("toeplitz minors agree with brute-force determinants") {
  // Cofactor expansion as an independent determinant oracle.
  std::function<Integer(const std::vector<std::vector<Integer>>&)> cofactor =
      [&](const std::vector<std::vector<Integer>>& m) -> Integer {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Integer acc = 0;
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<std::vector<Integer>> sub;
      for (std::size_t r = 1; r < n; ++r) {
        std::vector<Integer> row;
        for (std::size_t k = 0; k < n; ++k) {
          if (k != c) row.push_back(m[r][k]);
        }
        sub.push_back(row);
      }
      Integer t = m[0][c] * cofactor(sub);
      acc += (c % 2 == 0) ? t : Integer(-t);
    }
    return acc;
  };
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> e(0, 9);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 5;
    std::vector<Integer> hv{1};
    for (int i = 1; i <= d; ++i) hv.emplace_back(e(rng));
    HStarVector h(hv, d);
    bool brute_ok = true;
    std::vector<long> parts;
    std::function<void(int)> rec = [&](int total) {
      if (!parts.empty()) {
        std::size_t s = parts.size();
        std::vector<long> rows, cols;
        long acc = 0;
        for (long p : parts) {
          rows.push_back(acc);
          acc += p;
          cols.push_back(acc);
        }
        std::vector<std::vector<Integer>> m(s, std::vector<Integer>(s));
        for (std::size_t r = 0; r < s; ++r)
          for (std::size_t c = 0; c < s; ++c) m[r][c] = h[static_cast<int>(cols[c] - rows[r])];
        if (cofactor(m) < 0) brute_ok = false;
      }
      for (int nxt = 1; total + nxt <= d; ++nxt) {
        parts.push_back(nxt);
        rec(total + nxt);
        parts.pop_back();
      }
    };
    rec(0);
    CHECK(toeplitz_minor_check(h).holds == brute_ok);
  }
}

TEST_CASE("general inequality battery") {
  BatteryReport r = general_inequality_battery(HStarVector::from_ints({1, 0, 12}, 3));
  CHECK(r.h1_ge_hd.holds);
  CHECK_FALSE(r.hibi_lower_bound_applies);
  CHECK(r.stapledon_applies);
  CHECK(r.all_hold());

  BatteryReport ones = general_inequality_battery(HStarVector::from_ints({1, 1, 1, 1, 1}, 4));
  CHECK(ones.hibi_lower_bound_applies);
  CHECK(ones.hibi_lower_bound.holds);
  CHECK(ones.all_hold());

  BatteryReport bad = general_inequality_battery(HStarVector::from_ints({1, 0, 0, 5}, 3));
  CHECK_FALSE(bad.h1_ge_hd.holds);
  CHECK(bad.hibi_lower_bound.holds);
  BatteryReport lbt = general_inequality_battery(HStarVector::from_ints({1, 2, 1, 1}, 3));
  CHECK_FALSE(lbt.hibi_lower_bound.holds);
  CHECK(lbt.hibi_lower_bound.witness[0] == 2);
}

TEST_CASE("series log-concavity") {
  Poly q = make_rat(1, 3) * ints({1, 1}) * ints({3, 2, 1});
  CHECK(series_log_concavity(q).holds);
  // Gap of the quadratic factor in closed form.
  CHECK(series_gap_poly(ints({3, 2, 1})) == ints({-3, 4, 2}));

  Poly p5{Rat(1), make_rat(139, 20), make_rat(33, 8), Rat(-2), make_rat(7, 8), make_rat(21, 20)};
  Verdict v = series_log_concavity(p5);
  CHECK_FALSE(v.holds);
  CHECK(v.witness[0] == 2);
  CHECK(v.values[0] == 3969);
  CHECK(v.values[1] == 3972);

  Poly p3{Rat(1), make_rat(1, 6), make_rat(3, 2), make_rat(7, 3)};
  Verdict w = series_log_concavity(p3);
  CHECK_FALSE(w.holds);
  CHECK(w.witness[0] == 1);
  CHECK(w.values[0] == 25);
  CHECK(w.values[1] == 26);

  CHECK_THROWS_AS(series_log_concavity(ints({1, -1})), Error);
  try {
    series_log_concavity(ints({4, -5, 1}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonpositiveEvaluation);
  }
}

TEST_CASE("negative evaluation log-concavity") {
  Poly neg{Rat(1), make_rat(5, 12), make_rat(35, 24), make_rat(25, 12), make_rat(25, 24)};
  CHECK(neg(Rat(-1)) == 1);
  CHECK(neg(Rat(-2)) == 6);
  CHECK(neg(Rat(-3)) == 41);
  CHECK(neg(Rat(-4)) == 156);
  Verdict v = negative_evaluation_log_concavity(neg, 4);
  CHECK_FALSE(v.holds);
  CHECK(v.witness[0] == 2);

  CHECK(negative_evaluation_log_concavity(ints({1, 1}).pow(2), 2).holds);
  for (long a = 1; a <= 6; ++a) {
    for (long b = 1; b <= 8; ++b) {
      // Lattice polygon shape: area a/2 with b/2 boundary term.
      Poly e{Rat(1), make_rat(b, 2), make_rat(a, 2)};
      if (hstar_from_poly(e, 2).coeff(1) < 0 || hstar_from_poly(e, 2).coeff(2) < 0) continue;
      CHECK(negative_evaluation_log_concavity(e, 2).holds);
    }
  }
}

TEST_CASE("critical line") {
  for (int d = 1; d <= 6; ++d) CHECK(cl_check(ints({1, 2}).pow(static_cast<unsigned>(d))));
  for (int d = 1; d <= 8; ++d) {
    std::vector<Integer> ones(static_cast<std::size_t>(d) + 1, Integer(1));
    CHECK(cl_check(hstar_to_ehrhart(HStarVector(ones, d))));
  }
  CHECK_FALSE(cl_check(reeve_e(34)));
  CHECK(cl_check(ints({1, 1, 1})));
  CHECK_FALSE(cl_check(ints({1, 0, 1})));
}

TEST_CASE("unit circle") {
  for (int d = 1; d <= 8; ++d) {
    CHECK(roots_on_unit_circle(ints({1, 1}).pow(static_cast<unsigned>(d))));
    std::vector<Integer> ones(static_cast<std::size_t>(d) + 1, Integer(1));
    Poly geo = HStarVector(ones, d).to_poly();
    CHECK(roots_on_unit_circle(geo));
    CHECK(cl_check(hstar_to_ehrhart(HStarVector(ones, d))));
    CHECK(cl_check(hstar_to_ehrhart(ints({1, 1}).pow(static_cast<unsigned>(d)), d)));
  }
  CHECK_FALSE(roots_on_unit_circle(ints({1, 4, 1})));
  CHECK_FALSE(roots_on_unit_circle(ints({0, 1})));
}

TEST_CASE("hurwitz consistency") {
  HurwitzVerdict a = hurwitz_implies_positive(ints({1, 2}).pow(3));
  CHECK(a.cl);
  CHECK(a.nonnegative);
  HurwitzVerdict r = hurwitz_implies_positive(reeve_e(12));
  CHECK_FALSE(r.cl);
  CHECK_FALSE(r.nonnegative);
  CHECK(r.consistent);
}
