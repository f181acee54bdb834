#include "ehrlab/checks.hpp"

#include <algorithm>
#include <functional>

#include "ehrlab/error.hpp"
#include "ehrlab/real_roots.hpp"

namespace ehrlab {

namespace {

// Smallest integer B >= 0 such that p has no real root in (B, inf).
// Starts from the Cauchy radius and shrinks it with Sturm counts.
long root_free_tail_start(const Poly& p) {
  if (p.degree() <= 0) return 0;
  Poly q = p.leading() > 0 ? p : -p;
  const Integer hi = ceil(positivity_tail_bound(q));
  Integer lo = 0, top = hi;
  // Invariant: no root in (top, inf).
  while (lo < top) {
    Integer mid = lo + (top - lo) / 2;
    if (count_real_roots(q, Rat(mid), Rat(hi)) == 0) {
      top = mid;
    } else {
      lo = mid + 1;
    }
  }
  return to_int64(top);
}

Integer det_bareiss(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sgn * a[n - 1][n - 1];
}

std::string join(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

Verdict Verdict::pass(std::string detail) {
  Verdict v;
  v.detail = std::move(detail);
  return v;
}

Verdict Verdict::fail(std::vector<long> witness, std::vector<Rat> values, std::string detail) {
  Verdict v;
  v.holds = false;
  v.witness = std::move(witness);
  v.values = std::move(values);
  v.detail = std::move(detail);
  return v;
}

Verdict is_unimodal(std::span<const Rat> c) {
  bool descending = false;
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] < c[i - 1]) descending = true;
    if (descending && c[i] > c[i - 1]) {
      const long valley = static_cast<long>(i) - 1;
      return Verdict::fail({valley}, {c[i - 1]}, "valley at index " + std::to_string(valley));
    }
  }
  return Verdict::pass();
}

Verdict is_log_concave(std::span<const Rat> c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] <= 0) {
      return Verdict::fail({static_cast<long>(i)}, {c[i]}, "entry " + std::to_string(i) + " is not positive");
    }
  }
  return is_weakly_log_concave(c);
}

Verdict is_weakly_log_concave(std::span<const Rat> c) {
  for (std::size_t i = 1; i + 1 < c.size(); ++i) {
    Rat lhs = c[i] * c[i];
    Rat rhs = c[i - 1] * c[i + 1];
    if (lhs < rhs) {
      return Verdict::fail({static_cast<long>(i)}, {lhs, rhs},
                           "a_" + std::to_string(i) + "^2 = " + to_string(lhs) + " < " + to_string(rhs));
    }
  }
  return Verdict::pass();
}

Verdict is_nonnegative(std::span<const Rat> c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0) return Verdict::fail({static_cast<long>(i)}, {c[i]}, "entry " + std::to_string(i) + " is negative");
  }
  return Verdict::pass();
}

Verdict toeplitz_minor_check(const HStarVector& h, int max_total) {
  if (max_total < 0 || max_total > h.dim()) {
    throw Error(ErrorCode::BadParameter, "max_total must lie in [0, d]");
  }
  std::vector<long> parts;
  Verdict result = Verdict::pass();
  std::function<bool(int)> rec = [&](int total) -> bool {
    if (!parts.empty()) {
      const std::size_t s = parts.size();
      std::vector<long> rows(s), cols(s);
      long acc = 0;
      for (std::size_t k = 0; k < s; ++k) {
        rows[k] = acc;
        acc += parts[k];
        cols[k] = acc;
      }
      std::vector<std::vector<Integer>> m(s, std::vector<Integer>(s));
      for (std::size_t r = 0; r < s; ++r) {
        for (std::size_t c = 0; c < s; ++c) m[r][c] = h[static_cast<int>(cols[c] - rows[r])];
      }
      Integer det = det_bareiss(std::move(m));
      if (det < 0) {
        result = Verdict::fail(parts, {Rat(det)}, "minor for composition (" + join(parts) + ") is " + det.get_str());
        return false;
      }
    }
    for (int next = 1; total + next <= max_total; ++next) {
      parts.push_back(next);
      bool ok = rec(total + next);
      parts.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  rec(0);
  return result;
}

Verdict toeplitz_minor_check(const HStarVector& h) { return toeplitz_minor_check(h, h.dim()); }

bool BatteryReport::all_hold() const {
  return hibi_partial_sums.holds && stanley_partial_sums.holds && hibi_lower_bound.holds && stapledon.holds &&
         h1_ge_hd.holds;
}

BatteryReport general_inequality_battery(const HStarVector& h) {
  const long d = h.dim();
  const long s = h.degree();
  auto H = [&](long i) { return Rat(h[static_cast<int>(i)]); };
  auto span_sum = [&](long from, long to) {
    Rat acc(0);
    for (long j = from; j <= to; ++j) acc += H(j);
    return acc;
  };
  BatteryReport rep;

  for (long i = 2; i <= d / 2; ++i) {
    Rat lhs = span_sum(2, i);
    Rat rhs = span_sum(d - i + 1, d - 1);
    if (lhs < rhs) {
      rep.hibi_partial_sums = Verdict::fail({i}, {lhs, rhs}, "h_2+..+h_i < h_{d-1}+..+h_{d-i+1} at i = " + std::to_string(i));
      break;
    }
  }

  for (long i = 0; i <= s / 2; ++i) {
    Rat lhs = span_sum(0, i);
    Rat rhs = span_sum(s - i, s);
    if (lhs > rhs) {
      rep.stanley_partial_sums = Verdict::fail({i}, {lhs, rhs}, "h_0+..+h_i > h_s+..+h_{s-i} at i = " + std::to_string(i));
      break;
    }
  }

  rep.hibi_lower_bound_applies = (s == d);
  if (rep.hibi_lower_bound_applies) {
    for (long i = 1; i <= d - 1; ++i) {
      if (H(1) > H(i)) {
        rep.hibi_lower_bound = Verdict::fail({i}, {H(1), H(i)}, "h_1 > h_i at i = " + std::to_string(i));
        break;
      }
    }
  }

  rep.stapledon_applies = (s <= d - 1);
  if (rep.stapledon_applies) {
    const Rat lhs = H(0) + H(1);
    for (long i = 1; i <= d - 1; ++i) {
      const long low = i - (d - s);
      if (low < 0) rep.stapledon_window_truncated = true;
      Rat rhs = span_sum(std::max(low, 0L), i);
      if (lhs > rhs && rep.stapledon.holds) {
        rep.stapledon = Verdict::fail({i}, {lhs, rhs}, "h_0+h_1 > h_i+..+h_{i-(d-s)} at i = " + std::to_string(i));
      }
    }
  }

  if (d >= 1 && H(1) < H(d)) rep.h1_ge_hd = Verdict::fail({1, d}, {H(1), H(d)}, "h_1 < h_d");
  return rep;
}

Poly series_gap_poly(const Poly& e) {
  return e * e - e.shifted(Rat(-1)) * e.shifted(Rat(1));
}

Verdict series_log_concavity(const Poly& e) {
  if (e.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "series of the zero polynomial");
  if (e.leading() <= 0) {
    throw Error(ErrorCode::NonpositiveLeadingCoefficient, "leading coefficient of " + e.to_string() + " is not positive");
  }
  const Poly g = series_gap_poly(e);
  const long tail_e = root_free_tail_start(e);
  const long tail_g = g.is_zero() ? 0 : root_free_tail_start(g);
  const long n = std::max(tail_g, 1L);
  // E has no roots beyond tail_e and a positive leading coefficient.
  for (long m = 0; m <= std::max(n + 1, tail_e); ++m) {
    Rat v = e(Rat(m));
    if (v <= 0) {
      throw Error(ErrorCode::NonpositiveEvaluation, "E(" + std::to_string(m) + ") = " + to_string(v) + " is not positive");
    }
  }
  if (!g.is_zero() && g.leading() < 0) {
    throw Error(ErrorCode::NonpositiveLeadingCoefficient, "gap polynomial has negative leading coefficient");
  }
  for (long m = 1; m <= n; ++m) {
    Rat mid = e(Rat(m));
    Rat lhs = mid * mid;
    Rat rhs = e(Rat(m - 1)) * e(Rat(m + 1));
    if (lhs < rhs) {
      return Verdict::fail({m}, {lhs, rhs},
                           "E(" + std::to_string(m) + ")^2 = " + to_string(lhs) + " < " + to_string(rhs));
    }
  }
  return Verdict::pass("checked 1 <= m <= " + std::to_string(n));
}

Verdict negative_evaluation_log_concavity(const Poly& e, int d) {
  if (e.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "negative evaluations of the zero polynomial");
  const Poly h = hstar_from_poly(e, d);
  const long s = std::max(h.degree(), 0);
  const long ell = d + 1 - s;
  for (long j = 1; j <= ell - 1; ++j) {
    Rat v = e(Rat(-j));
    if (v != 0) {
      return Verdict::fail({j}, {v}, "E(-" + std::to_string(j) + ") = " + to_string(v) + " but the codegree forces 0");
    }
  }
  const Poly f = e.scaled_argument(Rat(-1));  // f(x) = E(-x)
  const long tail_f = root_free_tail_start(f);
  const Poly g = series_gap_poly(f);
  const long tail_g = g.is_zero() ? 0 : root_free_tail_start(g);
  const long last = std::max({tail_f, tail_g, ell}) + 1;
  for (long m = ell; m <= last; ++m) {
    if (f(Rat(m)) == 0) {
      return Verdict::fail({m}, {Rat(0)}, "|E(-" + std::to_string(m) + ")| = 0 is not positive");
    }
  }
  // Beyond tail_f the sign of f is constant, so |f| products agree with f products.
  for (long m = ell + 1; m <= last; ++m) {
    Rat mid = abs(f(Rat(m)));
    Rat lhs = mid * mid;
    Rat rhs = abs(f(Rat(m - 1))) * abs(f(Rat(m + 1)));
    if (lhs < rhs) {
      return Verdict::fail({m}, {lhs, rhs},
                           "|E(-" + std::to_string(m) + ")|^2 = " + to_string(lhs) + " < " + to_string(rhs));
    }
  }
  if (!g.is_zero() && g.leading() < 0) {
    // Eventually negative: find the first failure past the checked range.
    for (long m = last + 1;; ++m) {
      Rat mid = f(Rat(m));
      Rat lhs = mid * mid;
      Rat rhs = f(Rat(m - 1)) * f(Rat(m + 1));
      if (lhs < rhs) return Verdict::fail({m}, {lhs, rhs}, "tail failure at m = " + std::to_string(m));
    }
  }
  return Verdict::pass("checked " + std::to_string(ell + 1) + " <= m <= " + std::to_string(last));
}

bool cl_check(const Poly& e) {
  if (e.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "critical line test of 0");
  if (e.degree() <= 0) return true;
  // Horner with z = -1/2 + i y, tracking real part a(y) and imaginary part b(y).
  const Poly y = Poly::x();
  const Rat half(1, 2);
  Poly a;
  Poly b;
  for (int k = e.degree(); k >= 0; --k) {
    Poly na = -half * a - y * b;
    Poly nb = -half * b + y * a;
    a = na + Poly::constant(e.coeff(k));
    b = nb;
  }
  return is_real_rooted(a * a + b * b);
}

bool roots_on_unit_circle(const Poly& h) {
  if (h.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "unit circle test of 0");
  const int n = h.degree();
  if (n <= 0) return true;
  // (1 - iy)^n h((1 + iy) / (1 - iy)) = sum_k h_k (1 + iy)^k (1 - iy)^(n-k).
  std::vector<Poly> plus_re(n + 1), plus_im(n + 1), minus_re(n + 1), minus_im(n + 1);
  plus_re[0] = minus_re[0] = Poly::constant(Rat(1));
  const Poly y = Poly::x();
  for (int k = 1; k <= n; ++k) {
    plus_re[k] = plus_re[k - 1] - y * plus_im[k - 1];
    plus_im[k] = plus_im[k - 1] + y * plus_re[k - 1];
    minus_re[k] = minus_re[k - 1] + y * minus_im[k - 1];
    minus_im[k] = minus_im[k - 1] - y * minus_re[k - 1];
  }
  Poly a;
  Poly b;
  for (int k = 0; k <= n; ++k) {
    if (h.coeff(k) == 0) continue;
    const Poly& pr = plus_re[k];
    const Poly& pi = plus_im[k];
    const Poly& mr = minus_re[n - k];
    const Poly& mi = minus_im[n - k];
    a += h.coeff(k) * (pr * mr - pi * mi);
    b += h.coeff(k) * (pr * mi + pi * mr);
  }
  Poly norm = a * a + b * b;
  return is_real_rooted(norm);
}

HurwitzVerdict hurwitz_implies_positive(const Poly& e) {
  HurwitzVerdict v;
  v.cl = cl_check(e);
  v.nonnegative = is_nonnegative(e.coeffs()).holds;
  v.consistent = !v.cl || v.nonnegative;
  return v;
}

}  // namespace ehrlab
