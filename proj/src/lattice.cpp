#include "ehrlab/lattice.hpp"

#include <algorithm>

#include "ehrlab/error.hpp"

namespace ehrlab {

namespace {

std::size_t cols_of(const IntMatrix& a) { return a.empty() ? 0 : a[0].size(); }

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
  for (auto& row : a) std::swap(row[i], row[j]);
}

// row_i -= q * row_j
void row_axpy(IntMatrix& a, std::size_t i, std::size_t j, const Integer& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < a[i].size(); ++c) a[i][c] -= q * a[j][c];
}

void col_axpy(IntMatrix& a, std::size_t i, std::size_t j, const Integer& q) {
  if (q == 0) return;
  for (auto& row : a) row[i] -= q * row[j];
}

Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, IntVec(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix transpose(const IntMatrix& a) {
  const std::size_t r = a.size();
  const std::size_t c = cols_of(a);
  IntMatrix t(c, IntVec(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) t[j][i] = a[i][j];
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = cols_of(b);
  IntMatrix out(n, IntVec(m, Integer(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

IntVec multiply(const IntMatrix& a, const IntVec& x) {
  IntVec out(a.size(), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) out[i] += a[i][j] * x[j];
  return out;
}

int rank(const IntMatrix& a) {
  IntMatrix m = a;
  const std::size_t rows = m.size();
  const std::size_t cols = cols_of(m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Integer f = m[i][c];
      Integer g = m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] * g - m[r][j] * f;
    }
    ++r;
  }
  return static_cast<int>(r);
}

Integer determinant(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (cols_of(a) != n) throw Error(ErrorCode::BadParameter, "determinant of a non-square matrix");
  IntMatrix m = a;
  Integer prev = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sgn * m[n - 1][n - 1];
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw Error(ErrorCode::BadParameter, "singular matrix");
    std::swap(m[p], m[c]);
    Rat inv = 1 / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  IntMatrix out(n, IntVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& x = m[i][n + j];
      if (!is_integer(x)) throw Error(ErrorCode::BadParameter, "matrix is not unimodular");
      out[i][j] = x.get_num();
    }
  return out;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = cols_of(a);
  IntMatrix s = a;
  SmithForm out;
  out.u = identity_matrix(rows);
  out.v = identity_matrix(cols);
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (s[i][j] != 0 && (pi == rows || abs(s[i][j]) < abs(s[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    std::swap(s[t], s[pi]);
    std::swap(out.u[t], out.u[pi]);
    swap_cols(s, t, pj);
    swap_cols(out.v, t, pj);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Integer q = tdiv(s[i][t], s[t][t]);
        row_axpy(s, i, t, q);
        row_axpy(out.u, i, t, q);
        if (s[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Integer q = tdiv(s[t][j], s[t][t]);
        col_axpy(s, j, t, q);
        col_axpy(out.v, j, t, q);
        if (s[t][j] != 0) clean = false;
      }
      if (!clean) {
        // Move the smallest remainder in row/column t to the pivot.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (s[i][t] != 0 && abs(s[i][t]) < abs(s[bi][bj])) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (s[t][j] != 0 && abs(s[t][j]) < abs(s[bi][bj])) {
            bi = t;
            bj = j;
          }
        if (bi != t) {
          std::swap(s[t], s[bi]);
          std::swap(out.u[t], out.u[bi]);
        }
        if (bj != t) {
          swap_cols(s, t, bj);
          swap_cols(out.v, t, bj);
        }
        continue;
      }
      // Enforce divisibility of the trailing block.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (s[i][j] % s[t][t] != 0) {
            for (std::size_t c = 0; c < cols; ++c) s[t][c] += s[i][c];
            for (std::size_t c = 0; c < rows; ++c) out.u[t][c] += out.u[i][c];
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (s[t][t] < 0) {
      for (auto& x : s[t]) x = -x;
      for (auto& x : out.u[t]) x = -x;
    }
    out.divisors.push_back(s[t][t]);
    ++t;
  }
  out.rank = static_cast<int>(t);
  return out;
}

bool AffineLatticeBasis::spans() const {
  return std::all_of(divisors.begin(), divisors.end(), [](const Integer& d) { return d == 1; });
}

IntVec AffineLatticeBasis::reduce(const IntVec& x) const {
  IntVec diff(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - origin[i];
  return multiply(to_reduced, diff);
}

IntVec AffineLatticeBasis::lift(const IntVec& y) const {
  IntVec x = origin;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) x[i] += from_reduced[i][j] * y[j];
  return x;
}

AffineLatticeBasis affine_lattice_basis(const std::vector<IntVec>& points) {
  if (points.empty()) throw Error(ErrorCode::BadParameter, "affine lattice of no points");
  const std::size_t n = points[0].size();
  for (const auto& p : points) {
    if (p.size() != n) throw Error(ErrorCode::BadParameter, "points of mixed dimension");
  }
  AffineLatticeBasis out;
  out.origin = points[0];
  IntMatrix diffs(n, IntVec(points.size() - 1));
  for (std::size_t j = 1; j < points.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) diffs[i][j - 1] = points[j][i] - points[0][i];

  const std::size_t r = static_cast<std::size_t>(rank(diffs));
  out.rank = static_cast<int>(r);
  IntMatrix u;
  if (points.size() > 1) {
    SmithForm snf = smith_normal_form(diffs);
    out.divisors = snf.divisors;
    u = snf.u;
  } else {
    u = identity_matrix(n);
  }
  IntMatrix u_inv = inverse_unimodular(u);
  for (std::size_t i = r; i < n; ++i) {
    out.equation_rows.push_back(u[i]);
    Integer v = 0;
    for (std::size_t j = 0; j < n; ++j) v += u[i][j] * out.origin[j];
    out.equation_values.push_back(v);
  }
  IntMatrix basis(n, IntVec(r));  // columns span the affine lattice
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < r; ++j) basis[i][j] = u_inv[i][j];

  // Prefer plain coordinate projections when some r coordinates already
  // parametrize the lattice; they keep reduced polytopes unskewed.
  std::vector<std::size_t> pick(r);
  for (std::size_t i = 0; i < r; ++i) pick[i] = i;
  bool found = false;
  int tries = 0;
  do {
    IntMatrix sub(r, IntVec(r));
    for (std::size_t i = 0; i < r; ++i) sub[i] = basis[pick[i]];
    Integer det = determinant(sub);
    if (det == 1 || det == -1) {
      IntMatrix t = inverse_unimodular(sub);
      out.from_reduced = multiply(basis, t);
      out.to_reduced.assign(r, IntVec(n, Integer(0)));
      for (std::size_t i = 0; i < r; ++i) out.to_reduced[i][pick[i]] = 1;
      found = true;
      break;
    }
  } while (++tries < 20000 && next_combination(pick, n));
  if (!found) {
    out.from_reduced = basis;
    out.to_reduced.assign(u.begin(), u.begin() + static_cast<long>(r));
  }
  return out;
}

IntVec to_int_vec(std::initializer_list<long> v) {
  IntVec out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace ehrlab
