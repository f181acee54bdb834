#pragma once

#include <vector>

#include "ehrlab/rational.hpp"

namespace ehrlab {

using IntVec = std::vector<Integer>;
/// Row-major dense integer matrix.
using IntMatrix = std::vector<IntVec>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix transpose(const IntMatrix& a);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVec multiply(const IntMatrix& a, const IntVec& x);
/// Rank over Q.
int rank(const IntMatrix& a);
/// Determinant of a square matrix (fraction-free elimination).
Integer determinant(const IntMatrix& a);
/// Inverse of a unimodular matrix. Throws Error(BadParameter) otherwise.
IntMatrix inverse_unimodular(const IntMatrix& a);

/// U * A * V = diag(d_1, ..., d_r, 0, ...) with d_i | d_{i+1}, d_i > 0,
/// U and V unimodular.
struct SmithForm {
  IntMatrix u;
  IntMatrix v;
  std::vector<Integer> divisors;
  int rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Unimodular coordinates on the affine lattice aff(points) ∩ Z^n.
///
/// y = to_reduced * (x - origin) maps the lattice points of the affine hull
/// bijectively onto Z^rank; x = origin + from_reduced * y inverts it.
/// `equations` lists (row, value) pairs cutting out the affine hull.
struct AffineLatticeBasis {
  IntVec origin;
  int rank = 0;
  IntMatrix to_reduced;    ///< rank x n
  IntMatrix from_reduced;  ///< n x rank
  IntMatrix equation_rows;  ///< (n - rank) x n
  IntVec equation_values;
  /// Elementary divisors of the lattice generated by the point differences,
  /// relative to the lattice of the affine hull.
  std::vector<Integer> divisors;

  bool spans() const;
  IntVec reduce(const IntVec& x) const;
  IntVec lift(const IntVec& y) const;
};

/// Throws Error(BadParameter) for an empty point set or mixed dimensions.
AffineLatticeBasis affine_lattice_basis(const std::vector<IntVec>& points);

IntVec to_int_vec(std::initializer_list<long> v);

}  // namespace ehrlab
