#pragma once

#include <span>
#include <vector>

#include "ehrlab/poly.hpp"

namespace ehrlab {

/// h*-vector (h_0..h_d) with its dimension context.
///
/// Entries are non-negative integers; trailing zeros up to d are kept so
/// that d is recoverable from the vector itself.
class HStarVector {
 public:
  HStarVector() = default;
  /// Pads with zeros up to length d + 1. Throws Error(BadParameter) for
  /// negative entries or a vector longer than d + 1.
  HStarVector(std::vector<Integer> h, int d);
  /// Converts an integral, non-negative polynomial. Throws
  /// Error(BadParameter) otherwise.
  static HStarVector from_poly(const Poly& p, int d);
  static HStarVector from_ints(std::initializer_list<long> h, int d);

  const std::vector<Integer>& h() const noexcept { return h_; }
  int dim() const noexcept { return d_; }
  /// Largest i with h_i > 0 (0 for the zero vector).
  int degree() const noexcept;
  Integer operator[](int i) const;
  Poly to_poly() const;
  /// h_0..h_s as rationals, the range the sequence checkers look at.
  std::vector<Rat> leading_block() const;
  Integer sum() const;

  friend bool operator==(const HStarVector&, const HStarVector&) = default;

 private:
  std::vector<Integer> h_;
  int d_ = 0;
};

struct GammaVector {
  std::vector<Rat> gamma;
  /// Degree the palindrome was centered on.
  int degree = 0;
  bool is_positive() const;
  Poly reconstruct() const;
};

struct MagicExpansion {
  std::vector<Rat> a;
  int d = 0;
  bool is_positive() const;
  Poly reconstruct() const;
};

struct KVector {
  std::vector<Rat> a;
  int d = 0;
  /// (-1)^(d-j) a_j >= 0 for every j.
  bool sign_pattern_ok = false;
  /// (-1)^(d-j) a_j agrees with coefficient d-j of h*(x+1).
  bool matches_shifted_hstar = false;
  std::vector<Rat> abs_values() const;
  Poly reconstruct() const;
};

/// Numerator of sum_{m>=0} f(m) x^m = W(x) / (1-x)^(deg f + 1).
/// Throws Error(ZeroPolynomial).
Poly hstar_from_poly(const Poly& f);

/// Same transform at an explicit dimension d >= deg f.
Poly hstar_from_poly(const Poly& f, int d);

/// sum_j h_j binom(x + d - j, d).
Poly hstar_to_ehrhart(const HStarVector& h);
Poly hstar_to_ehrhart(const Poly& h, int d);

/// Ehrhart polynomial of the pyramid: m -> sum_{j<=m} E(j).
Poly pyramid_ehrhart(const Poly& e);

/// Expansion of the palindromic h (centered at its degree) in the basis
/// x^j (x+1)^(s-2j). Throws Error(NotPalindromic).
GammaVector gamma_vector(const HStarVector& h);
GammaVector gamma_vector(const Poly& p);

/// Expansion in the basis x^i (1+x)^(d-i), d = deg e.
MagicExpansion magic_expansion(const Poly& e);

/// Expansion in the basis binom(x+j, j), d = deg e.
KVector k_vector(const Poly& e);

/// (x+1)^n h(4x / (x+1)^2). Throws Error(DegreeTooLarge) if 2 deg h > n.
Poly type_b_transform(const Poly& h, int n);

bool is_palindromic(const HStarVector& h);
bool is_palindromic(std::span<const Rat> c);

}  // namespace ehrlab
