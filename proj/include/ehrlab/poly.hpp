#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ehrlab/rational.hpp"

namespace ehrlab {

/// Dense univariate polynomial over Q.
///
/// coeffs()[i] is the coefficient of x^i. Trailing zeros are always
/// stripped, so the zero polynomial has an empty coefficient vector and
/// degree() == -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs);

  static Poly constant(const Rat& c);
  static Poly monomial(const Rat& c, int degree);
  /// The polynomial x.
  static Poly x();
  static Poly from_integers(std::span<const long long> coeffs);

  const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of x^i, zero beyond the degree.
  Rat coeff(int i) const;
  const Rat& leading() const;

  Rat operator()(const Rat& x) const;

  Poly derivative() const;
  Poly monic() const;
  /// Positive rational multiple with coprime integer coefficients.
  Poly primitive() const;
  /// p(x + shift)
  Poly shifted(const Rat& shift) const;
  /// p(c * x)
  Poly scaled_argument(const Rat& c) const;
  /// x^deg * p(1/x), computed at the given degree (>= degree()).
  Poly reversed(int at_degree) const;
  Poly pow(unsigned exponent) const;
  /// p(q(x))
  Poly compose(const Poly& q) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) = default;

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division over Q. Throws Error(ZeroPolynomial) for b == 0.
DivMod divmod(const Poly& a, const Poly& b);

/// Exact division; throws Error(BadParameter) if b does not divide a.
Poly exact_divide(const Poly& a, const Poly& b);

/// Monic gcd (zero only when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

/// Unique polynomial of degree < points.size() through the given points.
/// Throws Error(DuplicateAbscissa) on repeated abscissae and
/// Error(BadParameter) on an empty input.
Poly interpolate(std::span<const std::pair<Rat, Rat>> points);

/// binom(x + shift, k) as a polynomial in x.
Poly binomial_poly(const Rat& shift, int k);

}  // namespace ehrlab
