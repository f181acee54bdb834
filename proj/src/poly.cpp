#include "ehrlab/poly.hpp"

#include <algorithm>
#include <sstream>

#include "ehrlab/error.hpp"

namespace ehrlab {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, int degree) {
  std::vector<Rat> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::x() { return monomial(Rat(1), 1); }

Poly Poly::from_integers(std::span<const long long> coeffs) {
  std::vector<Rat> v;
  v.reserve(coeffs.size());
  for (long long c : coeffs) v.emplace_back(static_cast<long>(c));
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rat& Poly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of 0");
  return coeffs_.back();
}

Rat Poly::operator()(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Poly(std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Poly out = *this;
  Rat lc = leading();
  for (auto& c : out.coeffs_) c /= lc;
  return out;
}

Poly Poly::primitive() const {
  if (is_zero()) return {};
  Integer den_lcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& c : coeffs_) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rat factor = make_rat(den_lcm, num_gcd);
  return *this * factor;
}

Poly Poly::shifted(const Rat& shift) const {
  // Horner in the polynomial ring: acc = acc * (x + shift) + c.
  Poly acc;
  const Poly lin({shift, Rat(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= lin;
    acc += constant(*it);
  }
  return acc;
}

Poly Poly::scaled_argument(const Rat& c) const {
  Poly out = *this;
  Rat power(1);
  for (auto& coef : out.coeffs_) {
    coef *= power;
    power *= c;
  }
  out.trim();
  return out;
}

Poly Poly::reversed(int at_degree) const {
  if (at_degree < degree()) throw Error(ErrorCode::BadParameter, "reversal degree below polynomial degree");
  std::vector<Rat> v(static_cast<std::size_t>(at_degree) + 1);
  for (int i = 0; i <= degree(); ++i) v[static_cast<std::size_t>(at_degree - i)] = coeffs_[static_cast<std::size_t>(i)];
  return Poly(std::move(v));
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = constant(Rat(1));
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Poly Poly::compose(const Poly& q) const {
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= q;
    acc += constant(*it);
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rat> v(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(v);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  for (auto& coef : coeffs_) coef *= c;
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (!unit || i == 0) os << ehrlab::to_string(mag);
    if (i >= 1) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  std::vector<Rat> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {Poly{}, a};
  std::vector<Rat> quot(static_cast<std::size_t>(da - db) + 1);
  const Rat& lb = b.leading();
  for (int i = da; i >= db; --i) {
    const Rat& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    Rat q = top / lb;
    quot[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_divide(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::BadParameter, "inexact polynomial division");
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a.primitive();
  Poly y = b.primitive();
  while (!y.is_zero()) {
    Poly r = divmod(x, y).remainder.primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly interpolate(std::span<const std::pair<Rat, Rat>> points) {
  if (points.empty()) throw Error(ErrorCode::BadParameter, "interpolation needs at least one point");
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i].first == points[j].first) {
        throw Error(ErrorCode::DuplicateAbscissa, "abscissa " + to_string(points[i].first) + " repeated");
      }
    }
  }
  // Newton divided differences, then expand the Newton form.
  std::vector<Rat> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
    }
  }
  Poly result = Poly::constant(dd[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;) {
    result *= Poly({-points[k].first, Rat(1)});
    result += Poly::constant(dd[k]);
  }
  return result;
}

Poly binomial_poly(const Rat& shift, int k) {
  // binom(x + shift, k) = prod_{t=0}^{k-1} (x + shift - t) / k!
  Poly out = Poly::constant(Rat(1));
  Integer fact = 1;
  for (int t = 0; t < k; ++t) {
    out *= Poly({shift - t, Rat(1)});
    fact *= t + 1;
  }
  return out * make_rat(1, fact);
}

}  // namespace ehrlab
