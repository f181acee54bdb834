#include "ehrlab/hstar.hpp"

#include <algorithm>

#include "ehrlab/error.hpp"

namespace ehrlab {

namespace {

Rat binom_rat(long n, long k) {
  if (k < 0 || n < k) return Rat(0);
  return Rat(binomial(Integer(n), static_cast<unsigned long>(k)));
}

}  // namespace

HStarVector::HStarVector(std::vector<Integer> h, int d) : h_(std::move(h)), d_(d) {
  if (d < 0) throw Error(ErrorCode::BadParameter, "negative dimension");
  if (h_.size() > static_cast<std::size_t>(d) + 1) {
    throw Error(ErrorCode::BadParameter, "h*-vector longer than d + 1");
  }
  for (const auto& x : h_) {
    if (x < 0) throw Error(ErrorCode::BadParameter, "negative h*-entry " + x.get_str());
  }
  h_.resize(static_cast<std::size_t>(d) + 1, Integer(0));
}

HStarVector HStarVector::from_poly(const Poly& p, int d) {
  if (p.degree() > d) throw Error(ErrorCode::BadParameter, "h*-polynomial degree exceeds d");
  std::vector<Integer> h;
  for (const auto& c : p.coeffs()) {
    if (!is_integer(c)) throw Error(ErrorCode::BadParameter, "non-integral h*-entry " + to_string(c));
    h.push_back(c.get_num());
  }
  return HStarVector(std::move(h), d);
}

HStarVector HStarVector::from_ints(std::initializer_list<long> h, int d) {
  std::vector<Integer> v;
  for (long x : h) v.emplace_back(x);
  return HStarVector(std::move(v), d);
}

int HStarVector::degree() const noexcept {
  for (int i = static_cast<int>(h_.size()) - 1; i >= 0; --i) {
    if (h_[static_cast<std::size_t>(i)] != 0) return i;
  }
  return 0;
}

Integer HStarVector::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(h_.size())) return Integer(0);
  return h_[static_cast<std::size_t>(i)];
}

Poly HStarVector::to_poly() const {
  std::vector<Rat> v(h_.begin(), h_.end());
  return Poly(std::move(v));
}

std::vector<Rat> HStarVector::leading_block() const {
  std::vector<Rat> v;
  for (int i = 0; i <= degree(); ++i) v.emplace_back(h_[static_cast<std::size_t>(i)]);
  return v;
}

Integer HStarVector::sum() const {
  Integer s = 0;
  for (const auto& x : h_) s += x;
  return s;
}

bool GammaVector::is_positive() const {
  return std::all_of(gamma.begin(), gamma.end(), [](const Rat& g) { return g >= 0; });
}

Poly GammaVector::reconstruct() const {
  Poly out;
  const Poly xp1({Rat(1), Rat(1)});
  for (std::size_t j = 0; j < gamma.size(); ++j) {
    out += Poly::monomial(gamma[j], static_cast<int>(j)) * xp1.pow(static_cast<unsigned>(degree - 2 * static_cast<int>(j)));
  }
  return out;
}

bool MagicExpansion::is_positive() const {
  return std::all_of(a.begin(), a.end(), [](const Rat& v) { return v >= 0; });
}

Poly MagicExpansion::reconstruct() const {
  Poly out;
  const Poly xp1({Rat(1), Rat(1)});
  for (std::size_t i = 0; i < a.size(); ++i) {
    out += Poly::monomial(a[i], static_cast<int>(i)) * xp1.pow(static_cast<unsigned>(d - static_cast<int>(i)));
  }
  return out;
}

std::vector<Rat> KVector::abs_values() const {
  std::vector<Rat> out;
  for (const auto& v : a) out.push_back(abs(v));
  return out;
}

Poly KVector::reconstruct() const {
  Poly out;
  for (std::size_t j = 0; j < a.size(); ++j) out += a[j] * binomial_poly(Rat(static_cast<long>(j)), static_cast<int>(j));
  return out;
}

Poly hstar_from_poly(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "h* of the zero polynomial");
  return hstar_from_poly(f, f.degree());
}

Poly hstar_from_poly(const Poly& f, int d) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "h* of the zero polynomial");
  if (d < f.degree()) throw Error(ErrorCode::BadParameter, "dimension below polynomial degree");
  // f(k) = sum_{i<=k} h_i binom(k + d - i, d); the system is unitriangular.
  std::vector<Rat> h(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    Rat v = f(Rat(k));
    for (int i = 0; i < k; ++i) v -= h[static_cast<std::size_t>(i)] * binom_rat(k + d - i, d);
    h[static_cast<std::size_t>(k)] = v;
  }
  return Poly(std::move(h));
}

Poly hstar_to_ehrhart(const HStarVector& h) { return hstar_to_ehrhart(h.to_poly(), h.dim()); }

Poly hstar_to_ehrhart(const Poly& h, int d) {
  if (h.degree() > d) throw Error(ErrorCode::BadParameter, "h*-polynomial degree exceeds d");
  Poly out;
  for (int j = 0; j <= h.degree(); ++j) {
    if (h.coeff(j) == 0) continue;
    out += h.coeff(j) * binomial_poly(Rat(d - j), d);
  }
  return out;
}

Poly pyramid_ehrhart(const Poly& e) {
  const int n = std::max(e.degree(), 0) + 2;
  std::vector<std::pair<Rat, Rat>> pts;
  Rat running(0);
  for (int m = 0; m < n; ++m) {
    running += e(Rat(m));
    pts.emplace_back(Rat(m), running);
  }
  return interpolate(pts);
}

bool is_palindromic(std::span<const Rat> c) {
  const std::size_t n = c.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (c[j] != c[n - 1 - j]) return false;
  }
  return true;
}

bool is_palindromic(const HStarVector& h) {
  auto block = h.leading_block();
  return is_palindromic(block);
}

GammaVector gamma_vector(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "gamma vector of 0");
  if (!is_palindromic(p.coeffs())) {
    throw Error(ErrorCode::NotPalindromic, p.to_string() + " is not palindromic");
  }
  const int s = p.degree();
  GammaVector out;
  out.degree = s;
  // Coefficient of x^k: sum_{j<=k} gamma_j binom(s - 2j, k - j).
  for (int k = 0; k <= s / 2; ++k) {
    Rat v = p.coeff(k);
    for (int j = 0; j < k; ++j) v -= out.gamma[static_cast<std::size_t>(j)] * binom_rat(s - 2 * j, k - j);
    out.gamma.push_back(v);
  }
  return out;
}

GammaVector gamma_vector(const HStarVector& h) { return gamma_vector(h.to_poly()); }

MagicExpansion magic_expansion(const Poly& e) {
  if (e.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "magic expansion of 0");
  MagicExpansion out;
  out.d = e.degree();
  // Lowest term of x^i (1+x)^(d-i) is x^i, so solve from the bottom up.
  for (int k = 0; k <= out.d; ++k) {
    Rat v = e.coeff(k);
    for (int i = 0; i < k; ++i) v -= out.a[static_cast<std::size_t>(i)] * binom_rat(out.d - i, k - i);
    out.a.push_back(v);
  }
  return out;
}

KVector k_vector(const Poly& e) {
  if (e.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "K-vector of 0");
  KVector out;
  out.d = e.degree();
  out.a.assign(static_cast<std::size_t>(out.d) + 1, Rat(0));
  Poly rest = e;
  for (int j = out.d; j >= 0; --j) {
    Poly basis = binomial_poly(Rat(j), j);
    Rat aj = rest.coeff(j) / basis.leading();
    out.a[static_cast<std::size_t>(j)] = aj;
    rest -= aj * basis;
  }
  Poly shifted = hstar_from_poly(e, out.d).shifted(Rat(1));
  out.sign_pattern_ok = true;
  out.matches_shifted_hstar = true;
  for (int j = 0; j <= out.d; ++j) {
    Rat signed_a = ((out.d - j) % 2 == 0) ? out.a[static_cast<std::size_t>(j)] : Rat(-out.a[static_cast<std::size_t>(j)]);
    if (signed_a < 0) out.sign_pattern_ok = false;
    if (signed_a != shifted.coeff(out.d - j)) out.matches_shifted_hstar = false;
  }
  return out;
}

Poly type_b_transform(const Poly& h, int n) {
  if (2 * h.degree() > n) {
    throw Error(ErrorCode::DegreeTooLarge, "degree " + std::to_string(h.degree()) + " too large for n = " + std::to_string(n));
  }
  Poly out;
  const Poly xp1({Rat(1), Rat(1)});
  Rat four_pow(1);
  for (int i = 0; i <= h.degree(); ++i) {
    if (h.coeff(i) != 0) {
      out += Poly::monomial(h.coeff(i) * four_pow, i) * xp1.pow(static_cast<unsigned>(n - 2 * i));
    }
    four_pow *= 4;
  }
  return out;
}

}  // namespace ehrlab
