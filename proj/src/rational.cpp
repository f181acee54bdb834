#include "ehrlab/rational.hpp"

#include <limits>

#include "ehrlab/error.hpp"

namespace ehrlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateAbscissa: return "DuplicateAbscissa";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NonpositiveLeadingCoefficient: return "NonpositiveLeadingCoefficient";
    case ErrorCode::NonpositiveEvaluation: return "NonpositiveEvaluation";
    case ErrorCode::NotPalindromic: return "NotPalindromic";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::OriginNotVertex: return "OriginNotVertex";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::NotASimplex: return "NotASimplex";
    case ErrorCode::ScaleLimit: return "ScaleLimit";
    case ErrorCode::NoUniqueInteriorPoint: return "NoUniqueInteriorPoint";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::TooManyLinearExtensions: return "TooManyLinearExtensions";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::NotFullRankData: return "NotFullRankData";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Rat make_rat(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::BadParameter, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty integer");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw Error(ErrorCode::ParseError, "bad integer '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw Error(ErrorCode::ParseError, "bad integer '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_integer(text));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return make_rat(parse_integer(text.substr(0, slash)), den);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor(const Rat& r) { return floor_div(r.get_num(), r.get_den()); }
Integer ceil(const Rat& r) { return ceil_div(r.get_num(), r.get_den()); }

bool is_integer(const Rat& r) { return r.get_den() == 1; }
int sign(const Rat& r) { return sgn(r); }
int sign(const Integer& z) { return sgn(z); }

std::int64_t to_int64(const Integer& z) {
  if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::ScaleLimit, "integer " + z.get_str() + " exceeds 64 bits");
  }
  return static_cast<std::int64_t>(z.get_si());
}

Integer binomial(const Integer& n, unsigned long k) {
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
  return out;
}

}  // namespace ehrlab
