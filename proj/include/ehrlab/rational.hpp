#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace ehrlab {

using Integer = mpz_class;

// Exact rational. mpq_class arithmetic keeps values canonical (reduced,
// positive denominator); make_rat() canonicalizes explicit num/den pairs.
using Rat = mpq_class;

Rat make_rat(const Integer& num, const Integer& den = 1);

// "num/den", or just "num" when den == 1.
std::string to_string(const Rat& r);
std::string to_string(const Integer& z);

// Accepts "a", "-a", "a/b"; throws Error(ParseError) otherwise.
Rat parse_rat(std::string_view text);
Integer parse_integer(std::string_view text);

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
Integer floor(const Rat& r);
Integer ceil(const Rat& r);

bool is_integer(const Rat& r);
int sign(const Rat& r);
int sign(const Integer& z);

// Throws Error(ScaleLimit) when z does not fit.
std::int64_t to_int64(const Integer& z);

Integer binomial(const Integer& n, unsigned long k);

}  // namespace ehrlab
