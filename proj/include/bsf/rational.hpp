#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace bsf {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
Rational power(const Rational& base, unsigned exponent);

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p", "-p", "p/q" and finite decimals such as "0.25".
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);

}  // namespace bsf
