#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace ecr {

// Exact rationals are GMP's mpq_class, always kept canonical
// (gcd(num, den) = 1, den > 0).
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
// Throws Error{ParseError} on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

// Lowest-terms string; integers print without "/1".
std::string to_string(const Rational& q);

// Comma separated list of rationals ("1,-1,3/2"). Whitespace is ignored.
std::vector<Rational> parse_rational_list(std::string_view text);
std::string join(const std::vector<Rational>& values, std::string_view sep = ",");

Integer binomial(unsigned long n, unsigned long k);

// q^e with 0^0 = 1; negative e requires q != 0.
Rational pow(const Rational& q, long e);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace ecr
