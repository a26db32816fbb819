#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace circlehilb {

using Integer = mpz_class;
using Rational = mpq_class;

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p", "-p", "p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

// p/q in lowest terms; mpq_class(p, q) alone does not reduce.
Rational frac(std::int64_t p, std::int64_t q);

bool is_integer(const Rational& q);
int sign(const Rational& q);

Rational pow(const Rational& base, std::int64_t exponent);

// Generalized binomial coefficient C(top, k) for any integer top and k >= 0.
Integer binomial(std::int64_t top, std::int64_t k);
Rational factorial(std::int64_t n);

std::int64_t gcd_of(const std::vector<std::int64_t>& values);
std::int64_t checked_lcm(std::int64_t a, std::int64_t b);

std::int64_t to_int64(const Integer& z);

}  // namespace circlehilb
