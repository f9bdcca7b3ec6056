#pragma once

// Exact arithmetic primitives shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace mzv {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Always "numerator/denominator", lowest terms, positive denominator ("1/1", "-3/4", "0/1").
std::string to_fraction_string(const BigRational& value);

/// Parses "n/d" or "n". Throws std::invalid_argument on malformed input or zero denominator.
BigRational parse_fraction(const std::string& text);

BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt factorial(std::uint64_t n);

/// n^(-k) as an exact rational, n >= 1.
BigRational inverse_power(std::uint64_t n, std::uint64_t k);

/// Truncating conversion. Stays finite when numerator and denominator are beyond double range.
double to_double(const BigRational& value);

inline int sign_power(std::uint64_t exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace mzv
