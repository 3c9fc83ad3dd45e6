#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tfold {

using BigInt = boost::multiprecision::cpp_int;

/// Floor of the square root of a non-negative integer, computed with Newton's
/// iteration in exact arithmetic. Throws std::domain_error for negative input.
BigInt isqrt(const BigInt& n);

/// The exact square root of n if n is a perfect square.
std::optional<BigInt> exact_sqrt(const BigInt& n);

inline bool is_perfect_square(const BigInt& n) { return exact_sqrt(n).has_value(); }

/// Decimal representation, no exponent notation.
std::string to_decimal(const BigInt& n);

/// Narrowing conversion that throws std::overflow_error when n does not fit.
std::int64_t to_int64(const BigInt& n);

}  // namespace tfold
