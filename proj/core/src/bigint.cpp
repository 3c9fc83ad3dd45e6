#include "tfold/bigint.hpp"

#include <stdexcept>

namespace tfold {

BigInt isqrt(const BigInt& n) {
  if (n < 0) {
    throw std::domain_error("isqrt of a negative integer");
  }
  if (n < 2) {
    return n;
  }
  // Start above the root: 2^(ceil(bits/2)) > sqrt(n). The Newton sequence then
  // decreases monotonically until it reaches floor(sqrt(n)).
  const unsigned bits = boost::multiprecision::msb(n) + 1;
  BigInt x = BigInt(1) << ((bits + 1) / 2);
  while (true) {
    BigInt y = (x + n / x) >> 1;
    if (y >= x) {
      return x;
    }
    x = std::move(y);
  }
}

std::optional<BigInt> exact_sqrt(const BigInt& n) {
  if (n < 0) {
    return std::nullopt;
  }
  BigInt r = isqrt(n);
  if (r * r == n) {
    return r;
  }
  return std::nullopt;
}

std::string to_decimal(const BigInt& n) { return n.str(); }

std::int64_t to_int64(const BigInt& n) {
  if (n > BigInt(INT64_MAX) || n < BigInt(INT64_MIN)) {
    throw std::overflow_error("integer " + n.str() + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(n);
}

}  // namespace tfold
