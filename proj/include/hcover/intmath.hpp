#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "hcover/error.hpp"

namespace hcover {

/// base^exp, throwing PreconditionError when the result does not fit in 63 bits.
inline std::int64_t checked_pow(std::int64_t base, std::uint32_t exp) {
  std::int64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && (r > std::numeric_limits<std::int64_t>::max() / base ||
                      r < std::numeric_limits<std::int64_t>::min() / base)) {
      throw PreconditionError("integer overflow in " + std::to_string(base) + "^" + std::to_string(exp));
    }
    r *= base;
  }
  return r;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Exponent k with base^k == value, if value is an exact power of base.
inline std::optional<std::uint32_t> exact_log(std::uint64_t base, std::uint64_t value) {
  if (base < 2 || value == 0) return std::nullopt;
  std::uint32_t k = 0;
  while (value % base == 0) {
    value /= base;
    ++k;
  }
  if (value != 1) return std::nullopt;
  return k;
}

inline std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

}  // namespace hcover
