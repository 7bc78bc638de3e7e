#pragma once

#include <cstdint>
#include <numeric>

#include "ibn/errors.hpp"

// Checked 64-bit arithmetic. Overflow is a reported error, never wraparound:
// lcm of two periods can exceed the representable range and a wrapped value
// would silently corrupt a type.

namespace ibn {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(errc::arithmetic_overflow, "integer overflow in addition");
  }
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(errc::arithmetic_overflow, "integer overflow in multiplication");
  }
  return r;
}

/// lcm(a, b) for positive a, b; throws on overflow.
inline std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  return checked_mul(a / std::gcd(a, b), b);
}

}  // namespace ibn
