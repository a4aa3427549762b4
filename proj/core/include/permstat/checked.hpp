#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "permstat/error.hpp"

namespace permstat {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

/// Unbounded exact integer, for counts that outgrow 64 bits.
using ExactInt = boost::multiprecision::cpp_int;

/// binomial(n, k); zero when k < 0 or k > n. Throws OverflowError past 64 bits.
std::uint64_t binomial(int n, int k);

ExactInt exact_binomial(int n, int k);

/// Throws OverflowError when `value` does not fit in 64 bits.
std::uint64_t to_u64(const ExactInt& value);

}  // namespace permstat
