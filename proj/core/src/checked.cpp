#include "permstat/checked.hpp"

#include <limits>
#include <numeric>

namespace permstat {

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t acc = 1;
  for (int i = 0; i < k; ++i) {
    // acc * (n - i) / (i + 1) is integral; cancel the divisor first so the
    // only overflow reported is a genuine one.
    const std::uint64_t den = static_cast<std::uint64_t>(i) + 1;
    const std::uint64_t g = std::gcd(acc, den);
    acc = checked_mul(acc / g, static_cast<std::uint64_t>(n - i) / (den / g));
  }
  return acc;
}

ExactInt exact_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  ExactInt acc = 1;
  for (int i = 0; i < k; ++i) acc = acc * (n - i) / (i + 1);
  return acc;
}

std::uint64_t to_u64(const ExactInt& value) {
  if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) {
    throw OverflowError(value.str() + " does not fit in 64 bits");
  }
  return value.convert_to<std::uint64_t>();
}

}  // namespace permstat
