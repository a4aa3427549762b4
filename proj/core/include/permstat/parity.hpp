#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "permstat/statistics.hpp"

namespace permstat {

/// Ch_n({321}; q) from two-row insertion tableaux instead of permutations.
///
/// Charge is constant on each Knuth class and 321-avoiders are exactly the
/// permutations whose insertion tableau has at most two rows. So each
/// two-row tableau P contributes f^shape(P) permutations at
/// q^charge(reading_word(P)), and the identity contributes 1 at q^0.
/// Work is sharded by ballot rank over `threads` workers.
StatPolynomial fast_ch_321(std::size_t n, std::size_t threads = 1);

/// 1 + sum over 1 <= r <= n/2 of (f^(n-r,r))^2, which counts Av_n(321).
std::uint64_t count_321_avoiders_by_shape(std::size_t n);

struct Lemma5Result {
  std::size_t k = 0;
  std::size_t n = 0;
  std::uint64_t count = 0;
  /// Present when the count was also obtained by enumeration (k <= 3).
  std::optional<std::uint64_t> enumerated;
  bool holds = false;
};

/// |Av_{2^k-1}(321)| is odd. The shape-count identity is used for every k;
/// for k <= 3 it is also checked against pruned enumeration.
Lemma5Result verify_lemma5(std::size_t k);

struct ParityResult {
  std::size_t k = 0;
  std::size_t n = 0;
  StatPolynomial polynomial;
  /// Brute-force polynomial, when one was computed (k <= 3).
  std::optional<StatPolynomial> brute_force;
  /// True when the polynomial was obtained through M_n(321) = Ch_n(321).
  bool via_charge_identity = false;
  bool holds = false;
};

/// Constant term 1 and every other coefficient even.
bool has_parity_pattern(const StatPolynomial& poly);

/// Ch_{2^k-1}(321; q) via the tableau path; brute force cross-check for k <= 3.
ParityResult verify_theorem8(std::size_t k, std::size_t threads = 1);

/// M_{2^k-1}(321; q). Brute force for k <= 3; beyond that the tableau path
/// for Ch is used, relying on M_n(321) = Ch_n(321).
ParityResult verify_corollary9(std::size_t k, std::size_t threads = 1);

/// M_n({321}; q) == Ch_n({321}; q), both by brute force.
bool maj_equals_charge_on_321(std::size_t n, std::size_t threads = 1);

}  // namespace permstat
