#include "permstat/parity.hpp"

#include <algorithm>
#include <vector>

#include "permstat/ballot.hpp"
#include "permstat/checked.hpp"
#include "permstat/error.hpp"
#include "permstat/parallel.hpp"
#include "permstat/tableau.hpp"

namespace permstat {

namespace {

const PatternSet& only_321() {
  static const PatternSet set{Permutation{3, 2, 1}};
  return set;
}

std::size_t size_for(std::size_t k) {
  if (k == 0) throw DomainError("k must be at least 1");
  if (k >= 63) throw OverflowError("2^k - 1 does not fit for k = " + std::to_string(k));
  return (std::size_t{1} << k) - 1;
}

constexpr std::size_t kBruteForceMaxK = 3;

}  // namespace

StatPolynomial fast_ch_321(std::size_t n, std::size_t threads) {
  StatPolynomial result(n, only_321(), StatName::charge);
  result.add_term(0, 1);
  const std::uint64_t total = to_u64(count_two_row(n));
  if (total == 0) return result;

  std::vector<std::uint64_t> multiplier(n / 2 + 1);
  for (std::size_t r = 0; r <= n / 2; ++r) multiplier[r] = syt_count_two_row_shape(n, r);

  const std::size_t shards = std::min<std::uint64_t>(total, 64);
  std::vector<StatPolynomial> partial(shards, StatPolynomial(n, only_321(), StatName::charge));
  run_shards(shards, threads, [&](std::size_t s) {
    const std::uint64_t first = total * s / shards;
    const std::uint64_t last = total * (s + 1) / shards;
    enumerate_two_row_syt_range(n, first, last, [&](const BallotWord& w) {
      const auto word = reading_word(w.to_tableau());
      partial[s].add_term(charge(word), multiplier[w.twos()]);
    });
  });
  for (const auto& p : partial) result.merge(p);
  return result;
}

std::uint64_t count_321_avoiders_by_shape(std::size_t n) {
  std::uint64_t sum = 1;
  for (std::size_t r = 1; r <= n / 2; ++r) {
    const auto f = syt_count_two_row_shape(n, r);
    sum = checked_add(sum, checked_mul(f, f));
  }
  return sum;
}

Lemma5Result verify_lemma5(std::size_t k) {
  Lemma5Result result;
  result.k = k;
  result.n = size_for(k);
  result.count = count_321_avoiders_by_shape(result.n);
  result.holds = result.count % 2 == 1;
  if (k <= kBruteForceMaxK) {
    result.enumerated = count_avoiders(result.n, only_321());
    result.holds = result.holds && *result.enumerated == result.count;
  }
  return result;
}

bool has_parity_pattern(const StatPolynomial& poly) {
  const auto c = poly.coefficients();
  if (c.empty() || c[0] != 1) return false;
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] % 2 != 0) return false;
  }
  return true;
}

ParityResult verify_theorem8(std::size_t k, std::size_t threads) {
  const std::size_t n = size_for(k);
  ParityResult result{k, n, fast_ch_321(n, threads), std::nullopt, false, false};
  result.holds = has_parity_pattern(result.polynomial);
  if (k <= kBruteForceMaxK) {
    result.brute_force = stat_polynomial(n, only_321(), StatName::charge, threads);
    result.holds = result.holds && result.brute_force->same_coefficients(result.polynomial);
  }
  return result;
}

ParityResult verify_corollary9(std::size_t k, std::size_t threads) {
  const std::size_t n = size_for(k);
  if (k <= kBruteForceMaxK) {
    auto maj = stat_polynomial(n, only_321(), StatName::major_index, threads);
    ParityResult result{k, n, maj, maj, false, false};
    result.holds = has_parity_pattern(result.polynomial);
    return result;
  }
  const auto ch = fast_ch_321(n, threads);
  StatPolynomial maj(n, only_321(), StatName::major_index);
  for (std::size_t i = 0; i < ch.coefficients().size(); ++i) maj.add_term(i, ch.coefficient(i));
  ParityResult result{k, n, std::move(maj), std::nullopt, true, false};
  result.holds = has_parity_pattern(result.polynomial);
  return result;
}

bool maj_equals_charge_on_321(std::size_t n, std::size_t threads) {
  return stat_polynomial(n, only_321(), StatName::major_index, threads)
      .same_coefficients(stat_polynomial(n, only_321(), StatName::charge, threads));
}

}  // namespace permstat
