#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

enum class StatName { major_index, charge, inversions };

/// Canonical name ("major_index", "charge", "inversions").
std::string_view to_string(StatName stat);

/// Accepts canonical names and the short forms maj, ch, inv.
std::optional<StatName> parse_stat_name(std::string_view text);

/// Positions i in 1..n-1 with p(i) > p(i+1).
std::vector<std::size_t> descent_set(const Permutation& p);

std::uint64_t major_index(const Permutation& p);

/// Charge value of every entry, keyed by value: chv(1) = 0, and for i >= 2
/// chv(i) = n+1-i when i sits left of i-1, else 0.
std::map<int, std::uint64_t> charge_values(const Permutation& p);

std::uint64_t charge(const Permutation& p);

std::uint64_t inversions(const Permutation& p);

std::uint64_t statistic(const Permutation& p, StatName stat);

/// F_n^st(patterns; q) as a dense coefficient vector, index i holding the
/// coefficient of q^i. Coefficients are exact; overflow throws.
///
/// The vector is kept trimmed: the last coefficient is nonzero unless the
/// polynomial is zero, in which case it is empty.
class StatPolynomial {
 public:
  StatPolynomial(std::size_t n, PatternSet patterns, StatName stat);

  /// Adds `count` to the coefficient of q^exponent.
  void add_term(std::size_t exponent, std::uint64_t count = 1);

  /// Coefficient-wise sum with a partial polynomial built over the same
  /// (n, patterns, stat). Associative and commutative.
  StatPolynomial& merge(const StatPolynomial& other);

  std::span<const std::uint64_t> coefficients() const { return coeffs_; }
  std::uint64_t coefficient(std::size_t exponent) const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Sum of coefficients, i.e. |Av_n(patterns)|.
  std::uint64_t total() const;

  std::size_t n() const { return n_; }
  const PatternSet& patterns() const { return patterns_; }
  StatName stat() const { return stat_; }

  /// "1 + 2q + 2q^2"
  std::string to_string() const;

  bool same_coefficients(const StatPolynomial& other) const { return coeffs_ == other.coeffs_; }

  friend bool operator==(const StatPolynomial&, const StatPolynomial&) = default;

 private:
  std::size_t n_;
  PatternSet patterns_;
  StatName stat_;
  std::vector<std::uint64_t> coeffs_;
};

/// Builds F_n^stat(patterns; q) by streaming the avoiders, sharded by first
/// entry over `threads` workers (0 = hardware concurrency). The result does
/// not depend on the thread count.
StatPolynomial stat_polynomial(std::size_t n, const PatternSet& patterns, StatName stat,
                               std::size_t threads = 1);

}  // namespace permstat
