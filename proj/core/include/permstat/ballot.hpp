#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/checked.hpp"
#include "permstat/tableau.hpp"

namespace permstat {

/// A word over {1, 2} whose every prefix has at least as many 1s as 2s.
/// Letter i names the row that receives entry i, so ballot words of length n
/// are in bijection with standard tableaux of at most two rows.
class BallotWord {
 public:
  BallotWord() = default;
  /// Throws DomainError on a letter other than 1 or 2, or a prefix with more 2s than 1s.
  explicit BallotWord(std::vector<std::uint8_t> letters);

  /// Parses "1121".
  static BallotWord parse(std::string_view text);
  /// Throws DomainError when `tableau` has more than two rows.
  static BallotWord from_tableau(const StandardTableau& tableau);

  std::size_t size() const { return letters_.size(); }
  const std::vector<std::uint8_t>& letters() const { return letters_; }
  /// Number of 2s, i.e. the length of the second row.
  std::size_t twos() const;
  bool is_two_row() const { return twos() > 0; }

  StandardTableau to_tableau() const;
  std::string to_string() const;

  friend bool operator==(const BallotWord&, const BallotWord&) = default;
  friend auto operator<=>(const BallotWord&, const BallotWord&) = default;

 private:
  std::vector<std::uint8_t> letters_;
};

/// Number of standard tableaux with exactly two rows and n cells:
/// binomial(n, floor(n/2)) - 1 for n >= 2, else 0. Exact for every n.
ExactInt count_two_row(std::size_t n);

/// f^lambda for lambda = (n - r, r): binomial(n, r) - binomial(n, r - 1).
/// Throws DomainError unless 0 <= r <= floor(n/2).
std::uint64_t syt_count_two_row_shape(std::size_t n, std::size_t r);

/// Position of `w` in the lexicographic stream of two-row ballot words of
/// its length. Throws DomainError for the all-1s word.
std::uint64_t ballot_rank(const BallotWord& w);

/// Inverse of ballot_rank. Throws DomainError unless rank < count_two_row(n).
BallotWord ballot_unrank(std::size_t n, std::uint64_t rank);

using BallotVisitor = std::function<void(const BallotWord&)>;

/// Every ballot word of length n containing a 2, in lexicographic order (1 < 2).
void enumerate_two_row_syt(std::size_t n, const BallotVisitor& visit);

/// The words with ranks in [first, last), a contiguous shard of the stream.
void enumerate_two_row_syt_range(std::size_t n, std::uint64_t first, std::uint64_t last,
                                 const BallotVisitor& visit);

/// Fixed-point-free involution on two-row ballot words of a given length:
/// pairs rank 2t with rank 2t + 1. Throws DomainError when count_two_row(n)
/// is odd, since no such pairing covers the whole set.
BallotWord involution_phi(const BallotWord& w);

}  // namespace permstat
