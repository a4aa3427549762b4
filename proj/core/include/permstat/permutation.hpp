#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace permstat {

/// A permutation of {1..n} in one-line notation.
///
/// Positions and values are 1-based in the public interface; `at(i)` is the
/// value in position i. The empty permutation (n = 0) is the unique element
/// of S_0.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidPermutation unless `one_line` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> one_line);
  Permutation(std::initializer_list<int> one_line);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  /// Value at 1-based position `pos`.
  int at(std::size_t pos) const { return values_[pos - 1]; }

  std::span<const int> values() const { return values_; }

  bool is_identity() const;

  /// Digit juxtaposition for n <= 9 ("2143"), comma separated otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

Permutation inverse(const Permutation& p);
Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);

/// inverse(complement(reverse(p))); carries major index to charge.
Permutation f_map(const Permutation& p);

/// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

/// A finite set of forbidden patterns. Ordered, so iteration is deterministic.
class PatternSet {
 public:
  PatternSet() = default;
  PatternSet(std::initializer_list<Permutation> patterns) : patterns_(patterns) {}
  template <typename It>
  PatternSet(It first, It last) : patterns_(first, last) {}

  void insert(Permutation p) { patterns_.insert(std::move(p)); }
  bool contains(const Permutation& p) const { return patterns_.count(p) != 0; }
  std::size_t size() const { return patterns_.size(); }
  bool empty() const { return patterns_.empty(); }

  auto begin() const { return patterns_.begin(); }
  auto end() const { return patterns_.end(); }

  /// True when some pattern has length <= n, i.e. Av_n is a proper filter of S_n.
  bool constrains(std::size_t n) const;

  /// "{132,213}"
  std::string to_string() const;

  friend bool operator==(const PatternSet&, const PatternSet&) = default;
  friend auto operator<=>(const PatternSet& a, const PatternSet& b) {
    return a.patterns_ <=> b.patterns_;
  }

 private:
  std::set<Permutation> patterns_;
};

/// True iff some subsequence of `host` is order isomorphic to `pattern`.
/// `host` may be any sequence of distinct integers.
bool contains_pattern(std::span<const int> host, const Permutation& pattern);
bool contains_pattern(const Permutation& host, const Permutation& pattern);

/// Generic backtracking search; `contains_pattern` dispatches to a quadratic
/// scan for length-3 patterns, this entry point never does.
bool contains_pattern_generic(std::span<const int> host, const Permutation& pattern);

/// True iff some occurrence of `pattern` in `host` uses the last entry of `host`.
bool contains_pattern_ending_at_last(std::span<const int> host, const Permutation& pattern);

bool avoids_all(const Permutation& p, const PatternSet& patterns);

using PermutationVisitor = std::function<void(const Permutation&)>;

/// Streams Av_n(patterns) in lexicographic order. Prefixes that already
/// contain a forbidden pattern are never extended.
void enumerate_avoiders(std::size_t n, const PatternSet& patterns, const PermutationVisitor& visit);

/// The sub-stream of avoiders whose first entry is `first` (1 <= first <= n).
/// Shards for first = 1..n are disjoint and concatenate to the full stream.
void enumerate_avoiders_shard(std::size_t n, const PatternSet& patterns, int first,
                              const PermutationVisitor& visit);

std::vector<Permutation> collect_avoiders(std::size_t n, const PatternSet& patterns);
std::size_t count_avoiders(std::size_t n, const PatternSet& patterns);

}  // namespace permstat
