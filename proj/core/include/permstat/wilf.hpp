#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permstat/permutation.hpp"
#include "permstat/statistics.hpp"

namespace permstat {

/// Exhaustive loops over S_n refuse n above this bound unless told otherwise.
inline constexpr std::size_t kDefaultExhaustionBound = 9;

/// st-Wilf classes of a candidate collection, decided over n = 0..n_max.
///
/// Agreement over a finite range is evidence of st-Wilf equivalence, not a
/// proof of it for all n.
struct WilfClassReport {
  StatName stat;
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  /// Classes in order of first appearance among the candidates; members keep
  /// candidate order.
  std::vector<std::vector<PatternSet>> classes;
  std::map<PatternSet, std::vector<StatPolynomial>> witness_polynomials;

  /// Index into `classes` of the class holding `candidate`, if any.
  std::optional<std::size_t> class_of(const PatternSet& candidate) const;
};

/// Partitions `candidates` by equality of F_n^stat for every 0 <= n <= n_max.
/// Duplicate candidates are collapsed.
WilfClassReport st_wilf_classes(const std::vector<PatternSet>& candidates, StatName stat,
                                std::size_t n_max, std::size_t threads = 1);

/// Applies f elementwise to a pattern set. f sends Av_n(P) onto Av_n(f(P)).
PatternSet f_image(const PatternSet& patterns);

/// The six singletons {123}, {132}, ..., {321}.
std::vector<PatternSet> s3_singletons();

/// All 2-element subsets of S_3 except {123, 321}, in lexicographic order.
std::vector<PatternSet> s3_pairs_without_monotone();

/// All subsets of S_3 (64 sets, including the empty one).
std::vector<PatternSet> s3_subsets();

/// maj(p) == charge(f(p)) for every p in S_n.
/// Throws ResourceLimitError when n exceeds `bound`.
bool verify_lemma1(std::size_t n, std::size_t bound = kDefaultExhaustionBound);

struct Lemma2Result {
  std::size_t n = 0;
  /// sigma -> tau with f(Av_n(sigma)) = Av_n(tau). When several tau fit
  /// (n <= 2, where every avoidance set is S_n) sigma's image under f is reported.
  std::map<Permutation, Permutation> correspondence;
  bool holds = false;
  /// A permutation in f(Av_n(sigma)) but outside Av_n(f(sigma)), or the reverse.
  std::optional<Permutation> counterexample;
  std::optional<Permutation> failing_pattern;
};

/// Computes f(Av_n({sigma})) for each sigma in S_3 and matches it against the
/// avoidance sets of single length-3 patterns. `holds` asserts
/// 123->123, 132->213, 213->132, 231->231, 312->312, 321->321.
Lemma2Result verify_lemma2(std::size_t n, std::size_t bound = kDefaultExhaustionBound);

struct ClassVerdict {
  bool holds = false;
  WilfClassReport report;
  std::vector<std::vector<PatternSet>> expected;
  std::string detail;
};

/// Singleton charge classes: {123}, {321}, {132,312}, {213,231} (or the
/// major-index classes {132,231}, {213,312} when stat is major_index).
ClassVerdict verify_theorem3(std::size_t n_max, StatName stat = StatName::charge,
                             std::size_t threads = 1);

/// Pair classes: exactly one class of size four, everything else alone.
/// For charge the quadruple is {132,213}, {213,312}, {132,231}, {231,312};
/// for major_index it is {132,213}, {132,312}, {213,231}, {231,312}.
ClassVerdict verify_theorem4(std::size_t n_max, StatName stat = StatName::charge,
                             std::size_t threads = 1);

}  // namespace permstat
