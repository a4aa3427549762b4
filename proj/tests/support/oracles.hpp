#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace permstat::oracle {

/// Catalan(0..n_max): balanced ballot words of length 2n (as many 2s as 1s),
/// counted by a DP over the running height.
inline std::vector<std::uint64_t> catalan_by_ballot_dp(std::size_t n_max) {
  std::vector<std::uint64_t> out;
  for (std::size_t n = 0; n <= n_max; ++n) {
    std::vector<std::uint64_t> ways(2 * n + 2, 0);
    ways[0] = 1;
    for (std::size_t step = 0; step < 2 * n; ++step) {
      std::vector<std::uint64_t> next(2 * n + 2, 0);
      for (std::size_t h = 0; h <= 2 * n; ++h) {
        if (ways[h] == 0) continue;
        next[h + 1] += ways[h];
        if (h > 0) next[h - 1] += ways[h];
      }
      ways = std::move(next);
    }
    out.push_back(ways[0]);
  }
  return out;
}

/// Ballot words of length n with exactly r twos, counted by DP over prefixes.
inline std::uint64_t ballot_words_with_twos(std::size_t n, std::size_t r) {
  // ways[ones][twos]
  std::vector<std::vector<std::uint64_t>> ways(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  ways[0][0] = 1;
  for (std::size_t len = 1; len <= n; ++len) {
    for (std::size_t twos = 0; twos <= len; ++twos) {
      const std::size_t ones = len - twos;
      if (twos > ones) continue;
      std::uint64_t w = 0;
      if (ones > 0) w += ways[ones - 1][twos];
      if (twos > 0) w += ways[ones][twos - 1];
      ways[ones][twos] = w;
    }
  }
  return r <= n - r ? ways[n - r][r] : 0;
}

/// Pascal triangle.
inline std::uint64_t pascal(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(i + 1, 1);
    for (std::size_t j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

/// Row n of Pascal's triangle in unbounded integers.
inline std::vector<boost::multiprecision::cpp_int> pascal_row_exact(std::size_t n) {
  std::vector<boost::multiprecision::cpp_int> row{1};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<boost::multiprecision::cpp_int> next(i + 1, 1);
    for (std::size_t j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row;
}

/// Coefficients of [n]_q! = prod_{i=1..n} (1 + q + ... + q^{i-1}), by convolution.
inline std::vector<std::uint64_t> q_factorial(std::size_t n) {
  std::vector<std::uint64_t> acc{1};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(acc.size() + i - 1, 0);
    for (std::size_t a = 0; a < acc.size(); ++a) {
      for (std::size_t b = 0; b < i; ++b) next[a + b] += acc[a];
    }
    acc = std::move(next);
  }
  return acc;
}

/// Containment by trying every subset of positions of the right size.
inline bool contains_by_subsets(const std::vector<int>& host, const std::vector<int>& pattern) {
  const std::size_t m = host.size(), k = pattern.size();
  if (k > m) return false;
  if (k == 0) return true;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<int> sub;
    for (std::size_t i = 0; i < m; ++i) {
      if (pick[i]) sub.push_back(host[i]);
    }
    bool iso = true;
    for (std::size_t a = 0; a < k && iso; ++a) {
      for (std::size_t b = 0; b < k && iso; ++b) iso = (sub[a] < sub[b]) == (pattern[a] < pattern[b]);
    }
    if (iso) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

/// All n! one-line sequences in lexicographic order.
inline std::vector<std::vector<int>> all_sequences(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace permstat::oracle
