#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

/// A standard Young tableau in English orientation: row 0 is on top and is
/// the longest, rows and columns strictly increase, entries are 1..n.
class StandardTableau {
 public:
  StandardTableau() = default;
  /// Throws DomainError unless `rows` is a valid standard tableau.
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::vector<std::size_t> shape() const;
  std::size_t size() const;
  std::size_t row_count() const { return rows_.size(); }

  /// "12/3" style, rows separated by '/' (comma separated entries past 9).
  std::string to_string() const;

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
  friend auto operator<=>(const StandardTableau&, const StandardTableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// Insertion tableau P and recording tableau Q.
struct RskPair {
  StandardTableau insertion;
  StandardTableau recording;
};

/// Robinson-Schensted row insertion of p(1), ..., p(n).
RskPair rsk_insert(const Permutation& p);

/// Inverse of rsk_insert. Throws DomainError when the shapes differ.
Permutation rsk_inverse(const StandardTableau& insertion, const StandardTableau& recording);

/// Rows read bottom to top, each left to right. Its insertion tableau is the
/// tableau itself, so it represents the Knuth class of `tableau`.
Permutation reading_word(const StandardTableau& tableau);

}  // namespace permstat
