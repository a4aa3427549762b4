#include "permstat/ballot.hpp"

#include <algorithm>

#include "permstat/checked.hpp"
#include "permstat/error.hpp"

namespace permstat {

namespace {

// completions[len][h]: ballot suffixes of length len starting at height h,
// where height is (#1s - #2s) of the prefix.
class CompletionTable {
 public:
  explicit CompletionTable(std::size_t n) : table_(n + 1, std::vector<std::uint64_t>(n + 2, 0)) {
    for (std::size_t h = 0; h <= n + 1; ++h) table_[0][h] = 1;
    for (std::size_t len = 1; len <= n; ++len) {
      for (std::size_t h = 0; h + len <= n + 1; ++h) {
        std::uint64_t c = h + 1 <= n + 1 ? table_[len - 1][h + 1] : 0;
        if (h > 0) c = checked_add(c, table_[len - 1][h - 1]);
        table_[len][h] = c;
      }
    }
  }

  std::uint64_t operator()(std::size_t len, std::size_t h) const { return table_[len][h]; }

 private:
  std::vector<std::vector<std::uint64_t>> table_;
};

// Lexicographic successor among all ballot words of the same length.
bool next_ballot(std::vector<std::uint8_t>& w) {
  std::vector<int> height(w.size() + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) height[i + 1] = height[i] + (w[i] == 1 ? 1 : -1);
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] == 1 && height[i] > 0) {
      w[i] = 2;
      for (std::size_t j = i + 1; j < w.size(); ++j) w[j] = 1;
      return true;
    }
  }
  return false;
}

}  // namespace

BallotWord::BallotWord(std::vector<std::uint8_t> letters) : letters_(std::move(letters)) {
  long height = 0;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] == 1) {
      ++height;
    } else if (letters_[i] == 2) {
      if (--height < 0) {
        throw DomainError("prefix of length " + std::to_string(i + 1) + " has more 2s than 1s");
      }
    } else {
      throw DomainError("ballot letters must be 1 or 2");
    }
  }
}

BallotWord BallotWord::parse(std::string_view text) {
  std::vector<std::uint8_t> letters;
  for (char c : text) {
    if (c != '1' && c != '2') throw DomainError("ballot word '" + std::string(text) + "' has letter '" + c + "'");
    letters.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BallotWord(std::move(letters));
}

BallotWord BallotWord::from_tableau(const StandardTableau& tableau) {
  if (tableau.row_count() > 2) throw DomainError("tableau has more than two rows");
  std::vector<std::uint8_t> letters(tableau.size(), 1);
  if (tableau.row_count() == 2) {
    for (int v : tableau.rows()[1]) letters[v - 1] = 2;
  }
  return BallotWord(std::move(letters));
}

std::size_t BallotWord::twos() const {
  std::size_t count = 0;
  for (auto l : letters_) count += l == 2;
  return count;
}

StandardTableau BallotWord::to_tableau() const {
  std::vector<std::vector<int>> rows(is_two_row() ? 2 : (letters_.empty() ? 0 : 1));
  for (std::size_t i = 0; i < letters_.size(); ++i) rows[letters_[i] - 1].push_back(static_cast<int>(i + 1));
  return StandardTableau(std::move(rows));
}

std::string BallotWord::to_string() const {
  std::string out;
  for (auto l : letters_) out += static_cast<char>('0' + l);
  return out;
}

ExactInt count_two_row(std::size_t n) {
  if (n <= 1) return 0;
  return exact_binomial(static_cast<int>(n), static_cast<int>(n / 2)) - 1;
}

std::uint64_t syt_count_two_row_shape(std::size_t n, std::size_t r) {
  if (r > n / 2) {
    throw DomainError("second row length " + std::to_string(r) + " exceeds floor(" + std::to_string(n) + "/2)");
  }
  const int ni = static_cast<int>(n), ri = static_cast<int>(r);
  return binomial(ni, ri) - binomial(ni, ri - 1);
}

std::uint64_t ballot_rank(const BallotWord& w) {
  if (!w.is_two_row()) throw DomainError("the all-1s word is not a two-row tableau");
  const std::size_t n = w.size();
  const CompletionTable completions(n);
  std::uint64_t rank = 0;
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (w.letters()[i] == 2) {
      rank += completions(n - i - 1, h + 1);
      --h;
    } else {
      ++h;
    }
  }
  // The all-1s word is first in the full stream and is excluded here.
  return rank - 1;
}

BallotWord ballot_unrank(std::size_t n, std::uint64_t rank) {
  if (rank >= count_two_row(n)) {
    throw DomainError("rank " + std::to_string(rank) + " is out of range for n = " + std::to_string(n));
  }
  const CompletionTable completions(n);
  std::uint64_t remaining = rank + 1;
  std::vector<std::uint8_t> letters;
  letters.reserve(n);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t with_one = completions(n - i - 1, h + 1);
    if (remaining < with_one) {
      letters.push_back(1);
      ++h;
    } else {
      remaining -= with_one;
      letters.push_back(2);
      --h;
    }
  }
  return BallotWord(std::move(letters));
}

void enumerate_two_row_syt(std::size_t n, const BallotVisitor& visit) {
  enumerate_two_row_syt_range(n, 0, to_u64(count_two_row(n)), visit);
}

void enumerate_two_row_syt_range(std::size_t n, std::uint64_t first, std::uint64_t last,
                                 const BallotVisitor& visit) {
  const ExactInt total = count_two_row(n);
  if (total < last) last = total.convert_to<std::uint64_t>();
  if (first >= last) return;
  auto letters = ballot_unrank(n, first).letters();
  for (std::uint64_t r = first; r < last; ++r) {
    visit(BallotWord(letters));
    next_ballot(letters);
  }
}

BallotWord involution_phi(const BallotWord& w) {
  const ExactInt count = count_two_row(w.size());
  if (count % 2 != 0) {
    throw DomainError("no fixed-point-free involution guaranteed: " + count.str() +
                      " two-row tableaux of size " + std::to_string(w.size()) + " is odd");
  }
  return ballot_unrank(w.size(), ballot_rank(w) ^ 1u);
}

}  // namespace permstat
