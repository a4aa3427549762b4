#include "permstat/tableau.hpp"

#include <algorithm>

#include "permstat/error.hpp"

namespace permstat {

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::size_t n = 0;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty()) throw DomainError("tableau row " + std::to_string(r + 1) + " is empty");
    if (r > 0 && rows_[r].size() > rows_[r - 1].size()) {
      throw DomainError("tableau row lengths are not weakly decreasing");
    }
    n += rows_[r].size();
  }
  std::vector<bool> seen(n + 1, false);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      const int v = rows_[r][c];
      if (v < 1 || static_cast<std::size_t>(v) > n || seen[v]) {
        throw DomainError("tableau entries are not exactly 1.." + std::to_string(n));
      }
      seen[v] = true;
      if (c > 0 && rows_[r][c - 1] >= v) throw DomainError("tableau row does not increase");
      if (r > 0 && rows_[r - 1][c] >= v) throw DomainError("tableau column does not increase");
    }
  }
}

std::vector<std::size_t> StandardTableau::shape() const {
  std::vector<std::size_t> out;
  for (const auto& row : rows_) out.push_back(row.size());
  return out;
}

std::size_t StandardTableau::size() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

std::string StandardTableau::to_string() const {
  const bool digits = size() <= 9;
  std::string out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r > 0) out += '/';
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (!digits && c > 0) out += ',';
      out += std::to_string(rows_[r][c]);
    }
  }
  return out;
}

RskPair rsk_insert(const Permutation& p) {
  std::vector<std::vector<int>> ins, rec;
  for (std::size_t step = 1; step <= p.size(); ++step) {
    int x = p.at(step);
    std::size_t r = 0;
    for (;; ++r) {
      if (r == ins.size()) {
        ins.emplace_back();
        rec.emplace_back();
      }
      auto& row = ins[r];
      auto bumped = std::upper_bound(row.begin(), row.end(), x);
      if (bumped == row.end()) {
        row.push_back(x);
        rec[r].push_back(static_cast<int>(step));
        break;
      }
      std::swap(x, *bumped);
    }
  }
  return {StandardTableau(std::move(ins)), StandardTableau(std::move(rec))};
}

Permutation rsk_inverse(const StandardTableau& insertion, const StandardTableau& recording) {
  if (insertion.shape() != recording.shape()) {
    throw DomainError("insertion and recording tableaux have different shapes");
  }
  auto ins = insertion.rows();
  auto rec = recording.rows();
  const std::size_t n = insertion.size();
  std::vector<int> out(n);
  for (std::size_t step = n; step >= 1; --step) {
    // The largest recording entry sits at the end of some row.
    std::size_t r = 0;
    while (rec[r].back() != static_cast<int>(step)) ++r;
    rec[r].pop_back();
    int x = ins[r].back();
    ins[r].pop_back();
    while (r > 0) {
      --r;
      auto& row = ins[r];
      auto it = std::lower_bound(row.begin(), row.end(), x);
      --it;
      std::swap(x, *it);
    }
    out[step - 1] = x;
    while (!ins.empty() && ins.back().empty()) {
      ins.pop_back();
      rec.pop_back();
    }
  }
  return Permutation(std::move(out));
}

Permutation reading_word(const StandardTableau& tableau) {
  std::vector<int> out;
  out.reserve(tableau.size());
  const auto& rows = tableau.rows();
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
  return Permutation(std::move(out));
}

}  // namespace permstat
