#include "permstat/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "permstat/error.hpp"

namespace permstat {

namespace {

void validate(const std::vector<int>& values) {
  const auto n = static_cast<int>(values.size());
  std::vector<bool> seen(values.size() + 1, false);
  for (int v : values) {
    if (v < 1 || v > n) {
      throw InvalidPermutation("value " + std::to_string(v) + " is outside 1.." + std::to_string(n));
    }
    if (seen[v]) {
      throw InvalidPermutation("value " + std::to_string(v) + " appears more than once");
    }
    seen[v] = true;
  }
}

bool dfs(std::span<const int> host, std::span<const int> pat, std::vector<std::size_t>& chosen,
            std::size_t depth, std::size_t limit) {
  if (depth == pat.size()) return true;
  const std::size_t start = depth == 0 ? 0 : chosen[depth - 1] + 1;
  const std::size_t remaining = pat.size() - depth;
  for (std::size_t j = start; j + remaining <= limit; ++j) {
    bool ok = true;
    for (std::size_t e = 0; e < depth && ok; ++e) {
      ok = (host[chosen[e]] < host[j]) == (pat[e] < pat[depth]);
    }
    if (!ok) continue;
    chosen[depth] = j;
    if (dfs(host, pat, chosen, depth + 1, limit)) return true;
  }
  return false;
}

// Occurrence of a length-3 pattern a b c: scan every middle position.
bool contains_length3(std::span<const int> host, std::span<const int> pat) {
  const bool left_below = pat[0] < pat[1];
  const bool right_below = pat[2] < pat[1];
  const bool left_below_right = pat[0] < pat[2];
  const std::size_t m = host.size();
  for (std::size_t j = 1; j + 1 < m; ++j) {
    const int mid = host[j];
    int lmin = 0, lmax = 0, rmin = 0, rmax = 0;
    bool have_left = false, have_right = false;
    for (std::size_t i = 0; i < j; ++i) {
      if ((host[i] < mid) != left_below) continue;
      if (!have_left) {
        lmin = lmax = host[i];
        have_left = true;
      } else {
        lmin = std::min(lmin, host[i]);
        lmax = std::max(lmax, host[i]);
      }
    }
    if (!have_left) continue;
    for (std::size_t k = j + 1; k < m; ++k) {
      if ((host[k] < mid) != right_below) continue;
      if (!have_right) {
        rmin = rmax = host[k];
        have_right = true;
      } else {
        rmin = std::min(rmin, host[k]);
        rmax = std::max(rmax, host[k]);
      }
    }
    if (!have_right) continue;
    if (left_below_right ? lmin < rmax : lmax > rmin) return true;
  }
  return false;
}

struct AvoiderSearch {
  std::size_t n;
  std::vector<const Permutation*> active;
  const PermutationVisitor& visit;
  std::vector<int> prefix;
  std::vector<bool> used;

  bool extendable() const {
    return std::none_of(active.begin(), active.end(), [&](const Permutation* pat) {
      return pat->size() <= prefix.size() && contains_pattern_ending_at_last(prefix, *pat);
    });
  }

  void place(int v) {
    prefix.push_back(v);
    used[v] = true;
    if (extendable()) descend();
    used[v] = false;
    prefix.pop_back();
  }

  void descend() {
    if (prefix.size() == n) {
      visit(Permutation(prefix));
      return;
    }
    for (int v = 1; v <= static_cast<int>(n); ++v) {
      if (!used[v]) place(v);
    }
  }
};

AvoiderSearch make_search(std::size_t n, const PatternSet& patterns, const PermutationVisitor& visit) {
  AvoiderSearch s{n, {}, visit, {}, std::vector<bool>(n + 1, false)};
  for (const auto& pat : patterns) {
    if (pat.size() <= n) s.active.push_back(&pat);
  }
  s.prefix.reserve(n);
  return s;
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
  validate(values_);
}

Permutation::Permutation(std::initializer_list<int> one_line) : values_(one_line) {
  validate(values_);
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] != static_cast<int>(i + 1)) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  const bool digits = values_.size() <= 9;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

Permutation inverse(const Permutation& p) {
  std::vector<int> out(p.size());
  for (std::size_t i = 1; i <= p.size(); ++i) out[p.at(i) - 1] = static_cast<int>(i);
  return Permutation(std::move(out));
}

Permutation reverse(const Permutation& p) {
  std::vector<int> out(p.values().rbegin(), p.values().rend());
  return Permutation(std::move(out));
}

Permutation complement(const Permutation& p) {
  const int top = static_cast<int>(p.size()) + 1;
  std::vector<int> out;
  out.reserve(p.size());
  for (int v : p.values()) out.push_back(top - v);
  return Permutation(std::move(out));
}

Permutation f_map(const Permutation& p) { return inverse(complement(reverse(p))); }

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

bool PatternSet::constrains(std::size_t n) const {
  return std::any_of(patterns_.begin(), patterns_.end(),
                     [n](const Permutation& p) { return p.size() <= n; });
}

std::string PatternSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& p : patterns_) {
    if (!first) out += ',';
    first = false;
    out += p.size() > 9 ? "(" + p.to_string() + ")" : p.to_string();
  }
  return out + "}";
}

bool contains_pattern_generic(std::span<const int> host, const Permutation& pattern) {
  if (pattern.size() > host.size()) return false;
  std::vector<std::size_t> chosen(pattern.size());
  return dfs(host, pattern.values(), chosen, 0, host.size());
}

bool contains_pattern(std::span<const int> host, const Permutation& pattern) {
  if (pattern.size() > host.size()) return false;
  if (pattern.size() == 3) return contains_length3(host, pattern.values());
  return contains_pattern_generic(host, pattern);
}

bool contains_pattern(const Permutation& host, const Permutation& pattern) {
  return contains_pattern(host.values(), pattern);
}

bool contains_pattern_ending_at_last(std::span<const int> host, const Permutation& pattern) {
  const std::size_t k = pattern.size();
  if (k == 0 || k > host.size()) return false;
  const auto pat = pattern.values();
  const int last = host.back();
  // Place pattern[0..k-2] in host[0..m-2], each consistent with the fixed last entry.
  std::vector<std::size_t> chosen(k);
  chosen[k - 1] = host.size() - 1;
  auto rec = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == k - 1) return true;
    const std::size_t start = depth == 0 ? 0 : chosen[depth - 1] + 1;
    const std::size_t remaining = (k - 1) - depth;
    for (std::size_t j = start; j + remaining <= host.size() - 1; ++j) {
      if ((host[j] < last) != (pat[depth] < pat[k - 1])) continue;
      bool ok = true;
      for (std::size_t e = 0; e < depth && ok; ++e) {
        ok = (host[chosen[e]] < host[j]) == (pat[e] < pat[depth]);
      }
      if (!ok) continue;
      chosen[depth] = j;
      if (self(self, depth + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

bool avoids_all(const Permutation& p, const PatternSet& patterns) {
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](const Permutation& pat) { return contains_pattern(p, pat); });
}

void enumerate_avoiders(std::size_t n, const PatternSet& patterns, const PermutationVisitor& visit) {
  if (patterns.contains(Permutation{})) return;
  if (n == 0) {
    visit(Permutation{});
    return;
  }
  for (int first = 1; first <= static_cast<int>(n); ++first) {
    enumerate_avoiders_shard(n, patterns, first, visit);
  }
}

void enumerate_avoiders_shard(std::size_t n, const PatternSet& patterns, int first,
                              const PermutationVisitor& visit) {
  if (first < 1 || first > static_cast<int>(n)) {
    throw DomainError("shard " + std::to_string(first) + " is outside 1.." + std::to_string(n));
  }
  if (patterns.contains(Permutation{})) return;
  auto search = make_search(n, patterns, visit);
  search.place(first);
}

std::vector<Permutation> collect_avoiders(std::size_t n, const PatternSet& patterns) {
  std::vector<Permutation> out;
  enumerate_avoiders(n, patterns, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

std::size_t count_avoiders(std::size_t n, const PatternSet& patterns) {
  std::size_t count = 0;
  enumerate_avoiders(n, patterns, [&](const Permutation&) { ++count; });
  return count;
}

}  // namespace permstat
