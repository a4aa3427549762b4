#include "permstat/statistics.hpp"


#include "permstat/checked.hpp"
#include "permstat/error.hpp"
#include "permstat/parallel.hpp"

namespace permstat {

std::string_view to_string(StatName stat) {
  switch (stat) {
    case StatName::major_index:
      return "major_index";
    case StatName::charge:
      return "charge";
    case StatName::inversions:
      return "inversions";
  }
  return "unknown";
}

std::optional<StatName> parse_stat_name(std::string_view text) {
  if (text == "maj" || text == "major_index") return StatName::major_index;
  if (text == "ch" || text == "charge") return StatName::charge;
  if (text == "inv" || text == "inversions") return StatName::inversions;
  return std::nullopt;
}

std::vector<std::size_t> descent_set(const Permutation& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p.at(i) > p.at(i + 1)) out.push_back(i);
  }
  return out;
}

std::uint64_t major_index(const Permutation& p) {
  std::uint64_t sum = 0;
  for (std::size_t i : descent_set(p)) sum += i;
  return sum;
}

std::map<int, std::uint64_t> charge_values(const Permutation& p) {
  std::map<int, std::uint64_t> out;
  if (p.empty()) return out;
  const Permutation pos = inverse(p);
  const auto n = static_cast<int>(p.size());
  out[1] = 0;
  for (int i = 2; i <= n; ++i) {
    out[i] = pos.at(i) < pos.at(i - 1) ? static_cast<std::uint64_t>(n + 1 - i) : 0;
  }
  return out;
}

std::uint64_t charge(const Permutation& p) {
  // Same recursion as charge_values without materializing the map.
  const auto n = p.size();
  std::vector<std::size_t> pos(n + 1);
  for (std::size_t i = 1; i <= n; ++i) pos[p.at(i)] = i;
  std::uint64_t sum = 0;
  for (std::size_t i = 2; i <= n; ++i) {
    if (pos[i] < pos[i - 1]) sum += n + 1 - i;
  }
  return sum;
}

std::uint64_t inversions(const Permutation& p) {
  std::uint64_t count = 0;
  const auto v = p.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] > v[j]) ++count;
    }
  }
  return count;
}

std::uint64_t statistic(const Permutation& p, StatName stat) {
  switch (stat) {
    case StatName::major_index:
      return major_index(p);
    case StatName::charge:
      return charge(p);
    case StatName::inversions:
      return inversions(p);
  }
  return 0;
}

StatPolynomial::StatPolynomial(std::size_t n, PatternSet patterns, StatName stat)
    : n_(n), patterns_(std::move(patterns)), stat_(stat) {}

void StatPolynomial::add_term(std::size_t exponent, std::uint64_t count) {
  if (count == 0) return;
  if (exponent >= coeffs_.size()) coeffs_.resize(exponent + 1, 0);
  coeffs_[exponent] = checked_add(coeffs_[exponent], count);
}

StatPolynomial& StatPolynomial::merge(const StatPolynomial& other) {
  if (other.n_ != n_ || other.stat_ != stat_ || other.patterns_ != patterns_) {
    throw DomainError("cannot merge polynomials built over different (n, patterns, stat)");
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) add_term(i, other.coeffs_[i]);
  return *this;
}

std::uint64_t StatPolynomial::coefficient(std::size_t exponent) const {
  return exponent < coeffs_.size() ? coeffs_[exponent] : 0;
}

std::uint64_t StatPolynomial::total() const {
  std::uint64_t sum = 0;
  for (auto c : coeffs_) sum = checked_add(sum, c);
  return sum;
}

std::string StatPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0 || coeffs_[i] != 1) out += std::to_string(coeffs_[i]);
    if (i >= 1) out += "q";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

StatPolynomial stat_polynomial(std::size_t n, const PatternSet& patterns, StatName stat,
                               std::size_t threads) {
  StatPolynomial result(n, patterns, stat);
  if (n == 0) {
    enumerate_avoiders(0, patterns, [&](const Permutation& p) { result.add_term(statistic(p, stat)); });
    return result;
  }
  std::vector<StatPolynomial> partial(n, StatPolynomial(n, patterns, stat));
  run_shards(n, threads, [&](std::size_t shard) {
    auto& poly = partial[shard];
    enumerate_avoiders_shard(n, patterns, static_cast<int>(shard) + 1,
                             [&](const Permutation& p) { poly.add_term(statistic(p, stat)); });
  });
  for (const auto& poly : partial) result.merge(poly);
  return result;
}

}  // namespace permstat
