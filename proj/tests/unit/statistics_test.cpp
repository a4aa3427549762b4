#include "permstat/statistics.hpp"

#include <gtest/gtest.h>

#include "permstat/error.hpp"
#include "support/oracles.hpp"

namespace permstat {
namespace {

const Permutation kExample{3, 2, 8, 5, 7, 4, 6, 1, 9};
const PatternSet k321{Permutation{3, 2, 1}};

std::vector<std::uint64_t> coeffs(const StatPolynomial& p) {
  return {p.coefficients().begin(), p.coefficients().end()};
}

TEST(StatName, ParsesLongAndShortForms) {
  EXPECT_EQ(parse_stat_name("maj"), StatName::major_index);
  EXPECT_EQ(parse_stat_name("charge"), StatName::charge);
  EXPECT_EQ(parse_stat_name("inv"), StatName::inversions);
  EXPECT_FALSE(parse_stat_name("denert").has_value());
}

TEST(Descents, WorkedExample) {
  EXPECT_EQ(descent_set(kExample), (std::vector<std::size_t>{1, 3, 5, 7}));
  EXPECT_TRUE(descent_set(Permutation::identity(6)).empty());
  EXPECT_EQ(descent_set(Permutation{3, 2, 1}), (std::vector<std::size_t>{1, 2}));
  EXPECT_TRUE(descent_set(Permutation{}).empty());
}

TEST(MajorIndex, Values) {
  EXPECT_EQ(major_index(kExample), 16u);
  EXPECT_EQ(major_index(Permutation::identity(7)), 0u);
  EXPECT_EQ(major_index(Permutation{3, 2, 1}), 3u);
}

TEST(Charge, WorkedExampleValues) {
  const std::map<int, std::uint64_t> expected{{3, 7}, {2, 8}, {8, 2}, {5, 5}, {7, 3},
                                              {4, 0}, {6, 0}, {1, 0}, {9, 0}};
  EXPECT_EQ(charge_values(kExample), expected);
  EXPECT_EQ(charge(kExample), 25u);
}

TEST(Charge, SmallValues) {
  EXPECT_EQ(charge_values(Permutation{1, 3, 2}), (std::map<int, std::uint64_t>{{1, 0}, {2, 0}, {3, 1}}));
  EXPECT_EQ(charge(Permutation{2, 1, 3}), 2u);
  EXPECT_EQ(charge(Permutation::identity(5)), 0u);
  EXPECT_TRUE(charge_values(Permutation{}).empty());
  for (const auto& [v, c] : charge_values(Permutation::identity(5))) EXPECT_EQ(c, 0u) << v;
}

TEST(Charge, ZeroOnlyOnIdentity) {
  for (std::size_t n = 0; n <= 8; ++n) {
    for (const auto& p : all_permutations(n)) ASSERT_EQ(charge(p) == 0, p.is_identity()) << p.to_string();
  }
}

TEST(Charge, NonzeroValuesAreForced) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& p : all_permutations(n)) {
      std::uint64_t sum = 0;
      for (const auto& [v, c] : charge_values(p)) {
        ASSERT_TRUE(c == 0 || c == n + 1 - static_cast<std::size_t>(v));
        sum += c;
      }
      ASSERT_EQ(sum, charge(p));
    }
  }
}

TEST(Inversions, Values) {
  EXPECT_EQ(inversions(Permutation::identity(4)), 0u);
  EXPECT_EQ(inversions(Permutation{3, 2, 1}), 3u);
  // Pairs: 32 31 21 85 87 84 86 81 54 51 74 76 71 41 61.
  EXPECT_EQ(inversions(kExample), 15u);
  std::uint64_t brute = 0;
  const auto v = kExample.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) brute += v[i] > v[j];
  }
  EXPECT_EQ(brute, 15u);
}

TEST(Lemma, MajorIndexIsChargeAfterF) {
  for (std::size_t n = 0; n <= 8; ++n) {
    for (const auto& p : all_permutations(n)) ASSERT_EQ(major_index(p), charge(f_map(p))) << p.to_string();
  }
}

TEST(StatPolynomial, SmallExamples) {
  EXPECT_EQ(coeffs(stat_polynomial(3, k321, StatName::charge)), (std::vector<std::uint64_t>{1, 2, 2}));
  EXPECT_EQ(coeffs(stat_polynomial(3, k321, StatName::major_index)), (std::vector<std::uint64_t>{1, 2, 2}));
  for (auto stat : {StatName::charge, StatName::major_index, StatName::inversions}) {
    EXPECT_EQ(coeffs(stat_polynomial(0, k321, stat)), std::vector<std::uint64_t>{1});
    EXPECT_EQ(coeffs(stat_polynomial(0, PatternSet{}, stat)), std::vector<std::uint64_t>{1});
  }
  EXPECT_TRUE(stat_polynomial(2, PatternSet{Permutation{1}}, StatName::charge).is_zero());
}

TEST(StatPolynomial, MahonianDistributions) {
  for (std::size_t n = 0; n <= 8; ++n) {
    const auto expected = oracle::q_factorial(n);
    for (auto stat : {StatName::major_index, StatName::charge, StatName::inversions}) {
      EXPECT_EQ(coeffs(stat_polynomial(n, PatternSet{}, stat)), expected) << to_string(stat) << " n=" << n;
    }
  }
}

TEST(StatPolynomial, TotalMatchesStreamCount) {
  const std::vector<PatternSet> sets{k321, PatternSet{Permutation{1, 3, 2}, Permutation{2, 1, 3}},
                                     PatternSet{Permutation{2, 4, 1, 3}}};
  for (const auto& set : sets) {
    for (std::size_t n = 0; n <= 8; ++n) {
      EXPECT_EQ(stat_polynomial(n, set, StatName::charge).total(), count_avoiders(n, set));
    }
  }
}

TEST(StatPolynomial, ThreadCountDoesNotChangeResult) {
  const PatternSet set{Permutation{1, 3, 2, 4}};
  const auto one = stat_polynomial(8, set, StatName::inversions, 1);
  EXPECT_EQ(stat_polynomial(8, set, StatName::inversions, 4), one);
  EXPECT_EQ(stat_polynomial(8, set, StatName::inversions, 0), one);
}

TEST(StatPolynomial, MergeIsAssociativeAndChecked) {
  StatPolynomial a(4, k321, StatName::charge), b(4, k321, StatName::charge), c(4, k321, StatName::charge);
  a.add_term(0, 1);
  b.add_term(3, 2);
  c.add_term(1, 5);
  auto left = a;
  left.merge(b).merge(c);
  auto bc = b;
  bc.merge(c);
  auto right = a;
  right.merge(bc);
  EXPECT_EQ(left, right);
  EXPECT_EQ(coeffs(left), (std::vector<std::uint64_t>{1, 5, 0, 2}));

  StatPolynomial other(5, k321, StatName::charge);
  EXPECT_THROW(a.merge(other), DomainError);

  StatPolynomial big(4, k321, StatName::charge);
  big.add_term(0, UINT64_MAX);
  EXPECT_THROW(big.add_term(0, 1), OverflowError);
}

TEST(StatPolynomial, ToString) {
  EXPECT_EQ(stat_polynomial(3, k321, StatName::charge).to_string(), "1 + 2q + 2q^2");
  EXPECT_EQ(StatPolynomial(1, k321, StatName::charge).to_string(), "0");
}

}  // namespace
}  // namespace permstat
