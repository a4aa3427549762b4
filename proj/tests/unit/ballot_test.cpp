#include "permstat/ballot.hpp"

#include <gtest/gtest.h>

#include <random>

#include "permstat/error.hpp"
#include "support/oracles.hpp"

namespace permstat {
namespace {

std::vector<std::string> stream(std::size_t n) {
  std::vector<std::string> out;
  enumerate_two_row_syt(n, [&](const BallotWord& w) { out.push_back(w.to_string()); });
  return out;
}

TEST(BallotWord, Validation) {
  EXPECT_NO_THROW(BallotWord::parse("1121"));
  EXPECT_THROW(BallotWord::parse("2"), DomainError);
  EXPECT_THROW(BallotWord::parse("1221"), DomainError);
  EXPECT_THROW(BallotWord::parse("13"), DomainError);
  EXPECT_FALSE(BallotWord::parse("111").is_two_row());
  EXPECT_EQ(BallotWord::parse("11212").twos(), 2u);
}

TEST(BallotWord, TableauBijection) {
  const auto w = BallotWord::parse("112");
  EXPECT_EQ(w.to_tableau().rows(), (std::vector<std::vector<int>>{{1, 2}, {3}}));
  EXPECT_EQ(BallotWord::parse("121").to_tableau().rows(), (std::vector<std::vector<int>>{{1, 3}, {2}}));
  for (std::size_t n = 0; n <= 10; ++n) {
    enumerate_two_row_syt(n, [&](const BallotWord& b) { ASSERT_EQ(BallotWord::from_tableau(b.to_tableau()), b); });
  }
  EXPECT_THROW(BallotWord::from_tableau(StandardTableau({{1}, {2}, {3}})), DomainError);
}

TEST(Enumeration, SmallStreams) {
  EXPECT_EQ(stream(3), (std::vector<std::string>{"112", "121"}));
  EXPECT_EQ(stream(4), (std::vector<std::string>{"1112", "1121", "1122", "1211", "1212"}));
  EXPECT_TRUE(stream(0).empty());
  EXPECT_TRUE(stream(1).empty());
  EXPECT_EQ(stream(7).size(), 34u);
  EXPECT_EQ(stream(15).size(), 6434u);
}

TEST(Counting, CountTwoRowMatchesStreamAndFormula) {
  EXPECT_EQ(count_two_row(3), 2u);
  EXPECT_EQ(count_two_row(5), 9u);
  EXPECT_EQ(count_two_row(15), 6434u);
  EXPECT_EQ(count_two_row(1), 0u);
  EXPECT_EQ(count_two_row(0), 0u);
  for (std::size_t n = 0; n <= 14; ++n) {
    EXPECT_EQ(count_two_row(n), stream(n).size()) << n;
    if (n >= 2) EXPECT_EQ(count_two_row(n), oracle::pascal(n, n / 2) - 1);
  }
}

TEST(Counting, CountTwoRowIsEvenAtMersenneSizes) {
  for (std::size_t k = 2; k <= 10; ++k) {
    const std::size_t n = (1u << k) - 1;
    EXPECT_EQ(count_two_row(n) % 2, 0) << k;
    EXPECT_EQ(count_two_row(n), oracle::pascal_row_exact(n)[n / 2] - 1) << k;
  }
  // Even sizes give odd counts: 5, 19, 69.
  EXPECT_EQ(count_two_row(4), 5);
  EXPECT_EQ(count_two_row(6), 19);
  EXPECT_EQ(count_two_row(8), 69);
}

TEST(Counting, ShapeCounts) {
  EXPECT_EQ(syt_count_two_row_shape(3, 1), 2u);
  EXPECT_EQ(syt_count_two_row_shape(9, 0), 1u);
  EXPECT_EQ(syt_count_two_row_shape(15, 7), 1430u);
  EXPECT_THROW(syt_count_two_row_shape(5, 3), DomainError);
  for (std::size_t n = 0; n <= 12; ++n) {
    for (std::size_t r = 0; r <= n / 2; ++r) {
      EXPECT_EQ(syt_count_two_row_shape(n, r), oracle::ballot_words_with_twos(n, r)) << n << "," << r;
    }
  }
  // Counting by enumeration for r >= 1.
  for (std::size_t n = 2; n <= 12; ++n) {
    std::vector<std::uint64_t> by_twos(n / 2 + 1, 0);
    enumerate_two_row_syt(n, [&](const BallotWord& w) { ++by_twos[w.twos()]; });
    for (std::size_t r = 1; r <= n / 2; ++r) EXPECT_EQ(by_twos[r], syt_count_two_row_shape(n, r));
  }
}

TEST(Ranking, Examples) {
  EXPECT_EQ(ballot_rank(BallotWord::parse("112")), 0u);
  EXPECT_EQ(ballot_rank(BallotWord::parse("121")), 1u);
  EXPECT_EQ(ballot_rank(BallotWord::parse("1121")), 1u);
  EXPECT_THROW(ballot_rank(BallotWord::parse("1111")), DomainError);
  EXPECT_THROW(ballot_unrank(4, 5), DomainError);
  EXPECT_THROW(ballot_unrank(1, 0), DomainError);
}

TEST(Ranking, RoundTripAgreesWithStreamPosition) {
  for (std::size_t n = 2; n <= 10; ++n) {
    std::uint64_t position = 0;
    enumerate_two_row_syt(n, [&](const BallotWord& w) {
      ASSERT_EQ(ballot_rank(w), position);
      ASSERT_EQ(ballot_unrank(n, position), w);
      ++position;
    });
  }
}

TEST(Ranking, RangeShardsConcatenate) {
  const std::size_t n = 11;
  const auto total = count_two_row(n);
  std::vector<std::string> merged;
  for (std::uint64_t first = 0; first < total; first += 37) {
    enumerate_two_row_syt_range(n, first, first + 37, [&](const BallotWord& w) { merged.push_back(w.to_string()); });
  }
  EXPECT_EQ(merged, stream(n));
}

TEST(Involution, MatchesSmallestCase) {
  EXPECT_EQ(involution_phi(BallotWord::parse("112")), BallotWord::parse("121"));
  EXPECT_EQ(involution_phi(BallotWord::parse("121")), BallotWord::parse("112"));
}

TEST(Involution, FixedPointFreeOnMersenneSizes) {
  for (std::size_t n : {3u, 7u, 15u}) {
    std::size_t words = 0;
    enumerate_two_row_syt(n, [&](const BallotWord& w) {
      ++words;
      const auto image = involution_phi(w);
      ASSERT_NE(image, w);
      ASSERT_EQ(involution_phi(image), w);
      ASSERT_EQ(image.size(), w.size());
      ASSERT_TRUE(image.is_two_row());
    });
    EXPECT_EQ(words, count_two_row(n));
  }
}

TEST(Involution, RefusesOddCounts) {
  EXPECT_THROW(involution_phi(BallotWord::parse("11212")), DomainError);
  EXPECT_THROW(involution_phi(BallotWord::parse("111")), DomainError);
}

TEST(Involution, RandomEvenSizes) {
  std::mt19937_64 rng(7);
  for (std::size_t n : {15u, 31u, 63u}) {
    const auto total = to_u64(count_two_row(n));
    ASSERT_EQ(total % 2, 0u);
    for (int i = 0; i < 200; ++i) {
      const auto w = ballot_unrank(n, rng() % total);
      ASSERT_EQ(involution_phi(involution_phi(w)), w);
    }
  }
}

}  // namespace
}  // namespace permstat
