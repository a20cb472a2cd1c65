#include "ttt/metrics.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace {

using ttt::Method;

TEST(CompressionRatio, ClosedForms) {
  EXPECT_DOUBLE_EQ(ttt::compression_ratio(Method::Svd, 81), 4.0 / 3.0);
  EXPECT_DOUBLE_EQ(ttt::compression_ratio(Method::Svd, 18), 4.0 * 18 / 243.0);
  EXPECT_DOUBLE_EQ(ttt::compression_ratio(Method::Hosvd, 24), 15768.0 / 19683.0);
  EXPECT_NEAR(ttt::compression_ratio(Method::Hosvd, 24), 0.801, 5e-4);
  EXPECT_NEAR(ttt::compression_ratio(Method::Svd, 49), 0.807, 5e-4);
  EXPECT_EQ(ttt::compression_ratio(Method::Svd, 0), 0.0);
  EXPECT_EQ(ttt::compression_ratio(Method::Hosvd, 0), 0.0);
}

TEST(CompressionRatio, ElementCounts) {
  EXPECT_EQ(ttt::element_count(Method::Svd, 18), 5832u);
  EXPECT_EQ(ttt::element_count(Method::Svd, 49), 15876u);
  EXPECT_EQ(ttt::element_count(Method::Hosvd, 24), 15768u);
}

TEST(CompressionRatio, RangeErrors) {
  EXPECT_THROW(ttt::compression_ratio(Method::Svd, 82), std::out_of_range);
  EXPECT_THROW(ttt::compression_ratio(Method::Hosvd, 28), std::out_of_range);
  EXPECT_THROW(ttt::compression_ratio(Method::Hosvd, -1), std::out_of_range);
  EXPECT_THROW(ttt::compression_ratio(Method::Exact, 1), std::invalid_argument);
}

TEST(CompressionRatio, StrictlyIncreasing) {
  for (int r = 1; r <= 81; ++r) EXPECT_LT(ttt::compression_ratio(Method::Svd, r - 1), ttt::compression_ratio(Method::Svd, r));
  for (int r = 1; r <= 27; ++r) {
    EXPECT_LT(ttt::compression_ratio(Method::Hosvd, r - 1), ttt::compression_ratio(Method::Hosvd, r));
  }
}

TEST(RelativeError, Endpoints) {
  const auto& exact = ttt::testing::exact_tensor();
  EXPECT_EQ(ttt::relative_error(exact, exact), 0.0);
  EXPECT_DOUBLE_EQ(ttt::relative_error(exact, ttt::EvalTensor::zeros()), 1.0);
  EXPECT_THROW(ttt::relative_error(ttt::EvalTensor::zeros(), exact), std::invalid_argument);
}

TEST(MatchRanks, ReproducesPublishedTable) {
  const std::array<std::pair<int, int>, 8> expected{{{0, 0}, {3, 7}, {8, 12}, {12, 14}, {19, 17}, {26, 19}, {49, 24}, {61, 26}}};
  for (std::size_t i = 0; i < ttt::kTableOneTargets.size(); ++i) {
    const auto m = ttt::match_ranks(ttt::kTableOneTargets[i]);
    EXPECT_EQ(m.svd_rank, expected[i].first) << ttt::kTableOneTargets[i];
    EXPECT_EQ(m.hosvd_rank, expected[i].second) << ttt::kTableOneTargets[i];
  }
}

TEST(MatchRanks, FlagsOvershootAtUnity) {
  const auto m = ttt::match_ranks(1.0);
  EXPECT_TRUE(m.svd_exceeds_original());
  EXPECT_DOUBLE_EQ(m.svd_cr, 244.0 / 243.0);
  EXPECT_FALSE(m.hosvd_exceeds_original());
  EXPECT_FALSE(ttt::match_ranks(0.8).svd_exceeds_original());
}

TEST(MatchRanks, TiesGoToSmallerRank) {
  // Midpoint between svd ranks 3 and 4.
  const double mid = (ttt::compression_ratio(Method::Svd, 3) + ttt::compression_ratio(Method::Svd, 4)) / 2.0;
  EXPECT_EQ(ttt::match_ranks(mid).svd_rank, 3);
}

TEST(MatchRanks, RejectsOutOfRangeTarget) {
  EXPECT_THROW(ttt::match_ranks(-0.1), std::out_of_range);
  EXPECT_THROW(ttt::match_ranks(1.5), std::out_of_range);
}

TEST(CsvRow, SeventeenDigitFormatting) {
  const ttt::CompressionPoint p{Method::Svd, 18, 72.0 / 243.0, 0.5};
  EXPECT_EQ(ttt::to_csv_row(p), "svd,18,0.29629629629629628,0.5");
  EXPECT_EQ(ttt::format_real(0.1), "0.10000000000000001");
  EXPECT_EQ(std::stod(ttt::format_real(1.0 / 3.0)), 1.0 / 3.0);
}

}  // namespace
