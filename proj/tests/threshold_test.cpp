#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "npfree/threshold.hpp"

using namespace npfree;

TEST(Threshold, FlatHistory) {
  const std::vector<double> h{1, 1, 1};
  const auto s = compute_threshold(h, 1440);
  EXPECT_NEAR(s.mean, 1.0, 1e-9);
  EXPECT_NEAR(s.sigma, 0.0, 1e-9);
  EXPECT_NEAR(s.threshold, 1.0, 1e-9);
}

TEST(Threshold, PopulationSigma) {
  const std::vector<double> h{0, 2, 4};
  const auto s = compute_threshold(h, 1440);
  EXPECT_NEAR(s.mean, 2.0, 1e-9);
  EXPECT_NEAR(s.sigma, std::sqrt(8.0 / 3.0), 1e-9);
  EXPECT_NEAR(s.threshold, 2.0 + 3.0 * std::sqrt(8.0 / 3.0), 1e-9);
  EXPECT_NEAR(s.threshold, 6.89898, 1e-5);
  EXPECT_EQ(s.threshold, s.mean + 3.0 * s.sigma);
}

TEST(Threshold, WindowKeepsOnlyNewestValues) {
  std::vector<double> h(10, 1.0);
  h.insert(h.end(), 1440, 2.0);
  const auto s = compute_threshold(h, 1440);
  EXPECT_NEAR(s.mean, 2.0, 1e-9);
  EXPECT_NEAR(s.sigma, 0.0, 1e-9);
  EXPECT_NEAR(s.threshold, 2.0, 1e-9);
  EXPECT_EQ(s.samples, 1440u);
}

TEST(Threshold, ShortHistoryUsesEverything) {
  const std::vector<double> h{3, 5};
  EXPECT_EQ(compute_threshold(h, 1440).samples, 2u);
}

TEST(Threshold, EmptyHistoryIsAnError) {
  const std::vector<double> h;
  try {
    compute_threshold(h, 1440);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::empty_history);
  }
  EXPECT_THROW(compute_aare_threshold(h), Error);
}

TEST(AareThreshold, FlatAndSpread) {
  EXPECT_NEAR(compute_aare_threshold(std::vector<double>{1, 1, 1}).threshold, 1.0, 1e-9);
  EXPECT_NEAR(compute_aare_threshold(std::vector<double>{0, 2, 4}).threshold, 2.0 + 3.0 * std::sqrt(8.0 / 3.0), 1e-9);
}

TEST(AareThreshold, NoTruncation) {
  std::vector<double> h(5000);
  for (std::size_t k = 0; k < h.size(); ++k) h[k] = static_cast<double>(k);
  const auto s = compute_aare_threshold(h);
  EXPECT_EQ(s.samples, 5000u);
  EXPECT_NEAR(s.mean, 2499.5, 1e-9);
}
