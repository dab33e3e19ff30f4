#include <gtest/gtest.h>

#include "npfree/experiments.hpp"
#include "support/synthetic.hpp"

using namespace npfree;

TEST(Experiments, StandardOffsetList) {
  const auto c = experiments::standard_offsets();
  ASSERT_EQ(c.size(), 12u);
  EXPECT_EQ(c.front(), 100.0);
  EXPECT_EQ(c[9], 1000.0);
  EXPECT_EQ(c[10], 1500.0);
  EXPECT_EQ(c.back(), 2000.0);
}

TEST(Experiments, OffsetsProducesTwelveDistances) {
  const auto s = synthetic::trend_daily_noise("B3B", 300, 1);
  const auto r = experiments::offsets(s);
  ASSERT_EQ(r.variants.size(), 12u);
  EXPECT_EQ(r.variants[0].name, "B3B+100");
  EXPECT_EQ(r.variants[11].name, "B3B+2000");
  EXPECT_EQ(r.base, convert(s));
  for (const auto& v : r.variants) {
    EXPECT_GE(v.distance, 0.0);
    EXPECT_EQ(v.rmse.points.size(), 295u);
  }
  // Parallel conversion gives the same answer as sequential.
  EXPECT_EQ(r.variants[4].rmse, convert(offset_variant(s, 500.0)));
}

TEST(Experiments, OppositeReportsRatio) {
  const auto s = sine_series(400, 50, 20.0);
  const auto r = experiments::opposite(s);
  ASSERT_EQ(r.similar.size(), 2u);
  EXPECT_GT(r.opposite_distance, 0.0);
  EXPECT_DOUBLE_EQ(r.worst_ratio, std::max(r.similar[0].distance, r.similar[1].distance) / r.opposite_distance);
}

TEST(Experiments, ZnormDemoCollapsesAffinePair) {
  const auto d = experiments::znorm_demo(sine_series(24, 12, 5.0));
  EXPECT_LT(d.max_z_difference, 1e-9);
  EXPECT_GT(d.raw_distance, 1.0);
}
