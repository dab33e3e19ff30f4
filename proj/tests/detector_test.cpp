#include <gtest/gtest.h>

#include <algorithm>

#include "npfree/detector.hpp"
#include "support/synthetic.hpp"

using namespace npfree;

TEST(Detector, PreparationPeriodOfSevenPoints) {
  Detector d;
  const auto s = synthetic::uniform("u", 7, 1, 5.0, 9.0);
  for (double v : s.values) EXPECT_FALSE(d.step(v).has_value());
  const auto verdict = d.step(6.0);
  ASSERT_TRUE(verdict.has_value());
  EXPECT_EQ(verdict->t, 7u);
}

TEST(Detector, OneVerdictPerIndexFromSeven) {
  const auto verdicts = detect(synthetic::uniform("u", 200, 4, 5.0, 9.0));
  ASSERT_EQ(verdicts.size(), 193u);
  for (std::size_t k = 0; k < verdicts.size(); ++k) EXPECT_EQ(verdicts[k].t, k + 7);
}

TEST(Detector, SpikeIsReported) {
  TimeSeries s = synthetic::constant(30, 10.0);
  s.values[20] = 1000.0;
  const auto verdicts = detect(s);
  const auto at = [&](std::size_t t) { return verdicts.at(t - 7); };
  EXPECT_TRUE(at(20).anomalous || at(21).anomalous);
  for (std::size_t t = 7; t < 20; ++t) EXPECT_FALSE(at(t).anomalous) << t;
}

TEST(Detector, ConstantSeriesHasNoAnomalies) {
  const auto verdicts = detect(synthetic::constant(30, 10.0));
  EXPECT_EQ(std::count_if(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.anomalous; }), 0);
}

TEST(Detector, AnomalousMeansAboveThreshold) {
  TimeSeries s = synthetic::uniform("u", 150, 21, 5.0, 9.0);
  s.values[60] = 400.0;
  s.values[100] = 0.5;
  for (const auto& v : detect(s)) EXPECT_EQ(v.anomalous, v.aare > v.threshold) << v.t;
}

TEST(Detector, HistoryGrowsWithoutBound) {
  Detector d;
  const auto s = synthetic::uniform("u", 1600, 2, 5.0, 9.0);
  for (double v : s.values) d.step(v);
  EXPECT_EQ(d.history_size(), 1600u - 5u);
}

TEST(Detector, ZeroValueIsReportedAndStateSurvives) {
  Detector d;
  for (double v : {4.0, 5.0, 6.0, 5.0, 4.0}) d.step(v);
  try {
    d.step(0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::zero_denominator);
  }
  EXPECT_EQ(d.next_index(), 5u);
  EXPECT_NO_THROW(d.step(5.0));
  EXPECT_EQ(d.next_index(), 6u);
}
