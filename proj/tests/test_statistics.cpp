#include <gtest/gtest.h>

#include "qpart/enumerate.hpp"
#include "qpart/error.hpp"
#include "qpart/statistics.hpp"
#include "qpart/text.hpp"
#include "support.hpp"

using namespace qpart;

namespace {

const SetPartition kTwoNine = parse_partition("1,4,8/2,9/3,7/5,6");
const SetPartition kSample = parse_partition("1,4,8/2/3,7,9/5,6");

// Row values listed block by block (1 4 8 | 2 9 | 3 7 | 5 6), re-indexed by element.
std::vector<StatValue> by_element(const std::vector<StatValue>& block_order) {
  const std::vector<Element> order{1, 4, 8, 2, 9, 3, 7, 5, 6};
  std::vector<StatValue> out(9);
  for (std::size_t j = 0; j < order.size(); ++j) out[static_cast<std::size_t>(order[j] - 1)] = block_order[j];
  return out;
}

TEST(Statistics, CoordinateRows) {
  EXPECT_EQ(coord_row(kTwoNine, CoordKind::ROS), by_element({0, 2, 3, 0, 2, 0, 1, 0, 0}));
  EXPECT_EQ(coord_row(kTwoNine, CoordKind::LCS), by_element({0, 0, 0, 0, 1, 0, 0, 0, 0}));
  EXPECT_EQ(coord_row(kTwoNine, CoordKind::LOB), by_element({0, 0, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(coord_row(kTwoNine, CoordKind::RCB), by_element({3, 3, 1, 2, 0, 1, 0, 0, 0}));
  EXPECT_EQ(coord_row(kTwoNine, CoordKind::LCB), by_element({0, 0, 0, 1, 0, 2, 2, 3, 3}));
  EXPECT_EQ(coord_row(kTwoNine, CoordKind::ROB), by_element({3, 1, 0, 2, 0, 1, 0, 0, 0}));
  EXPECT_EQ(coord_row(kTwoNine, CoordKind::LOS), by_element({0, 0, 0, 1, 1, 2, 2, 3, 3}));
  EXPECT_EQ(coord_row(kTwoNine, CoordKind::RCS), by_element({0, 0, 2, 0, 2, 0, 1, 0, 0}));
}

TEST(Statistics, CoordinateSums) {
  EXPECT_EQ(coord_sum(kTwoNine, CoordKind::ROS), 8);
  EXPECT_EQ(coord_sum(kTwoNine, CoordKind::LCS), 1);
  EXPECT_EQ(coord_sum(kTwoNine, CoordKind::RCB), 10);
  EXPECT_EQ(coord_sum(kTwoNine, CoordKind::LCB), 11);
  EXPECT_EQ(coord_sum(kTwoNine, CoordKind::ROB), 7);
  EXPECT_EQ(coord_sum(kTwoNine, CoordKind::LOS), 12);
  EXPECT_EQ(coord_sum(kTwoNine, CoordKind::RCS), 5);
  EXPECT_EQ(mak(kTwoNine), 9);
  EXPECT_EQ(makp(kTwoNine), 10);
  EXPECT_EQ(lmak(kTwoNine), 10);
  EXPECT_EQ(lmakp(kTwoNine), 9);
}

TEST(Statistics, InversionCountsOfSample) {
  EXPECT_EQ(nrinv(kSample, 8), 1);
  EXPECT_EQ(nrinv(kSample, 2), 5);
  EXPECT_EQ(nrinv(kSample, 9), 0);
  EXPECT_EQ(nrinv(kSample, 6), 0);
  EXPECT_EQ(linv_openers(kSample), 7);
  EXPECT_EQ(coord_sum(kSample, CoordKind::LOS), 13);
  EXPECT_EQ(rinv_closers(kSample), 7);
}

// mak_l on the same partition follows from mak = 13 and the nrinv values above.
TEST(Statistics, MakLOfSample) {
  EXPECT_EQ(mak(kSample), 13);
  EXPECT_EQ(mak_l(kSample, 1), 15);
  EXPECT_EQ(mak_l(kSample, 2), 10);
  EXPECT_EQ(mak_l(kSample, 3), 14);
  EXPECT_EQ(mak_l(kSample, 4), 13);
  EXPECT_THROW(mak_l(kSample, 5), std::out_of_range);
  EXPECT_THROW(mak_l(kSample, 0), std::out_of_range);
  EXPECT_EQ(mak_l(parse_partition("1,2,3"), 1), 0);
}

TEST(Statistics, StatIAtOrbitEnds) {
  const auto p0 = parse_partition("1,4,8/2/3/5,6,7,9");
  EXPECT_EQ(stat_i(p0, 3), -6);
  EXPECT_EQ(stat_i(p0, 4), -2);
  EXPECT_EQ(stat_i(parse_partition("1,4,8/2/3,6,7,9/5"), 3), -3);
  const auto singles = parse_partition("1/2/3/4");
  for (int i = 1; i <= 4; ++i) EXPECT_EQ(stat_i(singles, i), i - 1);
}

TEST(Statistics, CanonicalOnlyStatisticsRejectOrderedInput) {
  const auto op = parse_ordered("2/1");
  EXPECT_THROW(mak_l(op, 1), ValidationError);
  EXPECT_THROW(stat_i(op, 1), ValidationError);
}

TEST(Statistics, SingleBlockIsAllZero) {
  const auto p = parse_partition("1,2,3");
  for (auto kind : kAllCoordKinds) EXPECT_EQ(coord_sum(p, kind), 0) << name(kind);
}

// Each coordinate statistic agrees with the quadratic definition-literal scan.
TEST(Statistics, CoordinatesMatchOracle) {
  const std::pair<CoordKind, oracle::Coord> pairs[] = {
      {CoordKind::ROS, oracle::ROS}, {CoordKind::ROB, oracle::ROB}, {CoordKind::RCS, oracle::RCS},
      {CoordKind::RCB, oracle::RCB}, {CoordKind::LOS, oracle::LOS}, {CoordKind::LOB, oracle::LOB},
      {CoordKind::LCS, oracle::LCS}, {CoordKind::LCB, oracle::LCB}};
  for (int n = 1; n <= 6; ++n) {
    for (const auto& b : oracle::all_partitions(n)) {
      const auto p = test::to_partition(b);
      const auto sums = coord_sums(p);
      for (const auto& [kind, c] : pairs) {
        for (Element i = 1; i <= n; ++i) ASSERT_EQ(coord_stat(p, kind, i), oracle::coord(b, c, i));
        ASSERT_EQ(sums[kind], oracle::coord_sum(b, c));
      }
      ASSERT_EQ(mak(p), oracle::mak(b));
      ASSERT_EQ(makp(p), oracle::makp(b));
      ASSERT_EQ(lmak(p), oracle::lmak(b));
      ASSERT_EQ(lmakp(p), oracle::lmakp(b));
      for (int l = 1; l <= static_cast<int>(b.size()); ++l) ASSERT_EQ(mak_l(p, l), oracle::mak_l(b, l));
      for (Element x = 1; x <= n; ++x) {
        ASSERT_EQ(rinv(p, x), oracle::rinv(b, x));
        ASSERT_EQ(nrinv(p, x), oracle::nrinv(b, x));
        ASSERT_EQ(linv(p, x), oracle::linv(b, x));
      }
    }
  }
}

TEST(Statistics, OrderedStatisticsMatchOracle) {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (const auto& b : oracle::ordered_partitions(n, k)) {
        const auto p = test::to_ordered(b);
        ASSERT_EQ(mak(p), oracle::mak(b));
        ASSERT_EQ(makp(p), oracle::makp(b));
        ASSERT_EQ(lmak(p), oracle::lmak(b));
        ASSERT_EQ(lmakp(p), oracle::lmakp(b));
        ASSERT_EQ(bmaj(p), oracle::bmaj(b));
        ASSERT_EQ(binv(p), oracle::binv(b));
      }
    }
  }
}

TEST(Statistics, BlockDescents) {
  const auto reversed = parse_ordered("3/2/1");
  EXPECT_EQ(bmaj(reversed), 3);
  EXPECT_EQ(binv(reversed), 3);
  const auto interleaved = parse_ordered("2,3/1,4");
  EXPECT_EQ(bmaj(interleaved), 0);
  EXPECT_EQ(binv(interleaved), 0);
}

// lob vanishes when blocks are sorted by minima.
TEST(Statistics, LobVanishesOnCanonicalPartitions) {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 1; k <= n; ++k) {
      for_each_partition(n, k, [](const SetPartition& p) { ASSERT_EQ(coord_sum(p, CoordKind::LOB), 0); });
    }
  }
}

TEST(Statistics, ParseStatisticGrammar) {
  const auto single = parse_statistic("mak");
  ASSERT_EQ(single.terms.size(), 1u);
  EXPECT_EQ(single.terms[0].id, StatisticId::Mak);

  const auto combined = parse_statistic("mak + bmaj");
  ASSERT_EQ(combined.terms.size(), 2u);
  EXPECT_EQ(combined.terms[1].id, StatisticId::Bmaj);

  EXPECT_EQ(parse_statistic("mak_l:3").terms[0].parameter, 3);
  EXPECT_EQ(parse_statistic("mak_3").terms[0].parameter, 3);
  EXPECT_EQ(parse_statistic("mak_l", 2).terms[0].parameter, 2);
  EXPECT_THROW(parse_statistic("mak_l"), std::invalid_argument);
  EXPECT_THROW(parse_statistic("foo"), std::invalid_argument);
  EXPECT_THROW(parse_statistic("mak+"), std::invalid_argument);

  EXPECT_EQ(parse_statistic(to_string(combined)).terms.size(), 2u);
  EXPECT_EQ(evaluate(kTwoNine, parse_statistic("mak+makp")), 19);
  EXPECT_EQ(evaluate(kSample, parse_statistic("mak_l:2")), 10);
}

TEST(Statistics, CoordKindNames) {
  for (auto kind : kAllCoordKinds) EXPECT_EQ(parse_coord_kind(name(kind)), kind);
  EXPECT_FALSE(parse_coord_kind("mak").has_value());
}

}  // namespace
