#include <gtest/gtest.h>

#include "qpart/enumerate.hpp"
#include "qpart/error.hpp"
#include "qpart/partition.hpp"
#include "qpart/text.hpp"
#include "support.hpp"

using namespace qpart;

namespace {

const SetPartition kSample = from_blocks({{1, 4, 8}, {2}, {3, 7, 9}, {5, 6}});

TEST(Partition, RgfOfSample) {
  const auto w = to_rgf(kSample).letters();
  EXPECT_EQ(std::vector<int>(w.begin(), w.end()), (std::vector<int>{1, 2, 3, 1, 4, 4, 3, 1, 3}));
  EXPECT_EQ(from_rgf(RgfWord({1, 2, 3, 1, 4, 4, 3, 1, 3})), kSample);
}

TEST(Partition, ClassificationOfSample) {
  const auto c = classify(kSample);
  EXPECT_EQ(c.openers, (std::vector<Element>{1, 2, 3, 5}));
  EXPECT_EQ(c.closers, (std::vector<Element>{2, 6, 8, 9}));
  EXPECT_EQ(c.passants, (std::vector<Element>{4, 7}));
  EXPECT_EQ(c.singletons, (std::vector<Element>{2}));
  EXPECT_EQ(c.openers_ns, (std::vector<Element>{1, 3, 5}));
  EXPECT_EQ(c.closers_ns, (std::vector<Element>{6, 8, 9}));
}

TEST(Partition, TraceOfSample) {
  const auto t = trace_profile(kSample);
  EXPECT_EQ(t.level, (std::vector<int>{0, 1, 1, 2, 2, 3, 2, 2, 1}));
  EXPECT_EQ(t.gamma, (std::vector<int>{1, 2, 2, 1, 3, 3, 2, 1, 1}));
}

TEST(Partition, BlocksAreSortedAndOrderedByMinimum) {
  const auto p = from_blocks({{6, 5}, {9, 3, 7}, {2}, {8, 1, 4}});
  EXPECT_EQ(p, kSample);
  EXPECT_EQ(p.block(3), (Block{3, 7, 9}));
  EXPECT_EQ(p.opener(4), 5);
  EXPECT_EQ(p.closer(1), 8);
  EXPECT_EQ(p.block_count(), 4);
}

TEST(Partition, RejectsInvalidBlocks) {
  EXPECT_THROW(from_blocks({{1, 2}, {2, 3}}), ValidationError);
  EXPECT_THROW(from_blocks({{1, 3}}), ValidationError);
  EXPECT_THROW(from_blocks({{1}, {}}), ValidationError);
  EXPECT_THROW(from_blocks({{0, 1}}), ValidationError);
  EXPECT_THROW(RgfWord({2, 1}), ValidationError);
  EXPECT_THROW(RgfWord({1, 3}), ValidationError);
}

TEST(Partition, EmptyPartition) {
  const SetPartition empty;
  EXPECT_EQ(empty.size(), 0);
  EXPECT_EQ(empty.block_count(), 0);
  EXPECT_EQ(from_blocks({}), empty);
}

TEST(Partition, ClassesCoverEveryElementOnce) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& b : oracle::all_partitions(n)) {
      const auto p = test::to_partition(b);
      const auto c = classify(p);
      EXPECT_EQ(c.openers.size(), b.size());
      EXPECT_EQ(c.closers.size(), b.size());
      EXPECT_EQ(c.openers.size() + c.passants.size() + c.closers_ns.size(), static_cast<std::size_t>(n));
      EXPECT_EQ(c.openers_ns.size(), c.closers_ns.size());
    }
  }
}

// The trace profile determines the partition.
TEST(Partition, ProfileRoundTrip) {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 1; k <= n; ++k) {
      for_each_partition(n, k, [](const SetPartition& p) {
        const auto t = trace_profile(p);
        ASSERT_EQ(rebuild_from_profile(t.kinds, t.gamma), p) << to_string(p);
      });
    }
  }
}

TEST(Partition, ProfileRejectsImpossibleGamma) {
  const auto t = trace_profile(kSample);
  auto gamma = t.gamma;
  gamma[5] = 7;
  EXPECT_THROW(rebuild_from_profile(t.kinds, gamma), ValidationError);
  std::vector<ElementKind> closer_first{ElementKind::Closer};
  EXPECT_THROW(rebuild_from_profile(closer_first, std::vector<int>{1}), ValidationError);
}

TEST(Partition, OrderedArrangementAndCanonical) {
  const std::vector<int> order{3, 1, 4, 2};
  const auto op = OrderedSetPartition::arrange(kSample, order);
  EXPECT_EQ(op.blocks(), (std::vector<Block>{{3, 7, 9}, {1, 4, 8}, {5, 6}, {2}}));
  EXPECT_EQ(op.canonical(), kSample);
  EXPECT_EQ(kSample.as_ordered().blocks(), kSample.blocks());
  const std::vector<int> bad{1, 1, 2, 3};
  EXPECT_THROW(OrderedSetPartition::arrange(kSample, bad), ValidationError);
}

}  // namespace
