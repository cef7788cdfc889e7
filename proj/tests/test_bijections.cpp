#include <gtest/gtest.h>

#include <map>
#include <set>

#include "qpart/bijections.hpp"
#include "qpart/enumerate.hpp"
#include "qpart/error.hpp"
#include "qpart/statistics.hpp"
#include "qpart/text.hpp"

using namespace qpart;

namespace {

const SetPartition kSample = parse_partition("1,4,8/2/3,7,9/5,6");

TEST(Phi, ImageOfNineElementPartition) { EXPECT_EQ(to_string(phi(kSample)), "1,6,7/2,3,9/4,5/8"); }

TEST(Phi, CertificateMatrices) {
  const auto cert = phi_certificate(kSample);
  EXPECT_EQ(cert.closers, (GammaMatrix{{6, 8, 9}, {3, 1, 1}}));
  EXPECT_EQ(cert.passants, (GammaMatrix{{4, 7}, {1, 2}}));
  EXPECT_EQ(cert.image_closers, (GammaMatrix{{5, 7, 9}, {3, 1, 1}}));
  EXPECT_EQ(cert.image_passants, (GammaMatrix{{3, 6}, {2, 1}}));
  EXPECT_EQ(cert.image, phi(kSample));
  EXPECT_NE(to_json(cert).find("\"values\":[5,7,9]"), std::string::npos);
}

TEST(Phi, InvolutionExchangingMakAndMakp) {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 1; k <= n; ++k) {
      for_each_partition(n, k, [](const SetPartition& p) {
        const auto image = phi(p);
        ASSERT_EQ(phi(image), p) << to_string(p);
        ASSERT_EQ(makp(image), mak(p)) << to_string(p);
        ASSERT_EQ(image.block_count(), p.block_count());
      });
    }
  }
}

TEST(Phi, ClosersMirrorOpeners) {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 1; k <= n; ++k) {
      for_each_partition(n, k, [n](const SetPartition& p) {
        std::vector<Element> mirrored;
        for (Element a : classify(p).openers_ns) mirrored.push_back(n + 1 - a);
        std::sort(mirrored.begin(), mirrored.end());
        ASSERT_EQ(classify(phi(p)).closers_ns, mirrored);
      });
    }
  }
}

TEST(Phi, SmallCases) {
  EXPECT_EQ(phi(SetPartition{}), SetPartition{});
  EXPECT_EQ(to_string(phi(parse_partition("1,2,3"))), "1,2,3");
  EXPECT_EQ(to_string(phi(parse_partition("1/2/3"))), "1/2/3");
}

// The orbit of phi_3 and the values (stat_4 - 1, stat_3) along it.
TEST(PhiI, OrbitWithStatValues) {
  const std::vector<std::string> orbit{
      "1,4,8/2/3/5,6,7,9", "1,4,8/2/3,9/5,6,7", "1,4,8/2/3,7/5,6,9", "1,4,8/2/3,7,9/5,6",
      "1,4,8/2/3,6/5,7,9", "1,4,8/2/3,6,9/5,7", "1,4,8/2/3,6,7/5,9", "1,4,8/2/3,6,7,9/5"};
  const std::vector<std::pair<StatValue, StatValue>> values{
      {-3, -6}, {-6, -5}, {-5, -5}, {-5, -4}, {-4, -5}, {-5, -4}, {-4, -4}, {-4, -3}};
  SetPartition p = parse_partition(orbit[0]);
  for (std::size_t j = 0; j < orbit.size(); ++j) {
    ASSERT_EQ(to_string(p), orbit[j]);
    EXPECT_EQ(stat_i(p, 4) - 1, values[j].first) << orbit[j];
    EXPECT_EQ(stat_i(p, 3), values[j].second) << orbit[j];
    p = phi_i(p, 3);
  }
  EXPECT_EQ(to_string(p), orbit[0]);
}

TEST(PhiI, BijectionOnOpenerClasses) {
  for (int n = 2; n <= 7; ++n) {
    for (int blocks = 2; blocks <= n; ++blocks) {
      std::map<std::vector<Element>, std::vector<SetPartition>> classes;
      for_each_partition(n, blocks, [&](const SetPartition& p) { classes[classify(p).openers].push_back(p); });
      for (const auto& [openers, members] : classes) {
        for (int i = 1; i < blocks; ++i) {
          std::set<SetPartition> images;
          for (const auto& p : members) {
            const auto image = phi_i(p, i);
            ASSERT_EQ(classify(image).openers, openers);
            ASSERT_EQ(stat_i(p, i), stat_i(image, i + 1) - 1) << to_string(p) << " i=" << i;
            images.insert(image);
          }
          ASSERT_EQ(images.size(), members.size());
        }
      }
    }
  }
}

TEST(PhiI, RejectsBadIndex) {
  EXPECT_THROW(phi_i(kSample, 0), std::out_of_range);
  EXPECT_THROW(phi_i(kSample, 4), std::out_of_range);
}

TEST(Matching, OpenersToClosers) {
  const auto m = match_openers_closers(kSample);
  EXPECT_EQ(m, (std::map<Element, Element>{{1, 9}, {3, 8}, {5, 6}}));
}

}  // namespace
