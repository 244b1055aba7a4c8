#include <gtest/gtest.h>

#include <limits>
#include <map>
#include <set>

#include "oracles.hpp"
#include "unref/enumerate.hpp"
#include "unref/verify.hpp"

namespace unref {
namespace {

std::vector<std::string> enumerate_branch(std::int64_t N, std::int64_t mu) {
  std::vector<std::string> out;
  enumerate_with_mex(N, mu, [&](const StarSequence& s) { out.push_back(format(s)); });
  return out;
}

std::vector<std::string> enumerate_all(std::int64_t N) {
  std::vector<std::string> out;
  unrefinable_partitions(N, [&](const StarSequence& s) { out.push_back(format(s)); });
  return out;
}

TEST(TriangularRoot, Examples) {
  EXPECT_EQ(triangular_root(10), (TriangularRoot{4, true}));
  EXPECT_EQ(triangular_root(50), (TriangularRoot{9, false}));
  EXPECT_EQ(triangular_root(7), (TriangularRoot{3, false}));
  EXPECT_EQ(triangular_root(0), (TriangularRoot{0, true}));
  EXPECT_EQ(triangular_root(1), (TriangularRoot{1, true}));
  EXPECT_EQ(triangular_root(2), (TriangularRoot{1, false}));
}

TEST(TriangularRoot, MatchesDefinition) {
  for (std::int64_t N = 0; N <= 5000; ++N) {
    const auto root = triangular_root(N);
    EXPECT_LE(root.n * (root.n + 1) / 2, N);
    EXPECT_GT((root.n + 1) * (root.n + 2) / 2, N);
    EXPECT_EQ(root.is_triangular, root.n * (root.n + 1) / 2 == N);
  }
  const std::int64_t big = 3'000'000'000;
  const auto root = triangular_root(big * (big + 1) / 2);
  EXPECT_EQ(root, (TriangularRoot{big, true}));
}

TEST(EnumerateWithMex, Examples) {
  EXPECT_EQ(enumerate_branch(7, 3), (std::vector<std::string>{"1 2 * 4"}));
  EXPECT_TRUE(enumerate_branch(10, 1).empty());
  EXPECT_TRUE(enumerate_branch(6, 2).empty());
}

TEST(EnumerateWithMex, RangeChecked) {
  auto ignore = [](const StarSequence&) {};
  EXPECT_THROW(enumerate_with_mex(10, 0, ignore), ContractViolation);
  EXPECT_THROW(enumerate_with_mex(10, 5, ignore), ContractViolation);
  EXPECT_THROW(enumerate_with_mex(0, 1, ignore), ContractViolation);
  EXPECT_NO_THROW(enumerate_with_mex(10, 4, ignore));
}

TEST(UnrefinablePartitions, Examples) {
  EXPECT_EQ(enumerate_all(10), (std::vector<std::string>{"1 2 3 4"}));
  EXPECT_EQ(enumerate_all(6), (std::vector<std::string>{"1 2 3"}));
  EXPECT_EQ(enumerate_all(20).size(), 7u);
  EXPECT_EQ(enumerate_all(1), (std::vector<std::string>{"1"}));
  EXPECT_EQ(enumerate_all(2), (std::vector<std::string>{"* 2"}));
  EXPECT_THROW(enumerate_all(0), ContractViolation);
}

TEST(UnrefinablePartitions, OrderIsMexDescending) {
  const auto all = collect_unrefinable(36);  // triangular: 1..8 first
  ASSERT_FALSE(all.empty());
  EXPECT_EQ(all.front(), StarSequence::full(8));
  std::int64_t previous = std::numeric_limits<std::int64_t>::max();
  for (std::size_t i = 1; i < all.size(); ++i) {
    EXPECT_LE(all[i].mex(), previous);
    previous = all[i].mex();
  }
}

TEST(CountUnrefinable, Examples) {
  EXPECT_EQ(count_unrefinable(1), 1u);
  EXPECT_EQ(count_unrefinable(100), 104u);
  EXPECT_EQ(count_unrefinable(200), 1616u);
  EXPECT_EQ(count_unrefinable(200, 4), 1616u);
}

TEST(CountRange, Examples) {
  EXPECT_EQ(count_range(10, 10), (CountTable{{10, 1}}));
  const auto rows = count_range(40, 50);
  ASSERT_EQ(rows.size(), 11u);
  EXPECT_EQ(rows.front(), (CountRow{40, 9}));
  EXPECT_EQ(rows.back(), (CountRow{50, 15}));
  EXPECT_EQ(count_range(1, 3), (CountTable{{1, 1}, {2, 1}, {3, 1}}));
  EXPECT_THROW(count_range(0, 3), ContractViolation);
  EXPECT_THROW(count_range(5, 3), ContractViolation);
  EXPECT_EQ(count_range(1, 60, 3), count_range(1, 60, 1));
}

// Matches a brute-force filter of all distinct-part partitions.
TEST(EnumerateProperty, CompleteForSmallN) {
  for (std::int64_t N = 1; N <= 30; ++N) {
    std::set<StarSequence> found;
    unrefinable_partitions(N, [&](const StarSequence& s) {
      EXPECT_TRUE(found.insert(s).second) << "duplicate " << format(s);
    });
    EXPECT_EQ(found, testing::brute_force_unrefinable(N)) << "N = " << N;
  }
}

// At every internal node the carried table is the one a fresh scan computes.
TEST(EnumerateProperty, NodeTablesMatchScan) {
  for (std::int64_t N : {25, 47, 80}) {
    const auto n = triangular_root(N).n;
    for (std::int64_t mu = 1; mu <= n; ++mu) {
      std::int64_t nodes = 0;
      enumerate_with_mex(
          N, mu, [](const StarSequence&) {},
          [&](const StarSequence& s, const ResidueTable& table) {
            ++nodes;
            const auto state = scan(s);
            ASSERT_EQ(state.mu, mu);
            ASSERT_EQ(state.refuted_at, 0) << format(s);
            ASSERT_EQ(state.table, table) << format(s);
            ASSERT_FALSE(is_saturated(table, s.length()));
            ASSERT_LT(s.sum(), N);
          });
      EXPECT_GT(nodes, 0);
    }
  }
}

// Each unrefinable partition with mex mu appears among at most mu unsaturated
// nodes (its canonical form plus trailing stars).
TEST(EnumerateProperty, UnsaturatedRepresentationsBounded) {
  for (std::int64_t N = 5; N <= 60; ++N) {
    const auto n = triangular_root(N).n;
    for (std::int64_t mu = 1; mu <= n; ++mu) {
      std::map<std::vector<std::int64_t>, int> representations;
      enumerate_with_mex(
          N, mu, [](const StarSequence&) {},
          [&](const StarSequence& s, const ResidueTable&) { ++representations[s.parts()]; });
      for (const auto& [parts, times] : representations) {
        EXPECT_LE(times, mu);
      }
    }
  }
}

// The budget prune only removes subtrees that never emit.
TEST(EnumerateProperty, PruningModesAgree) {
  struct Recorder {
    std::vector<StarSequence> leaves;
    std::int64_t nodes = 0;
    void leaf(const StarSequence& s) { leaves.push_back(s); }
    void node(const StarSequence&, const ResidueTable&) { ++nodes; }
  };
  for (std::int64_t N = 1; N <= 120; ++N) {
    const auto n = triangular_root(N).n;
    for (std::int64_t mu = 1; mu <= n; ++mu) {
      Recorder plain;
      Recorder pruned;
      detail::walk_branch<detail::Pruning::Saturation>(N, mu, plain);
      detail::walk_branch<detail::Pruning::Exhausted>(N, mu, pruned);
      ASSERT_EQ(plain.leaves, pruned.leaves) << "N=" << N << " mu=" << mu;
      EXPECT_LE(pruned.nodes, plain.nodes);
    }
  }
}

}  // namespace
}  // namespace unref
