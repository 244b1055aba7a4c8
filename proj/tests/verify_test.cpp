#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "unref/sample.hpp"
#include "unref/verify.hpp"

namespace unref {
namespace {

constexpr auto kRef = Refinability::Refinable;
constexpr auto kUnref = Refinability::Unrefinable;

const char* const kPartitionOf50 = "1 2 3 4 * 6 7 * * * 11 * * * * 16";

TEST(VerifyFast, Examples) {
  EXPECT_EQ(verify_fast(parse(kPartitionOf50)).kind, kUnref);
  EXPECT_EQ(verify_fast(parse("1 2 3")).kind, kUnref);
  EXPECT_EQ(verify_fast(parse("1 2 3 4 5 * 7 8 * * 11 12 13 * 15")).kind, kRef);
  EXPECT_EQ(verify_fast(parse("* 2 * 4")).kind, kRef);
  EXPECT_FALSE(verify_fast(parse("* 2 * 4")).witness);
}

TEST(VerifyFast, Degenerate) {
  EXPECT_EQ(verify_fast(StarSequence()).kind, kUnref);
  EXPECT_EQ(verify_fast(parse("*")).kind, kUnref);
  EXPECT_EQ(verify_fast(parse("* * *")).kind, kUnref);
  EXPECT_EQ(verify_fast(StarSequence::full(30)).kind, kUnref);
}

TEST(VerifyFast, ScanStopsAtRefutation) {
  const auto state = scan(parse("1 2 3 4 5 * 7 8 * * 11 12 13 * 15 16"));
  EXPECT_EQ(state.mu, 6);
  EXPECT_EQ(state.refuted_at, 15);
}

TEST(VerifyNaive, Examples) {
  const auto v = verify_naive(parse("* 2 * 4"));
  EXPECT_EQ(v.kind, kRef);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(*v.witness, (Witness{4, {1, 3}}));
  EXPECT_EQ(verify_naive(parse("1 2 * 4")).kind, kUnref);
  EXPECT_EQ(verify_naive(parse("1 2 3 * 5 * 7 * 9")).kind, kUnref);
  EXPECT_EQ(verify_naive(parse("1 2 * * 5")).kind, kUnref);
}

TEST(VerifyNaive, SmallestWitness) {
  // 7 = 1+6 = 2+5 = 3+4 all available; 9 also refinable but larger.
  const auto v = verify_naive(parse("* * * * * * 7 * 9"));
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(*v.witness, (Witness{7, {1, 6}}));
}

TEST(VerifyExhaustive, Examples) {
  const auto v = verify_exhaustive(parse("* * 3"));
  EXPECT_EQ(v.kind, kRef);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(*v.witness, (Witness{3, {1, 2}}));
  EXPECT_EQ(verify_exhaustive(parse("1 2 * 4")).kind, kUnref);
  EXPECT_EQ(verify_exhaustive(parse(kPartitionOf50)).kind, kUnref);
  EXPECT_EQ(verify_exhaustive(parse("1 2 3 * 5 * 7 * 9")).kind, kUnref);
}

TEST(VerifyExhaustive, SmallestPartFirst) {
  // Missing {1,2,3,4,6}: 5 = 1+4 = 2+3 comes before 9 = 3+6 and 10 = 4+6.
  const auto v = verify_exhaustive(parse("* * * * 5 * 7 8 9 10"));
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(*v.witness, (Witness{5, {1, 4}}));
}

TEST(VerifyExhaustive, Bound) {
  EXPECT_THROW(verify_exhaustive(StarSequence::full(25)), OracleBoundExceeded);
  EXPECT_NO_THROW(verify_exhaustive(StarSequence::full(24)));
  EXPECT_NO_THROW(verify_exhaustive(StarSequence::full(40), 40));
}

TEST(Witness, Validation) {
  const auto s = parse("* 2 * 4");
  EXPECT_TRUE(is_valid_witness(s, {4, {1, 3}}));
  EXPECT_FALSE(is_valid_witness(s, {4, {3, 1}}));
  EXPECT_FALSE(is_valid_witness(s, {4, {4}}));
  EXPECT_FALSE(is_valid_witness(s, {4, {2, 2}}));
  EXPECT_FALSE(is_valid_witness(s, {3, {1, 2}}));
}

// All three verifiers agree on every slot pattern of length <= 12; the
// full 2^16 sweep lives in the acceptance suite.
TEST(VerifyProperty, ExhaustiveAgreementSmall) {
  for (int length = 0; length <= 12; ++length) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << length); ++mask) {
      const auto s = testing::from_mask(mask, length);
      const auto oracle = verify_exhaustive(s);
      const auto naive = verify_naive(s);
      ASSERT_EQ(verify_fast(s).kind, oracle.kind) << format(s);
      ASSERT_EQ(naive.kind, oracle.kind) << format(s);
      if (oracle.witness) ASSERT_TRUE(is_valid_witness(s, *oracle.witness));
      if (naive.witness) ASSERT_TRUE(is_valid_witness(s, *naive.witness));
      // A refinable sequence always has a two-piece refinement, so the
      // tie-breaking rules pick the same witness.
      ASSERT_EQ(oracle.witness, naive.witness) << format(s);
    }
  }
}

TEST(VerifyProperty, SampledSequencesAreUnrefinable) {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 500; ++iter) {
    const std::int64_t length = 2 + static_cast<std::int64_t>(rng() % 300);
    const std::int64_t mu = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(std::min<std::int64_t>(length, 20)));
    const auto s = sample_unrefinable(length, mu, rng);
    EXPECT_EQ(s.length(), length);
    EXPECT_EQ(s.mex(), mu);
    EXPECT_EQ(verify_fast(s).kind, kUnref);
    EXPECT_EQ(verify_naive(s).kind, kUnref);
  }
}

}  // namespace
}  // namespace unref
