#include "hdepth/errors.hpp"
#include "hdepth/qdepth.hpp"
#include "hdepth/rng.hpp"
#include "hdepth/spec.hpp"
#include "hdepth/verify.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

namespace hdepth {
namespace {

std::map<long, mpz_class> valuesOn(const HilbertFunction& h, long lo, long hi) {
  std::map<long, mpz_class> out;
  for (long k = lo; k <= hi; ++k) out[k] = evaluate(h, k);
  return out;
}

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

TEST(Beta, Examples) {
  const auto h = parseFunction("table(3:4, 4:9)");
  EXPECT_EQ(beta(h, 7, 3), 4);
  EXPECT_EQ(beta(polynomialRing(2), 2, 1), 0);
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(beta(completeIntersection(n, std::vector<int>(static_cast<std::size_t>(n), 2)), n, 0), 1);
  }
}

TEST(Beta, OutOfRange) {
  EXPECT_THROW(beta(polynomialRing(2), 2, -1), Error);
  EXPECT_THROW(beta(polynomialRing(2), 2, 3), Error);
  EXPECT_THROW(betaTable(parseFunction("table(2:1)"), 1), Error);
}

TEST(BetaTable, Examples) {
  EXPECT_EQ(betaTable(polynomialRing(1), 1).values, ints({1, 0}));
  for (int n = 1; n <= 6; ++n) {
    std::vector<Integer> expected(static_cast<std::size_t>(n + 1), Integer(0));
    expected[0] = 1;
    EXPECT_EQ(betaTable(completeIntersection(n, std::vector<int>(static_cast<std::size_t>(n), 2)), n).values, expected);
  }
  EXPECT_EQ(betaTable(fromTable({{0, Integer(1)}}), 0).values, ints({1}));
}

TEST(Reconstruct, Examples) {
  EXPECT_EQ(reconstruct(betaTable(fromTable({{0, Integer(1)}}), 0), 0), 1);
  EXPECT_EQ(reconstruct(betaTable(polynomialRing(3), 3), 2), 6);
  const int threes[] = {3, 3};
  EXPECT_EQ(reconstruct(betaTable(completeIntersection(2, threes), 2), 2), 3);
  EXPECT_THROW(reconstruct(betaTable(polynomialRing(3), 3), 4), Error);
}

TEST(Bounds, Examples) {
  EXPECT_EQ(bounds(fromTable({{0, Integer(1)}})), (DepthBounds{0, 0}));
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(bounds(polynomialRing(n)), (DepthBounds{0, n}));
  EXPECT_EQ(bounds(parseFunction("table(2:2, 3:5)")), (DepthBounds{2, 4}));
}

TEST(Qdepth, Examples) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(qdepth(polynomialRing(n)).qdepth, n);
  const int three[] = {3};
  EXPECT_EQ(qdepth(completeIntersection(3, three)).qdepth, 3);
  EXPECT_EQ(qdepth(parseFunction("table(0:1,1:1)")).qdepth, 1);
}

TEST(Qdepth, ResultShape) {
  // table(0:1, 1:3, 2:1): the window is [0, 3]; beta_2^3 = 1 - 2*3 + 3 = -2 rules out 3.
  const auto r = qdepth(parseFunction("table(0:1, 1:3, 2:1)"));
  EXPECT_EQ(r.lowerBound, 0);
  EXPECT_EQ(r.upperBound, 3);
  ASSERT_TRUE(r.refutation);
  EXPECT_EQ(r.refutation->d, r.qdepth + 1);
  EXPECT_LT(r.refutation->beta, 0);
  EXPECT_EQ(beta(parseFunction("table(0:1, 1:3, 2:1)"), r.refutation->d, r.refutation->k), r.refutation->beta);
  EXPECT_EQ(r.certificate.d, r.qdepth);
  EXPECT_TRUE(r.certificate.nonnegative());

  const auto top = qdepth(polynomialRing(4));
  EXPECT_FALSE(top.refutation);
  EXPECT_EQ(top.qdepth, top.upperBound);
}

TEST(Qdepth, EmptyWindowEdge) {
  const auto r = qdepth(fromTable({{5, Integer(3)}}));
  EXPECT_EQ(r.qdepth, 5);
  EXPECT_EQ(r.certificate.values, ints({3}));
  EXPECT_FALSE(r.refutation);
}

TEST(Qdepth, OverlyWideWindowIsRejected) {
  EXPECT_THROW(qdepth(parseFunction("table(0:1, 1:100000000000)")), Error);
}

// Properties over seeded random functions, checked against a definition-level search.
class RandomDepths : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RandomDepths, MatchesDefinitionOracle) {
  SeededRng rng(GetParam());
  for (int i = 0; i < 60; ++i) {
    const std::string spec = randomFunctionSpec(rng);
    const auto h = parseFunction(spec);
    const long start = k0(h);
    const long hi = start + 20;
    const auto values = valuesOn(h, start, hi + 1);
    // Beyond the window depth is infeasible, so searching a little past it is safe.
    const long high = std::min(bounds(h).upper + 2, hi);
    ASSERT_EQ(qdepth(h).qdepth, oracle::depthBySearch(values, start, start, high)) << spec;
  }
}

TEST_P(RandomDepths, InversionReconstructsValues) {
  SeededRng rng(GetParam() + 100);
  for (int i = 0; i < 40; ++i) {
    const auto h = parseFunction(randomFunctionSpec(rng));
    const long start = k0(h);
    for (long d = start; d <= start + 12; ++d) {
      const BetaTable t = betaTable(h, d);
      for (long k = start; k <= d; ++k) ASSERT_EQ(reconstruct(t, k), evaluate(h, k));
    }
  }
}

TEST_P(RandomDepths, StructuralLaws) {
  SeededRng rng(GetParam() + 200);
  for (int i = 0; i < 40; ++i) {
    const auto h = parseFunction(randomFunctionSpec(rng));
    const auto h2 = parseFunction(randomFunctionSpec(rng));
    const auto r = qdepth(h);
    const auto b = bounds(h);
    EXPECT_LE(b.lower, r.qdepth);
    EXPECT_LE(r.qdepth, b.upper);
    if (auto top = kf(h)) {
      EXPECT_LE(r.qdepth, *top);
    }
    const long m = rng.uniform(-5, 5);
    EXPECT_EQ(qdepth(shift(h, m)).qdepth, r.qdepth - m);
    for (long factor : {2, 3, 7}) EXPECT_EQ(qdepth(scale(h, factor)).qdepth, r.qdepth);
    EXPECT_GE(qdepth(add(h, h2)).qdepth, std::min(r.qdepth, qdepth(h2).qdepth));
    EXPECT_GE(qdepth(extend(h)).qdepth, r.qdepth);
    if (r.refutation) {
      EXPECT_LT(beta(h, r.refutation->d, r.refutation->k), 0);
    }
  }
}

TEST_P(RandomDepths, ParityIdentityOnExtension) {
  SeededRng rng(GetParam() + 300);
  for (int i = 0; i < 40; ++i) {
    const auto h = parseFunction(randomFunctionSpec(rng));
    const long start = k0(h);
    for (long d = start; d <= start + 12; ++d) {
      Integer expected = 0;
      for (long l = start; l <= d; l += 1) {
        if ((d - l) % 2 == 0) expected += evaluate(h, l);
      }
      ASSERT_EQ(beta(extend(h), d, d), expected);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomDepths, ::testing::Values(1, 2, 3));

TEST(Qdepth, BetaAgreesWithOracleSum) {
  SeededRng rng(21);
  for (int i = 0; i < 50; ++i) {
    const auto h = parseFunction(randomFunctionSpec(rng));
    const long start = k0(h);
    const auto values = valuesOn(h, start, start + 15);
    for (long d = start; d <= start + 8; ++d) {
      for (long k = start; k <= d; ++k) ASSERT_EQ(beta(h, d, k), oracle::beta(values, start, d, k));
    }
  }
}

TEST(FeasibleDepths, ContainsQdepthAndNothingAbove) {
  SeededRng rng(22);
  for (int i = 0; i < 50; ++i) {
    const auto h = parseFunction(randomFunctionSpec(rng));
    const auto b = bounds(h);
    const auto feasible = feasibleDepths(h, b.lower, b.upper);
    ASSERT_FALSE(feasible.empty());
    EXPECT_EQ(feasible.front(), b.lower);
    EXPECT_EQ(feasible.back(), qdepth(h).qdepth);
  }
}

TEST(FaultHook, SignFlipBreaksThePolynomialRing) {
  fault::setBetaSignFlip(true);
  const long flipped = qdepth(polynomialRing(3)).qdepth;
  fault::setBetaSignFlip(false);
  EXPECT_LT(flipped, 3);
  EXPECT_EQ(qdepth(polynomialRing(3)).qdepth, 3);
}

}  // namespace
}  // namespace hdepth
