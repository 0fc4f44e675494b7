#include "hdepth/errors.hpp"
#include "hdepth/hilbert.hpp"
#include "hdepth/hyp.hpp"
#include "hdepth/qdepth.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

namespace hdepth {
namespace {

// Term-by-term 2F1 sum with plain rationals, no pochhammer helper.
Rational gaussBySeries(long k, long n) {
  Rational sum = 0, term = 1;
  for (long j = 0; j <= k; ++j) {
    sum += term;
    if (j == k) break;
    // ratio of consecutive terms: (a+j)(b+j)/((c+j)(j+1)) * z
    term *= Rational(-k + j) * Rational(n + j);
    term /= Rational(-n + j) * Rational(j + 1);
    term = -term;
  }
  sum.canonicalize();
  return sum;
}

TEST(Gauss2F1, PartOneValues) {
  for (long n = 1; n <= 30; ++n) {
    EXPECT_EQ(gauss2F1(0, n), 1);
    EXPECT_EQ(gauss2F1(1, n), 0);
  }
}

TEST(Gauss2F1, SmallValues) {
  EXPECT_EQ(gauss2F1(2, 2), 2);
  EXPECT_EQ(gauss2F1(2, 3), 1);
  for (long n = 1; n <= 25; ++n) {
    for (long k = 0; k <= n; ++k) ASSERT_EQ(gauss2F1(k, n), gaussBySeries(k, n)) << n << " " << k;
  }
}

TEST(Gauss2F1, Domain) {
  EXPECT_THROW(gauss2F1(3, 2), Error);
  EXPECT_THROW(gauss2F1(-1, 2), Error);
  EXPECT_THROW(gauss2F1(0, 0), Error);
}

TEST(BigE, Values) {
  EXPECT_EQ(bigE(2, 2), 4);
  EXPECT_GT(bigE(3, 2), 0);
  EXPECT_THROW(bigE(3, 1), Error);
  EXPECT_THROW(bigE(3, 4), Error);
}

TEST(BigE, RelatesToGauss) {
  for (long n = 2; n <= 25; ++n) {
    for (long k = 2; k <= n; ++k) {
      Rational rhs = Rational(pochhammer(Integer(n - k + 1), static_cast<unsigned long>(k))) * gauss2F1(k, n);
      if (k % 2) rhs = -rhs;
      ASSERT_EQ(Rational(bigE(n, k)), rhs);
    }
  }
}

TEST(CoeffTable, Entries) {
  for (long n = 1; n <= 6; ++n) {
    const CoeffTable t(n, 8, 8);
    for (long k = 1; k <= 8; ++k) EXPECT_EQ(t.at(k, 0), 1);
    EXPECT_EQ(t.at(1, 1), 0);
    EXPECT_EQ(t.at(2, 1), -1);
  }
  EXPECT_EQ(CoeffTable(2, 2, 2).at(2, 2), 4);
  EXPECT_THROW(CoeffTable(0, 1, 1), Error);
  EXPECT_THROW(CoeffTable(2, 2, 2).at(3, 0), Error);
}

TEST(CoeffTable, RowOneMatchesSeriesExpansion) {
  for (long n = 1; n <= 20; ++n) {
    const auto expected = oracle::rowOneBySeries(n, 30);
    const CoeffTable t(n, 1, 30);
    for (long j = 0; j <= 30; ++j) ASSERT_EQ(t.at(1, j), expected[static_cast<std::size_t>(j)]) << n << " " << j;
  }
}

TEST(CoeffTable, SignPattern) {
  for (long n = 1; n <= 12; ++n) {
    const CoeffTable t(n, 14, 20);
    for (long k = 2; k <= 14; ++k) {
      for (long j = 0; j <= 20; ++j) {
        const Integer v = j % 2 ? Integer(-t.at(k, j)) : t.at(k, j);
        ASSERT_GT(v, 0) << n << " " << k << " " << j;
      }
    }
  }
}

TEST(Reports, SignLemma) {
  EXPECT_TRUE(checkSignLemma(2).passed());
  const auto r = checkSignLemma(10);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.casesRun, 100u);
  EXPECT_EQ(checkSignLemma(1).violations.size(), 0u);
}

TEST(Reports, BetaIdentity) {
  const auto r = checkBetaIdentity(20);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.casesRun, 230u);  // sum_{n=1}^{20} (n+1)
  // n = 1 by hand.
  EXPECT_EQ(betaTable(polynomialRing(1), 1).values, (std::vector<Integer>{1, 0}));
}

TEST(Reports, ELink) {
  const auto r = checkELink(15);
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(r.notes.empty());
  EXPECT_EQ(bigE(3, 2), CoeffTable(3, 3, 3).at(2, 2));
  EXPECT_EQ(bigE(3, 3), -CoeffTable(3, 3, 3).at(3, 3));
}

}  // namespace
}  // namespace hdepth
