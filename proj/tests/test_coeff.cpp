#include <gtest/gtest.h>

#include <random>

#include "phimod/coeff.hpp"
#include "phimod/error.hpp"

using namespace phimod;

TEST(Scalar, ParseAndFormatAreReduced) {
  EXPECT_EQ(format_scalar(parse_scalar("6/4")), "3/2");
  EXPECT_EQ(format_scalar(parse_scalar("-10/5")), "-2");
  EXPECT_EQ(format_scalar(parse_scalar("0/7")), "0");
}

TEST(Scalar, ParseRejectsGarbage) {
  for (const char* bad : {"", "1/0", "1.5", " 1", "1/", "/2", "abc", "--1", "1/2/3", "4/-2"})
    EXPECT_THROW(parse_scalar(bad), Error) << bad;
}

TEST(Valuation, Examples) {
  EXPECT_EQ(vp(Scalar(12), 2), Valuation(2L));
  EXPECT_EQ(vp(make_scalar(1, 9), 3), Valuation(-2L));
  EXPECT_TRUE(vp(Scalar(0), 5).is_infinite());
  EXPECT_EQ(vp(make_scalar(-50, 7), 5), Valuation(2L));
}

TEST(Valuation, RejectsNonPrime) {
  EXPECT_THROW(vp(Scalar(12), 9), Error);
  EXPECT_THROW(vp(Scalar(12), 1), Error);
  EXPECT_FALSE(is_odd_prime(2));
  EXPECT_TRUE(is_odd_prime(3));
  EXPECT_FALSE(is_odd_prime(15));
}

TEST(Valuation, InfinityOrdersAboveEverything) {
  EXPECT_GT(Valuation::infinity(), Valuation(1000L));
  EXPECT_EQ(Valuation::infinity() + Valuation(3L), Valuation::infinity());
  EXPECT_THROW(Valuation::infinity().exponent(), Error);
}

TEST(Valuation, MultiplicativeAndUltrametric) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-500, 500);
  for (int it = 0; it < 500; ++it) {
    Scalar x(d(rng), 1 + std::abs(d(rng)));
    Scalar y(d(rng), 1 + std::abs(d(rng)));
    x.canonicalize();
    y.canonicalize();
    if (is_zero(x) || is_zero(y)) continue;
    for (long p : {3L, 5L, 7L}) {
      EXPECT_EQ(vp(x * y, p), vp(x, p) + vp(y, p));
      EXPECT_EQ(vp(1 / x, p).exponent(), -vp(x, p).exponent());
      const Valuation lo = std::min(vp(x, p), vp(y, p));
      EXPECT_GE(vp(x + y, p), lo);
      if (vp(x, p) != vp(y, p)) EXPECT_EQ(vp(x + y, p), lo);
    }
  }
}
