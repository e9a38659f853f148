#include <gtest/gtest.h>

#include "packdens/rational.hpp"

namespace packdens {
namespace {

TEST(Rational, StoresLowestTerms) {
  const Rational r(2, 8);
  EXPECT_EQ(r.numerator(), 1u);
  EXPECT_EQ(r.denominator(), 4u);
  EXPECT_EQ(Rational(12, 72), Rational(1, 6));
  EXPECT_EQ(Rational(0, 5), Rational(0, 1));
}

TEST(Rational, RejectsZeroDenominator) { EXPECT_THROW(Rational(1, 0), std::invalid_argument); }

TEST(Rational, ComparesExactly) {
  EXPECT_LT(Rational(1, 7), Rational(1, 6));
  EXPECT_GT(Rational(2, 7), Rational(1, 4));
  // Cross-products overflow 64 bits here.
  const std::uint64_t big = (std::uint64_t{1} << 62) + 1;
  EXPECT_LT(Rational(big - 2, big), Rational(big - 1, big));
  EXPECT_LT(Rational(1, big), Rational(1, big - 2));
}

TEST(Rational, TextFormat) {
  EXPECT_EQ(Rational(1, 7).to_string(), "1/7");
  EXPECT_EQ(Rational(4, 4).to_string(), "1");
  EXPECT_EQ(Rational(0, 3).to_string(), "0");
  EXPECT_EQ(Rational::parse("3/88"), Rational(3, 88));
  EXPECT_EQ(Rational::parse("6/8"), Rational(3, 4));
  EXPECT_EQ(Rational::parse("5"), Rational(5, 1));
  EXPECT_THROW(Rational::parse("1/"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("-1/2"), std::invalid_argument);
}

TEST(Rational, ParseInvertsToString) {
  for (std::uint64_t q = 1; q < 40; ++q) {
    for (std::uint64_t p = 0; p <= q; ++p) {
      const Rational r(p, q);
      EXPECT_EQ(Rational::parse(r.to_string()), r);
    }
  }
}

}  // namespace
}  // namespace packdens
