#include <gtest/gtest.h>

#include "oracles.hpp"
#include "weaklink/big.hpp"
#include "weaklink/error.hpp"

namespace weaklink {
namespace {

TEST(BigCount, RejectsNegative) { EXPECT_THROW(BigCount(BigInt(-1)), InvalidSpec); }

TEST(BigCount, ParseAcceptsOnlyUnsignedDigits) {
  EXPECT_EQ(BigCount::parse("1000000000000").to_string(), "1000000000000");
  EXPECT_THROW(BigCount::parse(""), InvalidSpec);
  EXPECT_THROW(BigCount::parse("-5"), InvalidSpec);
  EXPECT_THROW(BigCount::parse("1e12"), InvalidSpec);
  EXPECT_THROW(BigCount::parse("12 "), InvalidSpec);
}

TEST(BigCount, PowMatchesSchoolbook) {
  EXPECT_EQ(BigCount::pow(62, 63).to_string(), oracle_ref::pow_decimal(62, 63));
  EXPECT_EQ(BigCount::pow(7, 0).to_string(), "1");
  EXPECT_EQ(BigCount::pow(0, 3).to_string(), "0");
}

TEST(BigCount, NoSaturationAtLargeMagnitudes) {
  const BigCount huge = BigCount::pow(2, 4096);
  EXPECT_EQ(huge.to_string().size(), 1234u);
  EXPECT_LT(BigCount::pow(2, 4095), huge);
}

TEST(ExactSeconds, ReducedToLowestTerms) {
  const ExactSeconds d(BigInt(10), BigInt(4));
  EXPECT_EQ(d.numerator(), 5);
  EXPECT_EQ(d.denominator(), 2);
}

TEST(ExactSeconds, RejectsBadDenominatorOrSign) {
  EXPECT_THROW(ExactSeconds(BigInt(1), BigInt(0)), InvalidSpec);
  EXPECT_THROW(ExactSeconds(BigInt(1), BigInt(-3)), InvalidSpec);
  EXPECT_THROW(ExactSeconds(BigInt(-1), BigInt(3)), InvalidSpec);
}

TEST(ParseDecimal, ExactRational) {
  EXPECT_EQ(parse_decimal("89.78"), BigRational(8978, 100));
  EXPECT_EQ(parse_decimal("100"), BigRational(100));
  EXPECT_EQ(parse_decimal(".5"), BigRational(1, 2));
  EXPECT_EQ(parse_decimal("0"), BigRational(0));
  for (const char* bad : {"", ".", "1.2.3", "-1", "1e3", "abc"}) {
    EXPECT_THROW(parse_decimal(bad), InvalidSpec) << bad;
  }
}

TEST(ToExactString, TerminatingAndRepeating) {
  EXPECT_EQ(to_exact_string(BigRational(8978, 100)), "89.78");
  EXPECT_EQ(to_exact_string(BigRational(1, 8)), "0.125");
  EXPECT_EQ(to_exact_string(BigRational(1, 3)), "1/3");
  EXPECT_EQ(to_exact_string(BigRational(42)), "42");
}

}  // namespace
}  // namespace weaklink
