#include <gtest/gtest.h>

#include "semilab/exact_arith.hpp"
#include "support.hpp"

namespace semilab {
namespace {

TEST(RatNormalize, ReducesByGcd) { EXPECT_EQ(rat_normalize(Int(2), Int(4)), Rat(1, 2)); }

TEST(RatNormalize, MovesSignToNumerator) {
  Rat r = rat_normalize(Int(-3), Int(-6));
  EXPECT_EQ(r.num(), Int(1));
  EXPECT_EQ(r.den(), Int(2));
  Rat s = rat_normalize(Int(3), Int(-6));
  EXPECT_EQ(s.num(), Int(-1));
  EXPECT_EQ(s.den(), Int(2));
}

TEST(RatNormalize, CanonicalZero) {
  Rat z = rat_normalize(Int(0), Int(7));
  EXPECT_EQ(z.num(), Int(0));
  EXPECT_EQ(z.den(), Int(1));
  EXPECT_EQ(z.to_string(), "0");
}

TEST(RatNormalize, ZeroDenominator) { EXPECT_ERRC(rat_normalize(Int(1), Int(0)), Errc::ZeroDenominator); }

TEST(Int, PromotesPastInt64) {
  Int big = Int(std::numeric_limits<std::int64_t>::max()) + Int(1);
  EXPECT_FALSE(big.is_small());
  EXPECT_EQ(big.to_string(), "9223372036854775808");
  EXPECT_EQ(big - Int(1), Int(std::numeric_limits<std::int64_t>::max()));
  EXPECT_TRUE((big - Int(1)).is_small());
  Int sq = big * big;
  EXPECT_EQ(sq.to_string(), "85070591730234615865843651857942052864");
  EXPECT_EQ(divexact(sq, big), big);
}

TEST(Int, ParseRoundTrip) {
  for (const char* t : {"0", "-1", "123456789012345678901234567890", "-98765432109876543210"}) {
    EXPECT_EQ(Int::parse(t).to_string(), t);
  }
  EXPECT_ERRC(Int::parse("12a"), Errc::SyntaxError);
}

TEST(Int, MinInt64) {
  Int m(std::numeric_limits<std::int64_t>::min());
  EXPECT_EQ(m.to_string(), "-9223372036854775808");
  EXPECT_EQ((-m).to_string(), "9223372036854775808");
}

TEST(Int, GcdAndDivisors) {
  EXPECT_EQ(gcd(Int(12), Int(-18)), Int(6));
  EXPECT_EQ(positive_divisors(Int(12)), (std::vector<Int>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(prime_factors(Int(360)), (std::vector<Int>{2, 2, 2, 3, 3, 5}));
  EXPECT_TRUE(divides(Int(7), Int(49)));
  EXPECT_FALSE(divides(Int(7), Int(50)));
}

TEST(CoeffOps, IntExactDivision) {
  EXPECT_EQ(exact_div(Coeff(6), Coeff(3)), Coeff(2));
  EXPECT_ERRC(exact_div(Coeff(6), Coeff(4)), Errc::NonExactDivision);
  EXPECT_ERRC(exact_div(Coeff(6), Coeff(0)), Errc::DivisionByZero);
}

TEST(CoeffOps, GaussNormIdentity) {
  Coeff a = GaussRat(Rat(1), Rat(1));
  Coeff b = GaussRat(Rat(1), Rat(-1));
  EXPECT_EQ(a * b, Coeff(GaussRat(Rat(2))));
}

TEST(CoeffOps, MixedRingsRejected) {
  EXPECT_ERRC(Coeff(1) + Coeff(Rat(1, 2)), Errc::MixedRings);
  EXPECT_EQ(convert(Coeff(3), Ring::Rat), Coeff(Rat(3)));
  EXPECT_FALSE(try_convert(Coeff(Rat(1, 2)), Ring::Int).has_value());
}

TEST(CoeffOps, UnitsAndZero) {
  for (Ring r : {Ring::Int, Ring::Rat, Ring::Gauss}) {
    EXPECT_TRUE(Coeff::zero(r).is_zero());
    EXPECT_TRUE(Coeff::one(r).is_one());
    EXPECT_EQ(-Coeff::zero(r), Coeff::zero(r));
  }
}

TEST(Height, PerRing) {
  EXPECT_EQ(height(Coeff(Rat(3, 7))), Int(7));
  EXPECT_EQ(height(Coeff(-12)), Int(12));
  EXPECT_EQ(height(Coeff(GaussRat(Rat(1, 2), Rat(5)))), Int(5));
}

TEST(GaussRat, Division) {
  GaussRat a(Rat(3), Rat(4));
  GaussRat q = a / GaussRat(Rat(1), Rat(2));
  EXPECT_EQ(q * GaussRat(Rat(1), Rat(2)), a);
  EXPECT_ERRC(a / GaussRat(), Errc::DivisionByZero);
}

}  // namespace
}  // namespace semilab
