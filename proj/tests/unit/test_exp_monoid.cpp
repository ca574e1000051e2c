#include <gtest/gtest.h>

#include "semilab/exp_monoid.hpp"
#include "support.hpp"

namespace semilab {
namespace {

Exp e1(long n, long d = 1) { return Exp{Rat(n, d)}; }
Exp e2(long a, long b) { return Exp{Rat(a), Rat(b)}; }

TEST(MonoidContains, RecipPrimes) {
  auto m = MonoidSpec::recip_primes({2, 3});
  EXPECT_TRUE(monoid_contains(m, e1(5, 6)));
  EXPECT_FALSE(monoid_contains(m, e1(1, 6)));
  EXPECT_TRUE(monoid_contains(m, e1(0)));
  EXPECT_TRUE(monoid_contains(m, e1(7, 6)));  // 1/2 + 1/3 + 1/3
  EXPECT_FALSE(monoid_contains(m, e1(1, 5)));
}

TEST(MonoidContains, FinRank) {
  auto m = MonoidSpec::fin_rank_n(3);
  EXPECT_TRUE(monoid_contains(m, e2(2, 4)));
  EXPECT_TRUE(monoid_contains(m, e2(0, 0)));
  EXPECT_FALSE(monoid_contains(m, e2(1, 4)));
  EXPECT_FALSE(monoid_contains(m, e2(0, 1)));
  EXPECT_FALSE(monoid_contains(m, Exp{Rat(1), Rat(3, 2)}));
}

TEST(MonoidContains, DimensionMismatch) {
  EXPECT_ERRC(monoid_contains(MonoidSpec::fin_rank_n(3), e1(1)), Errc::DimensionMismatch);
}

TEST(MonoidSpec, ParseAndRender) {
  EXPECT_EQ(MonoidSpec::parse("recip-primes:2,3,5").to_string(), "recip-primes:2,3,5");
  EXPECT_EQ(MonoidSpec::parse("finrank:3").generators().size(), 3U);
  EXPECT_ERRC(MonoidSpec::parse("recip-primes:4"), Errc::InvalidArgument);
  EXPECT_ERRC(MonoidSpec::parse("bogus"), Errc::SyntaxError);
}

TEST(MonoidAtoms, Examples) {
  EXPECT_EQ(monoid_atoms(MonoidSpec::recip_primes({2, 3}), Bounds{}), (std::vector<Exp>{e1(1, 3), e1(1, 2)}));
  EXPECT_EQ(monoid_atoms(MonoidSpec::fin_rank_n(3), Bounds{}), (std::vector<Exp>{e2(1, 1), e2(1, 2), e2(1, 3)}));
  EXPECT_EQ(monoid_atoms(MonoidSpec::recip_primes({2}), Bounds{}), (std::vector<Exp>{e1(1, 2)}));
}

TEST(MonoidFactorizations, FinRankTwoFactorizations) {
  auto fs = monoid_factorizations(MonoidSpec::fin_rank_n(3), e2(2, 4), Bounds{});
  ASSERT_EQ(fs.items.size(), 2U);
  EXPECT_EQ(fs.items[0].parts, (std::vector<Exp>{e2(1, 1), e2(1, 3)}));
  EXPECT_EQ(fs.items[1].parts, (std::vector<Exp>{e2(1, 2), e2(1, 2)}));
  EXPECT_TRUE(fs.complete);
  EXPECT_TRUE(fs.truncated);
}

TEST(MonoidFactorizations, RecipPrimesOne) {
  auto fs = monoid_factorizations(MonoidSpec::recip_primes({2, 3}), e1(1), Bounds{});
  ASSERT_EQ(fs.items.size(), 2U);
  auto three = monoid_factorizations(MonoidSpec::recip_primes({2, 3, 5}), e1(1), Bounds{});
  std::vector<std::size_t> lengths;
  for (const auto& f : three.items) lengths.push_back(f.parts.size());
  std::sort(lengths.begin(), lengths.end());
  EXPECT_EQ(lengths, (std::vector<std::size_t>{2, 3, 5}));
}

TEST(MonoidLengthSet, Examples) {
  EXPECT_EQ(monoid_length_set(MonoidSpec::fin_rank_n(3), e2(2, 4), Bounds{}).lengths, (std::set<std::size_t>{2}));
  EXPECT_EQ(monoid_length_set(MonoidSpec::recip_primes({2, 3}), e1(1), Bounds{}).lengths,
            (std::set<std::size_t>{2, 3}));
  EXPECT_EQ(monoid_length_set(MonoidSpec::recip_primes({2, 3, 5}), e1(1), Bounds{}).lengths,
            (std::set<std::size_t>{2, 3, 5}));
}

TEST(MonoidLengthSet, BoundedByMaxLength) {
  Bounds b;
  b.max_length = 3;
  auto ls = monoid_length_set(MonoidSpec::recip_primes({2, 3, 5}), e1(1), b);
  EXPECT_EQ(ls.lengths, (std::set<std::size_t>{2, 3}));
  EXPECT_FALSE(ls.complete);
}

TEST(MonoidFactorizations, NonMemberRejected) {
  EXPECT_ERRC(monoid_factorizations(MonoidSpec::recip_primes({2, 3}), e1(1, 6), Bounds{}), Errc::NotMember);
}

}  // namespace
}  // namespace semilab
