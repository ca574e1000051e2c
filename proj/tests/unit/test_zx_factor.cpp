#include <gtest/gtest.h>

#include <algorithm>

#include "semilab/parse.hpp"
#include "semilab/zx_factor.hpp"
#include "support.hpp"

namespace semilab {
namespace {

Poly Z(std::string_view t) { return parse_poly(t, Ring::Int, 1); }

std::vector<std::string> strings(std::vector<Poly> ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

TEST(ContentPrimitive, Examples) {
  auto [c1, p1] = content_primitive(Z("6x^2 + 4x"));
  EXPECT_EQ(c1, Int(2));
  EXPECT_EQ(p1, Z("3x^2 + 2x"));
  auto [c2, p2] = content_primitive(Z("-x^2"));
  EXPECT_EQ(c2, Int(1));
  EXPECT_EQ(p2, Z("-x^2"));
  auto [c3, p3] = content_primitive(Z("5"));
  EXPECT_EQ(c3, Int(5));
  EXPECT_EQ(p3, Z("1"));
  EXPECT_ERRC(content_primitive(Z("0")), Errc::ZeroPolynomial);
}

TEST(Kronecker, Examples) {
  auto a = kronecker_factor(Z("x^2 - 1"));
  EXPECT_EQ(a.unit, 1);
  EXPECT_EQ(strings(a.factors), (std::vector<std::string>{"x + 1", "x - 1"}));
  auto b = kronecker_factor(Z("-x^2"));
  EXPECT_EQ(b.unit, -1);
  EXPECT_EQ(strings(b.factors), (std::vector<std::string>{"x", "x"}));
  auto c = kronecker_factor(Z("6x"));
  EXPECT_EQ(c.unit, 1);
  EXPECT_EQ(strings(c.factors), (std::vector<std::string>{"2", "3", "x"}));
}

TEST(Kronecker, QuarticWithoutRationalRoots) {
  auto f = kronecker_factor(Z("x^4 + 4"));  // (x^2 + 2x + 2)(x^2 - 2x + 2)
  EXPECT_EQ(strings(f.factors), (std::vector<std::string>{"x^2 + 2x + 2", "x^2 - 2x + 2"}));
  EXPECT_EQ(f.product(), Z("x^4 + 4"));
}

TEST(Kronecker, DegreeCap) {
  EXPECT_ERRC(kronecker_factor(Z("x^9 + 1")), Errc::DegreeCapExceeded);
  EXPECT_NO_THROW(kronecker_factor(Z("x^9 + 1"), 9));
  EXPECT_ERRC(kronecker_factor(Z("0")), Errc::ZeroPolynomial);
}

TEST(DivisorsZx, Examples) {
  EXPECT_EQ(strings(divisors_zx(Z("x^2"))), (std::vector<std::string>{"-1", "-x", "-x^2", "1", "x", "x^2"}));
  EXPECT_EQ(strings(divisors_zx(Z("-x^2"))), strings(divisors_zx(Z("x^2"))));
  EXPECT_EQ(strings(divisors_zx(Z("2"))), (std::vector<std::string>{"-1", "-2", "1", "2"}));
}

TEST(Irreducible, Examples) {
  EXPECT_TRUE(is_irreducible_zx(Z("x")));
  EXPECT_FALSE(is_irreducible_zx(Z("-x^2")));
  EXPECT_TRUE(is_irreducible_zx(Z("x^2 + x + 1")));
  EXPECT_TRUE(is_irreducible_zx(Z("-x")));
  EXPECT_TRUE(is_irreducible_zx(Z("7")));
  EXPECT_FALSE(is_irreducible_zx(Z("1")));
  EXPECT_FALSE(is_irreducible_zx(Z("-1")));
  EXPECT_FALSE(is_irreducible_zx(Z("2x + 2")));
}

TEST(Factorizer, CachesConsistently) {
  Factorizer fz;
  Poly f = Z("x^3 - x");
  const auto& a = fz.factor(f);
  EXPECT_EQ(a.product(), f);
  EXPECT_EQ(&fz.factor(f), &a);
  EXPECT_EQ(fz.divisors(f).size(), 16U);
}

TEST(Factorizer, RejectsNonIntegerPolys) {
  EXPECT_ERRC(kronecker_factor(parse_poly("x/2", Ring::Rat, 1)), Errc::RingMismatch);
}

}  // namespace
}  // namespace semilab
