#include <gtest/gtest.h>

#include "semilab/corpus.hpp"
#include "semilab/localization.hpp"
#include "semilab/parse.hpp"
#include "semilab/registry.hpp"
#include "semilab/semidomain.hpp"
#include "support.hpp"

namespace semilab {
namespace {

class Instances : public ::testing::Test {
 protected:
  SemidomainInstance i0 = SemidomainInstance::nat();
  SemidomainInstance i1 = SemidomainInstance::sign_c0c1();
  SemidomainInstance i2 = SemidomainInstance::natq();
  SemidomainInstance i3 = SemidomainInstance::natz();
  SemidomainInstance i4 = SemidomainInstance::posq_gauss();
  SemidomainInstance i5 = SemidomainInstance::posmonalg({2, 3, 5});

  static Poly P(std::string_view t, const SemidomainInstance& s) { return parse_element(t, s); }
};

TEST_F(Instances, Contains) {
  EXPECT_TRUE(i1.contains(P("-x^2", i1)));
  EXPECT_FALSE(i1.contains(P("-x", i1)));
  EXPECT_TRUE(i1.contains(P("1 - x", i1)));
  EXPECT_TRUE(i2.contains(P("x/2", i2)));
  EXPECT_FALSE(i2.contains(P("-1", i2)));
  EXPECT_TRUE(i3.contains(P("-x + 2", i3)));
  EXPECT_TRUE(i4.contains(P("1/2 + gauss(0,1) x", i4)));
  EXPECT_FALSE(i4.contains(P("-1/2", i4)));
  EXPECT_TRUE(i5.contains(P("-x^(1/2)", i5)));
  EXPECT_FALSE(i5.contains(P("-1 + x", i5)));
}

// Parsing is purely syntactic; membership is decided separately.
TEST_F(Instances, ParsedNonMembers) {
  EXPECT_FALSE(i2.contains(P("1/2", i2)));
  EXPECT_FALSE(i4.contains(P("gauss(0,1)", i4)));
  EXPECT_FALSE(i1.contains(P("-x^3 - x", i1)));
}

TEST_F(Instances, Semisubtractive) {
  EXPECT_TRUE(semisubtractive_check(i1, P("x - 5", i1)));
  EXPECT_TRUE(semisubtractive_check(i0, P("-7", i0)));
  Bounds b;
  for (const auto& g : ambient_corpus(i3, b)) ASSERT_TRUE(semisubtractive_check(i3, g)) << g;
}

TEST_F(Instances, Units) {
  EXPECT_TRUE(is_unit(i1, P("1", i1)).is_proved());
  EXPECT_TRUE(is_unit(i4, P("2/3", i4)).is_proved());
  EXPECT_TRUE(is_unit(i3, P("2", i3)).is_refuted());
  EXPECT_ERRC(is_unit(i3, P("-1", i3.ambient())), Errc::NotMember);
  EXPECT_TRUE(is_unit(i3, i3.zero()).is_refuted());
  EXPECT_EQ(*inverse_in_S(i4, P("2/3", i4)), P("3/2", i4));
  EXPECT_FALSE(inverse_in_S(i1, P("x", i1)).has_value());
}

TEST_F(Instances, AdditiveUnits) {
  EXPECT_TRUE(is_additive_invertible(i3, P("x", i3)));
  EXPECT_FALSE(is_additive_invertible(i3, P("1 + x", i3)));
  EXPECT_TRUE(is_additive_invertible(i1, P("x^2", i1)));
  EXPECT_FALSE(is_additive_invertible(i0, P("3", i0)));
}

TEST_F(Instances, AmbientView) {
  auto g = i1.ambient();
  EXPECT_TRUE(g.is_ambient_view());
  EXPECT_EQ(g.id(), "G(sign-c0c1)");
  EXPECT_TRUE(g.contains(P("-x", g)));
  EXPECT_TRUE(is_unit(g, P("-1", g)).is_proved());
  EXPECT_EQ(g.additive_units(), AdditiveUnits::All);
}

TEST_F(Instances, Catalog) {
  EXPECT_EQ(i0.additive_units(), AdditiveUnits::Zero);
  EXPECT_EQ(i3.additive_units(), AdditiveUnits::Proper);
  EXPECT_EQ(i1.ambient_is_ufd(), std::optional<bool>(true));
  EXPECT_EQ(i2.ambient_is_ufd(), std::optional<bool>(false));
  EXPECT_TRUE(i4.truncated());
  EXPECT_FALSE(i1.truncated());
}

TEST_F(Instances, DividesInS) {
  EXPECT_TRUE(divides_in_S(i1, P("x", i1), P("x^4", i1)));
  EXPECT_FALSE(divides_in_S(i1, P("x", i1), P("-x^2", i1)));
  for (int n = 1; n <= 10; ++n) EXPECT_TRUE(divides_in_S(i2, i2.constant(Rat(n)), P("x", i2)));
  EXPECT_FALSE(divides_in_S(i0, P("2", i0), P("3", i0)));
}

TEST(Corpus, DeterministicAndOrdered) {
  auto s = SemidomainInstance::sign_c0c1();
  Bounds b;
  b.max_candidates = 200;
  auto a = ambient_corpus(s, b);
  EXPECT_EQ(a, ambient_corpus(s, b));
  ASSERT_EQ(a.size(), 200U);
  EXPECT_EQ(a.front().to_string(), "-1");
  for (const auto& g : member_corpus(s, b)) EXPECT_TRUE(s.contains(g));
  EXPECT_EQ(sample_members(s, b, 20, 7), sample_members(s, b, 20, 7));
  EXPECT_NE(sample_members(s, b, 20, 7), sample_members(s, b, 20, 8));
}

TEST(Corpus, Alphabet) {
  auto a = coefficient_alphabet(Ring::Int, 2);
  EXPECT_EQ(a, (std::vector<Coeff>{0, -1, 1, -2, 2}));
  auto q = coefficient_alphabet(Ring::Rat, 2);
  EXPECT_NE(std::find(q.begin(), q.end(), Coeff(Rat(1, 2))), q.end());
}

TEST(Localization, FractionOps) {
  auto loc = LocalizedSemidomain::hfs_loc(3);
  auto a = parse_fraction("x^(1,1)/1", loc);
  auto b = parse_fraction("x^(1,3)/1", loc);
  EXPECT_TRUE(frac_eq(loc.mul(a, b), parse_fraction("x^(2,4)/1", loc)));
  Poly h = parse_element("2 + x^(1,1)", loc.base());
  EXPECT_TRUE(loc.eq(a, loc.make(a.num * h, a.den * h)));
  EXPECT_TRUE(loc.eq(loc.add(a, loc.make(loc.base().zero())), a));
}

TEST(Localization, DyadicNaturals) {
  auto loc = LocalizedSemidomain::nat_dyadic();
  EXPECT_TRUE(loc.contains(parse_fraction("3/2", loc)));
  EXPECT_FALSE(loc.contains(parse_fraction("-3/2", loc)));
  EXPECT_ERRC(parse_fraction("1/3", loc), Errc::InstanceMismatch);
}

TEST(Localization, InvalidMultiplicativeSet) {
  MultiplicativeSet bad{"contains zero", [](const Poly&) { return true; }, {}};
  EXPECT_ERRC(LocalizedSemidomain::localize(SemidomainInstance::nat(), bad), Errc::InvalidMultiplicativeSet);
}

TEST(Localization, MonomialUnitRule) {
  auto loc = LocalizedSemidomain::hfs_loc(3);
  EXPECT_TRUE(i6_monomial_unit(loc, parse_fraction("2/1", loc)).is_proved());
  EXPECT_TRUE(i6_monomial_unit(loc, parse_fraction("x^(1,2)/1", loc)).is_refuted());
  EXPECT_ERRC(i6_monomial_unit(LocalizedSemidomain::nat_dyadic(), Fraction{Poly::constant(1), Poly::constant(1)}),
              Errc::UnsupportedElement);
}

TEST(Registry, AliasesAndErrors) {
  EXPECT_EQ(make_instance("I1").id, "sign-c0c1");
  EXPECT_EQ(make_instance("posmonalg(2,3)").id, "posmonalg(2,3)");
  EXPECT_EQ(make_instance("hfs-loc(4)").id, "hfs-loc(4)");
  EXPECT_TRUE(make_instance("nat-dyadic").loc.has_value());
  EXPECT_FALSE(make_instance("nat-dyadic").poly.has_value());
  EXPECT_ERRC(make_instance("I9"), Errc::UnknownInstance);
  EXPECT_EQ(list_instances().size(), 8U);
}

}  // namespace
}  // namespace semilab
