#include <gtest/gtest.h>

#include <algorithm>

#include "semilab/corpus.hpp"
#include "semilab/factor_lab.hpp"
#include "semilab/parse.hpp"
#include "semilab/registry.hpp"
#include "support.hpp"

namespace semilab {
namespace {

Poly P(std::string_view t, const SemidomainInstance& s) { return parse_element(t, s); }

std::vector<std::string> strings(const std::vector<Poly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Divisors, SignC0C1OfX4) {
  auto s = SemidomainInstance::sign_c0c1();
  auto ds = divisors_in_S(s, P("x^4", s), Bounds{});
  EXPECT_TRUE(ds.complete);
  // -x^3 and -x^4 are members, but their cofactors -x and -1 are not.
  EXPECT_EQ(strings(ds.divisors), (std::vector<std::string>{"-x^2", "1", "x", "x^2", "x^3", "x^4"}));
}

TEST(Divisors, NatqContainsEveryInteger) {
  auto s = SemidomainInstance::natq();
  Bounds b;
  b.max_height = 12;
  auto ds = divisors_in_S(s, P("x", s), b);
  EXPECT_FALSE(ds.complete);
  for (int n = 1; n <= 12; ++n) {
    EXPECT_NE(std::find(ds.divisors.begin(), ds.divisors.end(), s.constant(Rat(n))), ds.divisors.end()) << n;
  }
}

TEST(Divisors, GaussianFamilyOfX2) {
  auto s = SemidomainInstance::posq_gauss();
  Bounds b;
  b.max_height = 2;
  auto ds = divisors_in_S(s, P("x^2", s), b);
  EXPECT_FALSE(ds.complete);
  Poly d = P("gauss(1,1) x", s);
  auto hit = std::find_if(ds.divisors.begin(), ds.divisors.end(),
                          [&](const Poly& e) { return associates(s, d, e).is_proved(); });
  EXPECT_NE(hit, ds.divisors.end());
}

TEST(Divisors, Errors) {
  auto s = SemidomainInstance::sign_c0c1();
  EXPECT_ERRC(divisors_in_S(s, s.zero(), Bounds{}), Errc::ZeroElement);
  EXPECT_ERRC(divisors_in_S(s, P("-x", s.ambient()), Bounds{}), Errc::NotMember);
  auto m = SemidomainInstance::posmonalg({2, 3});
  EXPECT_ERRC(divisors_in_S(m, P("1 + x", m), Bounds{}), Errc::UnsupportedElement);
}

TEST(Atoms, Examples) {
  auto i1 = SemidomainInstance::sign_c0c1();
  EXPECT_TRUE(is_atom_in_S(i1, P("-x^2", i1), Bounds{}).is_proved());
  auto v = is_atom_in_S(i1, P("-x^3", i1), Bounds{});
  ASSERT_TRUE(v.is_refuted());
  ASSERT_EQ(v.witness.size(), 2U);
  EXPECT_EQ(v.witness[0] * v.witness[1], P("-x^3", i1));
  EXPECT_EQ(strings(v.witness), (std::vector<std::string>{"-x^2", "x"}));
  auto i3 = SemidomainInstance::natz();
  EXPECT_TRUE(is_atom_in_S(i3, P("-x", i3), Bounds{}).is_proved());
  EXPECT_ERRC(is_atom_in_S(i3, P("1", i3), Bounds{}), Errc::IsUnit);
}

TEST(Atoms, FastPathMatchesScan) {
  auto s = SemidomainInstance::sign_c0c1();
  Bounds b;
  b.max_candidates = 400;
  for (const auto& g : member_corpus(s, b)) {
    if (g.is_zero() || is_unit(s, g).is_proved()) continue;
    auto fast = is_atom_in_S(s, g, b);
    auto slow = is_atom_in_S(s, g, b, AtomOptions{false});
    EXPECT_EQ(fast.kind, slow.kind) << g;
  }
}

TEST(Primes, Examples) {
  auto i1 = SemidomainInstance::sign_c0c1();
  auto v = is_prime_in_S(i1, P("x", i1), Bounds{});
  ASSERT_TRUE(v.is_refuted());
  EXPECT_EQ(strings(v.witness), (std::vector<std::string>{"-x^2", "-x^2"}));
  auto i0 = SemidomainInstance::nat();
  EXPECT_TRUE(is_prime_in_S(i0, P("2", i0), Bounds{}).is_proved());
  EXPECT_TRUE(is_prime_in_S(i0, P("4", i0), Bounds{}).is_refuted());
  // x | (-x)(-x) = x^2 while -x / x = -1 is outside S.
  auto i3 = SemidomainInstance::natz();
  auto w = is_prime_in_S(i3, P("x", i3), Bounds{});
  ASSERT_TRUE(w.is_refuted());
  EXPECT_EQ(strings(w.witness), (std::vector<std::string>{"-x", "-x"}));
}

TEST(Factorizations, Examples) {
  auto i1 = SemidomainInstance::sign_c0c1();
  auto fs = factorizations_in_S(i1, P("x^4", i1), Bounds{});
  ASSERT_EQ(fs.items.size(), 2U);
  EXPECT_TRUE(fs.complete);
  EXPECT_EQ(strings(fs.items[0].factors), (std::vector<std::string>{"-x^2", "-x^2"}));
  EXPECT_EQ(fs.items[1].factors.size(), 4U);

  auto i3 = SemidomainInstance::natz();
  auto gs = factorizations_in_S(i3, P("x^2", i3), Bounds{});
  ASSERT_EQ(gs.items.size(), 2U);
  for (const auto& f : gs.items) EXPECT_EQ(f.factors.size(), 2U);

  auto i2 = SemidomainInstance::natq();
  Bounds b;
  b.max_length = 6;
  auto hs = factorizations_in_S(i2, P("x", i2), b);
  EXPECT_TRUE(hs.items.empty());
  EXPECT_FALSE(hs.complete);
}

TEST(Factorizations, UnitHasEmptyFactorization) {
  auto i1 = SemidomainInstance::sign_c0c1();
  EXPECT_ERRC(factorizations_in_S(i1, i1.one(), Bounds{}), Errc::IsUnit);
}

TEST(LengthSets, Examples) {
  auto i1 = SemidomainInstance::sign_c0c1();
  auto ls = length_set(i1, P("x^4", i1), Bounds{});
  EXPECT_EQ(ls.lengths, (std::set<std::size_t>{2, 4}));
  EXPECT_TRUE(ls.complete);
  auto i5 = SemidomainInstance::posmonalg({2, 3, 5});
  EXPECT_EQ(length_set(i5, P("x", i5), Bounds{}).lengths, (std::set<std::size_t>{2, 3, 5}));
  auto i6 = *make_instance("hfs-loc").poly;
  EXPECT_EQ(length_set(i6, P("x^(2,4)", i6), Bounds{}).lengths, (std::set<std::size_t>{2}));
}

TEST(Associates, Examples) {
  auto i3 = SemidomainInstance::natz();
  EXPECT_TRUE(associates(i3, P("x", i3), P("-x", i3)).is_refuted());
  auto i4 = SemidomainInstance::posq_gauss();
  auto v = associates(i4, P("gauss(1,1) x", i4), P("gauss(2,2) x", i4));
  ASSERT_TRUE(v.is_proved());
  EXPECT_EQ(v.witness.front(), i4.constant(Rat(1, 2)));
  EXPECT_TRUE(associates(i4, P("gauss(1,1) x", i4), P("gauss(1,-1) x", i4)).is_refuted());
  auto i6 = *make_instance("hfs-loc").poly;
  EXPECT_TRUE(associates(i6, P("x^(1,1)", i6), P("x^(1,2)", i6)).is_refuted());
  EXPECT_TRUE(associates(i6, P("x^(1,1)", i6), P("3 x^(1,1)", i6)).is_proved());
}

TEST(Furstenberg, Examples) {
  auto i2 = SemidomainInstance::natq();
  auto v = furstenberg_witness(i2, P("x", i2), Bounds{});
  ASSERT_TRUE(v.is_proved());
  EXPECT_EQ(v.witness.front(), i2.constant(Rat(2)));
  auto w = furstenberg_witness(i2, P("x/3 + 5", i2), Bounds{});
  ASSERT_TRUE(w.is_proved());
  EXPECT_TRUE(divides_in_S(i2, w.witness.front(), P("x/3 + 5", i2)));
  auto i1 = SemidomainInstance::sign_c0c1();
  EXPECT_EQ(furstenberg_witness(i1, P("x^4", i1), Bounds{}).witness.front(), P("x", i1));
}

TEST(Chains, Examples) {
  auto i2 = SemidomainInstance::natq();
  auto r = accp_chain_probe(i2, ChainStrategy::Halving, P("x", i2), Bounds{});
  EXPECT_TRUE(r.budget_reached);
  EXPECT_EQ(r.steps, 20U);
  EXPECT_EQ(r.chain.back(), P("x", i2).scaled(Coeff(Rat(1, 1 << 20))));
  auto i0 = SemidomainInstance::nat();
  auto s = accp_chain_probe(i0, ChainStrategy::ExhaustiveDescent, P("12", i0), Bounds{});
  EXPECT_TRUE(s.stabilized);
  EXPECT_LE(s.steps, 3U);
  auto i5 = SemidomainInstance::posmonalg({2, 3});
  auto t = accp_chain_probe(i5, ChainStrategy::ExhaustiveDescent, P("x", i5), Bounds{});
  EXPECT_TRUE(t.stabilized);
  EXPECT_FALSE(t.budget_reached);
}

TEST(LengthFunctions, Examples) {
  auto i4 = SemidomainInstance::posq_gauss();
  Bounds b;
  b.max_height = 4;
  EXPECT_TRUE(verify_length_function(i4, make_length_fn(i4, "degree"), member_corpus(i4, b)).pass);
  auto i0 = SemidomainInstance::nat();
  auto r0 = verify_length_function(i0, make_length_fn(i0, "degree"), member_corpus(i0, b));
  EXPECT_FALSE(r0.pass);
  EXPECT_EQ(r0.failed_axiom, "unit");
  ASSERT_FALSE(r0.witnesses.empty());
  EXPECT_EQ(r0.witnesses.front(), P("2", i0));
  auto i3 = SemidomainInstance::natz();
  auto r3 = verify_length_function(i3, make_length_fn(i3, "degree"), member_corpus(i3, b));
  EXPECT_FALSE(r3.pass);
  EXPECT_EQ(r3.witnesses.front(), P("2", i3));
}

TEST(LengthFunctions, EllSquared) {
  auto i4 = SemidomainInstance::posq_gauss();
  auto l2 = ell_squared(i4, make_length_fn(i4, "degree"));
  auto g = i4.ambient();
  EXPECT_EQ(l2.eval(P("-x^3 + 1", g)), std::optional<std::size_t>(6));
  Bounds b;
  b.max_height = 3;
  EXPECT_TRUE(verify_length_function(g, l2, ambient_corpus(i4, b)).pass);
  EXPECT_ERRC(make_length_fn(i4, "bogus"), Errc::InvalidArgument);
}

}  // namespace
}  // namespace semilab
