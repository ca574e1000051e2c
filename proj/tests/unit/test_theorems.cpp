#include <gtest/gtest.h>

#include "semilab/registry.hpp"
#include "semilab/theorems.hpp"
#include "support.hpp"

namespace semilab {
namespace {

ConsistencyReport run(const char* id, const char* inst) { return verify_theorem(id, make_instance(inst), Bounds{}); }

TEST(Theorems, UnitsOnCatalog) {
  for (const char* inst : {"nat", "sign-c0c1", "natq", "natz", "posq-gauss", "posmonalg(2,3,5)"}) {
    auto rep = run("T3.1", inst);
    EXPECT_EQ(rep.overall, Overall::Consistent) << inst;
    EXPECT_GT(rep.checked, 0U);
  }
  EXPECT_EQ(run("T3.1", "sign-c0c1").outcome, "units in corpus: {1}");
}

TEST(Theorems, UniqueFactorization) {
  auto i3 = run("T5.2", "natz");
  EXPECT_EQ(i3.overall, Overall::Consistent);
  EXPECT_EQ(i3.outcome, "not UFS");
  auto i0 = run("T5.2", "nat");
  EXPECT_EQ(i0.overall, Overall::Consistent);
  EXPECT_EQ(i0.outcome, "UFS");
  auto i1 = run("T5.2", "sign-c0c1");
  EXPECT_EQ(i1.overall, Overall::Consistent);
  EXPECT_EQ(i1.outcome, "not UFS");
}

TEST(Theorems, HalfFactoriality) {
  auto i1 = run("T5.4", "sign-c0c1");
  EXPECT_EQ(i1.overall, Overall::Consistent);
  EXPECT_EQ(i1.outcome, "not HFS");
  auto i3 = run("T5.4", "natz");
  EXPECT_EQ(i3.overall, Overall::Consistent);
  EXPECT_EQ(i3.outcome, "HFS");
}

TEST(Theorems, ChainAndFiniteness) {
  EXPECT_EQ(run("T4.5.1", "natq").outcome, "not ACCP");
  EXPECT_EQ(run("T4.5.1", "natz").outcome, "ACCP");
  EXPECT_EQ(run("T4.5.3", "posq-gauss").outcome, "not FF");
  EXPECT_EQ(run("T4.5.3", "sign-c0c1").outcome, "FF");
  EXPECT_EQ(run("T4.5.2", "posq-gauss").outcome, "BFS");
}

TEST(Theorems, RemainingChecks) {
  for (auto [id, inst] : std::vector<std::pair<const char*, const char*>>{{"T2.5", "nat-dyadic"},
                                                                         {"T2.5", "hfs-loc"},
                                                                         {"T3.3", "sign-c0c1"},
                                                                         {"T3.4", "natq"},
                                                                         {"T4.2", "sign-c0c1"},
                                                                         {"T5.1", "natz"}}) {
    EXPECT_EQ(run(id, inst).overall, Overall::Consistent) << id << " " << inst;
  }
}

TEST(Theorems, Errors) {
  EXPECT_ERRC(run("T9.9", "nat"), Errc::UnknownTheoremId);
  EXPECT_ERRC(run("T3.3", "natq"), Errc::UnsupportedElement);
  EXPECT_EQ(theorem_ids().size(), 11U);
}

}  // namespace
}  // namespace semilab
