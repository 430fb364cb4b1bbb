#include <gtest/gtest.h>

#include "catca/checks.hpp"
#include "catca/sampling.hpp"
#include "catca/suites.hpp"

using namespace catca;

namespace {

GroupElem v(std::int64_t x) { return GroupElem::vec({x}); }

}  // namespace

TEST(Checks, EquivarianceMorphismModeFindsWitness) {
  Group Z2 = Group::cyclic(2);
  auto A = FinSet::object(2);
  auto P = power<FinSet>(A, 2);
  // Writes the first cell's value into both cells: not equivariant.
  auto f = FinSet::make(P, P, {0, 0, 3, 3});
  auto rep = check_equivariance<FinSet>(f, Z2, A, A);
  EXPECT_FALSE(rep.pass);
  ASSERT_TRUE(rep.counterexample);
  EXPECT_EQ(rep.counterexample->at("g"), 1);
  auto j = rep.to_json();
  EXPECT_EQ(j.at("verdict"), "fail");
  EXPECT_EQ(j.at("check"), "equivariance");
  // The counterexample is enough to rebuild the failing morphism.
  auto back = Codec<FinSet>::morphism(j.at("counterexample").at("morphism"), P, P);
  EXPECT_EQ(back, f);
}

TEST(Checks, EquivarianceBallMode) {
  Group Z = Group::z_power(1);
  auto A = FinSet::object(2);
  auto tau = make_ca<FinSet>(Z, A, A, FiniteSubset(Z, {v(-1), v(0), v(1)}),
                             FinSet::make(power<FinSet>(A, 3), A, {0, 1, 1, 1, 0, 1, 1, 0}));
  Rng rng(2);
  std::vector<Configuration<FinSet>> cs;
  for (int k = 0; k < 3; ++k) cs.push_back(random_sparse<FinSet>(Z, A, ball(Z, 4), rng));
  auto rep = check_equivariance(tau, cs, 3);
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.cases, 3u * 7u);
}

TEST(Checks, PhiEquivarianceOfPullbacks) {
  Group G = Group::cyclic(6), H = Group::cyclic(2);
  auto phi = GroupHom::table(H, G, {GroupElem(0), GroupElem(3)});
  auto rep = check_phi_equivariance(pullback_gca<FinVect>(phi, FinVect::space(3, 1)));
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.cases, 2u);
}

TEST(Checks, UniformityOfAnAutomaton) {
  Group Z5 = Group::cyclic(5);
  auto A = FinSet::object(2);
  auto tau = make_ca<FinSet>(Z5, A, A, FiniteSubset(Z5, {GroupElem(1), GroupElem(3)}),
                             FinSet::make(power<FinSet>(A, 2), A, {0, 1, 1, 0}));
  auto rep = check_uniform<FinSet>(realize(tau), Z5, A, A);
  EXPECT_TRUE(rep.pass);
  EXPECT_TRUE(rep.details.at("translates") == true);
  ASSERT_EQ(rep.details.at("cells").size(), 5u);
  // Cell 2 reads 1+2 and 3+2.
  EXPECT_EQ(rep.details.at("cells")[2].at("neighborhood"), (json{0, 3}));
}

TEST(Checks, UniformityFlagsNonEquivariantMorphisms) {
  Group Z2 = Group::cyclic(2);
  auto A = FinSet::object(2);
  auto P = power<FinSet>(A, 2);
  auto rep = check_uniform<FinSet>(FinSet::make(P, P, {0, 0, 3, 3}), Z2, A, A);
  EXPECT_TRUE(rep.details.at("translates") == false);
}

TEST(Checks, ExtractionRoundTrip) {
  Group Z4 = Group::cyclic(4);
  auto A = FinSet::object(2);
  auto tau = make_ca<FinSet>(Z4, A, A, FiniteSubset(Z4, {GroupElem(0), GroupElem(1), GroupElem(2)}),
                             FinSet::make(power<FinSet>(A, 3), A, {0, 1, 0, 1, 1, 0, 1, 0}));  // reads cells 0 and 2
  auto res = chl_extract<FinSet>(realize(tau), Z4, A, A);
  ASSERT_TRUE(res);
  EXPECT_EQ(res.automaton->neighborhood(), FiniteSubset(Z4, {GroupElem(0), GroupElem(2)}));
  EXPECT_EQ(realize(*res.automaton), realize(tau));
}

TEST(Checks, ExtractionRejectsNonEquivariantMorphisms) {
  Group Z3 = Group::cyclic(3);
  auto A = FinVect::space(2, 1);
  auto P = power<FinVect>(A, 3);
  auto f = FinVect::make(P, P, {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  auto res = chl_extract<FinVect>(f, Z3, A, A);
  EXPECT_FALSE(res);
  ASSERT_TRUE(res.counterexample);
  EXPECT_NE(res.counterexample->id(), 0u);
}

TEST(Checks, ExtractionOnRelations) {
  Group Z3 = Group::cyclic(3);
  auto A = Rel::object(2);
  auto mu = Rel::make(power<Rel>(A, 2), A, {{0, 1}, {3, 0}, {3, 1}});
  auto tau = make_ca<Rel>(Z3, A, A, FiniteSubset(Z3, {GroupElem(1), GroupElem(2)}), mu);
  auto res = chl_extract<Rel>(realize(tau), Z3, A, A);
  ASSERT_TRUE(res);
  EXPECT_EQ(res.automaton->neighborhood(), tau.neighborhood());
  EXPECT_EQ(res.automaton->local_map(), mu);
}

TEST(Checks, ReportSchema) {
  CheckReport rep;
  rep.check = "x";
  rep.seed = 9;
  rep.cases = 3;
  auto j = rep.to_json();
  EXPECT_EQ(j.at("verdict"), "pass");
  EXPECT_FALSE(j.contains("counterexample"));
  EXPECT_FALSE(j.contains("details"));
  rep.fail({{"a", 1}});
  rep.fail({{"a", 2}});
  EXPECT_EQ(rep.counterexample->at("a"), 1);  // the first witness is kept
}

TEST(Suites, RegistryIsComplete) {
  auto names = suite_names();
  for (const char* n : {"category-laws", "product-universal", "restriction-transitivity", "translation-restriction",
                        "pullback-functor", "shift-action", "pushforward-functor", "pullback-pushforward-square",
                        "defining-equation", "equivariance-determines", "composition", "chl-roundtrip", "uniformity",
                        "product", "phi-equivariance", "generalized-composition", "pullback-automaton",
                        "factorization", "weak-product"})
    EXPECT_TRUE(is_suite(n)) << n;
  EXPECT_FALSE(is_suite("no-such-suite"));
  EXPECT_EQ(names.size(), 19u);
}

TEST(Suites, QuickSuitesPassOnEveryInstance) {
  SuiteParams base;
  base.cases = 5;
  for (const auto& p : all_instances(base))
    for (const char* n : {"category-laws", "restriction-transitivity", "shift-action", "defining-equation",
                          "composition", "phi-equivariance", "factorization"}) {
      auto rep = run_suite(n, p);
      EXPECT_TRUE(rep.pass) << n << " on " << p.instance << ": " << rep.to_json().dump();
    }
}

TEST(Suites, SameSeedSameReport) {
  SuiteParams p;
  p.instance = "finvect";
  p.p = 3;
  p.seed = 42;
  p.cases = 8;
  EXPECT_EQ(run_suite("chl-roundtrip", p).to_json().dump(), run_suite("chl-roundtrip", p).to_json().dump());
}

TEST(Suites, UnknownInstanceIsAnError) {
  SuiteParams p;
  p.instance = "groupoids";
  EXPECT_THROW(run_suite("category-laws", p), Error);
}
