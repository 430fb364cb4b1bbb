#include <gtest/gtest.h>

#include "catca/checks.hpp"
#include "catca/sampling.hpp"

using namespace catca;

namespace {

GroupElem v(std::int64_t x) { return GroupElem::vec({x}); }
GroupElem e(std::size_t id) { return GroupElem(id); }

}  // namespace

TEST(GeneralizedCA, IdentityHomReducesToAutomaton) {
  Group Z4 = Group::cyclic(4);
  auto A = FinSet::object(2);
  Rng rng(7);
  for (int k = 0; k < 10; ++k) {
    auto tau = random_ca<FinSet>(Z4, A, A, 3, rng);
    EXPECT_EQ(realize_gca(as_gca(tau)), realize(tau));
  }
}

TEST(GeneralizedCA, SubsampleIsASelectionMatrix) {
  Group G = Group::cyclic(4), H = Group::cyclic(2);
  auto phi = GroupHom::table(H, G, {e(0), e(2)});
  auto F = FinVect::space(2, 1);
  auto tau = make_gca<FinVect>(G, H, phi, F, F, FiniteSubset::identity_set(G), power_projection<FinVect>(F, 1, 0));
  EXPECT_EQ(realize_gca(tau), FinVect::make(FinVect::space(2, 4), FinVect::space(2, 2), {{1, 0, 0, 0}, {0, 0, 1, 0}}));
  EXPECT_EQ(realize_gca(tau), pullback_morphism<FinVect>(phi, F));
  EXPECT_TRUE(check_phi_equivariance(tau).pass);
}

TEST(GeneralizedCA, RelPullbackMatchesIndexPullback) {
  Group G = Group::cyclic(6), H = Group::cyclic(3);
  auto phi = GroupHom::table(H, G, {e(0), e(2), e(4)});
  auto A = Rel::object(2);
  EXPECT_EQ(realize_gca(pullback_gca<Rel>(phi, A)), pullback_morphism<Rel>(phi, A));
  EXPECT_TRUE(check_phi_equivariance(pullback_gca<Rel>(phi, A)).pass);
}

TEST(GeneralizedCA, TrivialHomBroadcastsOneCell) {
  Group G = Group::cyclic(3), H = Group::cyclic(2);
  auto A = FinSet::object(3);
  auto tau = make_gca<FinSet>(G, H, GroupHom::trivial(H, G), A, A, FiniteSubset(G, {e(1)}),
                              power_projection<FinSet>(A, 1, 0));
  for (const auto& c : all_configurations<FinSet>(G, A)) {
    auto out = apply_gca(tau, c);
    EXPECT_EQ(out.at(e(0)), c.at(e(1)));
    EXPECT_EQ(out.at(e(1)), c.at(e(1)));
  }
  EXPECT_TRUE(check_phi_equivariance(tau).pass);
}

TEST(GeneralizedCA, CompositionMatchesMorphismComposition) {
  Group K = Group::cyclic(6), G = Group::cyclic(3), H = Group::cyclic(2);
  auto phi = GroupHom::table(G, K, {e(0), e(2), e(4)});
  auto A = FinSet::object(2);
  Rng rng(11);
  for (int k = 0; k < 10; ++k) {
    FiniteSubset S = random_subset(FiniteSubset::whole(K), 3, rng);
    auto tau = make_gca<FinSet>(K, G, phi, A, A, S, random_morphism<FinSet>(power<FinSet>(A, S.size()), A, rng));
    FiniteSubset T = random_subset(FiniteSubset::whole(G), 2, rng);
    auto sigma = make_gca<FinSet>(G, H, GroupHom::trivial(H, G), A, A, T,
                                  random_morphism<FinSet>(power<FinSet>(A, T.size()), A, rng));
    auto both = compose_gca(sigma, tau);
    EXPECT_EQ(both.hom(), GroupHom::trivial(H, K));
    EXPECT_EQ(realize_gca(both), FinSet::compose(realize_gca(sigma), realize_gca(tau)));
  }
}

TEST(GeneralizedCA, PullbackAlongIntegersIsPeriodic) {
  Group Z = Group::z_power(1), Z2 = Group::cyclic(2);
  auto phi = GroupHom::generator_images(Z, Z2, {e(1)});
  auto A = FinSet::object(2);
  auto c = Configuration<FinSet>::dense(Z2, A, {0, 1});
  auto out = apply_gca(pullback_gca<FinSet>(phi, A), c);
  for (std::int64_t x = -5; x <= 5; ++x) EXPECT_EQ(out.at(v(x)), static_cast<std::size_t>(x & 1));
}

TEST(GeneralizedCA, FactorizationThroughPullback) {
  Group G = Group::cyclic(4), H = Group::cyclic(2);
  auto phi = GroupHom::table(H, G, {e(0), e(2)});
  auto A = FinSet::object(2);
  Rng rng(5);
  for (int k = 0; k < 10; ++k) {
    FiniteSubset S = random_subset(FiniteSubset::whole(G), 3, rng);
    auto tau = make_gca<FinSet>(G, H, phi, A, A, S, random_morphism<FinSet>(power<FinSet>(A, S.size()), A, rng));
    auto fac = factorize(tau);
    EXPECT_EQ(fac.hom, phi);
    EXPECT_EQ(realize_gca(tau), FinSet::compose(pullback_morphism<FinSet>(phi, A), realize(fac.automaton)));
  }
}

TEST(GeneralizedCA, WeakProductMediatorSatisfiesBothEquations) {
  Group G = Group::cyclic(2), H = Group::cyclic(3), K = Group::cyclic(6);
  auto phi = GroupHom::table(G, K, {e(0), e(3)});
  auto psi = GroupHom::table(H, K, {e(0), e(2), e(4)});
  auto A = FinSet::object(2), B = FinSet::object(3), Csrc = FinSet::object(2);
  auto wp = weak_product<FinSet>(A, B, G, H);
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    FiniteSubset S = random_subset(FiniteSubset::whole(K), 3, rng), T = random_subset(FiniteSubset::whole(K), 3, rng);
    auto alpha = make_gca<FinSet>(K, G, phi, Csrc, A, S, random_morphism<FinSet>(power<FinSet>(Csrc, S.size()), A, rng));
    auto beta = make_gca<FinSet>(K, H, psi, Csrc, B, T, random_morphism<FinSet>(power<FinSet>(Csrc, T.size()), B, rng));
    auto m = weak_product_mediator(alpha, beta);
    EXPECT_EQ(m.target_universe(), wp.universe);
    EXPECT_EQ(realize_gca(compose_gca(wp.first, m)), realize_gca(alpha));
    EXPECT_EQ(realize_gca(compose_gca(wp.second, m)), realize_gca(beta));
    // Pointwise on a few configurations as well.
    for (int j = 0; j < 3; ++j) {
      auto c = random_dense<FinSet>(K, Csrc, rng);
      auto d = apply_gca(m, c);
      auto l = apply_gca(wp.first, d), r = apply_gca(wp.second, d);
      for (const auto& g : G.elements()) EXPECT_EQ(l.at(g), apply_gca(alpha, c).at(g));
      for (const auto& h : H.elements()) EXPECT_EQ(r.at(h), apply_gca(beta, c).at(h));
    }
  }
}

TEST(GeneralizedCA, RejectsMismatchedHom) {
  Group G = Group::cyclic(4), H = Group::cyclic(2);
  auto A = FinSet::object(2);
  auto wrong = GroupHom::table(H, H, {e(0), e(1)});
  EXPECT_THROW(make_gca<FinSet>(G, H, wrong, A, A, FiniteSubset::identity_set(G), power_projection<FinSet>(A, 1, 0)),
               TypeError);
  auto phi = GroupHom::table(H, G, {e(0), e(2)});
  EXPECT_THROW(make_gca<FinSet>(G, H, phi, A, A, FiniteSubset::identity_set(H), power_projection<FinSet>(A, 1, 0)),
               TypeError);
}
