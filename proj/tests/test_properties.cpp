// Randomized invariants. Generators are seeded mt19937_64 draws, so every
// failure reproduces from the printed seed and case index.

#include <gtest/gtest.h>

#include "catca/checks.hpp"
#include "catca/sampling.hpp"

using namespace catca;

namespace {

constexpr std::uint64_t kSeed = 20261016;

template <class C>
std::vector<typename C::Object> small_alphabets() {
  if constexpr (std::is_same_v<C, FinVect>) return {FinVect::space(2, 1), FinVect::space(3, 1), FinVect::space(2, 2)};
  else return alphabet_catalog<C>(2);
}

template <class C>
struct Case {
  Group G;
  typename C::Object A;
};

template <class C>
Case<C> draw_case(Rng& rng, std::size_t max_order = 4) {
  auto groups = group_catalog(max_order);
  auto alphabets = small_alphabets<C>();
  return Case<C>{draw_from(rng, groups), draw_from(rng, alphabets)};
}

template <class C>
class Property : public ::testing::Test {};

using Instances = ::testing::Types<FinSet, FinVect, FinPoset, Rel>;
TYPED_TEST_SUITE(Property, Instances);

}  // namespace

TYPED_TEST(Property, RealizedAutomataAreEquivariant) {
  using C = TypeParam;
  Rng rng(kSeed);
  for (int k = 0; k < 40; ++k) {
    auto [G, A] = draw_case<C>(rng);
    auto tau = random_ca<C>(G, A, A, 2, rng);
    EXPECT_TRUE(check_equivariance<C>(realize(tau), G, A, A).pass) << "case " << k << " " << to_json(tau).dump();
  }
}

TYPED_TEST(Property, CompositionRealizesComposite) {
  using C = TypeParam;
  Rng rng(kSeed + 1);
  for (int k = 0; k < 30; ++k) {
    auto [G, A] = draw_case<C>(rng);
    auto tau = random_ca<C>(G, A, A, 2, rng), sigma = random_ca<C>(G, A, A, 2, rng);
    EXPECT_EQ(realize(compose_ca(sigma, tau)), C::compose(realize(sigma), realize(tau))) << "case " << k;
  }
}

TYPED_TEST(Property, ExtractionRecoversTheAutomaton) {
  using C = TypeParam;
  Rng rng(kSeed + 2);
  for (int k = 0; k < 40; ++k) {
    auto [G, A] = draw_case<C>(rng);
    auto tau = random_ca<C>(G, A, A, 3, rng);
    auto f = realize(tau);
    auto res = chl_extract<C>(f, G, A, A);
    ASSERT_TRUE(res) << "case " << k;
    EXPECT_EQ(realize(*res.automaton), f) << "case " << k;
    EXPECT_TRUE(res.automaton->neighborhood().is_subset_of(tau.neighborhood())) << "case " << k;
  }
}

TYPED_TEST(Property, ProductProjectionsRecoverFactors) {
  using C = TypeParam;
  Rng rng(kSeed + 3);
  for (int k = 0; k < 20; ++k) {
    auto [G, A] = draw_case<C>(rng, 3);
    auto a = random_ca<C>(G, A, A, 2, rng), b = random_ca<C>(G, A, A, 2, rng);
    auto p = product_ca(a, b);
    auto m = realize(p.pairing);
    EXPECT_EQ(C::compose(realize(p.first), m), realize(a)) << "case " << k;
    EXPECT_EQ(C::compose(realize(p.second), m), realize(b)) << "case " << k;
  }
}

TYPED_TEST(Property, GeneralizedCompositionRealizesComposite) {
  using C = TypeParam;
  Rng rng(kSeed + 4);
  Group K = Group::cyclic(4), G = Group::cyclic(2), H = Group::cyclic(2);
  auto homs_GK = enumerate_homs(G, K), homs_HG = enumerate_homs(H, G);
  for (int k = 0; k < 20; ++k) {
    auto A = draw_from(rng, small_alphabets<C>());
    FiniteSubset S = random_subset(FiniteSubset::whole(K), 2, rng), T = random_subset(FiniteSubset::whole(G), 2, rng);
    auto tau = make_gca<C>(K, G, draw_from(rng, homs_GK), A, A, S, random_morphism<C>(power<C>(A, S.size()), A, rng));
    auto sigma = make_gca<C>(G, H, draw_from(rng, homs_HG), A, A, T, random_morphism<C>(power<C>(A, T.size()), A, rng));
    auto both = compose_gca(sigma, tau);
    EXPECT_EQ(realize_gca(both), C::compose(realize_gca(sigma), realize_gca(tau))) << "case " << k;
    EXPECT_TRUE(check_phi_equivariance(both).pass) << "case " << k;
  }
}

TYPED_TEST(Property, MinimalNeighborhoodCannotShrink) {
  using C = TypeParam;
  if constexpr (std::is_same_v<C, FinPoset>) {
    GTEST_SKIP() << "single-removal minimality is asserted for finset, finvect and rel";
  } else {
    Rng rng(kSeed + 5);
    Group Z = Group::z_power(1);
    FiniteSubset I = ball(Z, 1);
    for (int k = 0; k < 40; ++k) {
      auto A = draw_from(rng, small_alphabets<C>());
      auto h = random_morphism<C>(power<C>(A, I.size()), A, rng);
      auto w = minimal_neighborhood<C>(h, A, I);
      EXPECT_EQ(C::compose(w.mu, restriction<C>(A, I, w.neighborhood)), h) << "case " << k;
      for (const auto& drop : w.neighborhood) {
        std::vector<GroupElem> rest;
        for (const auto& s : w.neighborhood)
          if (!(s == drop)) rest.push_back(s);
        EXPECT_FALSE(check_local<C>(h, A, I, FiniteSubset(Z, rest))) << "case " << k;
      }
    }
  }
}

// Point-level invariants need elements, so they run on the concrete instances.

TEST(PointProperty, RealizationAgreesWithPointSemantics) {
  Rng rng(kSeed + 6);
  for (int k = 0; k < 30; ++k) {
    auto [G, A] = draw_case<FinVect>(rng);
    auto tau = random_ca<FinVect>(G, A, A, 3, rng);
    auto f = realize(tau);
    auto c = random_dense<FinVect>(G, A, rng);
    // Flatten the configuration to a vector of A^G and multiply.
    FinVect::Elem flat;
    for (const auto& g : G.elements())
      for (auto x : c.at(g)) flat.push_back(x);
    auto image = FinVect::apply(f, flat);
    auto out = apply(tau, c);
    std::size_t i = 0;
    for (const auto& g : G.elements())
      for (auto x : out.at(g)) EXPECT_EQ(x, image[i++]) << "case " << k;
  }
}

TEST(PointProperty, ShiftIsRightTranslationOnAbelianGroups) {
  Rng rng(kSeed + 7);
  for (std::size_t n = 1; n <= 6; ++n) {
    Group G = Group::cyclic(n);
    auto A = FinSet::object(3);
    auto f = shift_morphism<FinSet>(G, A, GroupElem(n > 1 ? 1 : 0));
    for (int k = 0; k < 10; ++k) {
      auto c = random_dense<FinSet>(G, A, rng);
      std::size_t code = 0;
      for (const auto& g : G.elements()) code = code * 3 + c.at(g);
      auto shifted = shift_configuration(c, GroupElem(n > 1 ? 1 : 0));
      std::size_t expect = 0;
      for (const auto& g : G.elements()) expect = expect * 3 + shifted.at(g);
      EXPECT_EQ(f.table[code], expect);
      for (const auto& g : G.elements()) EXPECT_EQ(shifted.at(g), c.at(G.op(g, GroupElem(n > 1 ? 1 : 0))));
    }
  }
}

TEST(PointProperty, EquivarianceOverTheSquareLattice) {
  Rng rng(kSeed + 8);
  Group Z2 = Group::z_power(2);
  for (int k = 0; k < 5; ++k) {
    auto A = FinSet::object(2 + draw(rng, 2));
    auto tau = random_ca<FinSet>(Z2, A, A, 3, rng);
    std::vector<Configuration<FinSet>> cs{random_sparse<FinSet>(Z2, A, ball(Z2, 3), rng)};
    EXPECT_TRUE(check_equivariance(tau, cs, 2).pass) << "case " << k;
  }
}

TEST(PointProperty, ComposedAutomataAgreePointwiseOnInfiniteGroups) {
  Rng rng(kSeed + 9);
  for (const Group& G : {Group::z_power(1), Group::free_product(Group::cyclic(2), Group::cyclic(2))}) {
    for (int k = 0; k < 10; ++k) {
      auto A = FinSet::object(2);
      auto tau = random_ca<FinSet>(G, A, A, 2, rng), sigma = random_ca<FinSet>(G, A, A, 2, rng);
      auto c = random_sparse<FinSet>(G, A, ball(G, 3), rng);
      auto win = ball(G, 2);
      EXPECT_TRUE(agree_on(apply(compose_ca(sigma, tau), c), apply(sigma, apply(tau, c)), win))
          << G.name() << " case " << k;
    }
  }
}

TEST(PointProperty, DenseAndSparseAgree) {
  Rng rng(kSeed + 10);
  Group G = Group::cyclic(5);
  auto A = FinSet::object(3);
  for (int k = 0; k < 10; ++k) {
    auto d = random_dense<FinSet>(G, A, rng);
    std::map<GroupElem, std::size_t> support;
    for (const auto& g : G.elements())
      if (d.at(g) != 0) support[g] = d.at(g);
    auto s = Configuration<FinSet>::sparse(G, A, support, 0);
    auto tau = random_ca<FinSet>(G, A, A, 3, rng);
    EXPECT_TRUE(agree_on(apply(tau, d), apply(tau, s), FiniteSubset::whole(G)));
  }
}
