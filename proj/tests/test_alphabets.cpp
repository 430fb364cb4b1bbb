#include <gtest/gtest.h>

#include "catca/checks.hpp"
#include "catca/sampling.hpp"

using namespace catca;

TEST(FinSet, ProductEncodingFirstIndexMostSignificant) {
  std::vector<FinSet::Object> fs{FinSet::object(2), FinSet::object(3)};
  EXPECT_EQ(FinSet::product(fs).size, 6u);
  auto p0 = FinSet::projection(fs, 0), p1 = FinSet::projection(fs, 1);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      EXPECT_EQ(p0.table[a * 3 + b], a);
      EXPECT_EQ(p1.table[a * 3 + b], b);
    }
  std::vector<std::size_t> vals{1, 2};
  EXPECT_EQ(FinSet::tuple_elem(fs, vals), 5u);
}

TEST(FinSet, PairSatisfiesProjectionEquations) {
  auto X = FinSet::object(3), A = FinSet::object(2), B = FinSet::object(3);
  auto f = FinSet::make(X, A, {1, 0, 1}), g = FinSet::make(X, B, {2, 2, 0});
  auto prod = binary_product<FinSet>(A, B);
  auto h = pair<FinSet>(f, g);
  EXPECT_EQ(FinSet::compose(prod.first, h), f);
  EXPECT_EQ(FinSet::compose(prod.second, h), g);
  EXPECT_EQ(h.table, (std::vector<std::size_t>{5, 2, 3}));
}

TEST(FinSet, RejectsMistypedInput) {
  EXPECT_THROW(FinSet::make(FinSet::object(2), FinSet::object(2), {0, 2}), TypeError);
  EXPECT_THROW(FinSet::make(FinSet::object(2), FinSet::object(2), {0}), TypeError);
  auto f = FinSet::identity(FinSet::object(2));
  EXPECT_THROW(FinSet::compose(f, FinSet::identity(FinSet::object(3))), TypeError);
}

TEST(FinSet, OversizedPowerIsUnsupported) {
  EXPECT_THROW(power<FinSet>(FinSet::object(2), 23), UnsupportedError);
  EXPECT_EQ(power<FinSet>(FinSet::object(2), 0).size, 1u);
}

TEST(FinSet, IndexPullbackMatchesElementOracle) {
  auto A = FinSet::object(3);
  std::vector<std::size_t> f{2, 0, 0, 1};  // result coordinate i reads input coordinate f[i]
  auto m = index_pullback<FinSet>(A, 3, f);
  detail::Radix in = detail::Radix::uniform(3, 3), out = detail::Radix::uniform(3, 4);
  for (std::size_t x = 0; x < in.total(); ++x) {
    std::vector<std::size_t> digits;
    for (auto j : f) digits.push_back(in.digit(x, j));
    EXPECT_EQ(m.table[x], out.encode(digits));
  }
}

TEST(FinVect, SpacesAndMatrices) {
  EXPECT_THROW(FinVect::space(4, 1), TypeError);
  auto V = FinVect::space(3, 2), W = FinVect::space(3, 1);
  auto m = FinVect::make(V, W, {{4, -1}});
  EXPECT_EQ(m.at(0, 0), 1u);
  EXPECT_EQ(m.at(0, 1), 2u);
  auto n = FinVect::make(W, V, {{1}, {2}});
  auto nm = FinVect::compose(n, m);  // (2x1)(1x2)
  EXPECT_EQ(nm.at(0, 0), 1u);
  EXPECT_EQ(nm.at(0, 1), 2u);
  EXPECT_EQ(nm.at(1, 0), 2u);
  EXPECT_EQ(nm.at(1, 1), 1u);
  EXPECT_EQ(FinVect::apply(m, {1, 1}), (FinVect::Elem{0}));
}

TEST(FinVect, EmptyPowerKeepsField) {
  auto A = FinVect::space(3, 1);
  auto P = power<FinVect>(A, 0);
  EXPECT_EQ(P.p, 3u);
  EXPECT_EQ(P.dim, 0u);
  EXPECT_EQ(power<FinVect>(A, 4).dim, 4u);
}

TEST(FinVect, ElementsFirstCoordinateMostSignificant) {
  auto els = FinVect::elements(FinVect::space(2, 2));
  ASSERT_EQ(els.size(), 4u);
  EXPECT_EQ(els[1], (FinVect::Elem{0, 1}));
  EXPECT_EQ(els[2], (FinVect::Elem{1, 0}));
}

TEST(FinPoset, ValidationAndProducts) {
  EXPECT_THROW(FinPoset::poset({{1, 1}, {1, 1}}), TypeError);  // not antisymmetric
  EXPECT_THROW(FinPoset::poset({{0, 0}, {0, 1}}), TypeError);  // not reflexive
  auto two = FinPoset::chain(2);
  EXPECT_THROW(FinPoset::make(two, two, {1, 0}), TypeError);
  auto sq = power<FinPoset>(two, 2);
  EXPECT_EQ(sq.size(), 4u);
  EXPECT_TRUE(sq.leq(0, 3));
  EXPECT_FALSE(sq.leq(1, 2));  // (0,1) and (1,0) are incomparable
  EXPECT_TRUE(sq.leq(1, 3));
}

TEST(FinPoset, MajorityIsMonotone) {
  auto two = FinPoset::chain(2);
  auto cube = power<FinPoset>(two, 3);
  EXPECT_NO_THROW(FinPoset::make(cube, two, {0, 0, 0, 1, 0, 1, 1, 1}));
  EXPECT_THROW(FinPoset::make(cube, two, {0, 1, 1, 0, 1, 0, 0, 1}), TypeError);  // parity
}

TEST(Rel, CompositionAndIdentity) {
  auto A = Rel::object(2), B = Rel::object(3), C = Rel::object(2);
  auto f = Rel::make(A, B, {{0, 0}, {0, 2}, {1, 1}});
  auto g = Rel::make(B, C, {{2, 1}, {1, 0}});
  auto gf = Rel::compose(g, f);
  EXPECT_EQ(gf.pairs(), (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 0}}));
  EXPECT_EQ(Rel::compose(f, Rel::identity(A)), f);
  EXPECT_EQ(Rel::compose(Rel::identity(B), f), f);
}

TEST(Rel, ProductIsDisjointUnion) {
  std::vector<Rel::Object> fs{Rel::object(2), Rel::object(3)};
  EXPECT_EQ(Rel::product(fs).size, 5u);
  auto p1 = Rel::projection(fs, 1);
  EXPECT_EQ(p1.pairs(), (std::vector<std::pair<std::size_t, std::size_t>>{{2, 0}, {3, 1}, {4, 2}}));
  auto X = Rel::object(1);
  auto f = Rel::make(X, fs[0], {{0, 1}}), g = Rel::make(X, fs[1], {{0, 0}, {0, 2}});
  std::vector<Rel::Morphism> fam{f, g};
  auto t = Rel::tuple(X, fs, fam);
  EXPECT_EQ(t.pairs(), (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}, {0, 4}}));
  EXPECT_EQ(Rel::compose(Rel::projection(fs, 0), t), f);
  EXPECT_EQ(Rel::compose(p1, t), g);
}

TEST(Generic, RestrictionComposesTransitively) {
  Group Z4 = Group::cyclic(4);
  auto A = FinSet::object(2);
  FiniteSubset all = FiniteSubset::whole(Z4), J(Z4, {GroupElem(1), GroupElem(2), GroupElem(3)}), S(Z4, {GroupElem(3)});
  EXPECT_EQ(FinSet::compose(restriction<FinSet>(A, J, S), restriction<FinSet>(A, all, J)), restriction<FinSet>(A, all, S));
}

TEST(Generic, ExhaustiveProductUniquenessSmall) {
  auto X = FinSet::object(2), A = FinSet::object(2), B = FinSet::object(2);
  auto prod = binary_product<FinSet>(A, B);
  std::size_t matches = 0;
  auto f = FinSet::make(X, A, {0, 1}), g = FinSet::make(X, B, {1, 1});
  for (const auto& h : all_morphisms<FinSet>(X, prod.object))
    if (FinSet::compose(prod.first, h) == f && FinSet::compose(prod.second, h) == g) ++matches;
  EXPECT_EQ(matches, 1u);
}

TEST(Locality, WorkedExamples) {
  Group Z = Group::z_power(1);
  auto v = [](std::int64_t x) { return GroupElem::vec({x}); };
  FiniteSubset I(Z, {v(-1), v(0), v(1)});

  // A projection is local on its own coordinate.
  auto A = FinSet::object(2);
  auto pi = power_projection<FinSet>(A, 3, 2);
  EXPECT_TRUE(check_local<FinSet>(pi, A, I, FiniteSubset(Z, {v(1)})));

  // The rule-90 row on three coordinates has a zero middle block.
  auto F = FinVect::space(2, 1);
  auto row = FinVect::make(power<FinVect>(F, 3), F, {{1, 0, 1}});
  auto mu = check_local<FinVect>(row, F, I, FiniteSubset(Z, {v(-1), v(1)}));
  ASSERT_TRUE(mu);
  EXPECT_EQ(mu->at(0, 0), 1u);
  EXPECT_EQ(mu->at(0, 1), 1u);

  // XOR of two coordinates does not factor through either one.
  FiniteSubset two(Z, {v(0), v(1)});
  auto x = FinSet::make(power<FinSet>(A, 2), A, {0, 1, 1, 0});
  EXPECT_FALSE(check_local<FinSet>(x, A, two, FiniteSubset(Z, {v(0)})));
  EXPECT_FALSE(check_local<FinSet>(x, A, two, FiniteSubset(Z, {v(1)})));
}

TEST(Locality, MinimalNeighborhoods) {
  Group Z = Group::z_power(1);
  auto v = [](std::int64_t x) { return GroupElem::vec({x}); };
  FiniteSubset I(Z, {v(-1), v(0), v(1)});
  auto A = FinSet::object(2);
  auto P = power<FinSet>(A, 3);
  EXPECT_TRUE(minimal_neighborhood<FinSet>(FinSet::constant(P, A, 1), A, I).neighborhood.empty());
  std::vector<std::size_t> r110(8);
  for (std::size_t n = 0; n < 8; ++n) r110[n] = (110u >> n) & 1u;
  EXPECT_EQ(minimal_neighborhood<FinSet>(FinSet::make(P, A, r110), A, I).neighborhood, I);
  EXPECT_EQ(minimal_neighborhood<FinSet>(power_projection<FinSet>(A, 3, 0), A, I).neighborhood, FiniteSubset(Z, {v(-1)}));

  auto R = Rel::object(2);
  auto h = Rel::make(power<Rel>(R, 3), R, {{2, 0}, {3, 1}});  // reads only the middle summand
  auto w = minimal_neighborhood<Rel>(h, R, I);
  EXPECT_EQ(w.neighborhood, FiniteSubset(Z, {v(0)}));
  EXPECT_EQ(w.mu, Rel::identity(R));
}
