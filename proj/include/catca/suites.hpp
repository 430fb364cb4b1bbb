#pragma once

// Named property suites. Each suite checks one law of the framework on
// seeded random or exhaustive inputs and returns a CheckReport; every
// suite is expected to pass, so a failure points at a construction bug.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "catca/checks.hpp"
#include "catca/sampling.hpp"

namespace catca {

struct SuiteParams {
  std::string instance = "finset";
  std::uint64_t seed = 1;
  std::size_t cases = 0;   // 0 selects the suite's default
  std::size_t radius = 2;  // ball radius for pointwise checks
  std::uint32_t p = 2;     // field of finvect
  std::string group;       // restrict group draws to one catalog group; empty draws freely

  json to_json() const {
    json out{{"instance", instance}, {"radius", radius}};
    if (instance == "finvect") out["p"] = p;
    if (!group.empty()) out["group"] = group;
    if (cases != 0) out["cases"] = cases;
    return out;
  }
};

template <AlphabetCategory C>
std::size_t carrier_size(const typename C::Object& A) {
  if constexpr (std::is_same_v<C, FinVect>) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < A.dim; ++i) n *= A.p;
    return n;
  } else if constexpr (std::is_same_v<C, FinPoset>) {
    return A.size();
  } else {
    return A.size;
  }
}

/// A morphism that ignores its input: a constant table, the zero matrix or
/// the empty relation.
template <AlphabetCategory C>
typename C::Morphism constant_morphism(const typename C::Object& src, const typename C::Object& tgt) {
  if constexpr (std::is_same_v<C, FinVect>) return FinVect::zero(src, tgt);
  else if constexpr (std::is_same_v<C, Rel>) return Rel::empty(src, tgt);
  else return C::constant(src, tgt, 0);
}

namespace suites {

inline std::vector<Group> lemma_groups() {
  return {Group::cyclic(2), Group::cyclic(3), Group::cyclic(4), Group::symmetric(3)};
}

template <AlphabetCategory C>
class Ctx {
 public:
  using Object = typename C::Object;
  using Morphism = typename C::Morphism;

  Ctx(const SuiteParams& p, const char* name, std::size_t default_cases)
      : params(p), rng(p.seed), n(p.cases ? p.cases : default_cases) {
    rep.check = name;
    rep.params = p.to_json();
    rep.seed = p.seed;
  }

  /// Groups for exhaustive lemma checks, or the one requested.
  std::vector<Group> groups() const {
    if (params.group.empty()) return lemma_groups();
    return {named_group(params.group)};
  }

  Group group(std::size_t max_order = 6) {
    if (!params.group.empty()) return named_group(params.group);
    return draw_from(rng, group_catalog(max_order));
  }

  std::vector<Object> alphabets(std::size_t min_size = 1) const {
    std::vector<Object> out;
    for (auto& A : alphabet_catalog<C>(std::is_same_v<C, FinVect> ? 2 : 3, params.p))
      if (carrier_size<C>(A) >= min_size) out.push_back(A);
    return out;
  }

  Object alphabet(std::size_t min_size = 1) { return draw_from(rng, alphabets(min_size)); }

  Morphism morphism(const Object& src, const Object& tgt) { return random_morphism<C>(src, tgt, rng); }

  CellularAutomaton<C> ca(const Group& G, const Object& A, const Object& B, std::size_t max_s = 2) {
    return random_ca<C>(G, A, B, max_s, rng);
  }

  GroupHom hom(const Group& H, const Group& G) { return draw_from(rng, homs(H, G)); }

  const std::vector<GroupHom>& homs(const Group& H, const Group& G) {
    auto key = std::make_pair(H.name(), G.name());
    auto it = hom_cache_.find(key);
    if (it == hom_cache_.end()) it = hom_cache_.emplace(key, enumerate_homs(H, G)).first;
    return it->second;
  }

  GeneralizedCA<C> gca(const Group& G, const Group& H, const Object& A, const Object& B, std::size_t max_s = 2) {
    GroupHom phi = hom(H, G);
    FiniteSubset S = random_subset(FiniteSubset::whole(G), max_s, rng);
    return make_gca<C>(G, H, phi, A, B, S, morphism(power<C>(A, S.size()), B));
  }

  /// Records one case; on the first failure stores the witness.
  bool expect(bool ok, const std::function<json()>& witness) {
    ++rep.cases;
    if (!ok && rep.pass) rep.fail(witness());
    return ok;
  }

  CheckReport done() { return std::move(rep); }

  const SuiteParams& params;
  Rng rng;
  std::size_t n;
  CheckReport rep;

 private:
  static Group named_group(const std::string& name) {
    for (auto& G : group_catalog(6))
      if (G.name() == name) return G;
    throw ParseError("unknown group \"" + name + "\" (expected Z_1..Z_6 or S_3)");
  }

  std::map<std::pair<std::string, std::string>, std::vector<GroupHom>> hom_cache_;
};

template <AlphabetCategory C>
json mjson(const typename C::Morphism& f) {
  return Codec<C>::morphism(f);
}

// ---------------------------------------------------------------------------
// Categories and products.

template <AlphabetCategory C>
CheckReport category_laws(const SuiteParams& p) {
  Ctx<C> x(p, "category-laws", 200);
  for (std::size_t k = 0; k < x.n && x.rep.pass; ++k) {
    auto W = x.alphabet(), X = x.alphabet(), Y = x.alphabet(), Z = x.alphabet();
    auto f = x.morphism(W, X), g = x.morphism(X, Y), h = x.morphism(Y, Z);
    auto wit = [&] { return json{{"f", mjson<C>(f)}, {"g", mjson<C>(g)}, {"h", mjson<C>(h)}}; };
    x.expect(C::compose(h, C::compose(g, f)) == C::compose(C::compose(h, g), f), wit);
    x.expect(C::compose(C::identity(X), f) == f && C::compose(f, C::identity(W)) == f, wit);
  }
  return x.done();
}

/// Existence for every pair (f, g) and uniqueness for every candidate h
/// into A x B, over all alphabet triples of the catalog.
template <AlphabetCategory C>
CheckReport product_universal(const SuiteParams& p) {
  Ctx<C> x(p, "product-universal", 0);
  auto objs = x.alphabets();
  constexpr std::size_t kLimit = std::size_t{1} << 19;
  for (const auto& X : objs)
    for (const auto& A : objs)
      for (const auto& B : objs) {
        if (!x.rep.pass) return x.done();
        auto prod = binary_product<C>(A, B);
        std::vector<typename C::Morphism> fs, gs, hs;
        try {
          fs = all_morphisms<C>(X, A, kLimit);
          gs = all_morphisms<C>(X, B, kLimit);
          hs = all_morphisms<C>(X, prod.object, kLimit);
        } catch (const UnsupportedError&) {
          fs.clear(), gs.clear(), hs.clear();
          for (int i = 0; i < 200; ++i) {
            fs.push_back(x.morphism(X, A));
            gs.push_back(x.morphism(X, B));
            hs.push_back(x.morphism(X, prod.object));
          }
          fs.resize(15), gs.resize(15);
        }
        for (const auto& f : fs)
          for (const auto& g : gs) {
            auto t = pair<C>(f, g);
            x.expect(C::compose(prod.first, t) == f && C::compose(prod.second, t) == g,
                     [&] { return json{{"f", mjson<C>(f)}, {"g", mjson<C>(g)}}; });
          }
        for (const auto& h : hs)
          x.expect(pair<C>(C::compose(prod.first, h), C::compose(prod.second, h)) == h,
                   [&] { return json{{"h", mjson<C>(h)}}; });
      }
  return x.done();
}

// ---------------------------------------------------------------------------
// Configuration objects.

template <AlphabetCategory C>
CheckReport restriction_transitivity(const SuiteParams& p) {
  Ctx<C> x(p, "restriction-transitivity", 12);
  for (const auto& G : x.groups()) {
    FiniteSubset all = FiniteSubset::whole(G);
    for (const auto& A : x.alphabets()) {
      for (std::size_t k = 0; k < x.n && x.rep.pass; ++k) {
        FiniteSubset J = random_subset(all, G.order(), x.rng);
        FiniteSubset S = random_subset(J, J.size(), x.rng);
        x.expect(C::compose(restriction<C>(A, J, S), restriction<C>(A, all, J)) == restriction<C>(A, all, S), [&] {
          return json{{"group", to_json(G)}, {"A", Codec<C>::object(A)}, {"J", to_json(J)}, {"S", to_json(S)}};
        });
      }
    }
  }
  return x.done();
}

template <AlphabetCategory C>
CheckReport translation_restriction(const SuiteParams& p) {
  Ctx<C> x(p, "translation-restriction", 4);
  for (const auto& G : x.groups()) {
    FiniteSubset all = FiniteSubset::whole(G);
    for (const auto& A : x.alphabets()) {
      for (const auto& g : G.elements()) {
        auto shift = shift_morphism<C>(G, A, g);
        for (std::size_t k = 0; k < x.n && x.rep.pass; ++k) {
          FiniteSubset S = random_subset(all, 3, x.rng);
          auto lhs = C::compose(translation_iso<C>(A, S, g), restriction<C>(A, all, subset_translate(S, g)));
          auto rhs = C::compose(restriction<C>(A, all, S), shift);
          x.expect(lhs == rhs, [&] {
            return json{{"group", to_json(G)}, {"A", Codec<C>::object(A)}, {"S", to_json(S)}, {"g", to_json(g)}};
          });
        }
      }
    }
  }
  return x.done();
}

/// (g o f)^* = f^* o g^* for index maps and for group homomorphisms.
template <AlphabetCategory C>
CheckReport pullback_functor(const SuiteParams& p) {
  Ctx<C> x(p, "pullback-functor", 20);
  auto groups = x.groups();
  for (const auto& A : x.alphabets()) {
    for (std::size_t k = 0; k < x.n && x.rep.pass; ++k) {
      std::size_t ni = 1 + draw(x.rng, 4), nj = 1 + draw(x.rng, 4), nk = 1 + draw(x.rng, 4);
      std::vector<std::size_t> f(ni), g(nj), gf(ni);
      for (auto& v : f) v = draw(x.rng, nj);
      for (auto& v : g) v = draw(x.rng, nk);
      for (std::size_t i = 0; i < ni; ++i) gf[i] = g[f[i]];
      x.expect(index_pullback<C>(A, nk, gf) == C::compose(index_pullback<C>(A, nj, f), index_pullback<C>(A, nk, g)),
               [&] { return json{{"A", Codec<C>::object(A)}, {"f", f}, {"g", g}, {"k", nk}}; });

      const Group& K = draw_from(x.rng, groups);
      const Group& H = draw_from(x.rng, groups);
      const Group& G = draw_from(x.rng, groups);
      GroupHom psi = x.hom(K, H), phi = x.hom(H, G);
      x.expect(pullback_morphism<C>(compose(phi, psi), A) ==
                   C::compose(pullback_morphism<C>(psi, A), pullback_morphism<C>(phi, A)),
               [&] { return json{{"A", Codec<C>::object(A)}, {"phi", to_json(phi)}, {"psi", to_json(psi)}}; });
    }
  }
  return x.done();
}

/// phi_gh = phi_g o phi_h and pi_hg = pi_h o phi_g.
template <AlphabetCategory C>
CheckReport shift_action(const SuiteParams& p) {
  Ctx<C> x(p, "shift-action", 0);
  for (const auto& G : x.groups())
    for (const auto& A : x.alphabets()) {
      std::vector<typename C::Morphism> shifts, projs;
      for (const auto& g : G.elements()) {
        shifts.push_back(shift_morphism<C>(G, A, g));
        projs.push_back(cell_projection<C>(G, A, g));
      }
      for (const auto& g : G.elements())
        for (const auto& h : G.elements()) {
          auto wit = [&] { return json{{"group", to_json(G)}, {"A", Codec<C>::object(A)}, {"g", to_json(g)}, {"h", to_json(h)}}; };
          x.expect(shifts[G.op(g, h).id()] == C::compose(shifts[g.id()], shifts[h.id()]), wit);
          x.expect(projs[G.op(h, g).id()] == C::compose(projs[h.id()], shifts[g.id()]), wit);
        }
    }
  return x.done();
}

/// (g o f)_* = g_* o f_*, id_* = id, and f_* is the automaton f o pi_e.
template <AlphabetCategory C>
CheckReport pushforward_functor(const SuiteParams& p) {
  Ctx<C> x(p, "pushforward-functor", 6);
  for (const auto& G : x.groups())
    for (std::size_t k = 0; k < x.n && x.rep.pass; ++k) {
      auto A = x.alphabet(), B = x.alphabet(), D = x.alphabet();
      auto f = x.morphism(A, B), g = x.morphism(B, D);
      const std::size_t n = G.order();
      auto wit = [&] { return json{{"group", to_json(G)}, {"f", mjson<C>(f)}, {"g", mjson<C>(g)}}; };
      auto fG = realize(pushforward_ca<C>(f, G));
      x.expect(realize(pushforward_ca<C>(C::compose(g, f), G)) == C::compose(realize(pushforward_ca<C>(g, G)), fG), wit);
      x.expect(pushforward<C>(C::identity(A), n) == C::identity(power<C>(A, n)), wit);
      x.expect(fG == pushforward<C>(f, n), wit);
      x.expect(check_equivariance<C>(fG, G, A, B).pass, wit);
    }
  return x.done();
}

/// phi^*_B o f_*^G = f_*^H o phi^*_A.
template <AlphabetCategory C>
CheckReport pullback_pushforward_square(const SuiteParams& p) {
  Ctx<C> x(p, "pullback-pushforward-square", 2);
  for (const auto& G : x.groups())
    for (const auto& H : x.groups())
      for (const auto& phi : x.homs(H, G))
        for (std::size_t k = 0; k < x.n && x.rep.pass; ++k) {
          auto A = x.alphabet(), B = x.alphabet();
          auto f = x.morphism(A, B);
          auto lhs = C::compose(pullback_morphism<C>(phi, B), pushforward<C>(f, G.order()));
          auto rhs = C::compose(pushforward<C>(f, H.order()), pullback_morphism<C>(phi, A));
          x.expect(lhs == rhs, [&] { return json{{"phi", to_json(phi)}, {"f", mjson<C>(f)}}; });
        }
  return x.done();
}

// ---------------------------------------------------------------------------
// Automata over one universe.

/// pi_g o tau = mu o Res o phi_g (checked against an index-level oracle)
/// and tau o phi_g = phi_g o tau.
template <AlphabetCategory C>
CheckReport defining_equation(const SuiteParams& p) {
  Ctx<C> x(p, "defining-equation", 50);
  for (std::size_t k = 0; k < x.n && x.rep.pass; ++k) {
    Group G = x.group();
    auto A = x.alphabet(), B = x.alphabet();
    auto tau = x.ca(G, A, B);
    auto f = realize(tau);
    auto wit = [&] { return json{{"automaton", to_json(tau)}}; };
    for (const auto& g : G.elements()) {
      std::vector<std::size_t> pos;
      for (const auto& s : tau.neighborhood()) pos.push_back(G.op(s, g).id());
      x.expect(C::compose(cell_projection<C>(G, B, g), f) == C::compose(tau.local_map(), index_pullback<C>(A, G.order(), pos)), wit);
    }
    x.expect(check_equivariance<C>(f, G, A, B).pass, wit);
  }
  return x.done();
}

/// Two presentations agreeing at the identity cell realize equally: tau and
/// the same rule padded with an unused neighbor.
template <AlphabetCategory C>
CheckReport equivariance_determines(const SuiteParams& p) {
  Ctx<C> x(p, "equivariance-determines", 50);
  for (std::size_t k = 0; k < x.n && x.rep.pass; ++k) {
    Group G = x.group();
    auto A = x.alphabet(), B = x.alphabet();
    auto tau = x.ca(G, A, B);
    FiniteSubset V = subset_union(tau.neighborhood(), random_subset(FiniteSubset::whole(G), 2, x.rng));
    auto sigma = make_ca<C>(G, A, B, V, C::compose(tau.local_map(), restriction<C>(A, V, tau.neighborhood())));
    auto other = x.ca(G, A, B);
    auto ft = realize(tau), fs = realize(sigma), fo = realize(other);
    auto pe = cell_projection<C>(G, B, G.identity());
    auto wit = [&] { return json{{"tau", to_json(tau)}, {"sigma", to_json(sigma)}, {"other", to_json(other)}}; };
    x.expect(C::compose(pe, ft) == C::compose(pe, fs) && ft == fs, wit);
    x.expect((C::compose(pe, ft) == C::compose(pe, fo)) == (ft == fo), wit);
  }
  return x.done();
}

/// realize(sigma o tau) = realize(sigma) o realize(tau) with neighborhood
/// TS; over Z, pointwise agreement with sequential application.
template <AlphabetCategory C>
CheckReport composition(const SuiteParams& p) {
  Ctx<C> x(p, "composition", 100);
  for (std::size_t k = 0; k < x.n && x.rep.pass; ++k) {
    Group G = x.group();
    auto A = x.alphabet(), B = x.alphabet(), D = x.alphabet();
    auto tau = x.ca(G, A, B), sigma = x.ca(G, B, D);
    auto comp = compose_ca(sigma, tau);
    std::vector<GroupElem> ts;
    for (const auto& t : tau.neighborhood())
      for (const auto& s : sigma.neighborhood()) ts.push_back(G.op(t, s));
    auto wit = [&] { return json{{"tau", to_json(tau)}, {"sigma", to_json(sigma)}}; };
    x.expect(comp.neighborhood() == FiniteSubset(G, ts), wit);
    x.expect(realize(comp) == C::compose(realize(sigma), realize(tau)), wit);
  }
  if constexpr (ConcreteCategory<C>) {
    Group Z = Group::z_power(1);
    FiniteSubset window = ball(Z, 3), support = ball(Z, 6);
    const std::size_t per = 10;
    for (std::size_t k = 0; k < (x.n + per - 1) / per && x.rep.pass; ++k) {
      auto A = x.alphabet(), B = x.alphabet(), D = x.alphabet();
      auto tau = x.ca(Z, A, B), sigma = x.ca(Z, B, D);
      auto comp = compose_ca(sigma, tau);
      for (std::size_t j = 0; j < per && x.rep.pass; ++j) {
        auto c = random_sparse<C>(Z, A, support, x.rng);
        x.expect(agree_on(apply(comp, c), apply(sigma, apply(tau, c)), window), [&] {
          return json{{"tau", to_json(tau)}, {"sigma", to_json(sigma)}, {"configuration", to_json(c)}};
        });
      }
    }
  }
  return x.done();
}

/// f equal to tau everywhere except one cell g0 != e, where a different
/// local map is used. Such an f is never equivariant.
template <AlphabetCategory C>
typename C::Morphism perturbed_realization(const CellularAutomaton<C>& tau, const GroupElem& g0,
                                           const typename C::Morphism& other_mu) {
  const Group& G = tau.universe();
  LocalRule<C> other = tau.rule();
  other.mu = other_mu;
  std::vector<typename C::Morphism> family;
  for (const auto& g : G.elements()) family.push_back(cell_component<C>(G, g == g0 ? other : tau.rule(), g));
  return power_tuple<C>(power<C>(tau.source_alphabet(), G.order()), tau.target_alphabet(), family);
}

template <AlphabetCategory C>
CheckReport chl_roundtrip(const SuiteParams& p) {
  Ctx<C> x(p, "chl-roundtrip", 100);
  for (std::size_t k = 0; k < x.n && x.rep.pass; ++k) {
    Group G = x.group();
    auto A = x.alphabet(), B = x.alphabet();
    auto tau = x.ca(G, A, B);
    auto f = realize(tau);
    auto r = chl_extract<C>(f, G, A, B);
    x.expect(r && realize(*r.automaton) == f && r.automaton->neighborhood().is_subset_of(tau.neighborhood()),
             [&] { return json{{"automaton", to_json(tau)}}; });
  }
  const std::size_t perturbations = std::max<std::size_t>(1, x.n / 2);
  for (std::size_t k = 0; k < perturbations && x.rep.pass; ++k) {
    Group G = x.group();
    while (G.order() < 2) G = x.group();
    auto A = x.alphabet(), B = x.alphabet(2);
    auto tau = x.ca(G, A, B);
    auto other = random_other_morphism<C>(tau.local_map(), x.rng);
    if (!other) other = constant_morphism<C>(tau.local_map().source, B) == tau.local_map()
                            ? std::optional(C::compose(C::identity(B), x.morphism(tau.local_map().source, B)))
                            : std::optional(constant_morphism<C>(tau.local_map().source, B));
    GroupElem g0 = G.elements()[1 + draw(x.rng, G.order() - 1)];
    auto f = perturbed_realization(tau, g0, *other);
    auto r = chl_extract<C>(f, G, A, B);
    bool verified = false;
    if (!r && r.counterexample)
      verified = !(C::compose(f, shift_morphism<C>(G, A, *r.counterexample)) ==
                   C::compose(shift_morphism<C>(G, B, *r.counterexample), f));
    x.expect(verified, [&] {
      return json{{"automaton", to_json(tau)}, {"cell", to_json(g0)}, {"other_mu", mjson<C>(*other)}};
    });
  }
  return x.done();
}

/// Per-cell minimal neighborhoods of a realized automaton are translates
/// S_e g, and each one is minimal under single removals.
template <AlphabetCategory C>
CheckReport uniformity(const SuiteParams& p) {
  Ctx<C> x(p, "uniformity", 30);
  for (std::size_t k = 0; k < x.n && x.rep.pass; ++k) {
    Group G = x.group();
    auto A = x.alphabet(), B = x.alphabet();
    auto tau = x.ca(G, A, B);
    auto f = realize(tau);
    auto u = check_uniform<C>(f, G, A, B);
    auto wit = [&] { return json{{"automaton", to_json(tau)}, {"report", u.to_json()}}; };
    x.expect(u.pass && u.details.at("translates") == true, wit);
    FiniteSubset all = FiniteSubset::whole(G);
    auto w = minimal_neighborhood<C>(C::compose(cell_projection<C>(G, B, G.identity()), f), A, all);
    if constexpr (!std::is_same_v<C, FinPoset>) {
      for (std::size_t i = 0; i < w.neighborhood.size(); ++i) {
        std::vector<GroupElem> fewer;
        for (std::size_t j = 0; j < w.neighborhood.size(); ++j)
          if (j != i) fewer.push_back(w.neighborhood[j]);
        x.expect(!check_local<C>(C::compose(cell_projection<C>(G, B, G.identity()), f), A, all,
                                 FiniteSubset(G, fewer)),
                 wit);
      }
    }
  }
  return x.done();
}

/// Projection equations for the product automaton, and rejection of
/// perturbed candidates on the same neighborhood.
template <AlphabetCategory C>
CheckReport product(const SuiteParams& p) {
  Ctx<C> x(p, "product", 50);
  std::size_t rejected = 0;
  for (std::size_t k = 0; k < x.n && x.rep.pass; ++k) {
    Group G = x.group();
    auto Cs = x.alphabet(), A = x.alphabet(), B = x.alphabet();
    auto alpha = x.ca(G, Cs, A), beta = x.ca(G, Cs, B);
    auto prod = product_ca(alpha, beta);
    auto ft = realize(prod.pairing), pa = realize(prod.first), pb = realize(prod.second);
    auto fa = realize(alpha), fb = realize(beta);
    auto wit = [&] { return json{{"alpha", to_json(alpha)}, {"beta", to_json(beta)}}; };
    x.expect(C::compose(pa, ft) == fa && C::compose(pb, ft) == fb, wit);
    for (int j = 0; j < 20; ++j) {
      auto nu = random_other_morphism<C>(prod.pairing.local_map(), x.rng);
      if (!nu) continue;
      auto fs = realize(make_ca<C>(G, Cs, prod.pairing.target_alphabet(), prod.pairing.neighborhood(), *nu));
      bool fails = !(C::compose(pa, fs) == fa) || !(C::compose(pb, fs) == fb);
      if (fails) ++rejected;
      x.expect(fails, [&] { return json{{"alpha", to_json(alpha)}, {"beta", to_json(beta)}, {"candidate", mjson<C>(*nu)}}; });
    }
  }
  x.rep.details = {{"rejected_candidates", rejected}};
  return x.done();
}

// ---------------------------------------------------------------------------
// Generalized automata.

template <AlphabetCategory C>
CheckReport phi_equivariance(const SuiteParams& p) {
  Ctx<C> x(p, "phi-equivariance", 50);
  for (std::size_t k = 0; k < x.n && x.rep.pass; ++k) {
    Group G = x.group(), H = x.group();
    auto tau = x.gca(G, H, x.alphabet(), x.alphabet());
    auto r = check_phi_equivariance(tau);
    x.expect(r.pass, [&] { return *r.counterexample; });
  }
  return x.done();
}

template <AlphabetCategory C>
CheckReport generalized_composition(const SuiteParams& p) {
  Ctx<C> x(p, "generalized-composition", 50);
  for (std::size_t k = 0; k < x.n && x.rep.pass; ++k) {
    Group G = x.group(), H = x.group(), K = x.group();
    auto A = x.alphabet(), B = x.alphabet(), D = x.alphabet();
    auto tau = x.gca(G, H, A, B), sigma = x.gca(H, K, B, D);
    auto comp = compose_gca(sigma, tau);
    std::vector<GroupElem> tps;
    for (const auto& t : tau.neighborhood())
      for (const auto& s : sigma.neighborhood()) tps.push_back(G.op(t, tau.hom()(s)));
    auto wit = [&] { return json{{"tau", to_json(tau)}, {"sigma", to_json(sigma)}}; };
    x.expect(comp.neighborhood() == FiniteSubset(G, tps), wit);
    x.expect(realize_gca(comp) == C::compose(realize_gca(sigma), realize_gca(tau)), wit);
  }
  return x.done();
}

/// The pullback automaton realizes the index pullback, for every hom.
template <AlphabetCategory C>
CheckReport pullback_automaton(const SuiteParams& p) {
  Ctx<C> x(p, "pullback-automaton", 0);
  for (const auto& G : x.groups())
    for (const auto& H : x.groups())
      for (const auto& phi : x.homs(H, G))
        for (const auto& A : x.alphabets()) {
          if (!x.rep.pass) return x.done();
          x.expect(realize_gca(pullback_gca<C>(phi, A)) == pullback_morphism<C>(phi, A),
                   [&] { return json{{"phi", to_json(phi)}, {"A", Codec<C>::object(A)}}; });
        }
  return x.done();
}

/// tau = phi^* o tau_G, uniqueness of tau_G against perturbed local maps,
/// and a constant automaton factoring through two different homs.
template <AlphabetCategory C>
CheckReport factorization(const SuiteParams& p) {
  Ctx<C> x(p, "factorization", 50);
  for (std::size_t k = 0; k < x.n && x.rep.pass; ++k) {
    Group G = x.group(), H = x.group();
    auto A = x.alphabet(), B = x.alphabet();
    auto tau = x.gca(G, H, A, B);
    auto fac = factorize(tau);
    auto star = realize_gca(pullback_gca<C>(fac.hom, B));
    auto target = realize_gca(tau);
    x.expect(C::compose(star, realize(fac.automaton)) == target, [&] { return json{{"automaton", to_json(tau)}}; });
    for (int j = 0; j < 20; ++j) {
      auto mu = random_other_morphism<C>(tau.local_map(), x.rng);
      if (!mu) continue;
      auto alt = make_ca<C>(G, A, B, tau.neighborhood(), *mu);
      x.expect(!(C::compose(star, realize(alt)) == target),
               [&] { return json{{"automaton", to_json(tau)}, {"candidate", mjson<C>(*mu)}}; });
    }
  }
  // Constant automata: two distinct homs give the same morphism.
  std::size_t witnesses = 0;
  for (const auto& G : x.groups())
    for (const auto& H : x.groups()) {
      const auto& hs = x.homs(H, G);
      if (hs.size() < 2) continue;
      auto A = x.alphabet(), B = x.alphabet();
      FiniteSubset e = FiniteSubset::identity_set(G);
      auto mu = constant_morphism<C>(power<C>(A, 1), B);
      auto t1 = make_gca<C>(G, H, hs[0], A, B, e, mu);
      auto t2 = make_gca<C>(G, H, hs[1], A, B, e, mu);
      bool ok = !(hs[0] == hs[1]) && realize_gca(t1) == realize_gca(t2);
      if (ok) ++witnesses;
      x.expect(ok, [&] { return json{{"first", to_json(t1)}, {"second", to_json(t2)}}; });
    }
  x.rep.details = {{"constant_witnesses", witnesses}};
  return x.done();
}

/// The mediator into (A x B)^{G*H} for G = Z_2, H = Z_3, K = Z_6 with
/// phi(1) = 3 and psi(1) = 2, checked on every configuration of C^K (or a
/// sample when there are too many) at each cell of G, of H and of the ball.
template <AlphabetCategory C>
CheckReport weak_product_suite(const SuiteParams& p) {
  Ctx<C> x(p, "weak-product", 2);
  if constexpr (!ConcreteCategory<C>) {
    throw UnsupportedError("weak-product checks need an element layer");
  } else {
    Group G = Group::cyclic(2), H = Group::cyclic(3), K = Group::cyclic(6);
    GroupHom phi = GroupHom::table(G, K, {GroupElem(0), GroupElem(3)});
    GroupHom psi = GroupHom::table(H, K, {GroupElem(0), GroupElem(2), GroupElem(4)});
    typename C::Object two;
    if constexpr (std::is_same_v<C, FinVect>) two = FinVect::space(p.p, 1);
    else if constexpr (std::is_same_v<C, FinPoset>) two = FinPoset::chain(2);
    else two = FinSet::object(2);
    const auto& A = two;
    const auto& B = two;
    auto wp = weak_product<C>(A, B, G, H);
    FiniteSubset cells = ball(wp.universe, p.radius);
    FiniteSubset whole_k = FiniteSubset::whole(K);
    auto prod = binary_product<C>(A, B);
    std::size_t perturbed = 0, perturbed_passing = 0;

    std::vector<typename C::Object> sources;
    for (const auto& Cs : alphabet_catalog<C>(4, p.p))
      if (carrier_size<C>(Cs) <= 4) sources.push_back(Cs);

    for (const auto& Cs : sources)
      for (std::size_t trial = 0; trial < x.n && x.rep.pass; ++trial) {
        FiniteSubset S = random_subset(whole_k, 2, x.rng), T = random_subset(whole_k, 2, x.rng);
        auto alpha = make_gca<C>(K, G, phi, Cs, A, S, x.morphism(power<C>(Cs, S.size()), A));
        auto beta = make_gca<C>(K, H, psi, Cs, B, T, x.morphism(power<C>(Cs, T.size()), B));
        auto tau = weak_product_mediator(alpha, beta);

        std::vector<Configuration<C>> configs;
        if (detail::Radix::uniform(carrier_size<C>(Cs), K.order()).total() <= 4096) configs = all_configurations<C>(K, Cs);
        else
          for (int i = 0; i < 256; ++i) configs.push_back(random_dense<C>(K, Cs, x.rng));

        auto wit = [&](const Configuration<C>& c, const GroupElem& cell) {
          return json{{"alpha", to_json(alpha)}, {"beta", to_json(beta)}, {"configuration", to_json(c)}, {"cell", to_json(cell)}};
        };
        auto window_value = [&](const Configuration<C>& c, const FiniteSubset& N, const GroupElem& at) {
          std::vector<typename C::Elem> vals;
          for (const auto& s : N) vals.push_back(c.at(K.op(s, at)));
          auto fs = copies<C>(Cs, vals.size());
          return C::tuple_elem(fs, vals);
        };
        for (const auto& c : configs) {
          if (!x.rep.pass) break;
          auto tc = apply_gca(tau, c);
          auto ia = apply_gca(wp.first, tc), ib = apply_gca(wp.second, tc);
          auto ac = apply_gca(alpha, c), bc = apply_gca(beta, c);
          for (const auto& g : G.elements()) x.expect(ia.at(g) == ac.at(g), [&] { return wit(c, g); });
          for (const auto& h : H.elements()) x.expect(ib.at(h) == bc.at(h), [&] { return wit(c, h); });
          for (const auto& w : cells) {
            GroupElem at = tau.hom()(w);
            auto v = tc.at(w);
            x.expect(C::apply(prod.first, v) == C::apply(alpha.local_map(), window_value(c, S, at)) &&
                         C::apply(prod.second, v) == C::apply(beta.local_map(), window_value(c, T, at)),
                     [&] { return wit(c, w); });
          }
        }

        // Other local maps on the same data: recorded, not asserted.
        for (int j = 0; j < 5; ++j) {
          auto nu = random_other_morphism<C>(tau.local_map(), x.rng);
          if (!nu) continue;
          ++perturbed;
          auto cand = make_gca<C>(K, wp.universe, tau.hom(), Cs, wp.alphabet, tau.neighborhood(), *nu);
          bool passes = true;
          for (std::size_t ci = 0; ci < configs.size() && passes; ++ci) {
            auto ta = apply_gca(wp.first, apply_gca(cand, configs[ci]));
            auto tb = apply_gca(wp.second, apply_gca(cand, configs[ci]));
            auto ac = apply_gca(alpha, configs[ci]), bc = apply_gca(beta, configs[ci]);
            for (const auto& g : G.elements()) passes = passes && ta.at(g) == ac.at(g);
            for (const auto& h : H.elements()) passes = passes && tb.at(h) == bc.at(h);
          }
          if (passes) ++perturbed_passing;
        }
      }
    x.rep.details = {{"ball_size", cells.size()},
                     {"other_local_maps_tried", perturbed},
                     {"other_local_maps_also_mediating", perturbed_passing}};
    return x.done();
  }
}

// ---------------------------------------------------------------------------
// Registry.

struct Entry {
  const char* name;
  bool needs_elements;
};

inline const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {"category-laws", false},         {"product-universal", false},
      {"restriction-transitivity", false}, {"translation-restriction", false},
      {"pullback-functor", false},      {"shift-action", false},
      {"pushforward-functor", false},   {"pullback-pushforward-square", false},
      {"defining-equation", false},     {"equivariance-determines", false},
      {"composition", false},           {"chl-roundtrip", false},
      {"uniformity", false},            {"product", false},
      {"phi-equivariance", false},      {"generalized-composition", false},
      {"pullback-automaton", false},    {"factorization", false},
      {"weak-product", true},
  };
  return entries;
}

template <AlphabetCategory C>
CheckReport run(const std::string& name, const SuiteParams& p) {
  using Fn = CheckReport (*)(const SuiteParams&);
  static const std::map<std::string, Fn> table{
      {"category-laws", &category_laws<C>},
      {"product-universal", &product_universal<C>},
      {"restriction-transitivity", &restriction_transitivity<C>},
      {"translation-restriction", &translation_restriction<C>},
      {"pullback-functor", &pullback_functor<C>},
      {"shift-action", &shift_action<C>},
      {"pushforward-functor", &pushforward_functor<C>},
      {"pullback-pushforward-square", &pullback_pushforward_square<C>},
      {"defining-equation", &defining_equation<C>},
      {"equivariance-determines", &equivariance_determines<C>},
      {"composition", &composition<C>},
      {"chl-roundtrip", &chl_roundtrip<C>},
      {"uniformity", &uniformity<C>},
      {"product", &product<C>},
      {"phi-equivariance", &phi_equivariance<C>},
      {"generalized-composition", &generalized_composition<C>},
      {"pullback-automaton", &pullback_automaton<C>},
      {"factorization", &factorization<C>},
      {"weak-product", &weak_product_suite<C>},
  };
  auto it = table.find(name);
  if (it == table.end()) throw ParseError("unknown suite \"" + name + "\"");
  return it->second(p);
}

}  // namespace suites

inline std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& e : suites::registry()) out.emplace_back(e.name);
  return out;
}

inline bool is_suite(const std::string& name) {
  for (const auto& e : suites::registry())
    if (name == e.name) return true;
  return false;
}

/// Runs one named suite in the instance selected by the parameters.
inline CheckReport run_suite(const std::string& name, const SuiteParams& p) {
  if (!is_suite(name)) throw ParseError("unknown suite \"" + name + "\"");
  if (p.instance == "finvect") FinVect::space(p.p, 1);  // rejects a non-prime p
  return dispatch_instance(p.instance, [&]<class C>(std::type_identity<C>) { return suites::run<C>(name, p); });
}

/// The instance settings covered by "all": finset, finvect over F_2 and
/// F_3, finposet and rel.
inline std::vector<SuiteParams> all_instances(const SuiteParams& base) {
  std::vector<SuiteParams> out;
  for (const char* inst : {"finset", "finvect", "finvect", "finposet", "rel"}) {
    SuiteParams q = base;
    q.instance = inst;
    out.push_back(q);
  }
  out[1].p = 2;
  out[2].p = 3;
  return out;
}

/// Every suite in every instance it applies to, in a fixed order.
/// `names` restricts the suites; empty runs them all.
inline void run_all(const SuiteParams& base, const std::function<void(const CheckReport&)>& sink,
                    const std::vector<std::string>& names = {}) {
  for (const auto& q : all_instances(base))
    for (const auto& e : suites::registry()) {
      if (!names.empty() && std::find(names.begin(), names.end(), e.name) == names.end()) continue;
      if (e.needs_elements && q.instance == "rel") continue;
      sink(run_suite(e.name, q));
    }
}

}  // namespace catca
