#pragma once

// Law checkers: equivariance, locality, minimal neighborhoods, uniformity
// and extraction of a local rule from an equivariant morphism.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "catca/ca.hpp"
#include "catca/gca.hpp"
#include "catca/json_io.hpp"

namespace catca {

/// Outcome of one check. A failing report always carries a counterexample
/// holding enough serialized input to rerun the failing case.
struct CheckReport {
  std::string check;
  json params = json::object();
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  bool pass = true;
  std::optional<json> counterexample;
  json details;  // extra findings (neighborhoods, mediator notes); null if none

  void fail(json witness) {
    if (pass) counterexample = std::move(witness);
    pass = false;
  }

  json to_json() const {
    json out{{"check", check}, {"params", params}, {"seed", seed}, {"cases", cases}, {"verdict", pass ? "pass" : "fail"}};
    if (counterexample) out["counterexample"] = *counterexample;
    if (!details.is_null()) out["details"] = details;
    return out;
  }
};

// ---------------------------------------------------------------------------
// Equivariance.

/// Morphism mode: f o phi_g == phi_g o f for every g of a finite G.
template <AlphabetCategory C>
CheckReport check_equivariance(const typename C::Morphism& f, const Group& G, const typename C::Object& A,
                               const typename C::Object& B) {
  require_finite_universe(G);
  if (!(f.source == power<C>(A, G.order())) || !(f.target == power<C>(B, G.order())))
    throw TypeError("check_equivariance: morphism is not A^G -> B^G");
  CheckReport rep;
  rep.check = "equivariance";
  rep.params = {{"mode", "morphism"}, {"instance", C::name}, {"group", G.name()}};
  for (const auto& g : G.elements()) {
    ++rep.cases;
    if (!(C::compose(f, shift_morphism<C>(G, A, g)) == C::compose(shift_morphism<C>(G, B, g), f))) {
      rep.fail({{"g", to_json(g)}, {"group", to_json(G)}, {"morphism", Codec<C>::morphism(f)}});
      break;
    }
  }
  return rep;
}

/// (phi_g c)(x) = c(xg).
template <ConcreteCategory C>
Configuration<C> shift_configuration(const Configuration<C>& c, const GroupElem& g) {
  const Group& G = c.universe();
  G.require_member(g);
  return Configuration<C>::lazy(G, c.alphabet(), [c, g, G](const GroupElem& x) { return c.at(G.op(x, g)); });
}

/// Ball mode: tau(phi_g c)(x) == (phi_g tau c)(x) for the given
/// configurations, every g in ball(r) and every x in ball(r).
template <ConcreteCategory C>
CheckReport check_equivariance(const CellularAutomaton<C>& tau, const std::vector<Configuration<C>>& configs,
                               std::size_t r) {
  const Group& G = tau.universe();
  FiniteSubset B = ball(G, r);
  CheckReport rep;
  rep.check = "equivariance";
  rep.params = {{"mode", "ball"}, {"radius", r}, {"instance", C::name}, {"group", G.name()}};
  for (std::size_t k = 0; k < configs.size() && rep.pass; ++k) {
    auto image = apply(tau, configs[k]);
    for (const auto& g : B) {
      ++rep.cases;
      auto lhs = apply(tau, shift_configuration(configs[k], g));
      auto rhs = shift_configuration(image, g);
      for (const auto& x : B)
        if (lhs.at(x) != rhs.at(x)) {
          rep.fail({{"g", to_json(g)}, {"x", to_json(x)}, {"automaton", to_json(tau)}, {"configuration", k}});
          break;
        }
      if (!rep.pass) break;
    }
  }
  return rep;
}

/// phi-equivariance of a generalized automaton over finite groups:
/// tau o phi_{phi(h)} == phi_h o tau for every h.
template <AlphabetCategory C>
CheckReport check_phi_equivariance(const GeneralizedCA<C>& tau) {
  const Group& G = tau.source_universe();
  const Group& H = tau.target_universe();
  auto f = realize_gca(tau);
  CheckReport rep;
  rep.check = "phi-equivariance";
  rep.params = {{"instance", C::name}, {"group", G.name()}, {"target_group", H.name()}};
  for (const auto& h : H.elements()) {
    ++rep.cases;
    auto lhs = C::compose(f, shift_morphism<C>(G, tau.source_alphabet(), tau.hom()(h)));
    auto rhs = C::compose(shift_morphism<C>(H, tau.target_alphabet(), h), f);
    if (!(lhs == rhs)) {
      rep.fail({{"h", to_json(h)}, {"automaton", to_json(tau)}});
      break;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Locality.

/// Does h : A^I -> B factor through Res^I_S? Returns the factor if so.
template <AlphabetCategory C>
std::optional<typename C::Morphism> check_local(const typename C::Morphism& h, const typename C::Object& A,
                                                const FiniteSubset& I, const FiniteSubset& S) {
  if (!S.is_subset_of(I)) throw TypeError("check_local: S is not a subset of I");
  std::vector<std::size_t> pos;
  pos.reserve(S.size());
  for (const auto& s : S) pos.push_back(I.index_of(s));
  return C::local_factor(h, A, I.size(), pos);
}

template <AlphabetCategory C>
struct LocalWitness {
  FiniteSubset neighborhood;
  typename C::Morphism mu;  // h = mu o Res^I_neighborhood
};

/// The essential coordinates of h : A^I -> B together with the induced
/// factor. Throws if the candidate does not factor h (possible only for
/// posets, where the induced map may fail to be monotone).
template <AlphabetCategory C>
LocalWitness<C> minimal_neighborhood(const typename C::Morphism& h, const typename C::Object& A,
                                     const FiniteSubset& I) {
  auto coords = C::essential_coordinates(h, A, I.size());
  std::vector<GroupElem> elems;
  elems.reserve(coords.size());
  for (auto c : coords) elems.push_back(I[c]);
  FiniteSubset S(I.owner(), std::move(elems));
  auto mu = C::local_factor(h, A, I.size(), coords);
  if (!mu) throw Error(std::string("essential coordinates do not carry a local factor in ") + C::name);
  return LocalWitness<C>{std::move(S), std::move(*mu)};
}

/// Uniformity of f : A^G -> B^G over a finite G. Every pi_g o f is local
/// (G is finite), so the report records the minimal neighborhood of each
/// cell and whether they are the translates S_e g.
template <AlphabetCategory C>
CheckReport check_uniform(const typename C::Morphism& f, const Group& G, const typename C::Object& A,
                          const typename C::Object& B) {
  require_finite_universe(G);
  FiniteSubset all = FiniteSubset::whole(G);
  CheckReport rep;
  rep.check = "uniformity";
  rep.params = {{"instance", C::name}, {"group", G.name()}};
  json cells = json::array();
  std::optional<FiniteSubset> Se;
  bool translates = true;
  for (const auto& g : G.elements()) {
    ++rep.cases;
    try {
      auto w = minimal_neighborhood<C>(C::compose(cell_projection<C>(G, B, g), f), A, all);
      cells.push_back({{"cell", to_json(g)}, {"neighborhood", to_json(w.neighborhood)}});
      if (!Se) Se = w.neighborhood;
      else if (!(subset_translate(*Se, g) == w.neighborhood)) translates = false;
    } catch (const Error& e) {
      rep.fail({{"cell", to_json(g)}, {"error", e.what()}, {"morphism", Codec<C>::morphism(f)}});
      break;
    }
  }
  rep.details = {{"cells", cells}, {"translates", translates}};
  return rep;
}

// ---------------------------------------------------------------------------
// Extraction.

template <AlphabetCategory C>
struct ChlResult {
  std::optional<CellularAutomaton<C>> automaton;
  std::optional<GroupElem> counterexample;  // a g with f o phi_g != phi_g o f

  explicit operator bool() const { return automaton.has_value(); }
};

/// Recovers the automaton of an equivariant f : A^G -> B^G from the minimal
/// neighborhood of pi_e o f; rejects non-equivariant f with a witness g.
template <AlphabetCategory C>
ChlResult<C> chl_extract(const typename C::Morphism& f, const Group& G, const typename C::Object& A,
                         const typename C::Object& B) {
  auto eq = check_equivariance<C>(f, G, A, B);
  if (!eq.pass) return ChlResult<C>{std::nullopt, elem_from_json(G, eq.counterexample->at("g"))};
  auto w = minimal_neighborhood<C>(C::compose(cell_projection<C>(G, B, G.identity()), f), A, FiniteSubset::whole(G));
  return ChlResult<C>{make_ca<C>(G, A, B, w.neighborhood, w.mu), std::nullopt};
}

}  // namespace catca
