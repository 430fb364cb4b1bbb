#pragma once

// Generalized automata A^G -> B^H driven by a group homomorphism
// phi : H -> G: cell h reads the window S . phi(h) of the source
// configuration. Ordinary automata are the phi = id case.

#include <utility>
#include <vector>

#include "catca/ca.hpp"

namespace catca {

template <AlphabetCategory C>
class GeneralizedCA {
 public:
  using Object = typename C::Object;
  using Morphism = typename C::Morphism;

  /// `hom` maps the target universe H into the source universe G.
  GeneralizedCA(Group source_universe, Group target_universe, GroupHom hom, LocalRule<C> rule)
      : source_universe_(std::move(source_universe)),
        target_universe_(std::move(target_universe)),
        hom_(std::move(hom)),
        rule_(std::move(rule)) {
    if (!(hom_.source() == target_universe_) || !(hom_.target() == source_universe_))
      throw TypeError("homomorphism must map the target universe into the source universe");
    if (!(rule_.neighborhood.owner() == source_universe_))
      throw TypeError("neighborhood is not a subset of the source universe");
    validate_rule(rule_);
  }

  const Group& source_universe() const { return source_universe_; }
  const Group& target_universe() const { return target_universe_; }
  const GroupHom& hom() const { return hom_; }
  const LocalRule<C>& rule() const { return rule_; }
  const FiniteSubset& neighborhood() const { return rule_.neighborhood; }
  const Object& source_alphabet() const { return rule_.source; }
  const Object& target_alphabet() const { return rule_.target; }
  const Morphism& local_map() const { return rule_.mu; }

 private:
  Group source_universe_;
  Group target_universe_;
  GroupHom hom_;
  LocalRule<C> rule_;
};

template <AlphabetCategory C>
GeneralizedCA<C> make_gca(const Group& G, const Group& H, const GroupHom& phi, const typename C::Object& A,
                          const typename C::Object& B, const FiniteSubset& S, const typename C::Morphism& mu) {
  return GeneralizedCA<C>(G, H, phi, LocalRule<C>{A, B, S, mu});
}

/// An ordinary automaton viewed as an id-automaton.
template <AlphabetCategory C>
GeneralizedCA<C> as_gca(const CellularAutomaton<C>& tau) {
  return GeneralizedCA<C>(tau.universe(), tau.universe(), GroupHom::identity(tau.universe()), tau.rule());
}

/// The unique A^G -> B^H with pi_h o tau = mu o Res^G_S o phi_{phi(h)}.
template <AlphabetCategory C>
typename C::Morphism realize_gca(const GeneralizedCA<C>& tau) {
  require_finite_universe(tau.source_universe());
  require_finite_universe(tau.target_universe());
  const Group& G = tau.source_universe();
  std::vector<typename C::Morphism> family;
  for (const auto& h : tau.target_universe().elements())
    family.push_back(cell_component<C>(G, tau.rule(), tau.hom()(h)));
  return power_tuple<C>(power<C>(tau.source_alphabet(), G.order()), tau.target_alphabet(), family);
}

/// sigma o tau for a phi-automaton tau (neighborhood T in G) followed by a
/// psi-automaton sigma (neighborhood S in H): a (phi o psi)-automaton with
/// neighborhood T phi(S).
template <AlphabetCategory C>
GeneralizedCA<C> compose_gca(const GeneralizedCA<C>& sigma, const GeneralizedCA<C>& tau) {
  if (!(tau.target_universe() == sigma.source_universe())) throw TypeError("compose_gca: universes do not chain");
  if (!(tau.target_alphabet() == sigma.source_alphabet())) throw TypeError("compose_gca: alphabets do not chain");
  const GroupHom& phi = tau.hom();
  const auto& A = tau.source_alphabet();
  const FiniteSubset& T = tau.neighborhood();
  const FiniteSubset& S = sigma.neighborhood();
  FiniteSubset TphiS = subset_product(T, subset_image(S, phi));

  std::vector<typename C::Morphism> family;
  family.reserve(S.size());
  for (const auto& s : S) {
    GroupElem ps = phi(s);
    family.push_back(compose_all<C>(tau.local_map(), translation_iso<C>(A, T, ps),
                                    restriction<C>(A, TphiS, subset_translate(T, ps))));
  }
  auto Phi = power_tuple<C>(power<C>(A, TphiS.size()), tau.target_alphabet(), family);
  return make_gca<C>(tau.source_universe(), sigma.target_universe(), compose(phi, sigma.hom()), A,
                     sigma.target_alphabet(), TphiS, C::compose(sigma.local_map(), Phi));
}

/// phi^*_A : A^G -> A^H as a phi-automaton: neighborhood {e}, projection.
template <AlphabetCategory C>
GeneralizedCA<C> pullback_gca(const GroupHom& phi, const typename C::Object& A) {
  const Group& G = phi.target();
  return make_gca<C>(G, phi.source(), phi, A, A, FiniteSubset::identity_set(G), power_projection<C>(A, 1, 0));
}

/// phi^*_A built directly as an index pullback along phi : H -> G.
template <AlphabetCategory C>
typename C::Morphism pullback_morphism(const GroupHom& phi, const typename C::Object& A) {
  require_finite_universe(phi.source());
  require_finite_universe(phi.target());
  return subset_pullback<C>(A, FiniteSubset::whole(phi.source()), FiniteSubset::whole(phi.target()),
                            [&](const GroupElem& h) { return phi(h); });
}

template <AlphabetCategory C>
struct Factorization {
  CellularAutomaton<C> automaton;  // tau_G over the source universe
  GroupHom hom;                    // phi, so that tau = phi^* o tau_G
};

/// Returns the stored phi and the automaton with the same local data over G.
template <AlphabetCategory C>
Factorization<C> factorize(const GeneralizedCA<C>& tau) {
  return Factorization<C>{CellularAutomaton<C>(tau.source_universe(), tau.rule()), tau.hom()};
}

template <AlphabetCategory C>
struct WeakProduct {
  Group universe;                 // G * H
  typename C::Object alphabet;    // A x B
  GeneralizedCA<C> first;         // (A x B)^{G*H} -> A^G
  GeneralizedCA<C> second;        // (A x B)^{G*H} -> B^H
};

/// The two projections out of (A x B)^{G*H}: sample along the embedded
/// factor and project the cell value.
template <AlphabetCategory C>
WeakProduct<C> weak_product(const typename C::Object& A, const typename C::Object& B, const Group& G, const Group& H) {
  Group W = Group::free_product(G, H);
  auto prod = binary_product<C>(A, B);
  auto e = FiniteSubset::identity_set(W);
  auto pick = [&](const typename C::Morphism& pi) { return C::compose(pi, power_projection<C>(prod.object, 1, 0)); };
  return WeakProduct<C>{W, prod.object,
                        make_gca<C>(W, G, GroupHom::embedding(W, Side::L), prod.object, A, e, pick(prod.first)),
                        make_gca<C>(W, H, GroupHom::embedding(W, Side::R), prod.object, B, e, pick(prod.second))};
}

/// A mediator C^K -> (A x B)^{G*H} for a phi-automaton alpha : C^K -> A^G
/// and a psi-automaton beta : C^K -> B^H: the gamma-automaton with
/// gamma = [phi, psi], neighborhood S u T and local map
/// pair(mu o Res^V_S, eta o Res^V_T).
template <AlphabetCategory C>
GeneralizedCA<C> weak_product_mediator(const GeneralizedCA<C>& alpha, const GeneralizedCA<C>& beta) {
  if (!(alpha.source_universe() == beta.source_universe())) throw TypeError("mediator: source universes differ");
  if (!(alpha.source_alphabet() == beta.source_alphabet())) throw TypeError("mediator: source alphabets differ");
  const Group& K = alpha.source_universe();
  Group W = Group::free_product(alpha.target_universe(), beta.target_universe());
  GroupHom gamma = GroupHom::pair(W, alpha.hom(), beta.hom());
  const auto& Csrc = alpha.source_alphabet();
  FiniteSubset V = subset_union(alpha.neighborhood(), beta.neighborhood());
  auto nu = pair<C>(C::compose(alpha.local_map(), restriction<C>(Csrc, V, alpha.neighborhood())),
                    C::compose(beta.local_map(), restriction<C>(Csrc, V, beta.neighborhood())));
  auto prod = binary_product<C>(alpha.target_alphabet(), beta.target_alphabet());
  return make_gca<C>(K, W, gamma, Csrc, prod.object, V, nu);
}

template <ConcreteCategory C>
Configuration<C> apply_gca(const GeneralizedCA<C>& tau, const Configuration<C>& c) {
  if (!(c.universe() == tau.source_universe())) throw TypeError("configuration universe does not match the automaton");
  if (!(c.alphabet() == tau.source_alphabet())) throw TypeError("configuration alphabet does not match the automaton");
  auto rule = tau.rule();
  auto phi = tau.hom();
  return Configuration<C>::lazy(tau.target_universe(), tau.target_alphabet(), [rule, phi, c](const GroupElem& h) {
    return C::apply(rule.mu, read_window<C>(rule, c, phi(h)));
  });
}

}  // namespace catca
