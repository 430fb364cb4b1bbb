#pragma once

// Cellular automata over a single universe: a finite neighborhood S of G
// and a local defining morphism mu : A^S -> B. Over a finite G the
// automaton is realized as the morphism A^G -> B^G whose g-th projection is
// mu o Res^G_S o phi_g; over any G with a concrete alphabet it acts on
// configurations by (tau c)(g) = mu((c(sg))_{s in S}).

#include <utility>
#include <vector>

#include "catca/alphabet.hpp"
#include "catca/configuration.hpp"
#include "catca/groups.hpp"

namespace catca {

template <AlphabetCategory C>
struct LocalRule {
  typename C::Object source;  // A
  typename C::Object target;  // B
  FiniteSubset neighborhood;  // S
  typename C::Morphism mu;    // A^S -> B
};

template <AlphabetCategory C>
void validate_rule(const LocalRule<C>& r) {
  if (!(r.mu.source == power<C>(r.source, r.neighborhood.size())))
    throw TypeError("local map must start at the power of the source alphabet over the neighborhood");
  if (!(r.mu.target == r.target)) throw TypeError("local map must end at the target alphabet");
}

template <AlphabetCategory C>
class CellularAutomaton {
 public:
  using Object = typename C::Object;
  using Morphism = typename C::Morphism;

  CellularAutomaton(Group universe, LocalRule<C> rule) : universe_(std::move(universe)), rule_(std::move(rule)) {
    if (!(rule_.neighborhood.owner() == universe_)) throw TypeError("neighborhood is not a subset of the universe");
    validate_rule(rule_);
  }

  const Group& universe() const { return universe_; }
  const LocalRule<C>& rule() const { return rule_; }
  const FiniteSubset& neighborhood() const { return rule_.neighborhood; }
  const Object& source_alphabet() const { return rule_.source; }
  const Object& target_alphabet() const { return rule_.target; }
  const Morphism& local_map() const { return rule_.mu; }

 private:
  Group universe_;
  LocalRule<C> rule_;
};

template <AlphabetCategory C>
CellularAutomaton<C> make_ca(const Group& G, const typename C::Object& A, const typename C::Object& B,
                             const FiniteSubset& S, const typename C::Morphism& mu) {
  return CellularAutomaton<C>(G, LocalRule<C>{A, B, S, mu});
}

/// Neighborhood {e}, local map the projection of A^{e}.
template <AlphabetCategory C>
CellularAutomaton<C> identity_ca(const Group& G, const typename C::Object& A) {
  return make_ca<C>(G, A, A, FiniteSubset::identity_set(G), power_projection<C>(A, 1, 0));
}

/// Neighborhood {g}, local map the projection: (tau c)(x) = c(gx). This is
/// the shift phi_g, (phi_g c)(x) = c(xg), exactly when g is central (always
/// in abelian universes); a non-central shift is not equivariant.
template <AlphabetCategory C>
CellularAutomaton<C> shift_ca(const Group& G, const typename C::Object& A, const GroupElem& g) {
  return make_ca<C>(G, A, A, FiniteSubset::singleton(G, g), power_projection<C>(A, 1, 0));
}

/// f applied cellwise: neighborhood {e}, local map f o pi_e.
template <AlphabetCategory C>
CellularAutomaton<C> pushforward_ca(const typename C::Morphism& f, const Group& G) {
  return make_ca<C>(G, f.source, f.target, FiniteSubset::identity_set(G),
                    C::compose(f, power_projection<C>(f.source, 1, 0)));
}

/// The reindexing A^{Sg} -> A^S with pi^{Sg}_{sg} = pi^S_s o (result).
template <AlphabetCategory C>
typename C::Morphism translation_iso(const typename C::Object& A, const FiniteSubset& S, const GroupElem& g) {
  FiniteSubset Sg = subset_translate(S, g);
  std::vector<std::size_t> pos;
  pos.reserve(S.size());
  for (const auto& s : S) pos.push_back(Sg.index_of(S.owner().op(s, g)));
  return index_pullback<C>(A, Sg.size(), pos);
}

// ---------------------------------------------------------------------------
// Morphisms on configuration objects of a finite universe.

inline void require_finite_universe(const Group& G) {
  if (!G.is_finite()) throw UnsupportedError("realization needs a finite universe, got " + G.name());
}

/// pi_g : A^G -> A.
template <AlphabetCategory C>
typename C::Morphism cell_projection(const Group& G, const typename C::Object& A, const GroupElem& g) {
  require_finite_universe(G);
  G.require_member(g);
  return power_projection<C>(A, G.order(), g.id());
}

/// f^*_A : A^J -> A^I for a map between finite subsets (positions via the
/// canonical order of each subset).
template <AlphabetCategory C, class Map>
typename C::Morphism subset_pullback(const typename C::Object& A, const FiniteSubset& I, const FiniteSubset& J, Map f) {
  std::vector<std::size_t> pos;
  pos.reserve(I.size());
  for (const auto& i : I) pos.push_back(J.index_of(f(i)));
  return index_pullback<C>(A, J.size(), pos);
}

/// phi_g = (R_g)^* : A^G -> A^G.
template <AlphabetCategory C>
typename C::Morphism shift_morphism(const Group& G, const typename C::Object& A, const GroupElem& g) {
  require_finite_universe(G);
  FiniteSubset all = FiniteSubset::whole(G);
  return subset_pullback<C>(A, all, all, right_translation(G, g));
}

/// Res^G_S.
template <AlphabetCategory C>
typename C::Morphism universe_restriction(const Group& G, const typename C::Object& A, const FiniteSubset& S) {
  require_finite_universe(G);
  return restriction<C>(A, FiniteSubset::whole(G), S);
}

/// mu o Res^G_S o phi_g : A^G -> B, the g-th component of the automaton.
template <AlphabetCategory C>
typename C::Morphism cell_component(const Group& G, const LocalRule<C>& rule, const GroupElem& shift) {
  return compose_all<C>(rule.mu, universe_restriction<C>(G, rule.source, rule.neighborhood),
                        shift_morphism<C>(G, rule.source, shift));
}

/// The unique morphism A^G -> B^G with pi_g o tau = mu o Res^G_S o phi_g.
template <AlphabetCategory C>
typename C::Morphism realize(const CellularAutomaton<C>& tau) {
  const Group& G = tau.universe();
  require_finite_universe(G);
  std::vector<typename C::Morphism> family;
  family.reserve(G.order());
  for (const auto& g : G.elements()) family.push_back(cell_component<C>(G, tau.rule(), g));
  return power_tuple<C>(power<C>(tau.source_alphabet(), G.order()), tau.target_alphabet(), family);
}

// ---------------------------------------------------------------------------
// Constructions on automata.

template <AlphabetCategory C>
void require_same_universe(const Group& a, const Group& b) {
  if (!(a == b)) throw TypeError("automata live over different universes");
}

/// sigma o tau with neighborhood TS and local map nu o Phi, where Phi is
/// the tuple over s in S of mu o (translation by s) o Res^{TS}_{Ts}.
template <AlphabetCategory C>
CellularAutomaton<C> compose_ca(const CellularAutomaton<C>& sigma, const CellularAutomaton<C>& tau) {
  require_same_universe<C>(sigma.universe(), tau.universe());
  if (!(tau.target_alphabet() == sigma.source_alphabet())) throw TypeError("compose_ca: alphabets do not chain");
  const auto& A = tau.source_alphabet();
  const FiniteSubset& T = tau.neighborhood();
  const FiniteSubset& S = sigma.neighborhood();
  FiniteSubset TS = subset_product(T, S);

  std::vector<typename C::Morphism> family;
  family.reserve(S.size());
  for (const auto& s : S) {
    FiniteSubset Ts = subset_translate(T, s);
    family.push_back(compose_all<C>(tau.local_map(), translation_iso<C>(A, T, s), restriction<C>(A, TS, Ts)));
  }
  auto Phi = power_tuple<C>(power<C>(A, TS.size()), tau.target_alphabet(), family);
  return make_ca<C>(tau.universe(), A, sigma.target_alphabet(), TS, C::compose(sigma.local_map(), Phi));
}

template <AlphabetCategory C>
struct ProductCA {
  CellularAutomaton<C> pairing;  // C^G -> (A x B)^G
  CellularAutomaton<C> first;    // (pi_A)_*^G
  CellularAutomaton<C> second;   // (pi_B)_*^G
};

/// The mediating automaton into (A x B)^G with neighborhood S u T and local
/// map pair(mu o Res^V_S, eta o Res^V_T), plus the two projection automata.
template <AlphabetCategory C>
ProductCA<C> product_ca(const CellularAutomaton<C>& alpha, const CellularAutomaton<C>& beta) {
  require_same_universe<C>(alpha.universe(), beta.universe());
  if (!(alpha.source_alphabet() == beta.source_alphabet())) throw TypeError("product_ca: source alphabets differ");
  const auto& Csrc = alpha.source_alphabet();
  FiniteSubset V = subset_union(alpha.neighborhood(), beta.neighborhood());
  auto nu = pair<C>(C::compose(alpha.local_map(), restriction<C>(Csrc, V, alpha.neighborhood())),
                    C::compose(beta.local_map(), restriction<C>(Csrc, V, beta.neighborhood())));
  auto prod = binary_product<C>(alpha.target_alphabet(), beta.target_alphabet());
  const Group& G = alpha.universe();
  return ProductCA<C>{make_ca<C>(G, Csrc, prod.object, V, nu), pushforward_ca<C>(prod.first, G),
                      pushforward_ca<C>(prod.second, G)};
}

// ---------------------------------------------------------------------------
// Point semantics.

/// Builds the element of A^S read by a cell from the neighbor values.
template <ConcreteCategory C>
typename C::Elem read_window(const LocalRule<C>& rule, const Configuration<C>& c, const GroupElem& anchor) {
  const Group& G = c.universe();
  std::vector<typename C::Elem> values;
  values.reserve(rule.neighborhood.size());
  for (const auto& s : rule.neighborhood) values.push_back(c.at(G.op(s, anchor)));
  auto factors = copies<C>(rule.source, values.size());
  return C::tuple_elem(factors, values);
}

template <ConcreteCategory C>
Configuration<C> apply(const CellularAutomaton<C>& tau, const Configuration<C>& c) {
  require_same_universe<C>(tau.universe(), c.universe());
  if (!(c.alphabet() == tau.source_alphabet())) throw TypeError("configuration alphabet does not match the automaton");
  auto rule = tau.rule();
  return Configuration<C>::lazy(tau.universe(), tau.target_alphabet(), [rule, c](const GroupElem& g) {
    return C::apply(rule.mu, read_window<C>(rule, c, g));
  });
}

/// tau applied `steps` times (tau must be an endomorphism).
template <ConcreteCategory C>
Configuration<C> iterate(const CellularAutomaton<C>& tau, Configuration<C> c, std::size_t steps) {
  for (std::size_t i = 0; i < steps; ++i) c = apply(tau, c);
  return c;
}

}  // namespace catca
