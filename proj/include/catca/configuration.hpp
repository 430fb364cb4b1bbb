#pragma once

// Point-level configurations c : G -> A for concrete alphabets.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "catca/alphabet.hpp"
#include "catca/groups.hpp"

namespace catca {

/// A total assignment of alphabet elements to the cells of a universe.
///
/// Dense configurations list one value per element of a finite group in
/// canonical order. Sparse ones store a finite support and a default value.
/// Lazy ones evaluate a closure on demand; with memoization each cell is
/// computed at most once, under a per-configuration lock, so a shared lazy
/// configuration may be read from several threads.
template <ConcreteCategory C>
class Configuration {
 public:
  using Object = typename C::Object;
  using Elem = typename C::Elem;
  using Eval = std::function<Elem(const GroupElem&)>;
  enum class Kind { Dense, Sparse, Lazy };

  static Configuration dense(Group G, Object A, std::vector<Elem> values) {
    if (!G.is_finite()) throw UnsupportedError("dense configurations need a finite universe");
    if (values.size() != G.order()) throw TypeError("dense configuration needs one value per group element");
    for (const auto& v : values)
      if (!C::contains(A, v)) throw TypeError("configuration value outside the alphabet");
    auto s = std::make_shared<State>(std::move(G), std::move(A), Kind::Dense);
    s->values = std::move(values);
    return Configuration(std::move(s));
  }

  static Configuration sparse(Group G, Object A, std::map<GroupElem, Elem> support, Elem fallback) {
    if (!C::contains(A, fallback)) throw TypeError("default value outside the alphabet");
    for (const auto& [g, v] : support) {
      G.require_member(g);
      if (!C::contains(A, v)) throw TypeError("configuration value outside the alphabet");
    }
    auto s = std::make_shared<State>(std::move(G), std::move(A), Kind::Sparse);
    s->support = std::move(support);
    s->fallback = std::move(fallback);
    return Configuration(std::move(s));
  }

  static Configuration lazy(Group G, Object A, Eval eval, bool memoize = true) {
    auto s = std::make_shared<State>(std::move(G), std::move(A), Kind::Lazy);
    s->eval = std::move(eval);
    s->memoize = memoize;
    return Configuration(std::move(s));
  }

  /// c(g).
  Elem at(const GroupElem& g) const {
    const State& s = *state_;
    s.universe.require_member(g);
    switch (s.kind) {
      case Kind::Dense: return s.values[g.id()];
      case Kind::Sparse: {
        auto it = s.support.find(g);
        return it == s.support.end() ? s.fallback : it->second;
      }
      case Kind::Lazy: {
        if (!s.memoize) return s.eval(g);
        std::lock_guard lock(s.mutex);
        if (auto it = s.cache.find(g); it != s.cache.end()) return it->second;
        Elem v = s.eval(g);
        s.cache.emplace(g, v);
        return v;
      }
    }
    throw TypeError("unknown configuration kind");
  }

  std::vector<Elem> window(const FiniteSubset& cells) const {
    std::vector<Elem> out;
    out.reserve(cells.size());
    for (const auto& g : cells) out.push_back(at(g));
    return out;
  }

  const Group& universe() const { return state_->universe; }
  const Object& alphabet() const { return state_->alphabet; }
  Kind kind() const { return state_->kind; }
  const std::vector<Elem>& values() const { return state_->values; }
  const std::map<GroupElem, Elem>& support() const { return state_->support; }
  const Elem& fallback() const { return state_->fallback; }

 private:
  struct State {
    State(Group g, Object a, Kind k) : universe(std::move(g)), alphabet(std::move(a)), kind(k) {}
    Group universe;
    Object alphabet;
    Kind kind;
    std::vector<Elem> values;
    std::map<GroupElem, Elem> support;
    Elem fallback{};
    Eval eval;
    bool memoize = true;
    mutable std::mutex mutex;
    mutable std::map<GroupElem, Elem> cache;
  };

  explicit Configuration(std::shared_ptr<const State> s) : state_(std::move(s)) {}

  std::shared_ptr<const State> state_;
};

/// Configurations over infinite universes are compared on a finite window.
template <ConcreteCategory C>
bool agree_on(const Configuration<C>& a, const Configuration<C>& b, const FiniteSubset& window) {
  for (const auto& g : window)
    if (a.at(g) != b.at(g)) return false;
  return true;
}

/// Every configuration of a finite universe, in mixed-radix order of the
/// alphabet's element list.
template <ConcreteCategory C>
std::vector<Configuration<C>> all_configurations(const Group& G, const typename C::Object& A) {
  auto elems = C::elements(A);
  detail::Radix r = detail::Radix::uniform(elems.size(), G.order());
  std::vector<Configuration<C>> out;
  out.reserve(r.total());
  for (std::size_t code = 0; code < r.total(); ++code) {
    std::vector<typename C::Elem> values;
    for (std::size_t i = 0; i < G.order(); ++i) values.push_back(elems[r.digit(code, i)]);
    out.push_back(Configuration<C>::dense(G, A, std::move(values)));
  }
  return out;
}

}  // namespace catca
