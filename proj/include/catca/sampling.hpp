#pragma once

// Seeded generators for property checks: small groups, alphabets,
// morphisms, automata and configurations. Draws use rng() % n so a
// sequence is reproducible from its seed on every platform.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "catca/ca.hpp"
#include "catca/configuration.hpp"
#include "catca/finposet.hpp"
#include "catca/finset.hpp"
#include "catca/finvect.hpp"
#include "catca/groups.hpp"
#include "catca/rel.hpp"

namespace catca {

using Rng = std::mt19937_64;

inline std::size_t draw(Rng& rng, std::size_t n) {
  if (n == 0) throw Error("draw from an empty range");
  return static_cast<std::size_t>(rng() % n);
}

template <class T>
const T& draw_from(Rng& rng, const std::vector<T>& xs) {
  return xs[draw(rng, xs.size())];
}

/// Finite groups with at most `max_order` elements: cyclic groups, plus S_3.
inline std::vector<Group> group_catalog(std::size_t max_order) {
  std::vector<Group> out;
  for (std::size_t n = 1; n <= max_order; ++n) out.push_back(Group::cyclic(n));
  if (max_order >= 6) out.push_back(Group::symmetric(3));
  return out;
}

/// Alphabets whose carrier has at most `max_size` elements (FinVect:
/// dimension at most `max_size`, over F_p).
template <AlphabetCategory C>
std::vector<typename C::Object> alphabet_catalog(std::size_t max_size, std::uint32_t p = 2) {
  std::vector<typename C::Object> out;
  if constexpr (std::is_same_v<C, FinVect>) {
    for (std::size_t d = 1; d <= max_size; ++d) out.push_back(FinVect::space(p, d));
  } else if constexpr (std::is_same_v<C, FinPoset>) {
    for (std::size_t n = 1; n <= max_size; ++n) out.push_back(FinPoset::chain(n));
    if (max_size >= 2) out.push_back(FinPoset::antichain(2));
    if (max_size >= 3) {
      out.push_back(FinPoset::antichain(3));
      out.push_back(FinPoset::poset({{1, 1, 1}, {0, 1, 0}, {0, 0, 1}}));  // 0 below two incomparable tops
      out.push_back(FinPoset::poset({{1, 0, 1}, {0, 1, 1}, {0, 0, 1}}));  // two incomparable bottoms below 2
    }
  } else {
    for (std::size_t n = 1; n <= max_size; ++n) out.push_back(C::object(n));
  }
  return out;
}

/// A uniformly drawn table, matrix or relation; for posets a random
/// monotone map built along a linear extension of the source.
template <AlphabetCategory C>
typename C::Morphism random_morphism(const typename C::Object& src, const typename C::Object& tgt, Rng& rng) {
  if constexpr (std::is_same_v<C, FinSet>) {
    std::vector<std::size_t> t(src.size);
    for (auto& v : t) v = draw(rng, tgt.size);
    return FinSet::make(src, tgt, std::move(t));
  } else if constexpr (std::is_same_v<C, FinVect>) {
    std::vector<std::vector<std::int64_t>> rows(tgt.dim, std::vector<std::int64_t>(src.dim));
    for (auto& row : rows)
      for (auto& v : row) v = static_cast<std::int64_t>(draw(rng, src.p));
    return FinVect::make(src, tgt, rows);
  } else if constexpr (std::is_same_v<C, Rel>) {
    Rel::Morphism m = Rel::empty(src, tgt);
    for (auto& v : m.related) v = static_cast<std::uint8_t>(draw(rng, 2));
    return m;
  } else {
    const std::size_t n = src.size(), k = tgt.size();
    std::vector<std::size_t> order(n), below(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      order[x] = x;
      for (std::size_t y = 0; y < n; ++y)
        if (y != x && src.leq(y, x)) ++below[x];
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
    for (int attempt = 0; attempt < 16; ++attempt) {
      std::vector<std::size_t> t(n, 0);
      bool stuck = false;
      for (std::size_t i = 0; i < n && !stuck; ++i) {
        const std::size_t x = order[i];
        std::vector<std::size_t> ok;
        for (std::size_t v = 0; v < k; ++v) {
          bool fits = true;
          for (std::size_t j = 0; j < i && fits; ++j)
            if (src.leq(order[j], x) && !tgt.leq(t[order[j]], v)) fits = false;
          if (fits) ok.push_back(v);
        }
        if (ok.empty()) stuck = true;
        else t[x] = draw_from(rng, ok);
      }
      if (!stuck) return FinPoset::make(src, tgt, std::move(t));
    }
    return FinPoset::constant(src, tgt, draw(rng, k));
  }
}

/// A random morphism different from `avoid`; nullopt if none turned up.
template <AlphabetCategory C>
std::optional<typename C::Morphism> random_other_morphism(const typename C::Morphism& avoid, Rng& rng,
                                                          int attempts = 64) {
  for (int i = 0; i < attempts; ++i) {
    auto m = random_morphism<C>(avoid.source, avoid.target, rng);
    if (!(m == avoid)) return m;
  }
  return std::nullopt;
}

/// Every morphism src -> tgt (monotone ones for posets). Throws past `limit`.
template <AlphabetCategory C>
std::vector<typename C::Morphism> all_morphisms(const typename C::Object& src, const typename C::Object& tgt,
                                                std::size_t limit = 1u << 16) {
  auto count_codes = [&](std::size_t base, std::size_t len) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < len; ++i) {
      total *= base;
      if (total > limit) throw UnsupportedError("hom-set too large to enumerate");
    }
    return total;
  };
  std::vector<typename C::Morphism> out;
  if constexpr (std::is_same_v<C, FinVect>) {
    const std::size_t len = src.dim * tgt.dim;
    const std::size_t total = count_codes(src.p, len);
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<std::vector<std::int64_t>> rows(tgt.dim, std::vector<std::int64_t>(src.dim));
      std::size_t c = code;
      for (auto& row : rows)
        for (auto& v : row) {
          v = static_cast<std::int64_t>(c % src.p);
          c /= src.p;
        }
      out.push_back(FinVect::make(src, tgt, rows));
    }
  } else if constexpr (std::is_same_v<C, Rel>) {
    const std::size_t total = count_codes(2, src.size * tgt.size);
    for (std::size_t code = 0; code < total; ++code) {
      Rel::Morphism m = Rel::empty(src, tgt);
      for (std::size_t i = 0; i < m.related.size(); ++i) m.related[i] = static_cast<std::uint8_t>((code >> i) & 1u);
      out.push_back(std::move(m));
    }
  } else {
    std::size_t n, k;
    if constexpr (std::is_same_v<C, FinSet>) n = src.size, k = tgt.size;
    else n = src.size(), k = tgt.size();
    const std::size_t total = count_codes(k, n);
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<std::size_t> t(n);
      std::size_t c = code;
      for (auto& v : t) {
        v = c % k;
        c /= k;
      }
      if constexpr (std::is_same_v<C, FinPoset>) {
        if (!FinPoset::is_monotone(src, tgt, t)) continue;
      }
      out.push_back(C::make(src, tgt, std::move(t)));
    }
  }
  return out;
}

/// A subset with between 1 and `max_size` elements drawn from `pool`.
inline FiniteSubset random_subset(const FiniteSubset& pool, std::size_t max_size, Rng& rng) {
  std::vector<GroupElem> elems(pool.begin(), pool.end());
  const std::size_t k = 1 + draw(rng, std::min(max_size, elems.size()));
  for (std::size_t i = 0; i < k; ++i) std::swap(elems[i], elems[i + draw(rng, elems.size() - i)]);
  elems.resize(k);
  return FiniteSubset(pool.owner(), std::move(elems));
}

/// Pool of neighborhood candidates: all of a finite G, ball(G, 1) otherwise.
inline FiniteSubset neighborhood_pool(const Group& G) {
  return G.is_finite() ? FiniteSubset::whole(G) : ball(G, 1);
}

template <AlphabetCategory C>
CellularAutomaton<C> random_ca(const Group& G, const typename C::Object& A, const typename C::Object& B,
                               std::size_t max_neighborhood, Rng& rng) {
  FiniteSubset S = random_subset(neighborhood_pool(G), max_neighborhood, rng);
  return make_ca<C>(G, A, B, S, random_morphism<C>(power<C>(A, S.size()), B, rng));
}

template <ConcreteCategory C>
typename C::Elem random_elem(const typename C::Object& A, Rng& rng) {
  return draw_from(rng, C::elements(A));
}

template <ConcreteCategory C>
Configuration<C> random_dense(const Group& G, const typename C::Object& A, Rng& rng) {
  auto elems = C::elements(A);
  std::vector<typename C::Elem> values(G.order());
  for (auto& v : values) v = draw_from(rng, elems);
  return Configuration<C>::dense(G, A, std::move(values));
}

/// Random values on `cells`, a random default elsewhere.
template <ConcreteCategory C>
Configuration<C> random_sparse(const Group& G, const typename C::Object& A, const FiniteSubset& cells, Rng& rng) {
  auto elems = C::elements(A);
  std::map<GroupElem, typename C::Elem> support;
  for (const auto& g : cells) support[g] = draw_from(rng, elems);
  return Configuration<C>::sparse(G, A, std::move(support), draw_from(rng, elems));
}

}  // namespace catca
