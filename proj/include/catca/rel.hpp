#pragma once

// Rel: finite sets and binary relations. The product of a family is its
// disjoint union, with the converses of the summand injections as
// projections. Objects have no points here, so Rel only takes part in
// morphism-level constructions.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "catca/alphabet.hpp"

namespace catca {

struct Rel {
  static constexpr const char* name = "rel";
  static constexpr bool has_elements = false;

  struct Object {
    std::size_t size = 0;
    friend bool operator==(const Object&, const Object&) = default;
  };

  /// Boolean matrix source.size x target.size.
  struct Morphism {
    Object source;
    Object target;
    std::vector<std::uint8_t> related;

    bool relates(std::size_t x, std::size_t y) const { return related[x * target.size + y] != 0; }
    std::vector<std::pair<std::size_t, std::size_t>> pairs() const {
      std::vector<std::pair<std::size_t, std::size_t>> out;
      for (std::size_t x = 0; x < source.size; ++x)
        for (std::size_t y = 0; y < target.size; ++y)
          if (relates(x, y)) out.emplace_back(x, y);
      return out;
    }
    friend bool operator==(const Morphism&, const Morphism&) = default;
  };

  static Object object(std::size_t n) { return Object{n}; }

  static Morphism empty(Object source, Object target) {
    return Morphism{source, target, std::vector<std::uint8_t>(source.size * target.size, 0)};
  }

  static Morphism make(Object source, Object target, std::span<const std::pair<std::size_t, std::size_t>> pairs) {
    Morphism m = empty(source, target);
    for (auto [x, y] : pairs) {
      if (x >= source.size || y >= target.size) throw TypeError("related pair out of range");
      m.related[x * target.size + y] = 1;
    }
    return m;
  }

  static Morphism make(Object source, Object target, std::initializer_list<std::pair<std::size_t, std::size_t>> pairs) {
    return make(source, target, std::span<const std::pair<std::size_t, std::size_t>>(pairs.begin(), pairs.size()));
  }

  static Morphism compose(const Morphism& g, const Morphism& f) {
    if (!(f.target == g.source)) throw TypeError("rel compose: target/source mismatch");
    Morphism out = empty(f.source, g.target);
    for (std::size_t x = 0; x < f.source.size; ++x)
      for (std::size_t y = 0; y < f.target.size; ++y) {
        if (!f.relates(x, y)) continue;
        for (std::size_t z = 0; z < g.target.size; ++z)
          if (g.relates(y, z)) out.related[x * g.target.size + z] = 1;
      }
    return out;
  }

  static Morphism identity(const Object& A) {
    Morphism m = empty(A, A);
    for (std::size_t i = 0; i < A.size; ++i) m.related[i * A.size + i] = 1;
    return m;
  }

  static Object product(std::span<const Object> factors) {
    Object out{0};
    for (const auto& f : factors) out.size += f.size;
    return out;
  }

  static std::size_t offset(std::span<const Object> factors, std::size_t i) {
    std::size_t o = 0;
    for (std::size_t j = 0; j < i; ++j) o += factors[j].size;
    return o;
  }

  /// Relates (i, a) to a.
  static Morphism projection(std::span<const Object> factors, std::size_t i) {
    Morphism m = empty(product(factors), factors[i]);
    const std::size_t o = offset(factors, i);
    for (std::size_t a = 0; a < factors[i].size; ++a) m.related[(o + a) * factors[i].size + a] = 1;
    return m;
  }

  /// Relates x to (i, a) whenever family[i] relates x to a.
  static Morphism tuple(const Object& X, std::span<const Object> factors, std::span<const Morphism> family) {
    if (family.size() != factors.size()) throw TypeError("tuple: family and factor counts differ");
    Object sum = product(factors);
    Morphism m = empty(X, sum);
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (!(family[i].source == X) || !(family[i].target == factors[i])) throw TypeError("tuple: family member mistyped");
      const std::size_t o = offset(factors, i);
      for (std::size_t x = 0; x < X.size; ++x)
        for (std::size_t a = 0; a < factors[i].size; ++a)
          if (family[i].relates(x, a)) m.related[x * sum.size + o + a] = 1;
    }
    return m;
  }

  /// h : A^n -> B factors through Res onto `positions` iff nothing outside
  /// those summands is related to anything.
  static std::optional<Morphism> local_factor(const Morphism& h, const Object& A, std::size_t n,
                                              std::span<const std::size_t> positions) {
    if (!(h.source == power<Rel>(A, n))) throw TypeError("morphism source is not the expected power object");
    std::vector<bool> kept(n, false);
    for (auto p : positions) kept[p] = true;
    for (std::size_t b = 0; b < n; ++b)
      if (!kept[b] && summand_used(h, A.size, b)) return std::nullopt;
    Object src = power<Rel>(A, positions.size());
    Morphism mu = empty(src, h.target);
    for (std::size_t j = 0; j < positions.size(); ++j)
      for (std::size_t a = 0; a < A.size; ++a)
        for (std::size_t y = 0; y < h.target.size; ++y)
          if (h.relates(positions[j] * A.size + a, y)) mu.related[(j * A.size + a) * h.target.size + y] = 1;
    if (!(compose(mu, restriction<Rel>(A, n, positions)) == h)) return std::nullopt;
    return mu;
  }

  static std::vector<std::size_t> essential_coordinates(const Morphism& h, const Object& A, std::size_t n) {
    if (!(h.source == power<Rel>(A, n))) throw TypeError("morphism source is not the expected power object");
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < n; ++b)
      if (summand_used(h, A.size, b)) out.push_back(b);
    return out;
  }

 private:
  static bool summand_used(const Morphism& h, std::size_t k, std::size_t b) {
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t y = 0; y < h.target.size; ++y)
        if (h.relates(b * k + a, y)) return true;
    return false;
  }
};

static_assert(AlphabetCategory<Rel>);
static_assert(!ConcreteCategory<Rel>);

}  // namespace catca
