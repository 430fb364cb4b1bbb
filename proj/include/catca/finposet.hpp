#pragma once

// FinPoset: finite posets and monotone maps. An object is a finite product
// of explicitly given base posets, ordered coordinatewise; elements are
// mixed-radix codes over the base factors.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "catca/alphabet.hpp"

namespace catca {

struct FinPoset {
  static constexpr const char* name = "finposet";
  static constexpr bool has_elements = true;
  /// Largest base poset accepted by the exhaustive order validator.
  static constexpr std::size_t kValidationCap = 6;

  struct Base {
    std::size_t size = 0;
    std::vector<std::uint8_t> leq;  // row-major size x size
    friend bool operator==(const Base&, const Base&) = default;
  };

  struct Object {
    std::vector<std::shared_ptr<const Base>> factors;

    std::size_t size() const {
      std::size_t n = 1;
      for (const auto& f : factors) n *= f->size;
      return n;
    }

    bool leq(std::size_t x, std::size_t y) const {
      for (std::size_t i = factors.size(); i-- > 0;) {
        const Base& b = *factors[i];
        if (!b.leq[(x % b.size) * b.size + (y % b.size)]) return false;
        x /= b.size;
        y /= b.size;
      }
      return true;
    }

    friend bool operator==(const Object& a, const Object& b) {
      if (a.factors.size() != b.factors.size()) return false;
      for (std::size_t i = 0; i < a.factors.size(); ++i)
        if (a.factors[i] != b.factors[i] && !(*a.factors[i] == *b.factors[i])) return false;
      return true;
    }
  };

  struct Morphism {
    Object source;
    Object target;
    std::vector<std::size_t> table;
    friend bool operator==(const Morphism&, const Morphism&) = default;
  };

  using Elem = std::size_t;

  /// A base poset from its order relation; reflexivity, antisymmetry and
  /// transitivity are checked exhaustively.
  static Object poset(const std::vector<std::vector<bool>>& order) {
    const std::size_t n = order.size();
    if (n > kValidationCap) throw UnsupportedError("poset larger than the validation cap of " + std::to_string(kValidationCap));
    Base b{n, std::vector<std::uint8_t>(n * n, 0)};
    for (std::size_t x = 0; x < n; ++x) {
      if (order[x].size() != n) throw TypeError("order relation must be square");
      for (std::size_t y = 0; y < n; ++y) b.leq[x * n + y] = order[x][y] ? 1 : 0;
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (!b.leq[x * n + x]) throw TypeError("order relation is not reflexive");
      for (std::size_t y = 0; y < n; ++y) {
        if (x != y && b.leq[x * n + y] && b.leq[y * n + x]) throw TypeError("order relation is not antisymmetric");
        for (std::size_t z = 0; z < n; ++z)
          if (b.leq[x * n + y] && b.leq[y * n + z] && !b.leq[x * n + z])
            throw TypeError("order relation is not transitive");
      }
    }
    return Object{{std::make_shared<const Base>(std::move(b))}};
  }

  static Object chain(std::size_t n) {
    std::vector<std::vector<bool>> o(n, std::vector<bool>(n, false));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x; y < n; ++y) o[x][y] = true;
    return poset(o);
  }

  static Object antichain(std::size_t n) {
    std::vector<std::vector<bool>> o(n, std::vector<bool>(n, false));
    for (std::size_t x = 0; x < n; ++x) o[x][x] = true;
    return poset(o);
  }

  static bool is_monotone(const Object& source, const Object& target, std::span<const std::size_t> table) {
    const std::size_t n = source.size();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (x != y && source.leq(x, y) && !target.leq(table[x], table[y])) return false;
    return true;
  }

  static Morphism make(Object source, Object target, std::vector<std::size_t> table) {
    if (table.size() != source.size()) throw TypeError("finposet table length must equal the source size");
    for (auto v : table)
      if (v >= target.size()) throw TypeError("finposet table entry out of range");
    if (!is_monotone(source, target, table)) throw TypeError("finposet table is not monotone");
    return Morphism{std::move(source), std::move(target), std::move(table)};
  }

  static Morphism constant(Object source, Object target, std::size_t value) {
    std::vector<std::size_t> t(source.size(), value);
    return make(std::move(source), std::move(target), std::move(t));
  }

  static Morphism compose(const Morphism& g, const Morphism& f) {
    if (!(f.target == g.source)) throw TypeError("finposet compose: target/source mismatch");
    return Morphism{f.source, g.target, detail::table_compose(g.table, f.table)};
  }

  static Morphism identity(const Object& A) {
    std::vector<std::size_t> t(A.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
    return Morphism{A, A, std::move(t)};
  }

  static detail::Radix radix(std::span<const Object> factors) {
    std::vector<std::size_t> sizes;
    for (const auto& f : factors) sizes.push_back(f.size());
    return detail::Radix(std::move(sizes));
  }

  static Object product(std::span<const Object> factors) {
    radix(factors);  // size guard
    Object out;
    for (const auto& f : factors) out.factors.insert(out.factors.end(), f.factors.begin(), f.factors.end());
    return out;
  }

  static Morphism projection(std::span<const Object> factors, std::size_t i) {
    return Morphism{product(factors), factors[i], detail::table_projection(radix(factors), i)};
  }

  static Morphism tuple(const Object& X, std::span<const Object> factors, std::span<const Morphism> family) {
    if (family.size() != factors.size()) throw TypeError("tuple: family and factor counts differ");
    std::vector<const std::vector<std::size_t>*> tables;
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (!(family[i].source == X) || !(family[i].target == factors[i])) throw TypeError("tuple: family member mistyped");
      tables.push_back(&family[i].table);
    }
    return Morphism{X, product(factors), detail::table_tuple(X.size(), radix(factors), tables)};
  }

  static Elem apply(const Morphism& f, const Elem& x) {
    if (x >= f.source.size()) throw TypeError("finposet element out of range");
    return f.table[x];
  }

  static bool contains(const Object& A, const Elem& x) { return x < A.size(); }

  static std::vector<Elem> elements(const Object& A) {
    std::vector<Elem> out(A.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
    return out;
  }

  static Elem tuple_elem(std::span<const Object> factors, std::span<const Elem> values) {
    if (values.size() != factors.size()) throw TypeError("tuple_elem arity mismatch");
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] >= factors[i].size()) throw TypeError("tuple_elem value out of range");
    return radix(factors).encode(values);
  }

  /// Fibre-constancy as in FinSet, and the induced map must be monotone.
  static std::optional<Morphism> local_factor(const Morphism& h, const Object& A, std::size_t n,
                                              std::span<const std::size_t> positions) {
    if (!(h.source == power<FinPoset>(A, n))) throw TypeError("morphism source is not the expected power object");
    auto mu = detail::table_local_factor(h.table, A.size(), n, positions);
    if (!mu) return std::nullopt;
    Object src = power<FinPoset>(A, positions.size());
    if (!is_monotone(src, h.target, *mu)) return std::nullopt;
    return Morphism{std::move(src), h.target, std::move(*mu)};
  }

  static std::vector<std::size_t> essential_coordinates(const Morphism& h, const Object& A, std::size_t n) {
    if (!(h.source == power<FinPoset>(A, n))) throw TypeError("morphism source is not the expected power object");
    return detail::table_essential(h.table, A.size(), n);
  }
};

static_assert(ConcreteCategory<FinPoset>);

}  // namespace catca
