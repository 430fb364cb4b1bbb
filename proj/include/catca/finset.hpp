#pragma once

// FinSet: finite sets and total functions. Products are Cartesian with
// mixed-radix tuple codes.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "catca/alphabet.hpp"

namespace catca {

struct FinSet {
  static constexpr const char* name = "finset";
  static constexpr bool has_elements = true;

  struct Object {
    std::size_t size = 0;
    friend bool operator==(const Object&, const Object&) = default;
  };

  struct Morphism {
    Object source;
    Object target;
    std::vector<std::size_t> table;
    friend bool operator==(const Morphism&, const Morphism&) = default;
  };

  using Elem = std::size_t;

  static Object object(std::size_t n) { return Object{n}; }

  static Morphism make(Object source, Object target, std::vector<std::size_t> table) {
    if (table.size() != source.size) throw TypeError("finset table length must equal the source size");
    for (auto v : table)
      if (v >= target.size) throw TypeError("finset table entry out of range");
    return Morphism{source, target, std::move(table)};
  }

  static Morphism constant(Object source, Object target, std::size_t value) {
    return make(source, target, std::vector<std::size_t>(source.size, value));
  }

  static Morphism compose(const Morphism& g, const Morphism& f) {
    if (!(f.target == g.source)) throw TypeError("finset compose: target/source mismatch");
    return Morphism{f.source, g.target, detail::table_compose(g.table, f.table)};
  }

  static Morphism identity(const Object& A) {
    std::vector<std::size_t> t(A.size);
    for (std::size_t i = 0; i < A.size; ++i) t[i] = i;
    return Morphism{A, A, std::move(t)};
  }

  static detail::Radix radix(std::span<const Object> factors) {
    std::vector<std::size_t> sizes;
    for (const auto& f : factors) sizes.push_back(f.size);
    return detail::Radix(std::move(sizes));
  }

  static Object product(std::span<const Object> factors) { return Object{radix(factors).total()}; }

  static Morphism projection(std::span<const Object> factors, std::size_t i) {
    auto r = radix(factors);
    return Morphism{Object{r.total()}, factors[i], detail::table_projection(r, i)};
  }

  static Morphism tuple(const Object& X, std::span<const Object> factors, std::span<const Morphism> family) {
    if (family.size() != factors.size()) throw TypeError("tuple: family and factor counts differ");
    std::vector<const std::vector<std::size_t>*> tables;
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (!(family[i].source == X) || !(family[i].target == factors[i])) throw TypeError("tuple: family member mistyped");
      tables.push_back(&family[i].table);
    }
    auto r = radix(factors);
    return Morphism{X, Object{r.total()}, detail::table_tuple(X.size, r, tables)};
  }

  static Elem apply(const Morphism& f, const Elem& x) {
    if (x >= f.source.size) throw TypeError("finset element out of range");
    return f.table[x];
  }

  static bool contains(const Object& A, const Elem& x) { return x < A.size; }

  static std::vector<Elem> elements(const Object& A) {
    std::vector<Elem> out(A.size);
    for (std::size_t i = 0; i < A.size; ++i) out[i] = i;
    return out;
  }

  static Elem tuple_elem(std::span<const Object> factors, std::span<const Elem> values) {
    if (values.size() != factors.size()) throw TypeError("tuple_elem arity mismatch");
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] >= factors[i].size) throw TypeError("tuple_elem value out of range");
    return radix(factors).encode(values);
  }

  static std::optional<Morphism> local_factor(const Morphism& h, const Object& A, std::size_t n,
                                              std::span<const std::size_t> positions) {
    require_power_source(h, A, n);
    auto mu = detail::table_local_factor(h.table, A.size, n, positions);
    if (!mu) return std::nullopt;
    return Morphism{power<FinSet>(A, positions.size()), h.target, std::move(*mu)};
  }

  static std::vector<std::size_t> essential_coordinates(const Morphism& h, const Object& A, std::size_t n) {
    require_power_source(h, A, n);
    return detail::table_essential(h.table, A.size, n);
  }

 private:
  static void require_power_source(const Morphism& h, const Object& A, std::size_t n) {
    if (!(h.source == power<FinSet>(A, n))) throw TypeError("morphism source is not the expected power object");
  }
};

static_assert(ConcreteCategory<FinSet>);

}  // namespace catca
