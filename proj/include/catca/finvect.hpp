#pragma once

// FinVect(F_p): finite-dimensional vector spaces F_p^k and matrices.
// Products are direct sums; A^n stacks n coordinate blocks in index order.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "catca/alphabet.hpp"

namespace catca {

struct FinVect {
  static constexpr const char* name = "finvect";
  static constexpr bool has_elements = true;

  struct Object {
    std::uint32_t p = 2;
    std::size_t dim = 0;
    friend bool operator==(const Object&, const Object&) = default;
  };

  /// target.dim x source.dim, row-major, entries in [0, p).
  struct Morphism {
    Object source;
    Object target;
    std::vector<std::uint32_t> entries;

    std::uint32_t at(std::size_t r, std::size_t c) const { return entries[r * source.dim + c]; }
    friend bool operator==(const Morphism&, const Morphism&) = default;
  };

  using Elem = std::vector<std::uint32_t>;

  static Object space(std::uint32_t p, std::size_t dim) {
    if (p < 2) throw TypeError("field characteristic must be a prime");
    for (std::uint32_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw TypeError("field characteristic must be a prime, got " + std::to_string(p));
    return Object{p, dim};
  }

  /// Entries are reduced mod p.
  static Morphism make(Object source, Object target, const std::vector<std::vector<std::int64_t>>& rows) {
    if (source.p != target.p) throw TypeError("finvect morphism between different fields");
    if (rows.size() != target.dim) throw TypeError("matrix row count must equal target dimension");
    Morphism m{source, target, std::vector<std::uint32_t>(target.dim * source.dim, 0)};
    const auto p = static_cast<std::int64_t>(source.p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != source.dim) throw TypeError("matrix column count must equal source dimension");
      for (std::size_t c = 0; c < source.dim; ++c)
        m.entries[r * source.dim + c] = static_cast<std::uint32_t>(((rows[r][c] % p) + p) % p);
    }
    return m;
  }

  static Morphism zero(Object source, Object target) {
    if (source.p != target.p) throw TypeError("finvect morphism between different fields");
    return Morphism{source, target, std::vector<std::uint32_t>(source.dim * target.dim, 0)};
  }

  static Morphism compose(const Morphism& g, const Morphism& f) {
    if (!(f.target == g.source)) throw TypeError("finvect compose: target/source mismatch");
    const std::size_t rows = g.target.dim, inner = f.target.dim, cols = f.source.dim;
    const std::uint64_t p = f.source.p;
    Morphism out{f.source, g.target, std::vector<std::uint32_t>(rows * cols, 0)};
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t k = 0; k < inner; ++k) {
        const std::uint64_t a = g.at(r, k);
        if (a == 0) continue;
        for (std::size_t c = 0; c < cols; ++c)
          out.entries[r * cols + c] = static_cast<std::uint32_t>((out.entries[r * cols + c] + a * f.at(k, c)) % p);
      }
    return out;
  }

  static Morphism identity(const Object& A) {
    Morphism m = zero(A, A);
    for (std::size_t i = 0; i < A.dim; ++i) m.entries[i * A.dim + i] = 1;
    return m;
  }

  static Object empty_power(const Object& A) { return Object{A.p, 0}; }

  static Object product(std::span<const Object> factors) {
    if (factors.empty()) throw TypeError("finvect product of an empty family needs a field; use power()");
    Object out{factors[0].p, 0};
    for (const auto& f : factors) {
      if (f.p != out.p) throw TypeError("direct sum of spaces over different fields");
      out.dim += f.dim;
    }
    return out;
  }

  static Morphism projection(std::span<const Object> factors, std::size_t i) {
    Object sum = product(factors);
    Morphism m = zero(sum, factors[i]);
    std::size_t offset = 0;
    for (std::size_t j = 0; j < i; ++j) offset += factors[j].dim;
    for (std::size_t r = 0; r < factors[i].dim; ++r) m.entries[r * sum.dim + offset + r] = 1;
    return m;
  }

  /// Row-stacks the family.
  static Morphism tuple(const Object& X, std::span<const Object> factors, std::span<const Morphism> family) {
    if (family.size() != factors.size()) throw TypeError("tuple: family and factor counts differ");
    Object sum = factors.empty() ? Object{X.p, 0} : product(factors);
    Morphism m{X, sum, {}};
    m.entries.reserve(sum.dim * X.dim);
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (!(family[i].source == X) || !(family[i].target == factors[i])) throw TypeError("tuple: family member mistyped");
      m.entries.insert(m.entries.end(), family[i].entries.begin(), family[i].entries.end());
    }
    return m;
  }

  static Elem apply(const Morphism& f, const Elem& x) {
    if (!contains(f.source, x)) throw TypeError("vector is not in the morphism's source");
    Elem y(f.target.dim, 0);
    for (std::size_t r = 0; r < f.target.dim; ++r) {
      std::uint64_t acc = 0;
      for (std::size_t c = 0; c < f.source.dim; ++c) acc += static_cast<std::uint64_t>(f.at(r, c)) * x[c];
      y[r] = static_cast<std::uint32_t>(acc % f.source.p);
    }
    return y;
  }

  static bool contains(const Object& A, const Elem& x) {
    if (x.size() != A.dim) return false;
    for (auto v : x)
      if (v >= A.p) return false;
    return true;
  }

  /// All p^dim vectors, first coordinate most significant.
  static std::vector<Elem> elements(const Object& A) {
    detail::Radix r = detail::Radix::uniform(A.p, A.dim);
    std::vector<Elem> out;
    out.reserve(r.total());
    for (std::size_t code = 0; code < r.total(); ++code) {
      Elem v(A.dim);
      for (std::size_t i = 0; i < A.dim; ++i) v[i] = static_cast<std::uint32_t>(r.digit(code, i));
      out.push_back(std::move(v));
    }
    return out;
  }

  static Elem tuple_elem(std::span<const Object> factors, std::span<const Elem> values) {
    if (values.size() != factors.size()) throw TypeError("tuple_elem arity mismatch");
    Elem out;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!contains(factors[i], values[i])) throw TypeError("tuple_elem value out of range");
      out.insert(out.end(), values[i].begin(), values[i].end());
    }
    return out;
  }

  /// h factors through the restriction iff its columns outside the
  /// retained blocks vanish; the factor keeps the retained blocks.
  static std::optional<Morphism> local_factor(const Morphism& h, const Object& A, std::size_t n,
                                              std::span<const std::size_t> positions) {
    if (!(h.source == power<FinVect>(A, n))) throw TypeError("morphism source is not the expected power object");
    std::vector<bool> kept(n, false);
    for (auto p : positions) kept[p] = true;
    for (std::size_t b = 0; b < n; ++b)
      if (!kept[b] && block_nonzero(h, A.dim, b)) return std::nullopt;
    Object src = power<FinVect>(A, positions.size());
    Morphism mu = zero(src, h.target);
    for (std::size_t r = 0; r < h.target.dim; ++r)
      for (std::size_t j = 0; j < positions.size(); ++j)
        for (std::size_t c = 0; c < A.dim; ++c)
          mu.entries[r * src.dim + j * A.dim + c] = h.at(r, positions[j] * A.dim + c);
    // Duplicate positions would double-count a block; reject rather than mis-factor.
    if (!(compose(mu, restriction<FinVect>(A, n, positions)) == h)) return std::nullopt;
    return mu;
  }

  static std::vector<std::size_t> essential_coordinates(const Morphism& h, const Object& A, std::size_t n) {
    if (!(h.source == power<FinVect>(A, n))) throw TypeError("morphism source is not the expected power object");
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < n; ++b)
      if (block_nonzero(h, A.dim, b)) out.push_back(b);
    return out;
  }

 private:
  static bool block_nonzero(const Morphism& h, std::size_t k, std::size_t b) {
    for (std::size_t r = 0; r < h.target.dim; ++r)
      for (std::size_t c = 0; c < k; ++c)
        if (h.at(r, b * k + c) != 0) return true;
    return false;
  }
};

static_assert(ConcreteCategory<FinVect>);

}  // namespace catca
