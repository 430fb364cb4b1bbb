#pragma once

// Categories with finite products used as cell alphabets, and the
// constructions every such category supports through its products alone:
// powers A^I, restriction, index pullback, pushforward and pairing.
//
// An instance supplies compose/identity plus product/projection/tuple for
// finite families of objects. Power objects are indexed positionally
// (0..n-1); callers that index by group elements map them to positions
// through FiniteSubset::index_of.

#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "catca/error.hpp"
#include "catca/groups.hpp"

namespace catca {

template <class C>
concept AlphabetCategory = requires(const typename C::Object& a, const typename C::Morphism& f,
                                    std::span<const typename C::Object> factors,
                                    std::span<const typename C::Morphism> family, std::size_t i,
                                    std::span<const std::size_t> positions) {
  { C::name } -> std::convertible_to<std::string>;
  { C::compose(f, f) } -> std::same_as<typename C::Morphism>;
  { C::identity(a) } -> std::same_as<typename C::Morphism>;
  { C::product(factors) } -> std::same_as<typename C::Object>;
  { C::projection(factors, i) } -> std::same_as<typename C::Morphism>;
  { C::tuple(a, factors, family) } -> std::same_as<typename C::Morphism>;
  { f.source } -> std::convertible_to<typename C::Object>;
  { f.target } -> std::convertible_to<typename C::Object>;
  { f == f } -> std::convertible_to<bool>;
  { a == a } -> std::convertible_to<bool>;
  // h : A^n -> B factors through the restriction onto `positions`.
  { C::local_factor(f, a, i, positions) } -> std::same_as<std::optional<typename C::Morphism>>;
  { C::essential_coordinates(f, a, i) } -> std::same_as<std::vector<std::size_t>>;
};

/// Instances whose objects have points: cells hold values and
/// configurations can be evaluated.
template <class C>
concept ConcreteCategory = AlphabetCategory<C> && C::has_elements &&
    requires(const typename C::Object& a, const typename C::Morphism& f, const typename C::Elem& x,
             std::span<const typename C::Object> factors, std::span<const typename C::Elem> values) {
  { C::apply(f, x) } -> std::same_as<typename C::Elem>;
  { C::elements(a) } -> std::same_as<std::vector<typename C::Elem>>;
  { C::tuple_elem(factors, values) } -> std::same_as<typename C::Elem>;
  { C::contains(a, x) } -> std::convertible_to<bool>;
};

namespace detail {

inline constexpr std::size_t kMaxCarrier = std::size_t{1} << 22;

/// Mixed-radix coding of tuples; the first factor is the most significant digit.
class Radix {
 public:
  Radix() = default;
  explicit Radix(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)), strides_(sizes_.size()) {
    total_ = 1;
    for (std::size_t i = sizes_.size(); i-- > 0;) {
      strides_[i] = total_;
      if (sizes_[i] != 0 && total_ > kMaxCarrier / sizes_[i])
        throw UnsupportedError("power carrier exceeds " + std::to_string(kMaxCarrier) + " elements");
      total_ *= sizes_[i];
    }
  }
  static Radix uniform(std::size_t base, std::size_t n) { return Radix(std::vector<std::size_t>(n, base)); }

  std::size_t total() const { return total_; }
  std::size_t arity() const { return sizes_.size(); }
  std::size_t size(std::size_t i) const { return sizes_[i]; }
  std::size_t digit(std::size_t code, std::size_t i) const { return (code / strides_[i]) % sizes_[i]; }
  std::size_t replace(std::size_t code, std::size_t i, std::size_t v) const {
    return code - digit(code, i) * strides_[i] + v * strides_[i];
  }
  std::size_t encode(std::span<const std::size_t> digits) const {
    std::size_t code = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) code += digits[i] * strides_[i];
    return code;
  }

 private:
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> strides_;
  std::size_t total_ = 1;
};

inline std::vector<std::size_t> table_compose(std::span<const std::size_t> g, std::span<const std::size_t> f) {
  std::vector<std::size_t> out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[x] = g[f[x]];
  return out;
}

inline std::vector<std::size_t> table_projection(const Radix& r, std::size_t i) {
  std::vector<std::size_t> out(r.total());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = r.digit(x, i);
  return out;
}

/// x -> code of (f_0(x), ..., f_{n-1}(x)).
inline std::vector<std::size_t> table_tuple(std::size_t source_size, const Radix& r,
                                            const std::vector<const std::vector<std::size_t>*>& family) {
  std::vector<std::size_t> out(source_size, 0);
  std::vector<std::size_t> digits(family.size());
  for (std::size_t x = 0; x < source_size; ++x) {
    for (std::size_t i = 0; i < family.size(); ++i) digits[i] = (*family[i])[x];
    out[x] = r.encode(digits);
  }
  return out;
}

/// Table of mu' with h = mu' o Res onto `positions`, if h is constant on
/// restriction fibres.
inline std::optional<std::vector<std::size_t>> table_local_factor(std::span<const std::size_t> h, std::size_t base,
                                                                  std::size_t n,
                                                                  std::span<const std::size_t> positions) {
  Radix in = Radix::uniform(base, n);
  Radix out = Radix::uniform(base, positions.size());
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> mu(out.total(), unset);
  std::vector<std::size_t> digits(positions.size());
  for (std::size_t x = 0; x < h.size(); ++x) {
    for (std::size_t j = 0; j < positions.size(); ++j) digits[j] = in.digit(x, positions[j]);
    std::size_t key = out.encode(digits);
    if (mu[key] == unset)
      mu[key] = h[x];
    else if (mu[key] != h[x])
      return std::nullopt;
  }
  for (auto& v : mu)
    if (v == unset) return std::nullopt;  // only when the base is empty
  return mu;
}

/// Coordinates i such that changing only digit i can change h.
inline std::vector<std::size_t> table_essential(std::span<const std::size_t> h, std::size_t base, std::size_t n) {
  Radix in = Radix::uniform(base, n);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    bool essential = false;
    for (std::size_t x = 0; x < h.size() && !essential; ++x) {
      if (in.digit(x, i) != 0) continue;
      for (std::size_t v = 1; v < base && !essential; ++v) essential = h[in.replace(x, i, v)] != h[x];
    }
    if (essential) out.push_back(i);
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Generic constructions.

template <AlphabetCategory C>
std::vector<typename C::Object> copies(const typename C::Object& A, std::size_t n) {
  return std::vector<typename C::Object>(n, A);
}

template <AlphabetCategory C>
typename C::Object power(const typename C::Object& A, std::size_t n) {
  // An empty family cannot tell FinVect which field it lives over.
  if constexpr (requires { C::empty_power(A); })
    if (n == 0) return C::empty_power(A);
  auto f = copies<C>(A, n);
  return C::product(f);
}

template <AlphabetCategory C>
typename C::Morphism power_projection(const typename C::Object& A, std::size_t n, std::size_t i) {
  if (i >= n) throw TypeError("projection index out of range");
  auto f = copies<C>(A, n);
  return C::projection(f, i);
}

/// A^I together with its coordinate projections.
template <AlphabetCategory C>
struct PowerObject {
  typename C::Object base;
  std::size_t arity = 0;
  typename C::Object carrier;

  typename C::Morphism projection(std::size_t i) const { return power_projection<C>(base, arity, i); }
};

template <AlphabetCategory C>
PowerObject<C> power_object(const typename C::Object& A, std::size_t n) {
  return PowerObject<C>{A, n, power<C>(A, n)};
}

/// The unique X -> A^n whose i-th projection is family[i].
template <AlphabetCategory C>
typename C::Morphism power_tuple(const typename C::Object& X, const typename C::Object& A,
                                 std::span<const typename C::Morphism> family) {
  auto f = copies<C>(A, family.size());
  return C::tuple(X, f, family);
}

template <AlphabetCategory C>
typename C::Morphism compose_all(const typename C::Morphism& last) {
  return last;
}

/// compose_all(h, g, f) = h o g o f.
template <AlphabetCategory C, class... Rest>
typename C::Morphism compose_all(const typename C::Morphism& first, const Rest&... rest) {
  return C::compose(first, compose_all<C>(rest...));
}

/// Res : A^n -> A^{|positions|}, coordinate j of the result is coordinate positions[j].
template <AlphabetCategory C>
typename C::Morphism restriction(const typename C::Object& A, std::size_t n, std::span<const std::size_t> positions) {
  std::vector<typename C::Morphism> family;
  family.reserve(positions.size());
  for (auto p : positions) family.push_back(power_projection<C>(A, n, p));
  return power_tuple<C>(power<C>(A, n), A, family);
}

/// Res^I_S for group subsets S of I.
template <AlphabetCategory C>
typename C::Morphism restriction(const typename C::Object& A, const FiniteSubset& I, const FiniteSubset& S) {
  if (!S.is_subset_of(I)) throw TypeError("restriction needs S to be a subset of I");
  std::vector<std::size_t> pos;
  for (const auto& s : S) pos.push_back(I.index_of(s));
  return restriction<C>(A, I.size(), pos);
}

/// f^*_A : A^J -> A^I for f : I -> J given positionally (f[i] < j_size).
template <AlphabetCategory C>
typename C::Morphism index_pullback(const typename C::Object& A, std::size_t j_size, std::span<const std::size_t> f) {
  for (auto j : f)
    if (j >= j_size) throw TypeError("index map leaves its codomain");
  return restriction<C>(A, j_size, f);
}

/// f^I_* : A^n -> B^n, f applied in every coordinate.
template <AlphabetCategory C>
typename C::Morphism pushforward(const typename C::Morphism& f, std::size_t n) {
  std::vector<typename C::Morphism> family;
  family.reserve(n);
  for (std::size_t i = 0; i < n; ++i) family.push_back(C::compose(f, power_projection<C>(f.source, n, i)));
  return power_tuple<C>(power<C>(f.source, n), f.target, family);
}

template <AlphabetCategory C>
struct BinaryProduct {
  typename C::Object object;
  typename C::Morphism first;
  typename C::Morphism second;
};

template <AlphabetCategory C>
BinaryProduct<C> binary_product(const typename C::Object& A, const typename C::Object& B) {
  std::vector<typename C::Object> f{A, B};
  return BinaryProduct<C>{C::product(f), C::projection(f, 0), C::projection(f, 1)};
}

/// The unique h : X -> A x B with pi_A o h = f and pi_B o h = g.
template <AlphabetCategory C>
typename C::Morphism pair(const typename C::Morphism& f, const typename C::Morphism& g) {
  if (!(f.source == g.source)) throw TypeError("pair needs morphisms with a common source");
  std::vector<typename C::Object> factors{f.target, g.target};
  std::vector<typename C::Morphism> family{f, g};
  return C::tuple(f.source, factors, family);
}

template <AlphabetCategory C>
bool morphism_equal(const typename C::Morphism& f, const typename C::Morphism& g) {
  if (!(f.source == g.source) || !(f.target == g.target)) throw TypeError("morphism_equal on differently typed morphisms");
  return f == g;
}

template <ConcreteCategory C>
typename C::Elem elem_apply(const typename C::Morphism& f, const typename C::Elem& x) {
  return C::apply(f, x);
}

template <ConcreteCategory C>
std::vector<typename C::Elem> enumerate_elems(const typename C::Object& A) {
  return C::elements(A);
}

}  // namespace catca
