#pragma once

// JSON encodings of groups, homomorphisms, alphabets, morphisms,
// automata and configurations.
//
//   group   {"kind":"finite-table","table":[[...]],"identity":0}
//           {"kind":"cyclic","n":4} | {"kind":"symmetric","n":3}
//           {"kind":"z-power","d":1}
//           {"kind":"free-product","left":{...},"right":{...}}
//   element integer (finite) | integer array (Z^d) | [{"side":"L","id":1},...]
//   hom     {"rule":"table","map":[...]} | {"rule":"pair","left":{...},"right":{...}}
//           {"rule":"matrix","matrix":[[...]]} | {"rule":"generators","images":[...]}
//   morphism {"instance":"finset","table":[...]}
//            {"instance":"finvect","p":2,"matrix":[[...]]}
//            {"instance":"finposet","table":[...]}      ("order" optional, checked)
//            {"instance":"rel","pairs":[[s,t],...]}

#include <cstdint>
#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "catca/ca.hpp"
#include "catca/configuration.hpp"
#include "catca/finposet.hpp"
#include "catca/finset.hpp"
#include "catca/finvect.hpp"
#include "catca/gca.hpp"
#include "catca/groups.hpp"
#include "catca/rel.hpp"

namespace catca {

using json = nlohmann::json;

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class T>
T get_as(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad ") + what + ": " + e.what());
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Groups.

inline json to_json(const GroupElem& g) {
  if (g.is_id()) return g.id();
  if (g.is_vec()) return g.as_vec();
  json out = json::array();
  for (const auto& l : g.as_word()) out.push_back({{"side", l.side == Side::L ? "L" : "R"}, {"id", l.id}});
  return out;
}

inline GroupElem elem_from_json(const Group& G, const json& j) {
  GroupElem g;
  switch (G.kind()) {
    case Group::Kind::FiniteTable: g = GroupElem(detail::get_as<std::size_t>(j, "group element")); break;
    case Group::Kind::ZPower: g = GroupElem::vec(detail::get_as<IntVec>(j, "group element")); break;
    case Group::Kind::FreeProduct: {
      if (!j.is_array()) throw ParseError("free-product element must be an array of letters");
      Word w;
      for (const auto& l : j) {
        auto side = detail::get_as<std::string>(detail::field(l, "side"), "side");
        if (side != "L" && side != "R") throw ParseError("letter side must be \"L\" or \"R\"");
        w.push_back(Letter{side == "L" ? Side::L : Side::R, detail::get_as<std::size_t>(detail::field(l, "id"), "letter id")});
      }
      g = GroupElem::word(std::move(w));
      break;
    }
  }
  if (!G.contains(g)) throw MembershipError(g.to_string() + " is not an element of " + G.name());
  return g;
}

inline json to_json(const Group& G) {
  switch (G.kind()) {
    case Group::Kind::FiniteTable:
      return {{"kind", "finite-table"}, {"name", G.name()}, {"table", G.table()}, {"identity", G.identity().id()}};
    case Group::Kind::ZPower: return {{"kind", "z-power"}, {"d", G.dimension()}};
    case Group::Kind::FreeProduct:
      return {{"kind", "free-product"}, {"left", to_json(G.factor(Side::L))}, {"right", to_json(G.factor(Side::R))}};
  }
  return {};
}

inline Group group_from_json(const json& j) {
  auto kind = detail::get_as<std::string>(detail::field(j, "kind"), "group kind");
  if (kind == "finite-table") {
    auto table = detail::get_as<Group::Table>(detail::field(j, "table"), "Cayley table");
    auto id = j.contains("identity") ? detail::get_as<std::size_t>(j.at("identity"), "identity") : 0;
    auto name = j.contains("name") ? detail::get_as<std::string>(j.at("name"), "name") : std::string{};
    return Group::finite_table(std::move(table), id, std::move(name));
  }
  if (kind == "cyclic") return Group::cyclic(detail::get_as<std::size_t>(detail::field(j, "n"), "n"));
  if (kind == "symmetric") return Group::symmetric(detail::get_as<std::size_t>(detail::field(j, "n"), "n"));
  if (kind == "z-power") return Group::z_power(detail::get_as<std::size_t>(detail::field(j, "d"), "d"));
  if (kind == "free-product")
    return Group::free_product(group_from_json(detail::field(j, "left")), group_from_json(detail::field(j, "right")));
  throw ParseError("unknown group kind \"" + kind + "\"");
}

inline json to_json(const GroupHom& h) {
  return std::visit(
      [&](const auto& r) -> json {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, GroupHom::TableRule>) {
          json m = json::array();
          for (const auto& y : r.images) m.push_back(to_json(y));
          return {{"rule", "table"}, {"map", m}};
        } else if constexpr (std::is_same_v<R, GroupHom::PairRule>) {
          return {{"rule", "pair"}, {"left", to_json(*r.left)}, {"right", to_json(*r.right)}};
        } else if constexpr (std::is_same_v<R, GroupHom::MatrixRule>) {
          return {{"rule", "matrix"}, {"matrix", r.rows}};
        } else {
          json m = json::array();
          for (const auto& y : r.images) m.push_back(to_json(y));
          return {{"rule", "generators"}, {"images", m}};
        }
      },
      h.rule());
}

inline GroupHom hom_from_json(const json& j, const Group& src, const Group& tgt) {
  auto rule = detail::get_as<std::string>(detail::field(j, "rule"), "hom rule");
  auto elems = [&](const json& arr, const Group& G) {
    if (!arr.is_array()) throw ParseError("expected an array of group elements");
    std::vector<GroupElem> out;
    for (const auto& e : arr) out.push_back(elem_from_json(G, e));
    return out;
  };
  if (rule == "table") return GroupHom::table(src, tgt, elems(detail::field(j, "map"), tgt));
  if (rule == "generators") return GroupHom::generator_images(src, tgt, elems(detail::field(j, "images"), tgt));
  if (rule == "matrix")
    return GroupHom::matrix(src, tgt, detail::get_as<std::vector<IntVec>>(detail::field(j, "matrix"), "matrix"));
  if (rule == "pair") {
    if (src.kind() != Group::Kind::FreeProduct) throw TypeError("pair homomorphism needs a free-product source");
    return GroupHom::pair(src, hom_from_json(detail::field(j, "left"), src.factor(Side::L), tgt),
                          hom_from_json(detail::field(j, "right"), src.factor(Side::R), tgt));
  }
  throw ParseError("unknown hom rule \"" + rule + "\"");
}

inline json to_json(const FiniteSubset& S) {
  json out = json::array();
  for (const auto& s : S) out.push_back(to_json(s));
  return out;
}

inline FiniteSubset subset_from_json(const Group& G, const json& j) {
  if (!j.is_array()) throw ParseError("a subset is an array of group elements");
  std::vector<GroupElem> out;
  for (const auto& e : j) out.push_back(elem_from_json(G, e));
  return FiniteSubset(G, std::move(out));
}

// ---------------------------------------------------------------------------
// Alphabet instances.

template <class C>
struct Codec;

template <>
struct Codec<FinSet> {
  static json object(const FinSet::Object& A) { return {{"size", A.size}}; }
  static FinSet::Object object(const json& j) { return FinSet::object(detail::get_as<std::size_t>(detail::field(j, "size"), "size")); }
  static json morphism(const FinSet::Morphism& f) { return {{"instance", "finset"}, {"table", f.table}}; }
  static FinSet::Morphism morphism(const json& j, const FinSet::Object& src, const FinSet::Object& tgt) {
    return FinSet::make(src, tgt, detail::get_as<std::vector<std::size_t>>(detail::field(j, "table"), "table"));
  }
  static json elem(const FinSet::Elem& x) { return x; }
  static FinSet::Elem elem(const json& j, const FinSet::Object& A) {
    auto x = detail::get_as<std::size_t>(j, "finset element");
    if (!FinSet::contains(A, x)) throw TypeError("finset element out of range");
    return x;
  }
};

template <>
struct Codec<FinVect> {
  static json object(const FinVect::Object& A) { return {{"p", A.p}, {"dim", A.dim}}; }
  static FinVect::Object object(const json& j) {
    return FinVect::space(detail::get_as<std::uint32_t>(detail::field(j, "p"), "p"),
                          detail::get_as<std::size_t>(detail::field(j, "dim"), "dim"));
  }
  static json morphism(const FinVect::Morphism& f) {
    json rows = json::array();
    for (std::size_t r = 0; r < f.target.dim; ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < f.source.dim; ++c) row.push_back(f.at(r, c));
      rows.push_back(row);
    }
    return {{"instance", "finvect"}, {"p", f.source.p}, {"matrix", rows}};
  }
  static FinVect::Morphism morphism(const json& j, const FinVect::Object& src, const FinVect::Object& tgt) {
    if (j.contains("p") && detail::get_as<std::uint32_t>(j.at("p"), "p") != src.p)
      throw TypeError("morphism field does not match the alphabet");
    return FinVect::make(src, tgt, detail::get_as<std::vector<std::vector<std::int64_t>>>(detail::field(j, "matrix"), "matrix"));
  }
  static json elem(const FinVect::Elem& x) { return x; }
  static FinVect::Elem elem(const json& j, const FinVect::Object& A) {
    auto x = detail::get_as<FinVect::Elem>(j, "vector");
    if (!FinVect::contains(A, x)) throw TypeError("vector is not in the alphabet");
    return x;
  }
};

template <>
struct Codec<FinPoset> {
  static json order(const FinPoset::Base& b) {
    json rows = json::array();
    for (std::size_t x = 0; x < b.size; ++x) {
      json row = json::array();
      for (std::size_t y = 0; y < b.size; ++y) row.push_back(b.leq[x * b.size + y] != 0);
      rows.push_back(row);
    }
    return rows;
  }
  static json object(const FinPoset::Object& A) {
    if (A.factors.size() == 1) return {{"order", order(*A.factors[0])}};
    json fs = json::array();
    for (const auto& f : A.factors) fs.push_back({{"order", order(*f)}});
    return {{"factors", fs}};
  }
  static FinPoset::Object object(const json& j) {
    if (j.contains("factors")) {
      std::vector<FinPoset::Object> fs;
      for (const auto& f : j.at("factors")) fs.push_back(object(f));
      return FinPoset::product(fs);
    }
    const json& o = detail::field(j, "order");
    if (!o.is_array()) throw ParseError("order must be a square array");
    std::vector<std::vector<bool>> rel;
    for (const auto& row : o) {
      std::vector<bool> r;
      for (const auto& v : row) r.push_back(v.is_boolean() ? v.get<bool>() : detail::get_as<int>(v, "order entry") != 0);
      rel.push_back(std::move(r));
    }
    return FinPoset::poset(rel);
  }
  static json morphism(const FinPoset::Morphism& f) {
    json out{{"instance", "finposet"}, {"table", f.table}};
    if (f.target.factors.size() == 1) out["order"] = order(*f.target.factors[0]);
    return out;
  }
  static FinPoset::Morphism morphism(const json& j, const FinPoset::Object& src, const FinPoset::Object& tgt) {
    if (j.contains("order") && !(object(json{{"order", j.at("order")}}) == tgt))
      throw TypeError("morphism order does not match the target alphabet");
    return FinPoset::make(src, tgt, detail::get_as<std::vector<std::size_t>>(detail::field(j, "table"), "table"));
  }
  static json elem(const FinPoset::Elem& x) { return x; }
  static FinPoset::Elem elem(const json& j, const FinPoset::Object& A) {
    auto x = detail::get_as<std::size_t>(j, "poset element");
    if (!FinPoset::contains(A, x)) throw TypeError("poset element out of range");
    return x;
  }
};

template <>
struct Codec<Rel> {
  static json object(const Rel::Object& A) { return {{"size", A.size}}; }
  static Rel::Object object(const json& j) { return Rel::object(detail::get_as<std::size_t>(detail::field(j, "size"), "size")); }
  static json morphism(const Rel::Morphism& f) {
    json pairs = json::array();
    for (auto [x, y] : f.pairs()) pairs.push_back({x, y});
    return {{"instance", "rel"}, {"pairs", pairs}};
  }
  static Rel::Morphism morphism(const json& j, const Rel::Object& src, const Rel::Object& tgt) {
    auto raw = detail::get_as<std::vector<std::pair<std::size_t, std::size_t>>>(detail::field(j, "pairs"), "pairs");
    return Rel::make(src, tgt, std::span<const std::pair<std::size_t, std::size_t>>(raw));
  }
};

/// Calls fn(std::type_identity<C>{}) for the instance named in a document.
template <class Fn>
decltype(auto) dispatch_instance(const std::string& name, Fn&& fn) {
  if (name == "finset") return fn(std::type_identity<FinSet>{});
  if (name == "finvect") return fn(std::type_identity<FinVect>{});
  if (name == "finposet") return fn(std::type_identity<FinPoset>{});
  if (name == "rel") return fn(std::type_identity<Rel>{});
  throw ParseError("unknown instance \"" + name + "\"");
}

// ---------------------------------------------------------------------------
// Automata and configurations.

template <AlphabetCategory C>
json to_json(const CellularAutomaton<C>& tau) {
  return {{"group", to_json(tau.universe())},
          {"instance", C::name},
          {"A", Codec<C>::object(tau.source_alphabet())},
          {"B", Codec<C>::object(tau.target_alphabet())},
          {"S", to_json(tau.neighborhood())},
          {"mu", Codec<C>::morphism(tau.local_map())}};
}

inline void require_instance(const json& j, const char* name) {
  auto inst = detail::get_as<std::string>(detail::field(j, "instance"), "instance");
  if (inst != name) throw TypeError("document is for instance \"" + inst + "\", expected \"" + name + "\"");
}

template <AlphabetCategory C>
CellularAutomaton<C> ca_from_json(const json& j) {
  require_instance(j, C::name);
  Group G = group_from_json(detail::field(j, "group"));
  auto A = Codec<C>::object(detail::field(j, "A"));
  auto B = j.contains("B") ? Codec<C>::object(j.at("B")) : A;
  FiniteSubset S = subset_from_json(G, detail::field(j, "S"));
  auto mu = Codec<C>::morphism(detail::field(j, "mu"), power<C>(A, S.size()), B);
  return make_ca<C>(G, A, B, S, mu);
}

template <AlphabetCategory C>
json to_json(const GeneralizedCA<C>& tau) {
  return {{"group", to_json(tau.source_universe())},
          {"target_group", to_json(tau.target_universe())},
          {"hom", to_json(tau.hom())},
          {"instance", C::name},
          {"A", Codec<C>::object(tau.source_alphabet())},
          {"B", Codec<C>::object(tau.target_alphabet())},
          {"S", to_json(tau.neighborhood())},
          {"mu", Codec<C>::morphism(tau.local_map())}};
}

template <AlphabetCategory C>
GeneralizedCA<C> gca_from_json(const json& j) {
  require_instance(j, C::name);
  Group G = group_from_json(detail::field(j, "group"));
  Group H = group_from_json(detail::field(j, "target_group"));
  GroupHom phi = hom_from_json(detail::field(j, "hom"), H, G);
  auto A = Codec<C>::object(detail::field(j, "A"));
  auto B = j.contains("B") ? Codec<C>::object(j.at("B")) : A;
  FiniteSubset S = subset_from_json(G, detail::field(j, "S"));
  auto mu = Codec<C>::morphism(detail::field(j, "mu"), power<C>(A, S.size()), B);
  return make_gca<C>(G, H, phi, A, B, S, mu);
}

/// Sparse: {"kind":"sparse","default":v,"support":[[g, v], ...]};
/// dense:  {"kind":"dense","values":[v, ...]} (finite universes, canonical order).
template <ConcreteCategory C>
Configuration<C> config_from_json(const json& j, const Group& G, const typename C::Object& A) {
  auto kind = detail::get_as<std::string>(detail::field(j, "kind"), "configuration kind");
  if (kind == "dense") {
    const json& vals = detail::field(j, "values");
    if (!vals.is_array()) throw ParseError("dense values must be an array");
    std::vector<typename C::Elem> out;
    for (const auto& v : vals) out.push_back(Codec<C>::elem(v, A));
    return Configuration<C>::dense(G, A, std::move(out));
  }
  if (kind == "sparse") {
    std::map<GroupElem, typename C::Elem> support;
    if (j.contains("support")) {
      if (!j.at("support").is_array()) throw ParseError("support must be an array of [cell, value] pairs");
      for (const auto& entry : j.at("support")) {
        if (!entry.is_array() || entry.size() != 2) throw ParseError("support entries are [cell, value] pairs");
        support[elem_from_json(G, entry[0])] = Codec<C>::elem(entry[1], A);
      }
    }
    return Configuration<C>::sparse(G, A, std::move(support), Codec<C>::elem(detail::field(j, "default"), A));
  }
  throw ParseError("unknown configuration kind \"" + kind + "\"");
}

template <ConcreteCategory C>
json to_json(const Configuration<C>& c) {
  switch (c.kind()) {
    case Configuration<C>::Kind::Dense: {
      json vals = json::array();
      for (const auto& v : c.values()) vals.push_back(Codec<C>::elem(v));
      return {{"kind", "dense"}, {"values", vals}};
    }
    case Configuration<C>::Kind::Sparse: {
      json sup = json::array();
      for (const auto& [g, v] : c.support()) sup.push_back({to_json(g), Codec<C>::elem(v)});
      return {{"kind", "sparse"}, {"default", Codec<C>::elem(c.fallback())}, {"support", sup}};
    }
    case Configuration<C>::Kind::Lazy: throw UnsupportedError("lazy configurations are not serializable; take a window");
  }
  return {};
}

}  // namespace catca
