#pragma once

// Group universes: finite Cayley tables, Z^d and free products of finite
// groups; homomorphisms between them; finite subsets and word-metric balls.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "catca/error.hpp"

namespace catca {

enum class Side : std::uint8_t { L, R };

struct Letter {
  Side side;
  std::size_t id;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
    if (auto c = a.side <=> b.side; c != 0) return c;
    return a.id <=> b.id;
  }
};

using Word = std::vector<Letter>;
using IntVec = std::vector<std::int64_t>;

/// An element of one of the supported universes.
///
/// Finite-table elements are ids, Z^d elements are integer vectors and
/// free-product elements are reduced alternating words. Ordering is the
/// canonical one: by id, lexicographic, or (length, lexicographic).
class GroupElem {
 public:
  GroupElem() : value_(std::size_t{0}) {}
  GroupElem(std::size_t id) : value_(id) {}  // NOLINT: ids read naturally as elements
  GroupElem(int id) : value_(static_cast<std::size_t>(id)) {}  // NOLINT

  static GroupElem vec(IntVec v) { return GroupElem(Repr(std::move(v))); }
  static GroupElem word(Word w) { return GroupElem(Repr(std::move(w))); }

  bool is_id() const { return std::holds_alternative<std::size_t>(value_); }
  bool is_vec() const { return std::holds_alternative<IntVec>(value_); }
  bool is_word() const { return std::holds_alternative<Word>(value_); }

  std::size_t id() const { return get<std::size_t>("id"); }
  const IntVec& as_vec() const { return get<IntVec>("vector"); }
  const Word& as_word() const { return get<Word>("word"); }

  std::string to_string() const {
    std::ostringstream os;
    if (is_id()) {
      os << id();
    } else if (is_vec()) {
      os << '(';
      for (std::size_t i = 0; i < as_vec().size(); ++i) os << (i ? "," : "") << as_vec()[i];
      os << ')';
    } else if (as_word().empty()) {
      os << "e";
    } else {
      for (const auto& l : as_word()) os << '(' << (l.side == Side::L ? 'L' : 'R') << ':' << l.id << ')';
    }
    return os.str();
  }

  friend bool operator==(const GroupElem&, const GroupElem&) = default;
  friend std::strong_ordering operator<=>(const GroupElem& a, const GroupElem& b) {
    if (a.value_.index() != b.value_.index()) return a.value_.index() <=> b.value_.index();
    if (a.is_id()) return a.id() <=> b.id();
    if (a.is_vec())
      return std::lexicographical_compare_three_way(a.as_vec().begin(), a.as_vec().end(),
                                                    b.as_vec().begin(), b.as_vec().end());
    const auto& wa = a.as_word();
    const auto& wb = b.as_word();
    if (wa.size() != wb.size()) return wa.size() <=> wb.size();
    return std::lexicographical_compare_three_way(wa.begin(), wa.end(), wb.begin(), wb.end());
  }

 private:
  using Repr = std::variant<std::size_t, IntVec, Word>;
  explicit GroupElem(Repr r) : value_(std::move(r)) {}

  template <class T>
  const T& get(const char* what) const {
    if (const T* p = std::get_if<T>(&value_)) return *p;
    throw MembershipError(std::string("group element is not a ") + what);
  }

  Repr value_;
};

class Group {
 public:
  enum class Kind { FiniteTable, ZPower, FreeProduct };
  using Table = std::vector<std::vector<std::size_t>>;

  /// Validates associativity, identity and inverses exhaustively.
  static Group finite_table(Table table, std::size_t identity, std::string name = {}) {
    const std::size_t n = table.size();
    if (n == 0) throw TypeError("finite group table must be non-empty");
    if (identity >= n) throw TypeError("identity id out of range");
    for (const auto& row : table) {
      if (row.size() != n) throw TypeError("Cayley table must be square");
      for (auto v : row)
        if (v >= n) throw TypeError("Cayley table entry out of range");
    }
    for (std::size_t a = 0; a < n; ++a)
      if (table[a][identity] != a || table[identity][a] != a)
        throw TypeError("identity law fails at " + std::to_string(a));
    std::vector<std::size_t> inverse(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b)
        if (table[a][b] == identity && table[b][a] == identity) inverse[a] = b;
      if (inverse[a] == n) throw TypeError("element " + std::to_string(a) + " has no inverse");
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (table[table[a][b]][c] != table[a][table[b][c]])
            throw TypeError("associativity fails");

    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::FiniteTable;
    impl->name = name.empty() ? "G" + std::to_string(n) : std::move(name);
    impl->table = std::move(table);
    impl->identity_id = identity;
    impl->inverse = std::move(inverse);
    for (std::size_t a = 0; a < n; ++a)
      if (a != identity) impl->generators.emplace_back(a);
    return Group(std::move(impl));
  }

  static Group cyclic(std::size_t n) {
    if (n == 0) throw TypeError("cyclic group order must be positive");
    Table t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return finite_table(std::move(t), 0, "Z_" + std::to_string(n));
  }

  /// Permutations of {0..n-1} in lexicographic order; a*b = a after b.
  static Group symmetric(std::size_t n) {
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const std::size_t m = perms.size();
    Table t(m, std::vector<std::size_t>(m));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        std::vector<std::size_t> c(n);
        for (std::size_t x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
        t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
      }
    return finite_table(std::move(t), 0, "S_" + std::to_string(n));
  }

  static Group z_power(std::size_t d) {
    if (d == 0) throw TypeError("Z^d needs d >= 1");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::ZPower;
    impl->dim = d;
    impl->name = d == 1 ? "Z" : "Z^" + std::to_string(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::int64_t s : {1, -1}) {
        IntVec v(d, 0);
        v[i] = s;
        impl->generators.push_back(GroupElem::vec(std::move(v)));
      }
    return Group(std::move(impl));
  }

  static Group free_product(const Group& left, const Group& right) {
    if (left.kind() != Kind::FiniteTable || right.kind() != Kind::FiniteTable)
      throw TypeError("free-product factors must be finite-table groups");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::FreeProduct;
    impl->name = left.name() + "*" + right.name();
    impl->factors = {left.impl_, right.impl_};
    for (Side side : {Side::L, Side::R})
      for (const auto& g : impl->factors[side == Side::L ? 0 : 1]->generators)
        impl->generators.push_back(GroupElem::word({Letter{side, g.id()}}));
    return Group(std::move(impl));
  }

  Kind kind() const { return impl_->kind; }
  bool is_finite() const { return kind() == Kind::FiniteTable; }
  const std::string& name() const { return impl_->name; }
  const std::vector<GroupElem>& generators() const { return impl_->generators; }

  std::size_t order() const {
    require_finite("order");
    return impl_->table.size();
  }
  const Table& table() const {
    require_finite("table");
    return impl_->table;
  }
  std::size_t dimension() const {
    if (kind() != Kind::ZPower) throw UnsupportedError("dimension of a non-Z^d group");
    return impl_->dim;
  }
  Group factor(Side side) const {
    if (kind() != Kind::FreeProduct) throw UnsupportedError("factor of a non-free-product group");
    return Group(impl_->factors[side == Side::L ? 0 : 1]);
  }

  /// Elements in canonical order (finite groups only).
  std::vector<GroupElem> elements() const {
    require_finite("elements");
    std::vector<GroupElem> out;
    out.reserve(order());
    for (std::size_t i = 0; i < order(); ++i) out.emplace_back(i);
    return out;
  }

  GroupElem identity() const {
    switch (kind()) {
      case Kind::FiniteTable: return GroupElem(impl_->identity_id);
      case Kind::ZPower: return GroupElem::vec(IntVec(impl_->dim, 0));
      case Kind::FreeProduct: return GroupElem::word({});
    }
    return {};
  }

  bool contains(const GroupElem& a) const {
    switch (kind()) {
      case Kind::FiniteTable: return a.is_id() && a.id() < impl_->table.size();
      case Kind::ZPower: return a.is_vec() && a.as_vec().size() == impl_->dim;
      case Kind::FreeProduct: {
        if (!a.is_word()) return false;
        const Word& w = a.as_word();
        for (std::size_t i = 0; i < w.size(); ++i) {
          const Impl& f = *impl_->factors[w[i].side == Side::L ? 0 : 1];
          if (w[i].id >= f.table.size() || w[i].id == f.identity_id) return false;
          if (i > 0 && w[i - 1].side == w[i].side) return false;
        }
        return true;
      }
    }
    return false;
  }

  void require_member(const GroupElem& a) const {
    if (!contains(a)) throw MembershipError(a.to_string() + " is not an element of " + name());
  }

  GroupElem op(const GroupElem& a, const GroupElem& b) const {
    require_member(a);
    require_member(b);
    switch (kind()) {
      case Kind::FiniteTable: return GroupElem(impl_->table[a.id()][b.id()]);
      case Kind::ZPower: {
        IntVec v = a.as_vec();
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.as_vec()[i];
        return GroupElem::vec(std::move(v));
      }
      case Kind::FreeProduct: {
        Word w = a.as_word();
        for (const Letter& l : b.as_word()) {
          if (!w.empty() && w.back().side == l.side) {
            const Impl& f = *impl_->factors[l.side == Side::L ? 0 : 1];
            std::size_t merged = f.table[w.back().id][l.id];
            if (merged == f.identity_id)
              w.pop_back();
            else
              w.back().id = merged;
          } else {
            w.push_back(l);
          }
        }
        return GroupElem::word(std::move(w));
      }
    }
    return {};
  }

  GroupElem inverse(const GroupElem& a) const {
    require_member(a);
    switch (kind()) {
      case Kind::FiniteTable: return GroupElem(impl_->inverse[a.id()]);
      case Kind::ZPower: {
        IntVec v = a.as_vec();
        for (auto& x : v) x = -x;
        return GroupElem::vec(std::move(v));
      }
      case Kind::FreeProduct: {
        Word w(a.as_word().rbegin(), a.as_word().rend());
        for (auto& l : w) l.id = impl_->factors[l.side == Side::L ? 0 : 1]->inverse[l.id];
        return GroupElem::word(std::move(w));
      }
    }
    return {};
  }

  /// g^k for any integer k.
  GroupElem power(GroupElem g, std::int64_t k) const {
    if (k < 0) {
      g = inverse(g);
      k = -k;
    }
    GroupElem acc = identity();
    while (k > 0) {
      if (k & 1) acc = op(acc, g);
      g = op(g, g);
      k >>= 1;
    }
    return acc;
  }

  /// Canonical embedding of a factor element into the free product.
  GroupElem embed(Side side, const GroupElem& x) const {
    factor(side).require_member(x);
    if (x == factor(side).identity()) return identity();
    return GroupElem::word({Letter{side, x.id()}});
  }

  friend bool operator==(const Group& a, const Group& b) {
    if (a.impl_ == b.impl_) return true;
    return same(*a.impl_, *b.impl_);
  }

 private:
  struct Impl {
    Kind kind = Kind::FiniteTable;
    std::string name;
    Table table;
    std::size_t identity_id = 0;
    std::vector<std::size_t> inverse;
    std::size_t dim = 0;
    std::vector<std::shared_ptr<const Impl>> factors;
    std::vector<GroupElem> generators;
  };

  explicit Group(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  static bool same(const Impl& a, const Impl& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case Kind::FiniteTable: return a.identity_id == b.identity_id && a.table == b.table;
      case Kind::ZPower: return a.dim == b.dim;
      case Kind::FreeProduct:
        return same(*a.factors[0], *b.factors[0]) && same(*a.factors[1], *b.factors[1]);
    }
    return false;
  }

  void require_finite(const char* what) const {
    if (!is_finite()) throw UnsupportedError(std::string(what) + " needs a finite group, got " + name());
  }

  std::shared_ptr<const Impl> impl_;
};

/// x -> xg.
inline auto right_translation(const Group& G, const GroupElem& g) {
  G.require_member(g);
  return [G, g](const GroupElem& x) { return G.op(x, g); };
}

/// A finite subset of a group, kept sorted in canonical order without duplicates.
class FiniteSubset {
 public:
  FiniteSubset(Group owner, std::vector<GroupElem> elems) : owner_(std::move(owner)), elems_(std::move(elems)) {
    for (const auto& e : elems_) owner_.require_member(e);
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  }

  static FiniteSubset singleton(const Group& G, const GroupElem& g) { return FiniteSubset(G, {g}); }
  static FiniteSubset identity_set(const Group& G) { return singleton(G, G.identity()); }
  static FiniteSubset whole(const Group& G) { return FiniteSubset(G, G.elements()); }

  const Group& owner() const { return owner_; }
  const std::vector<GroupElem>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const GroupElem& operator[](std::size_t i) const { return elems_[i]; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  std::optional<std::size_t> position(const GroupElem& g) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), g);
    if (it == elems_.end() || *it != g) return std::nullopt;
    return static_cast<std::size_t>(it - elems_.begin());
  }
  bool contains(const GroupElem& g) const { return position(g).has_value(); }
  std::size_t index_of(const GroupElem& g) const {
    if (auto p = position(g)) return *p;
    throw MembershipError(g.to_string() + " is not in the subset");
  }

  bool is_subset_of(const FiniteSubset& other) const {
    return owner_ == other.owner_ && std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
  }

  friend bool operator==(const FiniteSubset& a, const FiniteSubset& b) {
    return a.owner_ == b.owner_ && a.elems_ == b.elems_;
  }

 private:
  Group owner_;
  std::vector<GroupElem> elems_;
};

inline void require_same_owner(const FiniteSubset& a, const FiniteSubset& b) {
  if (!(a.owner() == b.owner())) throw TypeError("subsets belong to different groups");
}

/// {xy : x in X, y in Y}.
inline FiniteSubset subset_product(const FiniteSubset& X, const FiniteSubset& Y) {
  require_same_owner(X, Y);
  std::vector<GroupElem> out;
  out.reserve(X.size() * Y.size());
  for (const auto& x : X)
    for (const auto& y : Y) out.push_back(X.owner().op(x, y));
  return FiniteSubset(X.owner(), std::move(out));
}

/// Sg.
inline FiniteSubset subset_translate(const FiniteSubset& S, const GroupElem& g) {
  std::vector<GroupElem> out;
  out.reserve(S.size());
  for (const auto& s : S) out.push_back(S.owner().op(s, g));
  return FiniteSubset(S.owner(), std::move(out));
}

inline FiniteSubset subset_union(const FiniteSubset& S, const FiniteSubset& T) {
  require_same_owner(S, T);
  std::vector<GroupElem> out(S.begin(), S.end());
  out.insert(out.end(), T.begin(), T.end());
  return FiniteSubset(S.owner(), std::move(out));
}

/// All products of at most r generators.
inline FiniteSubset ball(const Group& G, std::size_t r) {
  std::set<GroupElem> seen{G.identity()};
  std::vector<GroupElem> frontier{G.identity()};
  for (std::size_t step = 0; step < r && !frontier.empty(); ++step) {
    std::vector<GroupElem> next;
    for (const auto& x : frontier)
      for (const auto& s : G.generators()) {
        GroupElem y = G.op(x, s);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return FiniteSubset(G, std::vector<GroupElem>(seen.begin(), seen.end()));
}

class GroupHom;
GroupHom compose(const GroupHom& phi, const GroupHom& psi);

/// A homomorphism between universes, stored by one of four rules.
class GroupHom {
 public:
  struct TableRule {
    std::vector<GroupElem> images;  // indexed by source id
  };
  struct PairRule {
    std::shared_ptr<const GroupHom> left, right;
  };
  struct MatrixRule {
    std::vector<IntVec> rows;  // target-dim x source-dim
  };
  struct GeneratorRule {
    std::vector<GroupElem> images;  // image of each unit vector of Z^d
  };
  using Rule = std::variant<TableRule, PairRule, MatrixRule, GeneratorRule>;

  static GroupHom table(Group src, Group tgt, std::vector<GroupElem> images) {
    if (!src.is_finite()) throw TypeError("table homomorphism needs a finite source");
    if (images.size() != src.order()) throw TypeError("table homomorphism needs one image per source element");
    for (const auto& y : images) tgt.require_member(y);
    GroupHom h(std::move(src), std::move(tgt), TableRule{std::move(images)});
    const auto& t = h.src_.table();
    const auto& im = std::get<TableRule>(h.rule_).images;
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = 0; b < t.size(); ++b)
        if (im[t[a][b]] != h.tgt_.op(im[a], im[b]))
          throw TypeError("table is not a homomorphism at (" + std::to_string(a) + "," + std::to_string(b) + ")");
    return h;
  }

  /// The coproduct mediator [left, right] : L*R -> K.
  static GroupHom pair(Group src, const GroupHom& left, const GroupHom& right) {
    if (src.kind() != Group::Kind::FreeProduct) throw TypeError("pair homomorphism needs a free-product source");
    if (!(left.source() == src.factor(Side::L)) || !(right.source() == src.factor(Side::R)))
      throw TypeError("pair components must start at the free-product factors");
    if (!(left.target() == right.target())) throw TypeError("pair components must share a target");
    Group tgt = left.target();
    return GroupHom(std::move(src), std::move(tgt),
                    PairRule{std::make_shared<const GroupHom>(left), std::make_shared<const GroupHom>(right)});
  }

  static GroupHom matrix(Group src, Group tgt, std::vector<IntVec> rows) {
    if (src.kind() != Group::Kind::ZPower || tgt.kind() != Group::Kind::ZPower)
      throw TypeError("matrix homomorphism is Z^d -> Z^e");
    if (rows.size() != tgt.dimension()) throw TypeError("matrix row count must equal target dimension");
    for (const auto& r : rows)
      if (r.size() != src.dimension()) throw TypeError("matrix column count must equal source dimension");
    return GroupHom(std::move(src), std::move(tgt), MatrixRule{std::move(rows)});
  }

  /// Z^d -> K given by the images of the unit vectors; images must commute.
  static GroupHom generator_images(Group src, Group tgt, std::vector<GroupElem> images) {
    if (src.kind() != Group::Kind::ZPower) throw TypeError("generator-image homomorphism needs a Z^d source");
    if (images.size() != src.dimension()) throw TypeError("need one image per unit vector");
    for (const auto& y : images) tgt.require_member(y);
    for (std::size_t i = 0; i < images.size(); ++i)
      for (std::size_t j = i + 1; j < images.size(); ++j)
        if (tgt.op(images[i], images[j]) != tgt.op(images[j], images[i]))
          throw TypeError("generator images must commute pairwise");
    GroupHom h(std::move(src), std::move(tgt), GeneratorRule{std::move(images)});
    h.check_on_ball();
    return h;
  }

  static GroupHom identity(const Group& G) {
    switch (G.kind()) {
      case Group::Kind::FiniteTable: return table(G, G, G.elements());
      case Group::Kind::ZPower: {
        std::vector<IntVec> rows(G.dimension(), IntVec(G.dimension(), 0));
        for (std::size_t i = 0; i < rows.size(); ++i) rows[i][i] = 1;
        return matrix(G, G, std::move(rows));
      }
      case Group::Kind::FreeProduct: return pair(G, embedding(G, Side::L), embedding(G, Side::R));
    }
    throw TypeError("unknown group kind");
  }

  /// The constant-e homomorphism.
  static GroupHom trivial(const Group& src, const Group& tgt) {
    switch (src.kind()) {
      case Group::Kind::FiniteTable: return table(src, tgt, std::vector<GroupElem>(src.order(), tgt.identity()));
      case Group::Kind::ZPower:
        return generator_images(src, tgt, std::vector<GroupElem>(src.dimension(), tgt.identity()));
      case Group::Kind::FreeProduct:
        return pair(src, trivial(src.factor(Side::L), tgt), trivial(src.factor(Side::R), tgt));
    }
    throw TypeError("unknown group kind");
  }

  /// The canonical embedding of a factor into the free product W.
  static GroupHom embedding(const Group& W, Side side) {
    Group f = W.factor(side);
    std::vector<GroupElem> images;
    for (const auto& x : f.elements()) images.push_back(W.embed(side, x));
    return table(f, W, std::move(images));
  }

  const Group& source() const { return src_; }
  const Group& target() const { return tgt_; }
  const Rule& rule() const { return rule_; }

  GroupElem operator()(const GroupElem& h) const {
    src_.require_member(h);
    return std::visit([&](const auto& r) { return eval(r, h); }, rule_);
  }

  /// Homomorphisms agree iff they agree on a generating set.
  friend bool operator==(const GroupHom& a, const GroupHom& b) {
    if (!(a.src_ == b.src_) || !(a.tgt_ == b.tgt_)) return false;
    for (const auto& g : a.src_.generators())
      if (a(g) != b(g)) return false;
    return true;
  }

 private:
  GroupHom(Group src, Group tgt, Rule rule) : src_(std::move(src)), tgt_(std::move(tgt)), rule_(std::move(rule)) {}

  GroupElem eval(const TableRule& r, const GroupElem& h) const { return r.images[h.id()]; }
  GroupElem eval(const PairRule& r, const GroupElem& h) const {
    GroupElem acc = tgt_.identity();
    for (const Letter& l : h.as_word())
      acc = tgt_.op(acc, (l.side == Side::L ? *r.left : *r.right)(GroupElem(l.id)));
    return acc;
  }
  GroupElem eval(const MatrixRule& r, const GroupElem& h) const {
    IntVec out(r.rows.size(), 0);
    for (std::size_t i = 0; i < r.rows.size(); ++i)
      for (std::size_t j = 0; j < h.as_vec().size(); ++j) out[i] += r.rows[i][j] * h.as_vec()[j];
    return GroupElem::vec(std::move(out));
  }
  GroupElem eval(const GeneratorRule& r, const GroupElem& h) const {
    GroupElem acc = tgt_.identity();
    for (std::size_t i = 0; i < r.images.size(); ++i) acc = tgt_.op(acc, tgt_.power(r.images[i], h.as_vec()[i]));
    return acc;
  }

  // Sampled law check for infinite sources: all pairs from ball(source, 2).
  void check_on_ball() const {
    FiniteSubset window = ball(src_, 2);
    for (const auto& x : window)
      for (const auto& y : window)
        if ((*this)(src_.op(x, y)) != tgt_.op((*this)(x), (*this)(y)))
          throw TypeError("homomorphism law fails at " + x.to_string() + ", " + y.to_string());
  }

  Group src_;
  Group tgt_;
  Rule rule_;
};

/// phi o psi.
inline GroupHom compose(const GroupHom& phi, const GroupHom& psi) {
  if (!(psi.target() == phi.source())) throw TypeError("homomorphisms are not composable");
  const Group& src = psi.source();
  const Group& tgt = phi.target();
  switch (src.kind()) {
    case Group::Kind::FiniteTable: {
      std::vector<GroupElem> images;
      for (const auto& x : src.elements()) images.push_back(phi(psi(x)));
      return GroupHom::table(src, tgt, std::move(images));
    }
    case Group::Kind::ZPower: {
      std::vector<GroupElem> images;
      for (std::size_t i = 0; i < src.dimension(); ++i) {
        IntVec unit(src.dimension(), 0);
        unit[i] = 1;
        images.push_back(phi(psi(GroupElem::vec(std::move(unit)))));
      }
      if (tgt.kind() == Group::Kind::ZPower) {
        std::vector<IntVec> rows(tgt.dimension(), IntVec(src.dimension(), 0));
        for (std::size_t j = 0; j < images.size(); ++j)
          for (std::size_t i = 0; i < rows.size(); ++i) rows[i][j] = images[j].as_vec()[i];
        return GroupHom::matrix(src, tgt, std::move(rows));
      }
      return GroupHom::generator_images(src, tgt, std::move(images));
    }
    case Group::Kind::FreeProduct:
      return GroupHom::pair(src, compose(phi, compose(psi, GroupHom::embedding(src, Side::L))),
                            compose(phi, compose(psi, GroupHom::embedding(src, Side::R))));
  }
  throw TypeError("unknown group kind");
}

inline GroupElem hom_eval(const GroupHom& phi, const GroupElem& h) { return phi(h); }

/// {phi(s) : s in S}.
inline FiniteSubset subset_image(const FiniteSubset& S, const GroupHom& phi) {
  if (!(S.owner() == phi.source())) throw TypeError("subset is not in the homomorphism's source");
  std::vector<GroupElem> out;
  for (const auto& s : S) out.push_back(phi(s));
  return FiniteSubset(phi.target(), std::move(out));
}

/// Every homomorphism between two finite groups, found by testing each map
/// of element ids (lexicographic order of the image tables).
inline std::vector<GroupHom> enumerate_homs(const Group& src, const Group& tgt) {
  if (!src.is_finite() || !tgt.is_finite()) throw UnsupportedError("enumerate_homs needs finite groups");
  std::vector<GroupHom> out;
  const std::size_t n = src.order();
  const std::size_t m = tgt.order();
  std::vector<std::size_t> images(n, 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > 10'000'000 / std::max<std::size_t>(m, 1)) throw UnsupportedError("enumerate_homs: search space too large");
    total *= m;
  }
  const auto& ts = src.table();
  const auto& tt = tgt.table();
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = n; i-- > 0;) {
      images[i] = c % m;
      c /= m;
    }
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b) ok = images[ts[a][b]] == tt[images[a]][images[b]];
    if (ok) out.push_back(GroupHom::table(src, tgt, std::vector<GroupElem>(images.begin(), images.end())));
  }
  return out;
}

}  // namespace catca
