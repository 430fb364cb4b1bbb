#pragma once

// The run / check / demo commands behind the command-line tool. They write
// to caller-supplied streams and return process exit codes:
//   0 success, 1 check failure, 2 usage or parse error, 3 typing error.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "catca/checks.hpp"
#include "catca/json_io.hpp"
#include "catca/sampling.hpp"
#include "catca/suites.hpp"

namespace catca {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kTyping = 3 };

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("inline JSON: ") + e.what());
  }
}

/// Runs fn and maps library errors to exit codes, reporting on err.
template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    err << "error: malformed document: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kTyping;
  }
}

// ---------------------------------------------------------------------------
// Frames and rendering.

/// One rendered time step: a grid of cells (a single row for 1-D windows).
struct Frame {
  std::vector<std::vector<std::string>> text;  // rows of rendered values
  std::vector<std::vector<int>> level;         // index of each value in the alphabet's element list
  int levels = 1;                              // number of elements in the alphabet
  json cells = json::array();                  // [[cell, value], ...]
};

inline std::string render_text(const std::vector<Frame>& frames) {
  std::ostringstream os;
  for (std::size_t t = 0; t < frames.size(); ++t) {
    const Frame& f = frames[t];
    bool narrow = true;
    for (const auto& row : f.text)
      for (const auto& s : row) narrow = narrow && s.size() == 1;
    if (f.text.size() > 1 && t > 0) os << "\n";
    for (const auto& row : f.text) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i && !narrow ? " " : "") << row[i];
      os << "\n";
    }
  }
  return os.str();
}

inline std::string render_jsonl(const std::vector<Frame>& frames) {
  std::ostringstream os;
  for (std::size_t t = 0; t < frames.size(); ++t) os << json{{"step", t}, {"cells", frames[t].cells}}.dump() << "\n";
  return os.str();
}

/// Binary 8-bit PGM: the first alphabet element is white, the last black.
inline std::string pgm_bytes(const std::vector<std::vector<int>>& levels, int count) {
  const std::size_t h = levels.size(), w = h ? levels[0].size() : 0;
  std::string out = "P5\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
  for (const auto& row : levels)
    for (int v : row) out.push_back(static_cast<char>(count <= 1 ? 255 : 255 - (v * 255) / (count - 1)));
  return out;
}

/// A space-time image when every frame is one row of the same width.
inline std::optional<std::string> spacetime_pgm(const std::vector<Frame>& frames) {
  std::vector<std::vector<int>> rows;
  int count = 1;
  for (const auto& f : frames) {
    if (f.level.size() != 1 || (!rows.empty() && rows[0].size() != f.level[0].size())) return std::nullopt;
    rows.push_back(f.level[0]);
    count = std::max(count, f.levels);
  }
  return pgm_bytes(rows, count);
}

/// Default output window: a box for Z^2, a ball otherwise (the whole group
/// for finite universes when no radius is given).
inline FiniteSubset default_window(const Group& G, std::optional<std::size_t> radius) {
  if (G.is_finite() && !radius) return FiniteSubset::whole(G);
  const std::size_t r = radius.value_or(8);
  if (G.kind() == Group::Kind::ZPower && G.dimension() == 2) {
    std::vector<GroupElem> box;
    const auto ri = static_cast<std::int64_t>(r);
    for (std::int64_t a = -ri; a <= ri; ++a)
      for (std::int64_t b = -ri; b <= ri; ++b) box.push_back(GroupElem::vec({a, b}));
    return FiniteSubset(G, std::move(box));
  }
  return ball(G, r);
}

template <ConcreteCategory C>
Frame make_frame(const Configuration<C>& c, const FiniteSubset& window) {
  const auto elems = C::elements(c.alphabet());
  auto level_of = [&](const typename C::Elem& v) {
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (elems[i] == v) return static_cast<int>(i);
    throw TypeError("value outside the alphabet");
  };
  auto render = [](const typename C::Elem& v) {
    json j = Codec<C>::elem(v);
    if (j.is_array() && j.size() == 1) j = j[0];
    return j.dump();
  };
  Frame f;
  f.levels = static_cast<int>(elems.size());
  const Group& G = c.universe();
  const bool grid = G.kind() == Group::Kind::ZPower && G.dimension() == 2;
  std::map<std::int64_t, std::size_t> row_of;
  for (const auto& g : window) {
    auto v = c.at(g);
    f.cells.push_back({to_json(g), Codec<C>::elem(v)});
    std::size_t r = 0;
    if (grid) {
      r = row_of.emplace(g.as_vec()[0], row_of.size()).first->second;
    }
    if (f.text.size() <= r) f.text.resize(r + 1), f.level.resize(r + 1);
    f.text[r].push_back(render(v));
    f.level[r].push_back(level_of(v));
  }
  if (f.text.empty()) f.text.resize(1), f.level.resize(1);
  return f;
}

// ---------------------------------------------------------------------------
// run

struct RunOptions {
  std::string ca_file;      // automaton document (CA or generalized CA)
  std::string inline_doc;   // the same, given inline
  std::string group_file;   // replaces the document's universe
  std::string config_file;  // initial configuration; otherwise `init`
  std::string init = "single";  // single | random
  std::string window_file;  // explicit output window (array of cells)
  std::size_t steps = 0;
  std::optional<std::size_t> radius;
  std::uint64_t seed = 1;
  std::string format = "text";  // text | pgm | json
  std::string out_dir;          // empty writes to the output stream
  std::string save_file;        // final configuration on the window, as JSON
};

inline json load_automaton_doc(const RunOptions& o) {
  if (o.ca_file.empty() == o.inline_doc.empty()) throw ParseError("give exactly one of --ca or --inline");
  json doc = o.inline_doc.empty() ? load_json_file(o.ca_file) : parse_json_text(o.inline_doc);
  if (!o.group_file.empty()) doc["group"] = load_json_file(o.group_file);
  return doc;
}

inline std::size_t word_length(const Group& G, const GroupElem& g) {
  if (g.is_vec()) {
    std::size_t n = 0;
    for (auto v : g.as_vec()) n += static_cast<std::size_t>(v < 0 ? -v : v);
    return n;
  }
  if (g.is_word()) return g.as_word().size();
  return G.is_finite() ? 0 : 1;
}

template <ConcreteCategory C>
Configuration<C> initial_configuration(const RunOptions& o, const Group& G, const typename C::Object& A,
                                       std::size_t reach) {
  if (!o.config_file.empty()) return config_from_json<C>(load_json_file(o.config_file), G, A);
  auto elems = C::elements(A);
  if (o.init == "single") {
    std::map<GroupElem, typename C::Elem> support{{G.identity(), elems[elems.size() > 1 ? 1 : 0]}};
    return Configuration<C>::sparse(G, A, std::move(support), elems[0]);
  }
  if (o.init == "random") {
    Rng rng(o.seed);
    if (G.is_finite()) return random_dense<C>(G, A, rng);
    const std::size_t d = G.kind() == Group::Kind::ZPower ? G.dimension() : 1;
    return random_sparse<C>(G, A, ball(G, d * o.radius.value_or(8) + reach), rng);
  }
  throw ParseError("unknown --init \"" + o.init + "\" (expected single or random)");
}

template <ConcreteCategory C>
std::size_t rule_reach(const Group& G, const FiniteSubset& S) {
  std::size_t m = 0;
  for (const auto& s : S) m = std::max(m, word_length(G, s));
  return m;
}

/// Frames 0..steps of the automaton in `doc`, plus the last configuration.
template <ConcreteCategory C>
std::pair<std::vector<Frame>, json> simulate(const json& doc, const RunOptions& o) {
  std::vector<Frame> frames;
  auto window_for = [&](const Group& U) {
    return o.window_file.empty() ? default_window(U, o.radius) : subset_from_json(U, load_json_file(o.window_file));
  };
  auto saved = [&](const Configuration<C>& c, const FiniteSubset& w) {
    std::map<GroupElem, typename C::Elem> support;
    for (const auto& g : w) support[g] = c.at(g);
    return to_json(Configuration<C>::sparse(c.universe(), c.alphabet(), std::move(support), C::elements(c.alphabet())[0]));
  };
  if (doc.contains("hom")) {
    auto tau = gca_from_json<C>(doc);
    const bool endo = tau.source_universe() == tau.target_universe() && tau.source_alphabet() == tau.target_alphabet();
    if (o.steps > 1 && !endo) throw TypeError("a generalized automaton between different universes runs for at most one step");
    auto c = initial_configuration<C>(o, tau.source_universe(), tau.source_alphabet(),
                                      o.steps * rule_reach<C>(tau.source_universe(), tau.neighborhood()));
    frames.push_back(make_frame(c, window_for(tau.source_universe())));
    for (std::size_t t = 0; t < o.steps; ++t) {
      c = apply_gca(tau, c);
      frames.push_back(make_frame(c, window_for(c.universe())));
    }
    return {std::move(frames), saved(c, window_for(c.universe()))};
  }
  auto tau = ca_from_json<C>(doc);
  if (o.steps > 0 && !(tau.source_alphabet() == tau.target_alphabet()))
    throw TypeError("iterating needs an automaton with equal source and target alphabets");
  FiniteSubset window = window_for(tau.universe());
  auto c = initial_configuration<C>(o, tau.universe(), tau.source_alphabet(),
                                    o.steps * rule_reach<C>(tau.universe(), tau.neighborhood()));
  frames.push_back(make_frame(c, window));
  for (std::size_t t = 0; t < o.steps; ++t) {
    c = apply(tau, c);
    frames.push_back(make_frame(c, window));
  }
  return {std::move(frames), saved(c, window)};
}

inline void write_file(const std::filesystem::path& p, const std::string& bytes) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw ParseError("cannot write " + p.string());
  f << bytes;
}

inline int cmd_run(const RunOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (o.format != "text" && o.format != "pgm" && o.format != "json")
      throw ParseError("unknown --format \"" + o.format + "\" (expected text, pgm or json)");
    json doc = load_automaton_doc(o);
    auto inst = detail::get_as<std::string>(detail::field(doc, "instance"), "instance");
    auto [frames, last] = dispatch_instance(inst, [&]<class C>(std::type_identity<C>) -> std::pair<std::vector<Frame>, json> {
      if constexpr (ConcreteCategory<C>) return simulate<C>(doc, o);
      else throw UnsupportedError(std::string("instance ") + C::name + " has no configurations to run");
    });

    std::vector<std::pair<std::string, std::string>> files;  // name, bytes
    if (o.format == "text") files.emplace_back("run.txt", render_text(frames));
    else if (o.format == "json") files.emplace_back("run.jsonl", render_jsonl(frames));
    else if (auto img = spacetime_pgm(frames)) files.emplace_back("run.pgm", *img);
    else
      for (std::size_t t = 0; t < frames.size(); ++t) {
        char name[32];
        std::snprintf(name, sizeof name, "frame_%03zu.pgm", t);
        files.emplace_back(name, pgm_bytes(frames[t].level, frames[t].levels));
      }

    if (o.out_dir.empty()) {
      if (files.size() > 1) throw ParseError("several images to write; give --out DIR");
      out << files[0].second;
    } else {
      std::filesystem::create_directories(o.out_dir);
      for (const auto& [name, bytes] : files) write_file(std::filesystem::path(o.out_dir) / name, bytes);
    }
    if (!o.save_file.empty()) write_file(o.save_file, last.dump(2) + "\n");
    return static_cast<int>(kOk);
  });
}

// ---------------------------------------------------------------------------
// check

struct CheckOptions {
  std::string suite = "all";
  std::string instance;       // empty: every applicable instance
  std::string ca_file;        // check one automaton document instead of suites
  std::string morphism_file;  // check one morphism for being an automaton
  std::uint64_t seed = 1;
  std::size_t cases = 0;
  std::size_t radius = 2;
  std::uint32_t p = 2;
  std::string group;
};

/// Checks an automaton document. Over a finite universe: a claimed
/// realization under "realized" (if present) must match, and the realized
/// morphism must be equivariant and extract back to itself. Over an
/// infinite universe: ball-mode equivariance on seeded configurations.
template <AlphabetCategory C>
CheckReport check_automaton_doc(const json& doc, const CheckOptions& o) {
  auto tau = ca_from_json<C>(doc);
  const Group& G = tau.universe();
  const auto& A = tau.source_alphabet();
  const auto& B = tau.target_alphabet();
  CheckReport rep;
  rep.check = "automaton";
  rep.seed = o.seed;
  rep.params = {{"instance", C::name}, {"group", G.name()}};
  if (G.is_finite()) {
    auto f = realize(tau);
    if (doc.contains("realized")) {
      auto claimed = Codec<C>::morphism(doc.at("realized"), f.source, f.target);
      for (const auto& g : G.elements()) {
        ++rep.cases;
        auto pg = cell_projection<C>(G, B, g);
        if (!(C::compose(pg, claimed) == C::compose(pg, f))) {
          json w{{"cell", to_json(g)}, {"claimed", Codec<C>::morphism(claimed)}, {"realized", Codec<C>::morphism(f)}};
          auto r = chl_extract<C>(claimed, G, A, B);
          if (!r) w["equivariance_fails_at"] = to_json(*r.counterexample);
          rep.fail(std::move(w));
          return rep;
        }
      }
    }
    auto eq = check_equivariance<C>(f, G, A, B);
    rep.cases += eq.cases;
    if (!eq.pass) {
      rep.fail(*eq.counterexample);
      return rep;
    }
    auto r = chl_extract<C>(f, G, A, B);
    ++rep.cases;
    if (!r || !(realize(*r.automaton) == f)) rep.fail({{"automaton", to_json(tau)}, {"error", "extraction mismatch"}});
    else rep.details = {{"minimal_neighborhood", to_json(r.automaton->neighborhood())}};
    return rep;
  }
  if constexpr (ConcreteCategory<C>) {
    Rng rng(o.seed);
    std::vector<Configuration<C>> configs;
    for (int i = 0; i < 20; ++i) configs.push_back(random_sparse<C>(G, A, ball(G, 2 * o.radius + 2), rng));
    auto eq = check_equivariance(tau, configs, o.radius);
    eq.check = "automaton";
    eq.seed = o.seed;
    return eq;
  } else {
    throw UnsupportedError(std::string("instance ") + C::name + " is checked over finite universes only");
  }
}

/// {"group", "instance", "A", "B", "morphism"}: is the morphism an automaton?
template <AlphabetCategory C>
CheckReport check_morphism_doc(const json& doc, const CheckOptions& o) {
  Group G = group_from_json(detail::field(doc, "group"));
  require_finite_universe(G);
  auto A = Codec<C>::object(detail::field(doc, "A"));
  auto B = doc.contains("B") ? Codec<C>::object(doc.at("B")) : A;
  auto f = Codec<C>::morphism(detail::field(doc, "morphism"), power<C>(A, G.order()), power<C>(B, G.order()));
  CheckReport rep;
  rep.check = "chl-extract";
  rep.seed = o.seed;
  rep.params = {{"instance", C::name}, {"group", G.name()}};
  rep.cases = G.order();
  auto r = chl_extract<C>(f, G, A, B);
  if (!r) rep.fail({{"g", to_json(*r.counterexample)}, {"group", to_json(G)}, {"morphism", Codec<C>::morphism(f)}});
  else rep.details = {{"automaton", to_json(*r.automaton)}};
  return rep;
}

inline int cmd_check(const CheckOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    bool all_pass = true;
    auto emit = [&](const CheckReport& r) {
      all_pass = all_pass && r.pass;
      out << r.to_json().dump() << "\n";
    };
    auto doc_check = [&](const std::string& file, bool automaton) {
      json doc = load_json_file(file);
      auto inst = detail::get_as<std::string>(detail::field(doc, "instance"), "instance");
      emit(dispatch_instance(inst, [&]<class C>(std::type_identity<C>) {
        return automaton ? check_automaton_doc<C>(doc, o) : check_morphism_doc<C>(doc, o);
      }));
    };
    if (!o.ca_file.empty() || !o.morphism_file.empty()) {
      if (!o.ca_file.empty()) doc_check(o.ca_file, true);
      if (!o.morphism_file.empty()) doc_check(o.morphism_file, false);
      return static_cast<int>(all_pass ? kOk : kCheckFailed);
    }
    SuiteParams base;
    base.seed = o.seed;
    base.cases = o.cases;
    base.radius = o.radius;
    base.p = o.p;
    base.group = o.group;
    if (o.suite != "all" && !is_suite(o.suite)) throw ParseError("unknown suite \"" + o.suite + "\"");
    std::vector<std::string> names;
    if (o.suite != "all") names.push_back(o.suite);
    if (o.instance.empty()) {
      run_all(base, emit, names);
    } else {
      base.instance = o.instance;
      dispatch_instance(o.instance, [](auto) { return 0; });
      for (const auto& n : names.empty() ? suite_names() : names) {
        if (o.instance == "rel" && n == "weak-product" && names.empty()) continue;
        emit(run_suite(n, base));
      }
    }
    return static_cast<int>(all_pass ? kOk : kCheckFailed);
  });
}

// ---------------------------------------------------------------------------
// demo

inline json rule90_doc() {
  return {{"group", {{"kind", "z-power"}, {"d", 1}}},
          {"instance", "finvect"},
          {"A", {{"p", 2}, {"dim", 1}}},
          {"S", {{-1}, {1}}},
          {"mu", {{"instance", "finvect"}, {"p", 2}, {"matrix", {{1, 1}}}}}};
}

inline json rule110_doc() {
  // Neighborhood {-1, 0, 1}; the window (l, c, r) has code 4l + 2c + r.
  std::vector<std::size_t> table(8);
  for (std::size_t n = 0; n < 8; ++n) table[n] = (110u >> n) & 1u;
  return {{"group", {{"kind", "z-power"}, {"d", 1}}},
          {"instance", "finset"},
          {"A", {{"size", 2}}},
          {"S", {{-1}, {0}, {1}}},
          {"mu", {{"instance", "finset"}, {"table", table}}}};
}

struct DemoOptions {
  std::string name;
  std::string out_dir = "demo-out";
};

inline void demo_spacetime(const json& doc, std::size_t steps, std::size_t radius, const std::string& stem,
                           const DemoOptions& o, std::ostream& out) {
  RunOptions r;
  r.steps = steps;
  r.radius = radius;
  auto [frames, last] = dispatch_instance(doc.at("instance").get<std::string>(), [&]<class C>(std::type_identity<C>) {
    if constexpr (ConcreteCategory<C>) return simulate<C>(doc, r);
    else return std::pair<std::vector<Frame>, json>{};
  });
  std::filesystem::path dir(o.out_dir);
  write_file(dir / (stem + ".pgm"), *spacetime_pgm(frames));
  write_file(dir / (stem + ".txt"), render_text(frames));
  write_file(dir / (stem + ".json"), doc.dump(2) + "\n");
  out << stem << ": " << frames.size() << " rows of width " << frames[0].level[0].size() << " written to "
      << (dir / (stem + ".pgm")).string() << "\n";
}

/// Subsampling (tau c)(h) = c(2h) over Z, compared with its factorization
/// through the identity automaton and the pullback along h -> 2h.
inline json demo_subsample_trace() {
  Group Z = Group::z_power(1);
  auto A = FinSet::object(2);
  GroupHom twice = GroupHom::matrix(Z, Z, {{2}});
  auto tau = make_gca<FinSet>(Z, Z, twice, A, A, FiniteSubset::identity_set(Z), power_projection<FinSet>(A, 1, 0));
  std::map<GroupElem, std::size_t> support;
  for (std::int64_t x = -12; x <= 12; ++x)
    if (((x % 3) + 3) % 3 == 0) support[GroupElem::vec({x})] = 1;
  auto c = Configuration<FinSet>::sparse(Z, A, support, 0);
  auto sub = apply_gca(tau, c);
  auto fac = factorize(tau);
  auto via = apply_gca(pullback_gca<FinSet>(fac.hom, A), apply(fac.automaton, c));
  FiniteSubset in = ball(Z, 8), outw = ball(Z, 4);
  json input = json::array(), output = json::array();
  for (const auto& g : in) input.push_back(c.at(g));
  for (const auto& h : outw) output.push_back(sub.at(h));

  Group Z4 = Group::cyclic(4), Z2 = Group::cyclic(2);
  auto F = FinVect::space(2, 1);
  auto fin = make_gca<FinVect>(Z4, Z2, GroupHom::table(Z2, Z4, {GroupElem(0), GroupElem(2)}), F, F,
                               FiniteSubset::identity_set(Z4), power_projection<FinVect>(F, 1, 0));
  return {{"automaton", to_json(tau)},
          {"input_window", to_json(in)},
          {"input", input},
          {"output_window", to_json(outw)},
          {"output", output},
          {"factorization_agrees", agree_on(sub, via, outw)},
          {"finite_case", {{"automaton", to_json(fin)}, {"realized", Codec<FinVect>::morphism(realize_gca(fin))}}}};
}

/// The mediator diagram for G = Z_2, H = Z_3, K = Z_6, C = A x B with
/// alpha reading the A-part and beta the B-part of a cell, on one sample
/// configuration, at every cell of ball(G*H, 2).
inline json demo_weakprod_trace() {
  Group G = Group::cyclic(2), H = Group::cyclic(3), K = Group::cyclic(6);
  auto two = FinSet::object(2);
  auto AB = binary_product<FinSet>(two, two);
  FiniteSubset e = FiniteSubset::identity_set(K);
  auto p1 = power_projection<FinSet>(AB.object, 1, 0);
  auto alpha = make_gca<FinSet>(K, G, GroupHom::table(G, K, {GroupElem(0), GroupElem(3)}), AB.object, two, e,
                                FinSet::compose(AB.first, p1));
  auto beta = make_gca<FinSet>(K, H, GroupHom::table(H, K, {GroupElem(0), GroupElem(2), GroupElem(4)}), AB.object,
                               two, e, FinSet::compose(AB.second, p1));
  auto tau = weak_product_mediator(alpha, beta);
  auto wp = weak_product<FinSet>(two, two, G, H);
  auto c = Configuration<FinSet>::dense(K, AB.object, {0, 1, 2, 3, 1, 2});
  auto tc = apply_gca(tau, c);
  auto ia = apply_gca(wp.first, tc), ib = apply_gca(wp.second, tc);
  auto ac = apply_gca(alpha, c), bc = apply_gca(beta, c);
  bool holds = true;
  json cells = json::array(), first = json::array(), second = json::array();
  for (const auto& w : ball(wp.universe, 2)) {
    auto v = tc.at(w);
    cells.push_back({{"cell", to_json(w)}, {"gamma", to_json(tau.hom()(w))}, {"value", v},
                     {"a", FinSet::apply(AB.first, v)}, {"b", FinSet::apply(AB.second, v)}});
  }
  for (const auto& g : G.elements()) {
    holds = holds && ia.at(g) == ac.at(g);
    first.push_back({{"g", to_json(g)}, {"mediated", ia.at(g)}, {"alpha", ac.at(g)}});
  }
  for (const auto& h : H.elements()) {
    holds = holds && ib.at(h) == bc.at(h);
    second.push_back({{"h", to_json(h)}, {"mediated", ib.at(h)}, {"beta", bc.at(h)}});
  }
  return {{"alpha", to_json(alpha)},
          {"beta", to_json(beta)},
          {"mediator", to_json(tau)},
          {"configuration", to_json(c)},
          {"ball", cells},
          {"first_projection", first},
          {"second_projection", second},
          {"holds", holds}};
}

inline int cmd_demo(const DemoOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (o.name != "rule90" && o.name != "rule110" && o.name != "subsample" && o.name != "weakprod")
      throw ParseError("unknown demo \"" + o.name + "\" (expected rule90, rule110, subsample or weakprod)");
    std::filesystem::create_directories(o.out_dir);
    std::filesystem::path dir(o.out_dir);
    if (o.name == "rule90") demo_spacetime(rule90_doc(), 63, 64, "rule90", o, out);
    if (o.name == "rule110") demo_spacetime(rule110_doc(), 16, 16, "rule110", o, out);
    if (o.name == "subsample") {
      json t = demo_subsample_trace();
      write_file(dir / "subsample.json", t.dump(2) + "\n");
      auto row = [](const json& vals) {
        std::string s;
        for (const auto& v : vals) s += std::to_string(v.get<int>());
        return s;
      };
      write_file(dir / "subsample.txt", row(t["input"]) + "\n" + row(t["output"]) + "\n");
      out << "subsample: input " << row(t["input"]) << ", output " << row(t["output"])
          << ", factorization agrees: " << (t["factorization_agrees"].get<bool>() ? "yes" : "no") << "\n";
      if (!t["factorization_agrees"].get<bool>()) return static_cast<int>(kCheckFailed);
    }
    if (o.name == "weakprod") {
      json t = demo_weakprod_trace();
      write_file(dir / "weakprod.json", t.dump(2) + "\n");
      out << "weakprod: " << t["ball"].size() << " cells traced, projection equations "
          << (t["holds"].get<bool>() ? "hold" : "FAIL") << "\n";
      if (!t["holds"].get<bool>()) return static_cast<int>(kCheckFailed);
    }
    return static_cast<int>(kOk);
  });
}

}  // namespace catca
