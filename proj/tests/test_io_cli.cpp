#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "catca/commands.hpp"

using namespace catca;
namespace fs = std::filesystem;

namespace {

std::string data(const std::string& name) { return std::string(CATCA_DATA_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("catca_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Json, GroupsRoundTrip) {
  for (const Group& G : {Group::cyclic(5), Group::symmetric(3), Group::z_power(2),
                         Group::free_product(Group::cyclic(2), Group::cyclic(3))}) {
    Group back = group_from_json(to_json(G));
    EXPECT_EQ(back, G) << to_json(G).dump();
    for (const auto& g : ball(G, 2)) EXPECT_EQ(elem_from_json(back, to_json(g)), g);
  }
  EXPECT_EQ(group_from_json(json{{"kind", "cyclic"}, {"n", 4}}), Group::cyclic(4));
  EXPECT_THROW(group_from_json(json{{"kind", "lattice"}}), ParseError);
}

TEST(Json, HomsRoundTrip) {
  Group Z6 = Group::cyclic(6), Z3 = Group::cyclic(3), Z = Group::z_power(1);
  auto a = GroupHom::table(Z3, Z6, {GroupElem(0), GroupElem(2), GroupElem(4)});
  EXPECT_EQ(hom_from_json(to_json(a), Z3, Z6), a);
  auto b = GroupHom::matrix(Z, Z, {{2}});
  EXPECT_EQ(hom_from_json(to_json(b), Z, Z)(GroupElem::vec({3})), GroupElem::vec({6}));
  Group W = Group::free_product(Group::cyclic(2), Z3);
  auto c = GroupHom::pair(W, GroupHom::table(Group::cyclic(2), Z6, {GroupElem(0), GroupElem(3)}), a);
  auto back = hom_from_json(to_json(c), W, Z6);
  for (const auto& w : ball(W, 3)) EXPECT_EQ(back(w), c(w));
}

TEST(Json, AutomataRoundTripInEveryInstance) {
  Group Z3 = Group::cyclic(3);
  Rng rng(4);
  auto check = [&]<class C>(const typename C::Object& A) {
    auto tau = random_ca<C>(Z3, A, A, 2, rng);
    auto back = ca_from_json<C>(to_json(tau));
    EXPECT_EQ(back.neighborhood(), tau.neighborhood());
    EXPECT_EQ(back.local_map(), tau.local_map());
    EXPECT_EQ(to_json(back).dump(), to_json(tau).dump());
  };
  check.operator()<FinSet>(FinSet::object(3));
  check.operator()<FinVect>(FinVect::space(3, 2));
  check.operator()<FinPoset>(FinPoset::poset({{1, 1, 1}, {0, 1, 0}, {0, 0, 1}}));
  check.operator()<Rel>(Rel::object(2));
}

TEST(Json, GeneralizedAutomatonRoundTrip) {
  auto doc = load_json_file(data("subsample_z4_z2.json"));
  auto tau = gca_from_json<FinSet>(doc);
  EXPECT_EQ(tau.target_universe(), Group::cyclic(2));
  EXPECT_EQ(to_json(gca_from_json<FinSet>(to_json(tau))).dump(), to_json(tau).dump());
}

TEST(Json, ConfigurationsRoundTrip) {
  Group Z = Group::z_power(1), Z4 = Group::cyclic(4);
  auto A = FinVect::space(3, 2);
  auto dense = Configuration<FinVect>::dense(Z4, A, {{0, 1}, {2, 2}, {1, 0}, {0, 0}});
  auto d2 = config_from_json<FinVect>(to_json(dense), Z4, A);
  EXPECT_EQ(d2.values(), dense.values());
  auto sparse = Configuration<FinVect>::sparse(Z, A, {{GroupElem::vec({-2}), {1, 1}}}, {0, 2});
  auto s2 = config_from_json<FinVect>(to_json(sparse), Z, A);
  EXPECT_TRUE(agree_on(s2, sparse, ball(Z, 4)));
  EXPECT_THROW(to_json(apply(identity_ca<FinVect>(Z, A), sparse)), UnsupportedError);
  EXPECT_THROW(config_from_json<FinVect>(json{{"kind", "dense"}, {"values", {{0, 3}, {0, 0}, {0, 0}, {0, 0}}}}, Z4, A),
               TypeError);
}

TEST(Json, MalformedDocumentsAreParseErrors) {
  EXPECT_THROW(ca_from_json<FinSet>(json{{"instance", "finset"}}), ParseError);
  EXPECT_THROW(ca_from_json<FinSet>(json{{"instance", "finvect"}}), TypeError);
  EXPECT_THROW(dispatch_instance("sets", [](auto) { return 0; }), ParseError);
}

TEST(Cli, RunRule90Text) {
  RunOptions o;
  o.ca_file = data("rule90.json");
  o.steps = 2;
  o.radius = 2;
  std::ostringstream out, err;
  ASSERT_EQ(cmd_run(o, out, err), 0) << err.str();
  EXPECT_EQ(out.str(), "00100\n01010\n10001\n");
}

TEST(Cli, RunJsonAndPgm) {
  auto dir = scratch("run_formats");
  RunOptions o;
  o.ca_file = data("rule90.json");
  o.steps = 3;
  o.radius = 3;
  o.format = "json";
  o.out_dir = dir.string();
  std::ostringstream out, err;
  ASSERT_EQ(cmd_run(o, out, err), 0) << err.str();
  auto jl = lines(slurp(dir / "run.jsonl"));
  ASSERT_EQ(jl.size(), 4u);
  EXPECT_EQ(json::parse(jl[3]).at("step"), 3);
  o.format = "pgm";
  ASSERT_EQ(cmd_run(o, out, err), 0) << err.str();
  auto img = slurp(dir / "run.pgm");
  EXPECT_EQ(img.substr(0, 12), "P5\n7 4\n255\n" + std::string(1, static_cast<char>(255)));
  EXPECT_EQ(img.size(), 11u + 28u);
}

TEST(Cli, RunOnFiniteGroupOverride) {
  RunOptions o;
  o.inline_doc = R"({"group":{"kind":"cyclic","n":8},"instance":"finvect","A":{"p":2,"dim":1},"S":[5,1],
                     "mu":{"instance":"finvect","p":2,"matrix":[[1,1]]}})";
  o.group_file = data("z6.json");
  o.steps = 3;
  std::ostringstream out, err;
  ASSERT_EQ(cmd_run(o, out, err), 0) << err.str();
  EXPECT_EQ(lines(out.str()).back(), "010001");  // cells 1 and 5 after three steps on Z_6
}

TEST(Cli, StepsCompose) {
  auto dir = scratch("steps");
  auto run = [&](std::size_t steps, const std::string& config, const std::string& save) {
    RunOptions o;
    o.ca_file = data("rule110.json");
    o.steps = steps;
    o.radius = 12;
    o.config_file = config;
    o.save_file = save;
    std::ostringstream out, err;
    EXPECT_EQ(cmd_run(o, out, err), 0) << err.str();
    return lines(out.str()).back();
  };
  auto direct = run(5, "", "");
  auto saved = (dir / "mid.json").string();
  run(3, "", saved);
  EXPECT_EQ(run(2, saved, ""), direct);
}

TEST(Cli, RunErrors) {
  std::ostringstream out, err;
  RunOptions missing;
  missing.ca_file = data("does_not_exist.json");
  EXPECT_EQ(cmd_run(missing, out, err), 2);
  RunOptions both;
  EXPECT_EQ(cmd_run(both, out, err), 2);
  RunOptions rel;
  rel.inline_doc = R"({"group":{"kind":"cyclic","n":2},"instance":"rel","A":{"size":2},"S":[0],
                       "mu":{"instance":"rel","pairs":[[0,0]]}})";
  EXPECT_EQ(cmd_run(rel, out, err), 3);
  RunOptions bad;
  bad.inline_doc = R"({"group":{"kind":"cyclic","n":2},"instance":"finset","A":{"size":2},"S":[0],
                       "mu":{"instance":"finset","table":[0]}})";
  EXPECT_EQ(cmd_run(bad, out, err), 3);
}

TEST(Cli, CheckAutomatonFiles) {
  std::ostringstream out, err;
  CheckOptions ok;
  ok.ca_file = data("majority_z5.json");
  EXPECT_EQ(cmd_check(ok, out, err), 0) << err.str() << out.str();
  CheckOptions corrupted;
  corrupted.ca_file = data("corrupted_ca.json");
  out.str("");
  EXPECT_EQ(cmd_check(corrupted, out, err), 1);
  auto rep = json::parse(out.str());
  EXPECT_EQ(rep.at("verdict"), "fail");
  EXPECT_TRUE(rep.at("counterexample").contains("cell"));
  CheckOptions infinite;
  infinite.ca_file = data("rule110.json");
  EXPECT_EQ(cmd_check(infinite, out, err), 0) << err.str();
}

TEST(Cli, CheckMorphismFiles) {
  std::ostringstream out, err;
  CheckOptions bad;
  bad.morphism_file = data("nonequivariant_z2.json");
  EXPECT_EQ(cmd_check(bad, out, err), 1);
  EXPECT_EQ(json::parse(out.str()).at("counterexample").at("g"), 1);
  CheckOptions good;
  good.morphism_file = data("shift_z4.json");
  out.str("");
  EXPECT_EQ(cmd_check(good, out, err), 0);
  EXPECT_EQ(json::parse(out.str()).at("details").at("automaton").at("S"), json::array({1}));
}

TEST(Cli, CheckSuiteSelection) {
  std::ostringstream out, err;
  CheckOptions unknown;
  unknown.suite = "no-such-suite";
  EXPECT_EQ(cmd_check(unknown, out, err), 2);
  CheckOptions inst;
  inst.instance = "topoi";
  EXPECT_EQ(cmd_check(inst, out, err), 2);
  CheckOptions one;
  one.suite = "shift-action";
  one.instance = "finvect";
  one.p = 3;
  one.cases = 4;
  out.str("");
  EXPECT_EQ(cmd_check(one, out, err), 0) << err.str();
  auto rep = json::parse(out.str());
  EXPECT_EQ(rep.at("check"), "shift-action");
  EXPECT_EQ(rep.at("params").at("p"), 3);
  CheckOptions notprime = one;
  notprime.p = 4;
  EXPECT_EQ(cmd_check(notprime, out, err), 3);
}

TEST(Cli, Demos) {
  auto dir = scratch("demos");
  for (const char* name : {"rule90", "rule110", "subsample", "weakprod"}) {
    DemoOptions o{name, dir.string()};
    std::ostringstream out, err;
    EXPECT_EQ(cmd_demo(o, out, err), 0) << name << ": " << err.str();
  }
  EXPECT_TRUE(fs::exists(dir / "rule90.pgm"));
  EXPECT_TRUE(fs::exists(dir / "rule110.txt"));
  auto sub = json::parse(slurp(dir / "subsample.json"));
  EXPECT_TRUE(sub.at("factorization_agrees") == true);
  auto wp = json::parse(slurp(dir / "weakprod.json"));
  EXPECT_TRUE(wp.at("holds") == true);
  DemoOptions unknown{"life", dir.string()};
  std::ostringstream out, err;
  EXPECT_EQ(cmd_demo(unknown, out, err), 2);
}
