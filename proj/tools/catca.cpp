// catca: run automata, check the framework's laws, write demo figures.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "catca/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Cellular automata over groups with pluggable alphabet categories"};
  app.require_subcommand(1);

  catca::RunOptions run;
  std::size_t radius = 0;
  auto* run_cmd = app.add_subcommand("run", "Evaluate an automaton and emit one frame per step");
  run_cmd->add_option("--ca", run.ca_file, "Automaton JSON file");
  run_cmd->add_option("--inline", run.inline_doc, "Automaton JSON given inline");
  run_cmd->add_option("--group", run.group_file, "Group JSON file replacing the automaton's universe");
  run_cmd->add_option("--config", run.config_file, "Initial configuration JSON file");
  run_cmd->add_option("--init", run.init, "Initial configuration when no file is given: single or random");
  run_cmd->add_option("--window", run.window_file, "Output window JSON file (array of cells)");
  run_cmd->add_option("--steps", run.steps, "Number of steps");
  auto* radius_opt = run_cmd->add_option("--radius", radius, "Output window radius");
  run_cmd->add_option("--seed", run.seed, "Seed for --init random");
  run_cmd->add_option("--format", run.format, "text, pgm or json")->check(CLI::IsMember({"text", "pgm", "json"}));
  run_cmd->add_option("--out", run.out_dir, "Output directory (default: standard output)");
  run_cmd->add_option("--save", run.save_file, "Write the final window as a configuration file");

  catca::CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Run law-check suites; one JSON report per line");
  std::string positional_suite;
  check_cmd->add_option("name", positional_suite, "Suite name or all (same as --suite)");
  check_cmd->add_option("--suite", check.suite, "Suite name or all");
  check_cmd->add_option("--instance", check.instance, "finset, finvect, finposet or rel (default: all)");
  check_cmd->add_option("--ca", check.ca_file, "Check one automaton file");
  check_cmd->add_option("--morphism", check.morphism_file, "Check whether a morphism file is an automaton");
  check_cmd->add_option("--seed", check.seed, "Seed");
  check_cmd->add_option("--cases", check.cases, "Cases per suite (default: suite default)");
  check_cmd->add_option("--radius", check.radius, "Ball radius for pointwise checks");
  check_cmd->add_option("--p", check.p, "Field for finvect when --instance finvect is given");
  check_cmd->add_option("--group", check.group, "Restrict group draws to one of Z_1..Z_6, S_3");
  bool list = false;
  check_cmd->add_flag("--list", list, "List suite names and exit");

  catca::DemoOptions demo;
  auto* demo_cmd = app.add_subcommand("demo", "Write a curated example: rule90, rule110, subsample, weakprod");
  demo_cmd->add_option("name", demo.name, "Demo name")->required();
  demo_cmd->add_option("--out", demo.out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : catca::kUsage;
  }

  if (*run_cmd) {
    if (radius_opt->count() > 0) run.radius = radius;
    return catca::cmd_run(run, std::cout, std::cerr);
  }
  if (*check_cmd) {
    if (list) {
      for (const auto& n : catca::suite_names()) std::cout << n << "\n";
      return 0;
    }
    if (!positional_suite.empty()) check.suite = positional_suite;
    return catca::cmd_check(check, std::cout, std::cerr);
  }
  return catca::cmd_demo(demo, std::cout, std::cerr);
}
