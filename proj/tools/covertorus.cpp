// Command-line front end: run scenario files and named verification suites,
// emitting deterministic JSON reports.
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "covertorus/scenario.hpp"
#include "covertorus/suites.hpp"

namespace fs = std::filesystem;
using covertorus::scenario::Json;
using covertorus::scenario::ScenarioError;

namespace {

std::string scenario_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("COVERTORUS_SCENARIO_DIR")) return env;
  return "scenarios";
}

int run_command(const std::vector<std::string>& paths, const std::string& suite,
                unsigned long long seed, const std::string& json_out, int max_order) {
  if (paths.empty() && suite.empty()) {
    std::cerr << "covertorus run: provide scenario paths and/or --suite NAME\n";
    return 2;
  }
  if (max_order > 0) {
    setenv("COVERTORUS_MAX_ORDER", std::to_string(max_order).c_str(), 1);
  }

  bool all_pass = true;
  std::vector<Json> reports;

  std::vector<std::string> sorted_paths = paths;
  std::vector<std::pair<std::string, Json>> named;
  for (const std::string& path : sorted_paths) {
    covertorus::scenario::Scenario s;
    try {
      s = covertorus::scenario::load_file(path);
    } catch (const ScenarioError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    Json rep;
    try {
      rep = covertorus::scenario::run_scenario(s, seed);
    } catch (const ScenarioError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    named.emplace_back(s.name, std::move(rep));
  }
  std::sort(named.begin(), named.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [name, rep] : named) {
    bool ok = covertorus::scenario::report_ok(rep);
    all_pass = all_pass && ok;
    for (const auto& c : rep["checks"])
      std::cout << name << " " << c["name"].get<std::string>() << ": "
                << c["status"].get<std::string>() << "\n";
    reports.push_back(std::move(rep));
  }

  if (!suite.empty()) {
    covertorus::suites::SuiteResult sr;
    try {
      sr = covertorus::suites::run_suite(suite, seed);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    all_pass = all_pass && sr.ok();
    for (const auto& c : sr.checks)
      std::cout << suite << " " << c.name << ": " << (c.pass ? "pass" : "fail") << " ("
                << c.detail << ")\n";
    reports.push_back(covertorus::scenario::suite_report(sr));
  }

  if (!json_out.empty()) {
    Json out;
    if (reports.size() == 1 && suite.empty()) {
      out = std::move(reports.front());
    } else {
      out["schema"] = covertorus::scenario::schema_version();
      out["reports"] = Json::array();
      for (auto& r : reports) out["reports"].push_back(std::move(r));
    }
    std::ofstream f(json_out);
    if (!f) {
      std::cerr << "error: cannot write " << json_out << "\n";
      return 2;
    }
    f << out.dump(2) << "\n";
  }

  return all_pass ? 0 : 1;
}

int list_command(bool suites, bool scenarios, const std::string& dir_flag) {
  if (!suites && !scenarios) suites = scenarios = true;
  if (suites)
    for (const std::string& s : covertorus::suites::suite_names()) std::cout << s << "\n";
  if (scenarios) {
    std::string dir = scenario_dir(dir_flag);
    std::vector<std::string> names;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(dir, ec))
      if (entry.path().extension() == ".json") names.push_back(entry.path().stem().string());
    std::sort(names.begin(), names.end());
    for (const std::string& n : names) std::cout << n << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scenario runner and verification suites"};
  app.require_subcommand(1);

  std::vector<std::string> paths;
  std::string suite, json_out;
  unsigned long long seed = 0;
  int max_order = 0;
  CLI::App* run = app.add_subcommand("run", "run scenario files and/or a named suite");
  run->add_option("paths", paths, "scenario JSON files");
  run->add_option("--suite", suite, "named verification suite");
  run->add_option("--seed", seed, "random seed for suite runs");
  run->add_option("--json", json_out, "write the JSON report here");
  run->add_option("--max-order", max_order, "override the finite-group order cap");

  bool list_suites = false, list_scenarios = false;
  std::string dir_flag;
  CLI::App* list = app.add_subcommand("list", "list available suites and scenarios");
  list->add_flag("--suites", list_suites, "list suite names");
  list->add_flag("--scenarios", list_scenarios, "list shipped scenario names");
  list->add_option("--dir", dir_flag, "scenario directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (run->parsed()) return run_command(paths, suite, seed, json_out, max_order);
    return list_command(list_suites, list_scenarios, dir_flag);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
