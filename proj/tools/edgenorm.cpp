// SPDX-License-Identifier: Apache-2.0
//
// edgenorm: integral closedness and normality of edge ideals of
// edge-weighted graphs.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "edgenorm/commands.hpp"
#include "edgenorm/errors.hpp"
#include "edgenorm/json_io.hpp"

namespace {

using namespace edgenorm;

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  return parts;
}

Exponent parse_exponent(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw ParseError(what, "not an integer: '" + text + "'");
  }
  if (used != text.size()) throw ParseError(what, "not an integer: '" + text + "'");
  return value;
}

std::vector<Exponent> parse_exponent_list(const std::string& text, const std::string& what) {
  std::vector<Exponent> out;
  for (const auto& part : split_commas(text)) out.push_back(parse_exponent(part, what));
  return out;
}

int emit(const cli::CommandResult& r) {
  std::cout << r.output << std::flush;
  std::cerr << r.error << std::flush;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Decide integral closedness and normality of edge ideals of edge-weighted graphs.\n"
      "Graphs are JSON: {\"n\": N, \"edges\": [{\"u\": 1, \"v\": 2, \"w\": 3}, ...]}.\n"
      "Exit codes: 0 ok, 1 property violated, 2 input error, 3 resource cap.\n"
      "Environment: EDGENORM_BOX_CAP (lattice points per search, default 1e7),\n"
      "EDGENORM_TIME_CAP (seconds per top-level call, default 30, 0 disables)."};
  app.require_subcommand(1);

  cli::OutputOptions out;
  std::string graph_path;
  int kmax = 1;
  int k = 1;
  std::string pattern_name;
  std::string weights_text;
  std::string a_text;
  std::string y_text;
  std::string mode_name;
  std::vector<std::string> family_names;
  Universe universe;
  std::uint64_t seed = 0;
  bool no_triangle = false;
  bool no_p3 = false;
  bool no_2k2 = false;

  auto* scan = app.add_subcommand("scan", "Report the first forbidden pattern, if any");
  scan->add_option("graph", graph_path, "Graph JSON file")->required();
  scan->add_flag("--json", out.json, "Emit JSON");

  auto* check = app.add_subcommand("check", "Test integral closedness of I^k for k = 1..kmax");
  check->add_option("graph", graph_path, "Graph JSON file")->required();
  check->add_option("--kmax", kmax, "Largest power to probe")->check(CLI::PositiveNumber);
  check->add_flag("--json", out.json, "Emit JSON");

  auto* clos = app.add_subcommand("closure", "Minimal generators of the integral closure of I^k");
  clos->add_option("graph", graph_path, "Graph JSON file")->required();
  clos->add_option("-k", k, "Power")->check(CLI::PositiveNumber);
  clos->add_flag("--json", out.json, "Emit JSON");

  auto* wit = app.add_subcommand("witness", "Build and check the non-closure witness of a pattern");
  wit->add_option("--pattern", pattern_name, "p3 | 2k2 | triangle")->required();
  wit->add_option("--weights", weights_text, "Comma-separated weights, each >= 2")->required();
  wit->add_flag("--json", out.json, "Emit JSON");

  auto* cov = app.add_subcommand("cover", "Extract an integral edge cover on a path");
  cov->add_option("--a", a_text, "Exponent vector, e.g. 1,2,1")->required();
  cov->add_option("--y", y_text, "Edge packing, rationals, e.g. 1/2,1")->required();
  cov->add_flag("--json", out.json, "Emit JSON");

  auto* ver = app.add_subcommand("verify", "Exhaustive or sampled verification over small graphs");
  ver->add_option("--mode", mode_name, "thm36 | normality")->required();
  ver->add_option("--n-max", universe.n_max, "Largest vertex count")->check(CLI::PositiveNumber);
  ver->add_option("--weight-max", universe.weight_max, "Largest edge weight")
      ->check(CLI::PositiveNumber);
  ver->add_option("--kmax", universe.kmax, "Largest power (normality mode)")
      ->check(CLI::PositiveNumber);
  auto* seed_opt = ver->add_option("--seed", seed, "Sample graphs on n-max vertices with this seed");
  auto* samples_opt = ver->add_option("--samples", universe.samples,
                                      "Number of sampled graphs (with --seed, default 500)");
  ver->add_option("--family", family_names, "star | path | cycle | all (normality mode)");
  ver->add_option("--jobs", universe.jobs, "Worker threads")->check(CLI::PositiveNumber);
  ver->add_flag("--records", out.records, "Include every graph, not only violations");
  ver->add_flag("--timings", out.timings, "Include per-graph wall time");
  ver->add_flag("--json", out.json, "Emit JSON");
  // Fault injection for testing the harness.
  ver->add_flag("--no-triangle", no_triangle)->group("");
  ver->add_flag("--no-p3", no_p3)->group("");
  ver->add_flag("--no-2k2", no_2k2)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kInputError;
  }

  return emit(cli::guarded([&]() -> cli::CommandResult {
    const SearchLimits limits = SearchLimits::from_environment();
    if (scan->parsed()) return cli::scan(read_graph_file(graph_path), out);
    if (check->parsed()) return cli::check(read_graph_file(graph_path), kmax, out, limits);
    if (clos->parsed()) return cli::closure(read_graph_file(graph_path), k, out, limits);
    if (wit->parsed()) {
      return cli::witness(parse_pattern_kind(pattern_name),
                          parse_exponent_list(weights_text, "--weights"), out);
    }
    if (cov->parsed()) {
      PathInstance inst{ExponentVector(parse_exponent_list(a_text, "--a")), {}};
      for (const auto& part : split_commas(y_text)) inst.y.push_back(parse_rational(part));
      return cli::cover(inst, out);
    }
    universe.limits = limits;
    universe.scan = {!no_p3, !no_2k2, !no_triangle};
    if (seed_opt->count() > 0) {
      universe.seed = seed;
      if (samples_opt->count() == 0) universe.samples = 500;
    } else if (samples_opt->count() > 0) {
      throw PreconditionError("--samples needs --seed");
    }
    if (!family_names.empty()) {
      universe.families.clear();
      for (const auto& name : family_names) {
        const Family f = parse_family(name);
        if (f == Family::Any) {
          universe.families = {Family::Star, Family::Path, Family::Cycle};
          break;
        }
        universe.families.push_back(f);
      }
    }
    return cli::verify(parse_verify_mode(mode_name), universe, out);
  }));
}
