// SPDX-License-Identifier: Apache-2.0

#include "edgenorm/commands.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "edgenorm/closure.hpp"
#include "edgenorm/errors.hpp"
#include "edgenorm/json_io.hpp"
#include "edgenorm/rational_lp.hpp"

namespace edgenorm::cli {

namespace {

std::string dump(const Json& j) { return j.dump() + "\n"; }

std::string describe(const PatternWitness& w) {
  std::ostringstream os;
  os << to_string(w.kind) << " vertices (";
  for (std::size_t i = 0; i < w.vertices.size(); ++i) os << (i ? "," : "") << w.vertices[i];
  os << ") weights (";
  for (std::size_t i = 0; i < w.weights.size(); ++i) os << (i ? "," : "") << w.weights[i];
  os << ")";
  return os.str();
}

// Exponent vectors as right-aligned columns, one per line.
std::string aligned(const std::vector<ExponentVector>& rows) {
  if (rows.empty()) return "";
  std::vector<std::size_t> width(rows.front().size(), 1);
  for (const auto& r : rows) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      width[j] = std::max(width[j], std::to_string(r[j]).size());
    }
  }
  std::ostringstream os;
  for (const auto& r : rows) {
    os << "  (";
    for (std::size_t j = 0; j < r.size(); ++j) {
      os << (j ? ", " : "") << std::setw(static_cast<int>(width[j])) << r[j];
    }
    os << ")\n";
  }
  return os.str();
}

std::string graph_summary(const WeightedGraph& g) {
  return "graph: n=" + std::to_string(g.num_vertices()) + ", " + std::to_string(g.num_edges()) +
         " edges, " + std::to_string(g.num_heavy_edges()) + " heavy\n";
}

}  // namespace

CommandResult guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const ResourceCapError& e) {
    return {kResourceCap, "", std::string("resource cap: ") + e.what() + "\n"};
  } catch (const ParseError& e) {
    return {kInputError, "", std::string("input error: ") + e.what() + "\n"};
  } catch (const InvalidGraph& e) {
    return {kInputError, "", std::string("invalid graph: ") + e.what() + "\n"};
  } catch (const PreconditionError& e) {
    return {kInputError, "", std::string("invalid input: ") + e.what() + "\n"};
  } catch (const DimensionMismatch& e) {
    return {kInputError, "", std::string("invalid input: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kViolation, "", std::string("error: ") + e.what() + "\n"};
  }
}

CommandResult scan(const WeightedGraph& g, const OutputOptions& out) {
  auto pattern = forbidden_pattern_scan(g);
  if (out.json) {
    return {kOk, dump({{"pattern", pattern ? to_json(*pattern) : Json(nullptr)}}), ""};
  }
  std::string text = graph_summary(g);
  text += pattern ? "pattern: " + describe(*pattern) + "\n"
                  : "pattern: none (edge ideal is integrally closed)\n";
  return {kOk, text, ""};
}

CommandResult check(const WeightedGraph& g, int kmax, const OutputOptions& out,
                    const SearchLimits& limits) {
  if (kmax < 1) throw PreconditionError("--kmax must be >= 1");
  std::vector<ClosureReport> reports;
  if (g.num_edges() > 0) reports = is_normal_up_to(edge_ideal(g), kmax, limits);
  const bool all_closed = std::all_of(reports.begin(), reports.end(),
                                      [](const ClosureReport& r) { return r.closed; });
  const int code = all_closed ? kOk : kViolation;

  if (out.json) {
    Json j;
    j["kmax"] = kmax;
    j["zero_ideal"] = g.num_edges() == 0;
    j["closed_up_to_kmax"] = all_closed;
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(to_json(r));
    j["reports"] = std::move(list);
    return {code, dump(j), ""};
  }

  std::ostringstream os;
  os << graph_summary(g);
  if (g.num_edges() == 0) {
    os << "edgeless graph: the zero ideal is closed in every power\n";
    return {code, os.str(), ""};
  }
  os << std::left << std::setw(4) << "k" << std::setw(8) << "closed" << "witness\n";
  for (const auto& r : reports) {
    os << std::setw(4) << r.k << std::setw(8) << (r.closed ? "yes" : "no")
       << (r.witness ? r.witness->to_string() : "-") << "\n";
  }
  os << (all_closed ? "all powers up to k=" + std::to_string(kmax) + " are integrally closed\n"
                    : "power k=" + std::to_string(reports.back().k) +
                          " is not integrally closed\n");
  return {code, os.str(), ""};
}

CommandResult closure(const WeightedGraph& g, int k, const OutputOptions& out,
                      const SearchLimits& limits) {
  if (k < 1) throw PreconditionError("-k must be >= 1");
  std::vector<ExponentVector> gens;
  if (g.num_edges() > 0) gens = closure_generators(edge_ideal(g), k, limits);

  if (out.json) {
    Json list = Json::array();
    for (const auto& v : gens) list.push_back(to_json(v));
    return {kOk, dump({{"k", k}, {"generators", std::move(list)}}), ""};
  }
  std::string text = graph_summary(g);
  text += "minimal generators of the integral closure of I^" + std::to_string(k) + " (" +
          std::to_string(gens.size()) + "):\n";
  text += aligned(gens);
  return {kOk, text, ""};
}

CommandResult witness(PatternKind kind, const std::vector<Exponent>& weights,
                      const OutputOptions& out) {
  const PatternExample example = non_closure_witness(kind, weights);
  const MonomialIdeal ideal = edge_ideal(example.graph);
  const ExponentVector& w = example.witness;

  const bool in_ideal = member(ideal, w);
  const MembershipCertificate lp = vstar(ideal, w);
  const bool in_closure_flag = lp.value >= 1;
  const NaiveClosureResult naive = naive_closure_member(ideal, w, 1);
  std::optional<PowerIdentityCertificate> identity;
  bool identity_ok = false;
  if (in_closure_flag) {
    identity = certify_closure_membership(ideal, w, 1);
    identity_ok = verify_power_identity(ideal, w, 1, *identity);
  }
  const bool pass = !in_ideal && in_closure_flag && naive.found && identity_ok;
  const int code = pass ? kOk : kViolation;

  if (out.json) {
    Json j;
    j["pattern"] = std::string(to_string(kind));
    j["weights"] = weights;
    j["graph"] = to_json(example.graph);
    j["witness"] = to_json(w);
    j["member"] = in_ideal;
    j["vstar"] = to_json(lp);
    j["naive"] = {{"found", naive.found}, {"s", naive.s}};
    j["certificate"] = identity ? to_json(*identity) : Json(nullptr);
    j["certificate_verified"] = identity_ok;
    j["pass"] = pass;
    return {code, dump(j), ""};
  }

  std::ostringstream os;
  os << std::left;
  os << std::setw(22) << "pattern" << to_string(kind) << "\n";
  os << std::setw(22) << "graph" << to_json(example.graph).dump() << "\n";
  os << std::setw(22) << "witness" << w << "\n";
  os << std::setw(22) << "in I" << (in_ideal ? "yes" : "no") << "\n";
  os << std::setw(22) << "vstar(I, w)" << to_string(lp.value) << "\n";
  os << std::setw(22) << "power test"
     << (naive.found ? "w^" + std::to_string(naive.s) + " in I^" + std::to_string(naive.s)
                     : "not found up to s=" + std::to_string(naive.s))
     << "\n";
  if (identity) {
    os << std::setw(22) << "power identity" << "s=" << identity->s << " multiplicities (";
    for (std::size_t i = 0; i < identity->multiplicities.size(); ++i) {
      os << (i ? "," : "") << identity->multiplicities[i];
    }
    os << ") slack " << identity->slack << (identity_ok ? " verified" : " FAILED") << "\n";
  }
  os << std::setw(22) << "result" << (pass ? "pass" : "FAIL") << "\n";
  return {code, os.str(), ""};
}

CommandResult cover(const PathInstance& inst, const OutputOptions& out) {
  const PathCover c = extract_cover(inst);
  Rational total = 0;
  for (const auto& yi : inst.y) total += yi;

  if (out.json) {
    Json j;
    j["a"] = to_json(inst.a);
    j["h"] = ceil(total).get_str();
    j["size"] = cover_size(c);
    j["cover"] = to_json(c);
    return {kOk, dump(j), ""};
  }
  std::ostringstream os;
  os << "a = " << inst.a << ", ceil(sum y) = " << ceil(total).get_str() << "\n";
  os << "cover of size " << cover_size(c) << ":\n";
  for (const auto& [left, count] : c) {
    os << "  x" << left << "*x" << left + 1 << "  ^" << count << "\n";
  }
  return {kOk, os.str(), ""};
}

CommandResult verify(VerifyMode mode, const Universe& universe, const OutputOptions& out) {
  const VerificationRun run = run_verification(mode, universe);
  const int code = run.violations() == 0 ? kOk : kViolation;
  if (out.json) return {code, dump(to_json(run, out.records, out.timings)), ""};

  std::ostringstream os;
  os << "mode " << to_string(mode) << ": " << run.records.size() << " graphs, "
     << run.violations() << " violations";
  if (mode == VerifyMode::Normality) os << " (powers probed up to k=" << universe.kmax << ")";
  os << "\n";
  for (const auto& r : run.records) {
    if (r.consistent && !out.records) continue;
    os << (r.consistent ? "  ok        " : "  VIOLATION ") << to_string(r.family) << " "
       << to_json(r.graph).dump() << "\n";
    os << "            pattern: " << (r.pattern ? describe(*r.pattern) : "none");
    for (const auto& rep : r.reports) {
      os << "; k=" << rep.k << (rep.closed ? " closed" : " open " + rep.witness->to_string());
    }
    if (out.timings) os << "; " << std::fixed << std::setprecision(3) << r.seconds << " s";
    os << "\n";
  }
  return {code, os.str(), ""};
}

}  // namespace edgenorm::cli
