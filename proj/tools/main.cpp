// pqvol: exact h*-polynomials and normalized volumes of PQ-type adjacency
// polytopes, cross-verified across independent computation methods.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pqvol/closed_forms.hpp"
#include "pqvol/ehrhart.hpp"
#include "pqvol/errors.hpp"
#include "pqvol/graph.hpp"
#include "pqvol/graph_spec.hpp"
#include "pqvol/interior.hpp"
#include "pqvol/matching.hpp"
#include "pqvol/polynomial.hpp"

using json = nlohmann::ordered_json;
using namespace pqvol;

namespace {

constexpr int kExitError = 1;
constexpr int kExitDisagreement = 2;

struct MethodRun {
  std::string name;
  IntPolynomial hstar;
  double milliseconds = 0.0;
};

struct SkippedMethod {
  std::string name;
  std::string reason;
};

struct HstarOptions {
  std::string method = "all";
  bool as_json = false;
  bool with_time = false;
  unsigned threads = 0;  // 0 = all cores
};

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

// ---- method implementations -------------------------------------------

bool formula_applicable(const GraphSpec& spec) {
  switch (spec.kind) {
    case GraphSpec::Kind::Wheel:
    case GraphSpec::Kind::Complete:
    case GraphSpec::Kind::Cone:
      return true;
    case GraphSpec::Kind::Multipartite:
      return spec.part_sizes.size() >= 2;
    case GraphSpec::Kind::Join:
      return spec.children.size() >= 2;
    default:
      return false;
  }
}

IntPolynomial run_formula(const GraphSpec& spec) {
  switch (spec.kind) {
    case GraphSpec::Kind::Wheel:
      return hstar_wheel(spec.n);
    case GraphSpec::Kind::Complete:
      return narayana_square_poly(spec.n);
    case GraphSpec::Kind::Multipartite:
      return hstar_complete_multipartite(spec.part_sizes);
    case GraphSpec::Kind::Cone:
      return hstar_pq_join({spec.children.front().realize(), make_complete(1)});
    case GraphSpec::Kind::Join: {
      std::vector<Graph> parts;
      for (const auto& c : spec.children) parts.push_back(c.realize());
      return hstar_pq_join(parts);
    }
    default:
      throw std::invalid_argument("method 'formula' is not applicable to spec \"" + spec.text +
                                  "\" (needs a wheel, complete multipartite, join, or cone spec)");
  }
}

IntPolynomial run_interior(const GraphSpec& spec, const Graph& g, unsigned threads) {
  if (!is_connected(g))
    throw DisconnectedError("D(" + spec.text +
                            ") is disconnected; the interior method needs a connected graph");
  return interior_polynomial(bipartite_double(g), threads);
}

IntPolynomial run_pms(const GraphSpec& spec) {
  Graph base;
  if (!spec.cone_base(base))
    throw std::invalid_argument(
        "method 'pms' is not applicable to spec \"" + spec.text +
        "\": the graph must be presented as a cone (J:(...,K1), cone:<spec>, or W<n>)");
  return pms_polynomial(to_graph(bipartite_double(base)));
}

// ---- report construction ----------------------------------------------

struct Report {
  std::string spec;
  int vertices = 0;
  int edges = 0;
  int dim = 0;
  std::vector<MethodRun> methods;
  std::vector<SkippedMethod> skipped;
  bool agreement = true;
  std::string disagreement;
};

constexpr int kReportVertexGuard = 128;

Report compute_report(const std::string& spec_text, const HstarOptions& opt) {
  const GraphSpec spec = parse_graph_spec(spec_text);
  const Graph g = spec.realize();
  if (g.vertex_count() == 0)
    throw std::invalid_argument("spec \"" + spec_text + "\" denotes the empty graph");
  if (g.vertex_count() > kReportVertexGuard)
    throw GuardError("hstar: " + std::to_string(g.vertex_count()) +
                     " vertices exceed the report guard of " +
                     std::to_string(kReportVertexGuard) +
                     " (the exact dimension rank becomes the bottleneck)");

  Report report;
  report.spec = spec_text;
  report.vertices = g.vertex_count();
  report.edges = g.edge_count();
  report.dim = dimension(RootPolytope(bipartite_double(g)));

  const bool all = opt.method == "all";
  auto want = [&](const char* name) { return all || opt.method == name; };
  auto record = [&](const char* name, auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    // In 'all' mode a method whose enumeration guard trips is skipped and
    // reported as such; an explicitly requested method propagates.
    if (all) {
      try {
        IntPolynomial h = fn();
        report.methods.push_back({name, std::move(h), ms_since(start)});
      } catch (const GuardError& e) {
        report.skipped.push_back({name, e.what()});
      }
    } else {
      IntPolynomial h = fn();
      report.methods.push_back({name, std::move(h), ms_since(start)});
    }
  };

  if (want("interior")) {
    if (!all || is_connected(g))
      record("interior", [&] { return run_interior(spec, g, opt.threads); });
  }
  if (want("pms")) {
    Graph base;
    if (!all || spec.cone_base(base)) record("pms", [&] { return run_pms(spec); });
  }
  if (want("formula")) {
    if (!all || formula_applicable(spec)) record("formula", [&] { return run_formula(spec); });
  }
  if (want("oracle")) {
    record("oracle", [&] { return hstar_via_ehrhart(g, opt.threads); });
  }

  if (report.methods.empty())
    throw std::invalid_argument("no applicable method for spec \"" + spec_text + "\"");

  for (std::size_t i = 1; i < report.methods.size(); ++i) {
    if (report.methods[i].hstar == report.methods[0].hstar) continue;
    report.agreement = false;
    const auto& a = report.methods[0];
    const auto& b = report.methods[i];
    const std::size_t upper = static_cast<std::size_t>(
        std::max(a.hstar.degree(), b.hstar.degree()) + 1);
    for (std::size_t k = 0; k < upper; ++k) {
      if (a.hstar.coeff(k) != b.hstar.coeff(k)) {
        report.disagreement = "methods '" + a.name + "' and '" + b.name +
                              "' first differ at coefficient index " + std::to_string(k) + ": " +
                              a.hstar.coeff(k).get_str() + " vs " + b.hstar.coeff(k).get_str();
        break;
      }
    }
    break;
  }
  return report;
}

json report_to_json(const Report& r, const HstarOptions& opt) {
  json doc;
  doc["spec"] = r.spec;
  doc["vertices"] = r.vertices;
  doc["edges"] = r.edges;
  doc["dimension"] = r.dim;
  json names = json::array();
  for (const auto& m : r.methods) names.push_back(m.name);
  doc["methods"] = names;
  doc["hstar"] = r.methods.front().hstar.coeff_strings();
  doc["degree"] = r.methods.front().hstar.degree();
  doc["volume"] = r.methods.front().hstar.eval(1).get_str();
  doc["agreement"] = r.agreement;
  if (!r.agreement) doc["disagreement"] = r.disagreement;
  if (!r.skipped.empty()) {
    json skipped = json::array();
    for (const auto& s : r.skipped) skipped.push_back({{"method", s.name}, {"reason", s.reason}});
    doc["skipped"] = skipped;
  }
  if (opt.with_time) {
    json times;
    for (const auto& m : r.methods) times[m.name] = m.milliseconds;
    doc["timings_ms"] = times;
  }
  return doc;
}

void print_report_text(const Report& r, const HstarOptions& opt, std::ostream& out) {
  out << "spec:      " << r.spec << "\n";
  out << "vertices:  " << r.vertices << "\n";
  out << "edges:     " << r.edges << "\n";
  out << "dimension: " << r.dim << "\n";
  out << "methods:   ";
  for (std::size_t i = 0; i < r.methods.size(); ++i)
    out << (i ? ", " : "") << r.methods[i].name;
  out << "\n";
  for (const auto& s : r.skipped) out << "skipped:   " << s.name << " (" << s.reason << ")\n";
  out << "h*:        " << r.methods.front().hstar.to_string() << "\n";
  out << "volume:    " << r.methods.front().hstar.eval(1).get_str() << "\n";
  if (opt.with_time)
    for (const auto& m : r.methods)
      out << "time:      " << m.name << " " << m.milliseconds << " ms\n";
  out << "agreement: " << (r.agreement ? "yes" : "no") << "\n";
  if (!r.agreement) out << "detail:    " << r.disagreement << "\n";
}

int emit_report(const std::string& spec_text, const HstarOptions& opt) {
  Report report = compute_report(spec_text, opt);
  if (opt.as_json)
    std::cout << report_to_json(report, opt).dump() << "\n";
  else
    print_report_text(report, opt, std::cout);
  if (!report.agreement) {
    std::cerr << "error: " << report.disagreement << "\n";
    return kExitDisagreement;
  }
  return 0;
}

// ---- subcommands -------------------------------------------------------

int cmd_hstar(const std::string& spec, const std::string& file, const HstarOptions& opt) {
  if (file.empty()) return emit_report(spec, opt);

  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open batch file '" + file + "'");
  std::string line;
  int status = 0;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!opt.as_json && !first) std::cout << "\n";
    first = false;
    try {
      status = std::max(status, emit_report(line, opt));
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      status = std::max(status, kExitError);
    }
  }
  return status;
}

int cmd_interior(const std::string& spec_text, bool as_json) {
  const BipartiteSpec spec = parse_bipartite_spec(spec_text);
  const BipartiteGraph h = spec.realize();
  const IntPolynomial ip = interior_polynomial(h);
  const BigInt count = ip.eval(1);
  if (as_json) {
    json doc;
    doc["spec"] = spec_text;
    doc["p"] = h.part1_size();
    doc["q"] = h.part2_size();
    doc["edges"] = h.edge_count();
    doc["interior"] = ip.coeff_strings();
    doc["hypertrees"] = count.get_str();
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "spec:       " << spec_text << "\n";
    std::cout << "p, q:       " << h.part1_size() << ", " << h.part2_size() << "\n";
    std::cout << "edges:      " << h.edge_count() << "\n";
    std::cout << "interior:   " << ip.to_string() << "\n";
    std::cout << "hypertrees: " << count.get_str() << "\n";
  }
  return 0;
}

struct VerifyRow {
  std::string label;
  bool pass = false;
  std::string detail;
};

void print_rows(const std::string& title, const std::vector<VerifyRow>& rows, int& failures) {
  std::cout << title << "\n";
  for (const auto& row : rows) {
    std::cout << "  " << (row.pass ? "pass" : "FAIL") << "  " << row.label;
    if (!row.detail.empty()) std::cout << "  (" << row.detail << ")";
    std::cout << "\n";
    if (!row.pass) ++failures;
  }
}

std::vector<VerifyRow> verify_wheels(int max_n) {
  std::vector<VerifyRow> rows;
  for (int n = 3; n <= max_n; ++n) {
    const IntPolynomial wheel = hstar_wheel(n);
    const IntPolynomial via_pms = pms_polynomial(to_graph(bipartite_double(make_cycle(n))));
    const BigInt expected =
        ipow(3, static_cast<unsigned long>(n)) - ipow(2, static_cast<unsigned long>(n)) + 1;
    const bool ok = wheel == via_pms && wheel.eval(1) == expected;
    rows.push_back({"W" + std::to_string(n), ok, "volume " + wheel.eval(1).get_str()});
  }
  return rows;
}

std::vector<VerifyRow> verify_joins(int max_m) {
  const std::vector<std::pair<std::string, std::vector<Graph>>> pool = {
      {"E1+E1", {make_empty(1), make_empty(1)}},
      {"E1+E2", {make_empty(1), make_empty(2)}},
      {"E2+E2", {make_empty(2), make_empty(2)}},
      {"E2+E3", {make_empty(2), make_empty(3)}},
      {"K2+K3", {make_complete(2), make_complete(3)}},
      {"K1+C4", {make_complete(1), make_cycle(4)}},
      {"C3+E2", {make_cycle(3), make_empty(2)}},
      {"P3+E2", {make_path(3), make_empty(2)}},
      {"P4+K2", {make_path(4), make_complete(2)}},
      {"K3+E3", {make_complete(3), make_empty(3)}},
      {"C3+C4", {make_cycle(3), make_cycle(4)}},
      {"E1+E1+E1", {make_empty(1), make_empty(1), make_empty(1)}},
      {"K1+K2+E2", {make_complete(1), make_complete(2), make_empty(2)}},
      {"E2+E2+E3", {make_empty(2), make_empty(2), make_empty(3)}},
  };
  std::vector<VerifyRow> rows;
  for (const auto& [label, parts] : pool) {
    int m = 0;
    for (const auto& g : parts) m += g.vertex_count();
    if (m > max_m) continue;
    const bool ok = hstar_pq_join(parts) == interior_polynomial(bipartite_double(join(parts)));
    rows.push_back({label, ok, "m = " + std::to_string(m)});
  }
  return rows;
}

std::vector<VerifyRow> verify_oracle(int max_n, unsigned threads) {
  std::vector<VerifyRow> rows;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) slots.emplace_back(i, j);
    int checked = 0, agreed = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << slots.size()); ++mask) {
      std::vector<std::pair<int, int>> edges;
      for (std::size_t e = 0; e < slots.size(); ++e)
        if ((mask >> e) & 1) edges.push_back(slots[e]);
      Graph g(n, std::move(edges));
      if (!is_connected(g)) continue;
      ++checked;
      if (hstar_via_ehrhart(g, threads) == interior_polynomial(bipartite_double(g))) ++agreed;
    }
    rows.push_back({"n=" + std::to_string(n), checked == agreed,
                    std::to_string(agreed) + "/" + std::to_string(checked) + " graphs agree"});
  }
  return rows;
}

int cmd_verify(const std::string& corpus, int max_n, int max_m, unsigned threads) {
  int failures = 0;
  if (corpus == "wheels" || corpus == "all")
    print_rows("verify wheels (n = 3.." + std::to_string(max_n) + ")", verify_wheels(max_n),
               failures);
  if (corpus == "joins" || corpus == "all")
    print_rows("verify joins (m <= " + std::to_string(max_m) + ")", verify_joins(max_m), failures);
  if (corpus == "oracle" || corpus == "all") {
    const int oracle_cap = std::min(max_n, 4);
    print_rows("verify oracle (n <= " + std::to_string(oracle_cap) + ")",
               verify_oracle(oracle_cap, threads), failures);
  }
  if (failures == 0) {
    std::cout << "all checks passed\n";
    return 0;
  }
  std::cout << failures << " check(s) failed\n";
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact h*-polynomials and normalized volumes of PQ-type adjacency polytopes"};
  app.require_subcommand(1);

  // hstar
  std::string hstar_spec;
  std::string hstar_file;
  HstarOptions opt;
  auto* hstar_cmd =
      app.add_subcommand("hstar", "Compute the h*-polynomial and normalized volume of a graph");
  hstar_cmd->add_option("spec", hstar_spec,
                        "Graph spec: K4, E3, C5, W6, KP:2,2,3, J:(C4,K1), cone:C4, "
                        "EL:n=5;1-2,2-3,3-4,4-5,1-5");
  hstar_cmd->add_option("--method", opt.method, "Computation method")
      ->check(CLI::IsMember({"interior", "pms", "formula", "oracle", "all"}))
      ->capture_default_str();
  hstar_cmd->add_flag("--json", opt.as_json, "Emit one JSON document instead of text");
  hstar_cmd->add_flag("--time", opt.with_time, "Report wall time per method");
  hstar_cmd->add_option(
      "--threads", opt.threads,
      "Worker threads for the interior and oracle methods (0 = all cores, 1 = serial)");
  hstar_cmd->add_option("--file", hstar_file, "Batch mode: one spec per line");

  // interior
  std::string interior_spec;
  bool interior_json = false;
  auto* interior_cmd = app.add_subcommand(
      "interior", "Interior polynomial and hypertree count of a connected bipartite graph");
  interior_cmd
      ->add_option("spec", interior_spec, "Bipartite spec: D:<graph spec> or EL2:p=..,q=..;1-1,...")
      ->required();
  interior_cmd->add_flag("--json", interior_json, "Emit one JSON document instead of text");

  // verify
  std::string corpus;
  int max_n = 8, max_m = 6;
  unsigned verify_threads = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check the identity corpora");
  verify_cmd->add_option("corpus", corpus, "wheels | joins | oracle | all")
      ->required()
      ->check(CLI::IsMember({"wheels", "joins", "oracle", "all"}));
  verify_cmd->add_option("--max-n", max_n, "Largest wheel index / oracle vertex count")
      ->capture_default_str();
  verify_cmd->add_option("--max-m", max_m, "Largest join vertex total")->capture_default_str();
  verify_cmd->add_option("--threads", verify_threads, "Worker threads for the Ehrhart oracle");

  CLI11_PARSE(app, argc, argv);

  try {
    if (hstar_cmd->parsed()) {
      if (hstar_spec.empty() && hstar_file.empty())
        throw std::invalid_argument("hstar: provide a graph spec or --file");
      return cmd_hstar(hstar_spec, hstar_file, opt);
    }
    if (interior_cmd->parsed()) return cmd_interior(interior_spec, interior_json);
    if (verify_cmd->parsed()) return cmd_verify(corpus, max_n, max_m, verify_threads);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}
