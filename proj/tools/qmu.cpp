// qmu: interval-spectrum edge colourings of graphs from the command line.
//
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 budget exhausted.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmu/coloring.hpp"
#include "qmu/constructions.hpp"
#include "qmu/graph.hpp"
#include "qmu/sampling.hpp"
#include "qmu/search.hpp"
#include "qmu/structure.hpp"
#include "qmu/suite.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kMaxCliDimension = 10;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& name) {
  if (name == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(name);
  if (!in) throw UsageError("cannot open '" + name + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

json parse_json(const std::string& name) {
  json j = json::parse(read_input(name), nullptr, false);
  if (j.is_discarded()) throw UsageError("'" + name + "' is not valid JSON");
  return j;
}

void write_output(const std::string& file, const std::string& text) {
  if (file.empty() || file == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(file);
  if (!out) throw UsageError("cannot write '" + file + "'");
  out << text;
}

qmu::Graph generate(const std::string& family, int n) {
  if (family == "qn") {
    if (n < 1 || n > kMaxCliDimension) {
      throw UsageError("qn needs 1 <= n <= " + std::to_string(kMaxCliDimension));
    }
    return qmu::hypercube(n);
  }
  try {
    if (family == "path") return qmu::path(n);
    if (family == "cycle") return qmu::cycle(n);
    if (family == "complete") return qmu::complete(n);
  } catch (const qmu::GraphError& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown family '" + family + "'");
}

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string family;
  int n = 0;
  std::string out;
  bool dot = false;
};

int cmd_gen(const GenArgs& a) {
  qmu::Graph g = generate(a.family, a.n);
  write_output(a.out, a.dot ? qmu::to_dot(g) : qmu::to_json(g).dump() + "\n");
  return kExitOk;
}

struct MuArgs {
  std::string graph;
  int t = 0;
  bool all = false;
  int threads = 0;
  long long budget_ms = 0;
  unsigned long long nodes = 0;
  bool no_symmetry = false;
  bool pretty = false;
  std::string out;
};

int cmd_mu(const MuArgs& a) {
  qmu::Graph g = qmu::graph_from_json(parse_json(a.graph));
  qmu::SearchBudget budget = qmu::SearchBudget::from_env();
  if (a.threads > 0) budget.thread_count = a.threads;
  if (a.budget_ms > 0) budget.time_limit = std::chrono::milliseconds(a.budget_ms);
  if (a.nodes > 0) budget.node_limit = a.nodes;
  qmu::SearchOptions options;
  options.symmetry = !a.no_symmetry;

  qmu::MuTable table;
  if (a.all) {
    table = qmu::mu_table(g, budget, options);
  } else {
    try {
      table = qmu::mu_table_for(g, a.t, budget, options);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  write_output(a.out, a.pretty ? qmu::to_pretty(table) : qmu::to_csv(table));
  for (const auto& row : table.rows) {
    if (!row.mu1.exact() || !row.mu2.exact()) return kExitBudget;
  }
  return kExitOk;
}

struct WitnessArgs {
  std::string kind;
  int times = 1;
  int n = 0;
  int t = 0;
  std::string file = "-";
  std::string out;
  bool dot = false;
};

int cmd_witness(const WitnessArgs& a) {
  if (a.kind == "check") {
    qmu::WitnessVerdict v = qmu::check_witness(parse_json(a.file));
    std::cout << (v.ok ? "pass: " : "fail: ") << v.detail << '\n';
    return v.ok ? kExitOk : kExitCheckFailed;
  }

  std::optional<qmu::WitnessCertificate> w;
  if (a.kind == "q3-phi") {
    w.emplace(qmu::WitnessCertificate{qmu::hypercube(3), qmu::q3_phi(),
                                      qmu::claim::Mu11Zero{4}});
  } else if (a.kind == "q3-psi") {
    w.emplace(qmu::WitnessCertificate{qmu::hypercube(3), qmu::q3_psi(),
                                      qmu::claim::FEquals{5}});
  } else if (a.kind == "lift") {
    if (a.times < 0 || a.times > kMaxCliDimension - 3) {
      throw UsageError("--times must be in [0," +
                       std::to_string(kMaxCliDimension - 3) + "]");
    }
    qmu::Graph g = qmu::hypercube(3);
    qmu::EdgeColoring c = qmu::q3_phi();
    for (int i = 0; i < a.times; ++i) {
      c = qmu::lift_zero(g, c);
      g = qmu::cartesian_product_k2(g);
    }
    const int t = c.palette();
    w.emplace(qmu::WitnessCertificate{std::move(g), std::move(c),
                                      qmu::claim::Mu11Zero{t}});
  } else if (a.kind == "interval-part") {
    if (a.n < 1 || a.n > kMaxCliDimension) {
      throw UsageError("--n must be in [1," + std::to_string(kMaxCliDimension) +
                       "]");
    }
    qmu::Graph g = qmu::hypercube(a.n);
    qmu::Bipartition b = qmu::bipartition(g);
    if (a.t < a.n || a.t > g.edge_count()) {
      throw UsageError("--t must be in [" + std::to_string(a.n) + "," +
                       std::to_string(g.edge_count()) + "]");
    }
    qmu::EdgeColoring c = qmu::interval_on_part(g, b, a.t);
    w.emplace(qmu::WitnessCertificate{std::move(g), std::move(c),
                                      qmu::claim::IntervalOn{b.part_r}});
  } else {
    throw UsageError("unknown witness '" + a.kind + "'");
  }

  if (a.dot) {
    write_output(a.out, qmu::to_dot(w->graph, &w->coloring));
  } else {
    write_output(a.out, qmu::to_json(*w).dump() + "\n");
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string lemma;
  std::string graph;
  int samples = 1000;
  unsigned long long seed = 7;
  std::string json_out;
};

void print_vertices(std::ostream& out, const std::vector<qmu::Vertex>& vs) {
  for (size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
}

int cmd_verify(const VerifyArgs& a) {
  json report;
  bool ok = true;
  if (a.lemma == "lemma6" || a.lemma == "lemma7") {
    const int n = a.lemma == "lemma6" ? 3 : 4;
    qmu::SubsetVerdict v = qmu::verify_subset_lemma(n);
    ok = v.holds;
    std::cout << (ok ? "pass" : "fail") << ": Q" << n << ", "
              << v.subsets_checked << " subsets of size >= "
              << (n == 3 ? 6 : (1 << (n - 1)) + 1)
              << " each contain a claw or an induced C" << (n == 3 ? 6 : 8);
    report = {{"check", a.lemma}, {"n", n}, {"holds", ok},
              {"subsets_checked", v.subsets_checked}};
    if (v.counterexample) {
      auto vs = qmu::mask_vertices(*v.counterexample);
      std::cout << "; counterexample:";
      for (auto x : vs) std::cout << ' ' << x;
      report["counterexample"] = vs;
    }
    std::cout << '\n';
  } else if (a.lemma == "lemma3") {
    qmu::Graph g = a.graph.empty() ? qmu::hypercube(3)
                                   : qmu::graph_from_json(parse_json(a.graph));
    if (g.min_degree() < 2) throw UsageError("graph needs minimum degree >= 2");
    if (a.samples < 1) throw UsageError("--samples must be positive");
    qmu::Rng rng(a.seed);
    int nonempty = 0;
    report = {{"check", a.lemma}, {"samples", a.samples}, {"seed", a.seed}};
    for (int s = 0; s < a.samples && ok; ++s) {
      qmu::EdgeColoring c = qmu::random_bijective_coloring(g, rng);
      auto r = qmu::spectrum_report(g, c);
      if (!r.v_int.empty()) ++nonempty;
      if (!qmu::check_lemma3(g, c)) {
        ok = false;
        std::cout << "fail: sample " << s << " has V_int = ";
        print_vertices(std::cout, r.v_int);
        std::cout << " which is not a path forest\n";
        report["counterexample"] = {{"coloring", qmu::to_json(c)},
                                    {"v_int", r.v_int}};
      }
    }
    if (ok) {
      std::cout << "pass: " << a.samples << " bijective colourings, "
                << nonempty
                << " with interval vertices, all inducing path forests\n";
    }
    report["holds"] = ok;
  } else {
    throw UsageError("unknown check '" + a.lemma + "'");
  }
  if (!a.json_out.empty()) write_output(a.json_out, report.dump(2) + "\n");
  return ok ? kExitOk : kExitCheckFailed;
}

struct SuiteArgs {
  std::string level = "quick";
  unsigned long long seed = 7;
  int samples = 1000;
  int threads = 1;
  std::vector<std::string> witnesses;
};

int cmd_suite(const SuiteArgs& a) {
  qmu::SuiteOptions o;
  if (a.level == "quick") {
    o.level = qmu::SuiteLevel::kQuick;
  } else if (a.level == "full") {
    o.level = qmu::SuiteLevel::kFull;
  } else {
    throw UsageError("--level must be quick or full");
  }
  o.seed = a.seed;
  o.samples = a.samples;
  o.threads = a.threads;
  o.witness_files = a.witnesses;
  qmu::SuiteReport r = qmu::run_suite(o);
  std::cout << qmu::format_report(r);
  return r.passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval-spectrum edge colourings: generators, exact mu "
               "search, witnesses and structural checks"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph as JSON");
  gen_cmd->add_option("family", gen.family, "qn | path | cycle | complete")
      ->required();
  gen_cmd->add_option("n", gen.n, "Size parameter")->required();
  gen_cmd->add_option("-o,--out", gen.out, "Output file (default stdout)");
  gen_cmd->add_flag("--dot", gen.dot, "Emit Graphviz DOT instead of JSON");

  MuArgs mu;
  auto* mu_cmd = app.add_subcommand("mu", "Compute mu1/mu2 by exact search");
  mu_cmd->add_option("graph", mu.graph, "Graph JSON file or - for stdin")
      ->required();
  auto* t_opt = mu_cmd->add_option("--t", mu.t, "Single palette size");
  auto* all_opt = mu_cmd->add_flag("--all", mu.all, "Every t in [chi', |E|]");
  t_opt->excludes(all_opt);
  mu_cmd->add_option("--threads", mu.threads, "Worker threads");
  mu_cmd->add_option("--budget-ms", mu.budget_ms,
                     "Time budget per search (overrides QMU_BUDGET_MS)");
  mu_cmd->add_option("--nodes", mu.nodes, "Node budget per search");
  mu_cmd->add_flag("--no-symmetry", mu.no_symmetry,
                   "Disable symmetry reduction");
  mu_cmd->add_flag("--pretty", mu.pretty, "Aligned text instead of CSV");
  mu_cmd->add_option("-o,--out", mu.out, "Output file (default stdout)");

  WitnessArgs wit;
  auto* wit_cmd = app.add_subcommand(
      "witness", "Export or check witness certificates");
  wit_cmd->add_option("kind", wit.kind,
                      "q3-phi | q3-psi | lift | interval-part | check")
      ->required();
  wit_cmd->add_option("file", wit.file, "Witness file for check (- = stdin)");
  wit_cmd->add_option("--times", wit.times, "Lift applications");
  wit_cmd->add_option("--n", wit.n, "Hypercube dimension");
  wit_cmd->add_option("--t", wit.t, "Palette size");
  wit_cmd->add_option("-o,--out", wit.out, "Output file (default stdout)");
  wit_cmd->add_flag("--dot", wit.dot, "Emit Graphviz DOT of the colouring");

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Exhaustive structural checks");
  ver_cmd->add_option("check", ver.lemma,
                      "lemma3 (path forests at t=|E|) | lemma6 (Q3 subsets) "
                      "| lemma7 (Q4 subsets)")
      ->required();
  ver_cmd->add_option("--graph", ver.graph, "Graph JSON for lemma3 (default Q3)");
  ver_cmd->add_option("--samples", ver.samples, "Random colourings for lemma3");
  ver_cmd->add_option("--seed", ver.seed, "RNG seed");
  ver_cmd->add_option("--json-out", ver.json_out, "Write a JSON report");

  SuiteArgs suite;
  auto* suite_cmd = app.add_subcommand("suite", "Run the reproduction suite");
  suite_cmd->add_option("--level", suite.level, "quick | full");
  suite_cmd->add_option("--seed", suite.seed, "RNG seed");
  suite_cmd->add_option("--samples", suite.samples, "Samples per property");
  suite_cmd->add_option("--threads", suite.threads, "Search threads");
  suite_cmd->add_option("--witness", suite.witnesses,
                        "Extra witness files to re-check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*mu_cmd) {
      if (!mu.all && t_opt->count() == 0) {
        throw UsageError("mu needs --t or --all");
      }
      return cmd_mu(mu);
    }
    if (*wit_cmd) return cmd_witness(wit);
    if (*ver_cmd) return cmd_verify(ver);
    if (*suite_cmd) return cmd_suite(suite);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const qmu::GraphError& e) {
    std::cerr << "bad graph: " << e.what() << '\n';
    return kExitUsage;
  } catch (const qmu::ColoringError& e) {
    std::cerr << "bad colouring: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}
