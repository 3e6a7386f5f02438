#include "qmu/suite.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "qmu/coloring.hpp"
#include "qmu/constructions.hpp"
#include "qmu/graph.hpp"
#include "qmu/sampling.hpp"
#include "qmu/search.hpp"
#include "qmu/structure.hpp"

namespace qmu {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "PASS";
    case CheckStatus::kFail: return "FAIL";
    case CheckStatus::kSkipped: return "SKIP";
  }
  return "?";
}

bool SuiteReport::passed() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::kFail) return false;
  }
  return true;
}

namespace {

// Collects failures; a check passes when nothing was recorded.
class Findings {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& what) { notes_.push_back(what); }
  bool ok() const { return failures_.empty(); }
  std::string text() const {
    std::ostringstream out;
    const auto& items = failures_.empty() ? notes_ : failures_;
    for (size_t i = 0; i < items.size(); ++i) {
      out << (i ? "; " : "") << items[i];
    }
    return out.str();
  }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string str(int v) { return std::to_string(v); }

SearchBudget suite_budget(const SuiteOptions& o) {
  SearchBudget b;
  b.thread_count = o.threads;
  b.time_limit = std::chrono::milliseconds(120'000);
  return b;
}

void check_closed_form(const SuiteOptions& o, Findings& f) {
  for (int n : {1, 2}) {
    MuTable table = mu_table(hypercube(n), suite_budget(o));
    MuAggregates cf = closed_form_qn(n);
    f.expect(table.all_exact(), "Q" + str(n) + " table not exact");
    MuAggregates got{table.mu11.lo, table.mu12.lo, table.mu21.lo,
                     table.mu22.lo};
    f.expect(got == cf, "Q" + str(n) + " aggregates differ from closed form");
    f.note("Q" + str(n) + " (" + std::to_string(got.mu11) + "," +
           std::to_string(got.mu12) + "," + std::to_string(got.mu21) + "," +
           std::to_string(got.mu22) + ")");
  }
}

void check_q3_endpoints(const SuiteOptions& o, Findings& f) {
  const Graph q3 = hypercube(3);
  const SearchBudget b = suite_budget(o);
  auto lo3 = mu_exact(q3, 3, Objective::kMin, b);
  auto hi3 = mu_exact(q3, 3, Objective::kMax, b);
  f.expect(lo3.exact() && lo3.lo == 8, "mu1(Q3,3) != 8");
  f.expect(hi3.exact() && hi3.lo == 8, "mu2(Q3,3) != 8");

  auto lo4 = mu_exact(q3, 4, Objective::kMin, b);
  f.expect(lo4.exact() && lo4.lo == 0, "mu1(Q3,4) != 0");
  EdgeColoring phi = q3_phi();
  f.expect(try_validate(q3, phi.palette(), phi.colors()).has_value() &&
               phi.palette() == 4 && interval_count(q3, phi) == 0,
           "phi witness is not a 4-colouring with f = 0");

  // Structural route: at t = |E| interval vertices induce a path forest, and
  // no path forest in Q3 exceeds 5 vertices; psi attains 5.
  const int cap = max_pathforest_subset(3);
  EdgeColoring psi = q3_psi();
  f.expect(cap == 5, "largest induced path forest in Q3 is " + str(cap));
  f.expect(psi.palette() == 12 && interval_count(q3, psi) == 5,
           "psi does not attain f = 5 at t = 12");
  f.expect(check_lemma3(q3, psi), "V_int(psi) is not a path forest");

  if (o.level == SuiteLevel::kFull) {
    auto hi12 = mu_exact(q3, 12, Objective::kMax, b);
    f.expect(hi12.exact() && hi12.lo == 5,
             "exact search gives mu2(Q3,12) = " + str(hi12.value()));
    f.note("mu2(Q3,12)=5 by search (" + std::to_string(hi12.nodes) +
           " nodes) and by path-forest cap");
  } else {
    f.note("mu2(Q3,12)=5 by path-forest cap; exact search skipped");
  }
}

void check_lift_chain(const SuiteOptions&, Findings& f) {
  Graph g = hypercube(3);
  EdgeColoring c = q3_phi();
  for (int n = 3; n <= 6; ++n) {
    if (n > 3) {
      auto start = std::chrono::steady_clock::now();
      c = lift_zero(g, c);
      g = cartesian_product_k2(g);
      double s = std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start).count();
      f.expect(s < 1.0, "lift to Q" + str(n) + " took over 1 s");
    }
    f.expect(g == hypercube(n), "lifted graph is not Q" + str(n));
    f.expect(try_validate(g, c.palette(), c.colors()).has_value(),
             "Q" + str(n) + " colouring invalid");
    f.expect(c.palette() == n + 1, "Q" + str(n) + " palette " +
                                       str(c.palette()));
    f.expect(interval_count(g, c) == 0, "Q" + str(n) + " has f != 0");
  }
  f.note("palettes 4,5,6,7 on Q3..Q6, f = 0 each");
}

bool interval_on_all(const Graph& g, const EdgeColoring& c,
                     const std::vector<Vertex>& part) {
  for (Vertex x : part) {
    if (!is_interval_at(g, c, x)) return false;
  }
  return true;
}

void check_part_witnesses(const SuiteOptions&, Findings& f) {
  int total = 0;
  for (int n = 3; n <= 5; ++n) {
    const Graph g = hypercube(n);
    const Bipartition b = bipartition(g);
    for (int t = n; t <= g.edge_count(); ++t) {
      EdgeColoring c = interval_on_part(g, b, t);
      bool ok = try_validate(g, c.palette(), c.colors()).has_value() &&
                c.palette() == t && interval_on_all(g, c, b.part_r) &&
                static_cast<int>(b.part_r.size()) == (1 << (n - 1));
      f.expect(ok, "Q" + str(n) + " t=" + str(t) + " fails");
      ++total;
    }
  }
  f.note(str(total) + " colourings interval on a full part");
}

void check_mu21_q4(const SuiteOptions& o, Findings& f) {
  const Graph q4 = hypercube(4);
  const Bipartition b = bipartition(q4);
  const int cap = max_pathforest_subset(4);
  f.expect(cap == 8, "largest induced path forest in Q4 is " + str(cap));
  int lower = q4.vertex_count();
  for (int t = 4; t <= q4.edge_count(); ++t) {
    lower = std::min(lower, interval_count(q4, interval_on_part(q4, b, t)));
  }
  f.expect(lower >= 8, "some palette has only " + str(lower) +
                           " interval vertices");
  // Spot-check the path-forest property on Q4 itself.
  Rng rng(o.seed);
  for (int i = 0; i < 200; ++i) {
    f.expect(check_lemma3(q4, random_bijective_coloring(q4, rng)),
             "random bijective Q4 colouring breaks path-forest property");
  }
  f.expect(closed_form_qn(4).mu21 == 8, "closed form mu21(Q4) != 8");
  f.note("8 <= mu2(Q4,t) for all t, mu2(Q4,32) <= " + str(cap));
}

void check_subset_lemmas(const SuiteOptions& o, Findings& f) {
  auto start = std::chrono::steady_clock::now();
  SubsetVerdict v3 = verify_subset_lemma(3);
  double s3 = std::chrono::duration<double>(
                  std::chrono::steady_clock::now() - start).count();
  f.expect(v3.holds, "claw-or-C6 fails in Q3");
  f.expect(v3.subsets_checked == 37,
           "Q3 scan saw " + std::to_string(v3.subsets_checked) + " subsets");
  f.expect(s3 < 1.0, "Q3 scan took over 1 s");
  if (o.level == SuiteLevel::kFull) {
    start = std::chrono::steady_clock::now();
    SubsetVerdict v4 = verify_subset_lemma(4);
    double s4 = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start).count();
    f.expect(v4.holds, "claw-or-C8 fails in Q4");
    f.expect(s4 < 300.0, "Q4 scan took over 5 min");
    f.note("37 subsets of Q3, " + std::to_string(v4.subsets_checked) +
           " subsets of Q4");
  } else {
    f.note("37 subsets of Q3; Q4 scan skipped");
  }
}

void check_oracle(const SuiteOptions& o, Findings& f) {
  std::vector<std::pair<std::string, Graph>> corpus;
  for (int n = 2; n <= 5; ++n) corpus.emplace_back("P" + str(n), path(n));
  for (int n = 3; n <= 5; ++n) corpus.emplace_back("C" + str(n), cycle(n));
  corpus.emplace_back("K3", complete(3));
  corpus.emplace_back("Q1", hypercube(1));
  corpus.emplace_back("Q2", hypercube(2));
  int rows = 0;
  for (const auto& [name, g] : corpus) {
    for (int t = chromatic_index(g); t <= g.edge_count(); ++t) {
      BruteForceResult bf = brute_force_mu(g, t);
      auto lo = mu_exact(g, t, Objective::kMin, suite_budget(o));
      auto hi = mu_exact(g, t, Objective::kMax, suite_budget(o));
      f.expect(lo.exact() && lo.lo == bf.mu1,
               name + " t=" + str(t) + " min differs from brute force");
      f.expect(hi.exact() && hi.lo == bf.mu2,
               name + " t=" + str(t) + " max differs from brute force");
      ++rows;
    }
  }
  f.note(str(rows) + " (graph, t) pairs agree");
}

void check_properties(const SuiteOptions& o, Findings& f) {
  Rng rng(o.seed);
  int violations = 0;

  // Shift sequences from randomly ordered block colourings.
  for (int n : {3, 4}) {
    const Graph g = hypercube(n);
    const Bipartition b = bipartition(g);
    for (int s = 0; s < o.samples; ++s) {
      EdgeColoring base = block_harmonic(g, b, random_block_order(g, b, rng));
      ShiftSequence seq = shift_sequence(g, base);
      for (size_t j = 0; j < seq.steps.size(); ++j) {
        if (!is_harmonic(g, seq.steps[j])) ++violations;
        if (j == 0) continue;
        for (Vertex z = 0; z < g.vertex_count(); ++z) {
          if (is_interval_at(g, seq.steps[j - 1], z) &&
              !is_interval_at(g, seq.steps[j], z)) {
            ++violations;
          }
        }
      }
    }
  }
  f.expect(violations == 0, str(violations) + " shift violations");

  // Path-forest property of V_int at t = |E|.
  int lemma_violations = 0;
  std::vector<Graph> graphs{hypercube(3), cycle(5), cycle(6), complete(4)};
  for (const Graph& g : graphs) {
    for (int s = 0; s < o.samples; ++s) {
      if (!check_lemma3(g, random_bijective_coloring(g, rng))) {
        ++lemma_violations;
      }
    }
  }
  f.expect(lemma_violations == 0,
           str(lemma_violations) + " path-forest violations");

  // Reversal keeps f.
  int reversal_violations = 0;
  graphs.push_back(hypercube(4));
  for (const Graph& g : graphs) {
    for (int s = 0; s < o.samples; ++s) {
      EdgeColoring c = random_proper_coloring(g, rng);
      if (interval_count(g, c) != interval_count(g, reversed(g, c))) {
        ++reversal_violations;
      }
    }
  }
  f.expect(reversal_violations == 0,
           str(reversal_violations) + " reversal violations");
  f.note("0 violations over " + str(o.samples) + " samples per family");
}

void check_inequalities(const SuiteOptions& o, Findings& f) {
  std::vector<int> dims{1, 2};
  if (o.level == SuiteLevel::kFull) dims.push_back(3);
  for (int n : dims) {
    MuTable table = mu_table(hypercube(n), suite_budget(o));
    f.expect(table.all_exact(), "Q" + str(n) + " table not exact");
    if (table.all_exact()) {
      f.expect(mu_inequalities_check(table),
               "Q" + str(n) + " violates the mu inequality chains");
      MuAggregates got{table.mu11.lo, table.mu12.lo, table.mu21.lo,
                       table.mu22.lo};
      f.expect(got == closed_form_qn(n),
               "Q" + str(n) + " aggregates differ from closed form");
    }
  }
  f.note(o.level == SuiteLevel::kFull ? "Q1, Q2, Q3 tables"
                                      : "Q1, Q2 tables; Q3 skipped");
}

struct CheckSpec {
  std::string id;
  std::string description;
  std::string property;
  double limit_seconds;
  std::function<void(const SuiteOptions&, Findings&)> run;
};

}  // namespace

SuiteReport run_suite(const SuiteOptions& options) {
  const std::vector<CheckSpec> specs{
      {"C1", "exhaustive tables for Q1, Q2 match closed form",
       "mu(Q1)=(2,2,2,2), mu(Q2)=(1,4,3,4)", 1.0, check_closed_form},
      {"C2", "Q3 endpoint values", "mu(Q3,3)=8, mu1(Q3,4)=0, mu2(Q3,12)=5",
       60.0, check_q3_endpoints},
      {"C3", "zero-interval lift chain Q3..Q6", "mu11(Q_n)=0 for n>=3",
       4.0, check_lift_chain},
      {"C4", "interval-on-part witnesses for Q3..Q5, every t",
       "mu2(Q_n,t) >= 2^(n-1)", 30.0, check_part_witnesses},
      {"C5", "mu21(Q4) = 8 from both sides", "mu21(Q_n)=2^(n-1), n>=4",
       300.0, check_mu21_q4},
      {"C6", "claw/induced-cycle subset lemmas for Q3 and Q4",
       "|V0|>=6 in Q3, |V0|>=9 in Q4", 301.0, check_subset_lemmas},
      {"C7", "branch and bound equals brute force on small graphs",
       "mu1, mu2 by definition", 60.0, check_oracle},
      {"C8", "seeded property suites", "harmonic shifts, path forests, reversal",
       60.0, check_properties},
      {"C9", "mu inequality chains on exact tables",
       "mu11<=mu12<=mu22, mu11<=mu21<=mu22", 60.0, check_inequalities},
  };

  SuiteReport report;
  for (const CheckSpec& spec : specs) {
    CheckResult r{spec.id, spec.description, spec.property,
                  CheckStatus::kFail, 0, ""};
    Findings f;
    auto start = std::chrono::steady_clock::now();
    try {
      spec.run(options, f);
    } catch (const std::exception& e) {
      f.expect(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start).count();
    f.expect(r.seconds <= spec.limit_seconds,
             "runtime over " + std::to_string(spec.limit_seconds) + " s");
    r.status = f.ok() ? CheckStatus::kPass : CheckStatus::kFail;
    r.detail = f.text();
    report.checks.push_back(std::move(r));
  }

  int k = 0;
  for (const std::string& file : options.witness_files) {
    CheckResult r{"W" + str(++k), "witness file " + file, "claim re-check",
                  CheckStatus::kFail, 0, ""};
    auto start = std::chrono::steady_clock::now();
    std::ifstream in(file);
    if (!in) {
      r.detail = "cannot open file";
    } else {
      nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
      WitnessVerdict v = check_witness(j);
      if (j.is_discarded()) v.detail = "not valid JSON";
      r.status = v.ok ? CheckStatus::kPass : CheckStatus::kFail;
      r.detail = v.detail;
    }
    r.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start).count();
    report.checks.push_back(std::move(r));
  }
  return report;
}

std::string format_report(const SuiteReport& report) {
  std::ostringstream out;
  for (const CheckResult& c : report.checks) {
    out << to_string(c.status) << ' ' << c.id << " (" << std::fixed
        << std::setprecision(3) << c.seconds << "s) " << c.description
        << " [" << c.property << "]";
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  int failed = 0;
  for (const CheckResult& c : report.checks) {
    if (c.status == CheckStatus::kFail) ++failed;
  }
  out << (failed ? "suite FAILED: " : "suite passed: ") << failed
      << " failing of " << report.checks.size() << " checks\n";
  return out.str();
}

}  // namespace qmu
