#include <doctest.h>

#include <algorithm>
#include <climits>
#include <sstream>

#include "qmu/constructions.hpp"
#include "qmu/search.hpp"

using namespace qmu;

namespace {

// Independent oracle: every map E -> [t], kept if proper and onto.
struct Oracle {
  int mu1 = INT_MAX;
  int mu2 = INT_MIN;
};

Oracle enumerate(const Graph& g, int t) {
  const int m = g.edge_count(), n = g.vertex_count();
  std::vector<int> col(m, 1);
  Oracle out;
  for (;;) {
    bool ok = true;
    std::vector<bool> used(t + 1, false);
    for (int e = 0; e < m; ++e) used[col[e]] = true;
    for (int c = 1; c <= t && ok; ++c) ok = used[c];
    for (int a = 0; a < m && ok; ++a) {
      for (int b = a + 1; b < m && ok; ++b) {
        const Edge &x = g.edge(a), &y = g.edge(b);
        bool touch = x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
        if (touch && col[a] == col[b]) ok = false;
      }
    }
    if (ok) {
      int f = 0;
      for (int v = 0; v < n; ++v) {
        int lo = INT_MAX, hi = INT_MIN, d = 0;
        for (int e = 0; e < m; ++e) {
          if (g.edge(e).u == v || g.edge(e).v == v) {
            lo = std::min(lo, col[e]);
            hi = std::max(hi, col[e]);
            ++d;
          }
        }
        if (hi - lo + 1 == d) ++f;
      }
      out.mu1 = std::min(out.mu1, f);
      out.mu2 = std::max(out.mu2, f);
    }
    int i = 0;
    while (i < m && col[i] == t) col[i++] = 1;
    if (i == m) break;
    ++col[i];
  }
  return out;
}

std::vector<Graph> corpus() {
  std::vector<Graph> gs;
  for (int n = 2; n <= 5; ++n) gs.push_back(path(n));
  for (int n = 3; n <= 5; ++n) gs.push_back(cycle(n));
  gs.push_back(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}}));
  gs.push_back(Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}}));
  gs.push_back(hypercube(1));
  gs.push_back(hypercube(2));
  return gs;
}

}  // namespace

TEST_CASE("search agrees with exhaustive enumeration") {
  for (const Graph& g : corpus()) {
    int chi = chromatic_index(g);
    for (int t = chi; t <= g.edge_count(); ++t) {
      Oracle o = enumerate(g, t);
      for (bool sym : {true, false}) {
        SearchOptions opt{sym};
        MuValue lo = mu_exact(g, t, Objective::kMin, {}, opt);
        MuValue hi = mu_exact(g, t, Objective::kMax, {}, opt);
        CAPTURE(g.vertex_count());
        CAPTURE(t);
        CAPTURE(sym);
        REQUIRE(lo.exact());
        REQUIRE(hi.exact());
        CHECK(lo.value() == o.mu1);
        CHECK(hi.value() == o.mu2);
      }
      if (g.edge_count() <= kBruteForceEdgeCap) {
        BruteForceResult b = brute_force_mu(g, t);
        CHECK(b.mu1 == o.mu1);
        CHECK(b.mu2 == o.mu2);
      }
    }
  }
}

TEST_CASE("small fixed values") {
  Graph c4 = cycle(4);
  CHECK(mu_exact(c4, 2, Objective::kMin).value() == 4);
  CHECK(mu_exact(c4, 2, Objective::kMax).value() == 4);
  CHECK(mu_exact(c4, 4, Objective::kMax).value() == 3);
  Graph p3 = path(3);
  CHECK(mu_exact(p3, 2, Objective::kMin).value() == 3);
  CHECK(mu_exact(p3, 2, Objective::kMax).value() == 3);
  CHECK_THROWS_AS(mu_exact(c4, 1, Objective::kMin), std::invalid_argument);
  CHECK_THROWS_AS(mu_exact(c4, 5, Objective::kMin), std::invalid_argument);
}

TEST_CASE("Q3 endpoints") {
  Graph q3 = hypercube(3);
  CHECK(mu_exact(q3, 3, Objective::kMin).value() == 8);
  CHECK(mu_exact(q3, 4, Objective::kMin).value() == 0);
  MuValue top = mu_exact(q3, 12, Objective::kMax);
  REQUIRE(top.exact());
  CHECK(top.value() == 5);
  REQUIRE(top.witness.has_value());
  CHECK(interval_count(q3, *top.witness) == 5);
}

TEST_CASE("witnesses attain the reported value") {
  for (const Graph& g : {hypercube(3), cycle(5), path(5)}) {
    for (int t = chromatic_index(g); t <= g.edge_count(); ++t) {
      for (Objective o : {Objective::kMin, Objective::kMax}) {
        MuValue v = mu_exact(g, t, o);
        REQUIRE(v.witness.has_value());
        CHECK(v.witness->palette() == t);
        CHECK(interval_count(g, *v.witness) == v.value());
      }
    }
  }
}

TEST_CASE("mu tables and aggregates") {
  MuTable q1 = mu_table(hypercube(1));
  REQUIRE(q1.rows.size() == 1u);
  CHECK(q1.mu11.lo == 2);
  CHECK(q1.mu22.hi == 2);

  MuTable q2 = mu_table(hypercube(2));
  REQUIRE(q2.rows.size() == 3u);
  CHECK(q2.all_exact());
  CHECK(q2.mu11.lo == 1);
  CHECK(q2.mu12.lo == 4);
  CHECK(q2.mu21.lo == 3);
  CHECK(q2.mu22.lo == 4);

  MuTable q3 = mu_table(hypercube(3));
  REQUIRE(q3.all_exact());
  std::vector<int> mu1{8, 0, 0, 0, 0, 0, 0, 0, 0, 0};
  std::vector<int> mu2{8, 8, 8, 8, 7, 6, 6, 6, 5, 5};
  for (size_t i = 0; i < q3.rows.size(); ++i) {
    CHECK(q3.rows[i].t == static_cast<int>(i) + 3);
    CHECK(q3.rows[i].mu1.value() == mu1[i]);
    CHECK(q3.rows[i].mu2.value() == mu2[i]);
  }
  CHECK(mu_inequalities_check(q3));
  for (int n : {1, 2, 3}) {
    MuTable t = mu_table(hypercube(n));
    MuAggregates cf = closed_form_qn(n);
    CHECK(cf.mu11 == t.mu11.lo);
    CHECK(cf.mu12 == t.mu12.lo);
    CHECK(cf.mu21 == t.mu21.lo);
    CHECK(cf.mu22 == t.mu22.lo);
  }
}

TEST_CASE("closed forms") {
  CHECK(closed_form_qn(1) == MuAggregates{2, 2, 2, 2});
  CHECK(closed_form_qn(3) == MuAggregates{0, 8, 5, 8});
  CHECK(closed_form_qn(4) == MuAggregates{0, 16, 8, 16});
  CHECK(closed_form_qn(10).mu12 == 1024);
  CHECK_THROWS(closed_form_qn(0));
}

TEST_CASE("inequality check") {
  MuTable q3 = mu_table(hypercube(3));
  CHECK(mu_inequalities_check(q3));
  MuTable bad = q3;
  bad.mu11 = {5, 5, true};
  bad.mu12 = {4, 4, true};
  CHECK_FALSE(mu_inequalities_check(bad));
  MuTable partial = q3;
  partial.mu21.exact = false;
  CHECK_THROWS(mu_inequalities_check(partial));
}

TEST_CASE("feasibility of interval constraints") {
  Graph q3 = hypercube(3);
  Bipartition b = bipartition(q3);
  FeasibilityResult r = interval_feasible(q3, b.part_r, 12);
  REQUIRE(r.status == Feasibility::kFeasible);
  for (Vertex v : b.part_r) CHECK(is_interval_at(q3, *r.witness, v));

  std::vector<Vertex> all{0, 1, 2, 3, 4, 5, 6, 7};
  CHECK(interval_feasible(q3, all, 3).status == Feasibility::kFeasible);
  CHECK(interval_feasible(q3, all, 6).status == Feasibility::kFeasible);
  CHECK(interval_feasible(q3, all, 7).status == Feasibility::kInfeasible);
  std::vector<Vertex> k3{0, 1, 2};
  CHECK(interval_feasible(complete(3), k3, 3).status == Feasibility::kInfeasible);

  IntervalSpan span = interval_span(q3, all);
  CHECK(span.exact);
  CHECK(span.least == 3);
  CHECK(span.greatest == 6);
  IntervalSpan none = interval_span(complete(3), k3);
  CHECK(none.exact);
  CHECK_FALSE(none.least.has_value());
  IntervalSpan half = interval_span(q3, b.part_r);
  CHECK(half.least == 3);
  CHECK(half.greatest == 12);
}

TEST_CASE("thread count does not change values") {
  Graph q3 = hypercube(3);
  for (int t : {4, 7, 12}) {
    SearchBudget one, four;
    four.thread_count = 4;
    for (Objective o : {Objective::kMin, Objective::kMax}) {
      CHECK(mu_exact(q3, t, o, one).value() == mu_exact(q3, t, o, four).value());
    }
  }
}

TEST_CASE("exhausted budgets yield bounds") {
  Graph q4 = hypercube(4);
  SearchBudget tiny;
  tiny.node_limit = 50;
  MuValue hi = mu_exact(q4, 20, Objective::kMax, tiny);
  CHECK_FALSE(hi.exact());
  CHECK(hi.lo <= hi.hi);
  if (hi.witness) {
    CHECK(hi.status == BoundStatus::kLowerBound);
    CHECK(interval_count(q4, *hi.witness) == hi.lo);
  }
  // A zero witness closes the min search within any budget.
  MuValue lo = mu_exact(q4, 20, Objective::kMin, tiny);
  CHECK(lo.lo <= lo.hi);
  if (lo.exact()) CHECK(lo.value() == 0);

  MuTable t = mu_table_for(q4, 20, tiny);
  CHECK_FALSE(t.all_exact());
  std::string csv = to_csv(t);
  CHECK(csv.find(",lower_bound") != std::string::npos);

  SearchBudget bad;
  bad.thread_count = 0;
  CHECK_THROWS_AS(bad.check(), std::invalid_argument);
}

TEST_CASE("CSV layout") {
  MuTable q2 = mu_table(hypercube(2));
  std::string csv = to_csv(q2);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,mu1,mu1_status,mu2,mu2_status");
  std::getline(in, line);
  CHECK(line == "2,4,exact,4,exact");
  std::getline(in, line);
  CHECK(line == "3,2,exact,4,exact");
  std::getline(in, line);
  CHECK(line == "4,1,exact,3,exact");
  std::getline(in, line);
  CHECK(line.rfind("# mu11=1", 0) == 0);
  CHECK_FALSE(to_pretty(q2).empty());
}

TEST_CASE("edge transitivity test") {
  CHECK(edge_transitive_from(hypercube(3), 0));
  CHECK(edge_transitive_from(hypercube(4), 5));
  CHECK(edge_transitive_from(cycle(5), 0));
  CHECK(edge_transitive_from(complete(4), 0));
  CHECK_FALSE(edge_transitive_from(path(4), 0));
  CHECK_FALSE(
      edge_transitive_from(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}}), 0));
}
