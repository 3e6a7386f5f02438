#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmu/coloring.hpp"
#include "qmu/graph.hpp"

namespace qmu {

enum class Objective { kMin, kMax };

struct SearchBudget {
  std::uint64_t node_limit = 50'000'000'000ULL;
  std::chrono::milliseconds time_limit{600'000};
  int thread_count = 1;

  // Throws std::invalid_argument unless all limits are positive.
  void check() const;
  // Default budget, with the time limit taken from QMU_BUDGET_MS if set.
  static SearchBudget from_env();
};

struct SearchOptions {
  // Colour reversal and first-edge automorphism reduction.
  bool symmetry = true;
};

enum class BoundStatus { kExact, kLowerBound, kUpperBound, kInterval };

std::string to_string(BoundStatus s);

// Result of an optimisation: the true value lies in [lo, hi]. `witness`, when
// present, attains the incumbent (lo for max, hi for min).
struct MuValue {
  int lo = 0;
  int hi = 0;
  BoundStatus status = BoundStatus::kInterval;
  std::optional<EdgeColoring> witness;
  std::uint64_t nodes = 0;

  bool exact() const { return status == BoundStatus::kExact; }
  // Best known value: the incumbent for bounds, lo for intervals.
  int value() const;
};

// Branch-and-bound over proper surjective t-colourings. Exact unless the
// budget runs out, in which case the status says which side is proven.
MuValue mu_exact(const Graph& g, int t, Objective objective,
                 const SearchBudget& budget = {},
                 const SearchOptions& options = {});

struct BruteForceResult {
  int mu1;
  int mu2;
};

inline constexpr int kBruteForceEdgeCap = 8;

// Plain enumeration of all t^|E| assignments. Small graphs only.
BruteForceResult brute_force_mu(const Graph& g, int t);

struct MuRow {
  int t;
  MuValue mu1;
  MuValue mu2;
};

struct MuAggregate {
  int lo = 0;
  int hi = 0;
  bool exact = false;
};

struct MuTable {
  std::vector<MuRow> rows;
  MuAggregate mu11, mu12, mu21, mu22;

  bool all_exact() const {
    return mu11.exact && mu12.exact && mu21.exact && mu22.exact;
  }
};

MuTable mu_table(const Graph& g, const SearchBudget& budget = {},
                 const SearchOptions& options = {});
// Rebuilds aggregates from rows.
void aggregate(MuTable& table);

// Single-row table for one palette size.
MuTable mu_table_for(const Graph& g, int t, const SearchBudget& budget = {},
                     const SearchOptions& options = {});

struct MuAggregates {
  long long mu11;
  long long mu12;
  long long mu21;
  long long mu22;
  bool operator==(const MuAggregates&) const = default;
};

// Closed forms for the hypercube Q_n, n >= 1.
MuAggregates closed_form_qn(int n);

// mu11 <= mu12 <= mu22 and mu11 <= mu21 <= mu22. Needs exact aggregates.
bool mu_inequalities_check(const MuTable& table);

enum class Feasibility { kFeasible, kInfeasible, kUnknown };

struct FeasibilityResult {
  Feasibility status = Feasibility::kUnknown;
  std::optional<EdgeColoring> witness;
};

// Is there a proper t-colouring interval at every vertex of `required`?
FeasibilityResult interval_feasible(const Graph& g,
                                    const std::vector<Vertex>& required,
                                    int t, const SearchBudget& budget = {});

// w_R and W_R: least and greatest feasible palette. Both empty when R lacks
// the i-property. `exact` is false when some palette stayed undecided.
struct IntervalSpan {
  std::optional<int> least;
  std::optional<int> greatest;
  bool exact = true;
};

IntervalSpan interval_span(const Graph& g, const std::vector<Vertex>& required,
                           const SearchBudget& budget = {});

// Output columns t,mu1,mu1_status,mu2,mu2_status plus a '#' aggregate line.
std::string to_csv(const MuTable& table);
std::string to_pretty(const MuTable& table);

// Exposed for tests: true when some automorphism maps edge `from` to every
// other edge.
bool edge_transitive_from(const Graph& g, EdgeIndex from);

}  // namespace qmu
