#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qmu/coloring.hpp"
#include "qmu/graph.hpp"

namespace qmu {

// Placement of the abstract cube labels x1..x4, y1..y4 on hypercube(3):
// x1..x4 walk the 4-cycle 0-1-3-2 and y_i = x_i ^ 4 is the opposite face.
struct Q3Labels {
  std::array<Vertex, 4> x;
  std::array<Vertex, 4> y;
};
inline constexpr Q3Labels kQ3Labels{{0, 1, 3, 2}, {4, 5, 7, 6}};

// 4-colouring of Q3 with no interval vertex.
EdgeColoring q3_phi();
// Bijective 12-colouring of Q3 with exactly five interval vertices
// (y1, y4, x4, x3, x2). It is harmonic.
EdgeColoring q3_psi();

// Given an r-regular g (r >= 3) and a colouring with t = r+1 and f = 0,
// colours g x K2 with t = r+2 and f = 0: both copies keep their colours and
// every rung gets r+2. Throws std::invalid_argument on bad input.
EdgeColoring lift_zero(const Graph& g, const EdgeColoring& c);

// Colour classes congruent mod Delta unite into matchings. Throws GraphError
// unless chi'(g) = Delta(g) can be confirmed.
bool is_harmonic(const Graph& g, const EdgeColoring& c);

// Recolours every edge of the maximum colour m with m - Delta. Requires a
// harmonic c with t > Delta.
EdgeColoring shift_step(const Graph& g, const EdgeColoring& c);

struct ShiftSequence {
  // steps[0] is the base colouring; steps[j] has palette t - j and the last
  // one has palette Delta.
  std::vector<EdgeColoring> steps;

  const EdgeColoring& base() const { return steps.front(); }
};

ShiftSequence shift_sequence(const Graph& g, const EdgeColoring& c);

// True iff every member of seq is interval at z0. Requires deg(z0) = Delta
// and an interval base spectrum at z0 (std::invalid_argument otherwise).
bool preserves_interval_at(const Graph& g, const ShiftSequence& seq,
                           Vertex z0);

// Optional enumeration orders for block_harmonic. Empty means ascending ids
// and the matching_decomposition order.
struct BlockOrder {
  std::vector<Vertex> part_order;
  std::vector<int> matching_order;
};

// For a regular bipartite g with matchings M_1..M_r and part_r vertices
// v_0..v_{k-1}, the M_j edge at v_i gets colour i*r + j. Bijective,
// harmonic, and interval on part_r.
EdgeColoring block_harmonic(const Graph& g, const Bipartition& b,
                            const BlockOrder& order = {});

// Member of block_harmonic's shift sequence with palette t, Delta <= t <= |E|.
EdgeColoring interval_on_part(const Graph& g, const Bipartition& b, int t,
                              const BlockOrder& order = {});

// ---------------------------------------------------------------------------
// Witness certificates

namespace claim {
struct FEquals { int value; };
struct IntervalOn { std::vector<Vertex> vertices; };
struct Harmonic {};
struct Mu2LowerBound { int t; int value; };
struct Mu11Zero { int t; };
}  // namespace claim

using Claim = std::variant<claim::FEquals, claim::IntervalOn, claim::Harmonic,
                           claim::Mu2LowerBound, claim::Mu11Zero>;

struct WitnessCertificate {
  Graph graph;
  EdgeColoring coloring;
  Claim claim;
};

struct WitnessVerdict {
  bool ok = false;
  int f = -1;  // -1 when the colouring did not validate
  std::string detail;
};

nlohmann::json to_json(const Claim& c);
nlohmann::json to_json(const WitnessCertificate& w);

// Re-validates graph, colouring and claim from scratch. Never throws on bad
// input; problems are reported in the verdict.
WitnessVerdict check_witness(const nlohmann::json& j);
WitnessVerdict check_witness(const WitnessCertificate& w);

}  // namespace qmu
