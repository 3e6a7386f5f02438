#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmu/coloring.hpp"
#include "qmu/graph.hpp"

namespace qmu {

using VertexMask = std::uint64_t;  // bit x set iff vertex x is in the set

inline constexpr int kMaskVertexCap = 64;

enum class PatternKind { kClaw, kCycle6, kCycle8 };

std::string to_string(PatternKind k);

struct PatternCertificate {
  PatternKind kind;
  // Claw: centre first, then its three leaves. Cycles: in cyclic order.
  std::vector<Vertex> vertices;
};

// Induced structure is a disjoint union of simple paths (acyclic, degree <= 2).
bool is_path_forest(const Graph& g, const std::vector<Vertex>& vertices);
bool is_path_forest(const Graph& g, VertexMask vertices);

// Path-forest check on V_int of a bijective colouring. Requires min degree
// >= 2 and t = |E| (std::invalid_argument otherwise). Returns true when V_int
// is empty.
bool check_lemma3(const Graph& g, const EdgeColoring& c);

// Adjacency rows as bitmasks; g must have at most 64 vertices.
std::vector<VertexMask> adjacency_masks(const Graph& g);

// All vertex sets of g inducing the pattern, as sorted unique masks. Claws
// are found from their centres; cycles by chordless-path extension.
std::vector<VertexMask> enumerate_patterns(const Graph& g, PatternKind kind);

// Q_n wrapper: claw for n in {3,4}, cycle6 only n = 3, cycle8 only n = 4.
std::vector<VertexMask> enumerate_patterns(int n, PatternKind kind);

// Re-derives the pattern from the induced edges of `mask` alone.
bool induces_pattern(const Graph& g, VertexMask mask, PatternKind kind);
std::optional<PatternCertificate> certify_pattern(const Graph& g,
                                                  VertexMask mask,
                                                  PatternKind kind);

struct SubsetVerdict {
  bool holds = true;
  std::uint64_t subsets_checked = 0;
  std::optional<VertexMask> counterexample;
};

// Every vertex subset of size >= threshold contains one of the masks in
// `patterns`. Needs at most 30 vertices.
SubsetVerdict verify_subset_property(const Graph& g, int threshold,
                                     const std::vector<VertexMask>& patterns);

// Claw-or-C6 above 5 vertices for n = 3; claw-or-C8 above 2^(n-1) for n = 4.
SubsetVerdict verify_subset_lemma(int n);

// Largest induced path forest inside `universe` (all vertices by default).
int max_path_forest_size(const Graph& g, VertexMask universe = ~VertexMask{0});
int max_pathforest_subset(int n);

std::vector<Vertex> mask_vertices(VertexMask mask);
VertexMask vertices_mask(const std::vector<Vertex>& vertices);

}  // namespace qmu
