#pragma once

#include <random>

#include "qmu/coloring.hpp"
#include "qmu/constructions.hpp"
#include "qmu/graph.hpp"

namespace qmu {

using Rng = std::mt19937_64;

// Uniformly random bijection E -> [1,|E|].
EdgeColoring random_bijective_coloring(const Graph& g, Rng& rng);

// Random greedy proper colouring, relabelled order-preservingly onto the
// colours actually used, so t lands anywhere in [chi', |E|].
EdgeColoring random_proper_coloring(const Graph& g, Rng& rng);

// Random orders of part_r and of the matchings, for block_harmonic.
BlockOrder random_block_order(const Graph& g, const Bipartition& b, Rng& rng);

}  // namespace qmu
