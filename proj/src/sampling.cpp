#include "qmu/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qmu {

EdgeColoring random_bijective_coloring(const Graph& g, Rng& rng) {
  std::vector<Color> colors(g.edge_count());
  std::iota(colors.begin(), colors.end(), 1);
  std::shuffle(colors.begin(), colors.end(), rng);
  return validate(g, g.edge_count(), std::move(colors));
}

EdgeColoring random_proper_coloring(const Graph& g, Rng& rng) {
  const int m = g.edge_count();
  const int delta = g.max_degree();
  std::vector<EdgeIndex> order(m);
  std::iota(order.begin(), order.end(), 0);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::uniform_int_distribution<int> cap_dist(delta, m);
    const int cap = cap_dist(rng);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Color> colors(m, 0);
    bool stuck = false;
    for (EdgeIndex e : order) {
      const Edge& ed = g.edge(e);
      std::vector<Color> free;
      for (Color c = 1; c <= cap; ++c) {
        bool clash = false;
        for (Vertex x : {ed.u, ed.v}) {
          for (const Incidence& inc : g.incident(x)) {
            if (colors[inc.edge] == c) clash = true;
          }
        }
        if (!clash) free.push_back(c);
      }
      if (free.empty()) {
        stuck = true;
        break;
      }
      std::uniform_int_distribution<size_t> pick(0, free.size() - 1);
      colors[e] = free[pick(rng)];
    }
    if (stuck) continue;
    std::vector<Color> used(colors);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    for (Color& c : colors) {
      c = static_cast<Color>(std::lower_bound(used.begin(), used.end(), c) -
                             used.begin()) + 1;
    }
    return validate(g, static_cast<int>(used.size()), std::move(colors));
  }
  throw std::runtime_error("random greedy colouring kept getting stuck");
}

BlockOrder random_block_order(const Graph& g, const Bipartition& b, Rng& rng) {
  BlockOrder order;
  order.part_order = b.part_r;
  std::shuffle(order.part_order.begin(), order.part_order.end(), rng);
  order.matching_order.resize(g.max_degree());
  std::iota(order.matching_order.begin(), order.matching_order.end(), 0);
  std::shuffle(order.matching_order.begin(), order.matching_order.end(), rng);
  return order;
}

}  // namespace qmu
