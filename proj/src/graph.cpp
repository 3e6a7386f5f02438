#include "qmu/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace qmu {

Graph Graph::from_edges(int vertex_count,
                        std::vector<std::pair<Vertex, Vertex>> edges) {
  if (vertex_count < 1) throw GraphError("graph needs at least one vertex");
  if (edges.empty()) throw GraphError("graph needs at least one edge");

  Graph g;
  g.vertex_count_ = vertex_count;
  g.edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count) {
      std::ostringstream msg;
      msg << "edge (" << a << "," << b << ") has an endpoint outside [0,"
          << vertex_count - 1 << "]";
      throw GraphError(msg.str());
    }
    if (a == b) {
      throw GraphError("loop at vertex " + std::to_string(a));
    }
    g.edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    std::ostringstream msg;
    msg << "duplicate edge (" << dup->u << "," << dup->v << ")";
    throw GraphError(msg.str());
  }

  g.adjacency_.assign(vertex_count, {});
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edges_[e];
    g.adjacency_[ed.u].push_back({ed.v, e});
    g.adjacency_[ed.v].push_back({ed.u, e});
  }

  std::vector<bool> seen(vertex_count, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.adjacency_[x]) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = true;
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
  }
  if (reached != vertex_count) {
    throw GraphError("graph is disconnected (" + std::to_string(reached) +
                     " of " + std::to_string(vertex_count) +
                     " vertices reachable from 0)");
  }

  g.max_degree_ = 0;
  g.min_degree_ = vertex_count;
  for (const auto& adj : g.adjacency_) {
    g.max_degree_ = std::max<int>(g.max_degree_, adj.size());
    g.min_degree_ = std::min<int>(g.min_degree_, adj.size());
  }
  return g;
}

std::optional<EdgeIndex> Graph::edge_between(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= vertex_count_ || b >= vertex_count_) {
    return std::nullopt;
  }
  const auto& adj = adjacency_[degree(a) <= degree(b) ? a : b];
  Vertex target = degree(a) <= degree(b) ? b : a;
  for (const Incidence& inc : adj) {
    if (inc.neighbor == target) return inc.edge;
  }
  return std::nullopt;
}

Graph hypercube(int n) {
  if (n < 1 || n > kMaxHypercubeDimension) {
    throw GraphError("hypercube dimension must be in [1," +
                     std::to_string(kMaxHypercubeDimension) + "], got " +
                     std::to_string(n));
  }
  const int count = 1 << n;
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<size_t>(n) << (n - 1));
  for (Vertex u = 0; u < count; ++u) {
    for (int bit = 0; bit < n; ++bit) {
      Vertex v = u ^ (1 << bit);
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(count, std::move(edges));
}

Graph path(int n) {
  if (n < 2) throw GraphError("path needs at least 2 vertices");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, std::move(edges));
}

Graph cycle(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return Graph::from_edges(n, std::move(edges));
}

Graph complete(int n) {
  if (n < 2) throw GraphError("complete graph needs at least 2 vertices");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph cartesian_product_k2(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(2 * g.edge_count() + n);
  for (const Edge& e : g.edges()) {
    edges.emplace_back(e.u, e.v);
    edges.emplace_back(e.u + n, e.v + n);
  }
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, i + n);
  return Graph::from_edges(2 * n, std::move(edges));
}

InducedStructure induced_subgraph(const Graph& g,
                                  std::span<const Vertex> vertices) {
  if (vertices.empty()) {
    throw GraphError("induced subgraph of an empty vertex set");
  }
  std::vector<bool> in(g.vertex_count(), false);
  InducedStructure out;
  for (Vertex x : vertices) {
    if (x < 0 || x >= g.vertex_count()) {
      throw GraphError("vertex " + std::to_string(x) + " out of range");
    }
    in[x] = true;
  }
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (in[x]) out.vertices.push_back(x);
  }
  for (const Edge& e : g.edges()) {
    if (in[e.u] && in[e.v]) out.edges.push_back(e);
  }
  return out;
}

namespace {

std::string describe_walk(const std::vector<Vertex>& walk) {
  std::ostringstream msg;
  msg << "graph is not bipartite; odd closed walk:";
  for (Vertex x : walk) msg << ' ' << x;
  return msg.str();
}

}  // namespace

NotBipartiteError::NotBipartiteError(std::vector<Vertex> walk)
    : GraphError(describe_walk(walk)), walk_(std::move(walk)) {}

Bipartition bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  std::vector<Vertex> parent(n, -1);
  std::queue<Vertex> queue;
  side[0] = 0;
  queue.push(0);
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop();
    for (const Incidence& inc : g.incident(x)) {
      Vertex y = inc.neighbor;
      if (side[y] < 0) {
        side[y] = 1 - side[x];
        parent[y] = x;
        queue.push(y);
      } else if (side[y] == side[x]) {
        // Walk x -> root -> y -> x has odd length.
        std::vector<Vertex> up_x, up_y;
        for (Vertex a = x; a >= 0; a = parent[a]) up_x.push_back(a);
        for (Vertex a = y; a >= 0; a = parent[a]) up_y.push_back(a);
        std::vector<Vertex> walk = up_x;
        walk.insert(walk.end(), up_y.rbegin() + 1, up_y.rend());
        walk.push_back(x);
        throw NotBipartiteError(std::move(walk));
      }
    }
  }
  Bipartition b;
  for (Vertex x = 0; x < n; ++x) {
    (side[x] == 0 ? b.part_r : b.part_l).push_back(x);
  }
  return b;
}

bool is_bipartite(const Graph& g) {
  try {
    bipartition(g);
    return true;
  } catch (const NotBipartiteError&) {
    return false;
  }
}

namespace {

// Kuhn's augmenting path from left vertex x.
bool augment(const Graph& g, Vertex x, const std::vector<bool>& allowed,
             std::vector<EdgeIndex>& match_edge_of_right,
             std::vector<EdgeIndex>& match_edge_of_left,
             std::vector<int>& visit_stamp, int stamp) {
  for (const Incidence& inc : g.incident(x)) {
    if (!allowed[inc.edge]) continue;
    Vertex y = inc.neighbor;
    if (visit_stamp[y] == stamp) continue;
    visit_stamp[y] = stamp;
    EdgeIndex current = match_edge_of_right[y];
    if (current < 0 ||
        augment(g, g.edge(current).other(y), allowed, match_edge_of_right,
                match_edge_of_left, visit_stamp, stamp)) {
      match_edge_of_right[y] = inc.edge;
      match_edge_of_left[x] = inc.edge;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<Matching> perfect_matching(const Graph& g,
                                         const Bipartition& b,
                                         const std::vector<bool>& allowed) {
  if (b.part_r.size() != b.part_l.size()) return std::nullopt;
  const int n = g.vertex_count();
  std::vector<EdgeIndex> right(n, -1), left(n, -1);
  std::vector<int> stamp(n, -1);
  int round = 0;
  for (Vertex x : b.part_r) {
    if (!augment(g, x, allowed, right, left, stamp, round++)) {
      return std::nullopt;
    }
  }
  Matching m;
  for (Vertex x : b.part_r) m.push_back(left[x]);
  std::sort(m.begin(), m.end());
  return m;
}

std::vector<Matching> matching_decomposition(const Graph& g,
                                             const Bipartition& b) {
  if (!g.is_regular()) {
    throw GraphError("matching decomposition needs a regular graph");
  }
  std::vector<int> side(g.vertex_count(), -1);
  for (Vertex x : b.part_r) side.at(x) = 0;
  for (Vertex x : b.part_l) side.at(x) = 1;
  for (const Edge& e : g.edges()) {
    if (side[e.u] < 0 || side[e.v] < 0 || side[e.u] == side[e.v]) {
      throw GraphError("bipartition does not separate edge (" +
                       std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
  }

  std::vector<bool> allowed(g.edge_count(), true);
  std::vector<Matching> out;
  for (int k = 0; k < g.max_degree(); ++k) {
    auto m = perfect_matching(g, b, allowed);
    // A regular bipartite graph always has one (Hall's condition).
    if (!m) throw GraphError("internal: no perfect matching in regular part");
    for (EdgeIndex e : *m) allowed[e] = false;
    out.push_back(std::move(*m));
  }
  return out;
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    throw GraphError("graph JSON needs \"vertices\" and \"edges\"");
  }
  if (!j["vertices"].is_number_integer() || !j["edges"].is_array()) {
    throw GraphError("graph JSON has malformed fields");
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw GraphError("graph JSON edge must be [u, v]");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph::from_edges(j["vertices"].get<int>(), std::move(edges));
}

}  // namespace qmu
