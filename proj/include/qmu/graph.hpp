#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qmu {

using Vertex = int;
using EdgeIndex = int;

struct Edge {
  Vertex u;  // u < v
  Vertex v;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeIndex edge;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Simple, connected, undirected graph with at least one edge. Edges are kept
// sorted by (min endpoint, max endpoint) so edge indices are reproducible.
class Graph {
 public:
  // Throws GraphError on loops, duplicates, out-of-range endpoints,
  // disconnection or an empty edge set. Endpoint order and edge order in the
  // input are irrelevant.
  static Graph from_edges(int vertex_count,
                          std::vector<std::pair<Vertex, Vertex>> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }

  std::span<const Incidence> incident(Vertex x) const {
    return adjacency_.at(x);
  }
  int degree(Vertex x) const {
    return static_cast<int>(adjacency_.at(x).size());
  }
  int max_degree() const { return max_degree_; }
  int min_degree() const { return min_degree_; }
  bool is_regular() const { return max_degree_ == min_degree_; }

  std::optional<EdgeIndex> edge_between(Vertex a, Vertex b) const;
  bool adjacent(Vertex a, Vertex b) const {
    return edge_between(a, b).has_value();
  }

  bool operator==(const Graph& other) const {
    return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
  }

 private:
  Graph() = default;

  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  int max_degree_ = 0;
  int min_degree_ = 0;
};

struct Bipartition {
  std::vector<Vertex> part_r;  // contains vertex 0
  std::vector<Vertex> part_l;
};

// Edges of a graph restricted to a vertex subset. Not a Graph: it may be
// disconnected or edgeless.
struct InducedStructure {
  std::vector<Vertex> vertices;  // sorted, unique
  std::vector<Edge> edges;       // canonical order
};

// Generators. Vertex ids are canonical; see each function.
Graph hypercube(int n);  // vertices 0..2^n-1, u~v iff u^v is a power of two
Graph path(int n);       // 0-1-...-(n-1)
Graph cycle(int n);      // path plus (0, n-1)
Graph complete(int n);

inline constexpr int kMaxHypercubeDimension = 20;

// Copy 0 keeps ids, copy 1 is shifted by |V(g)|; rungs join i and i+|V(g)|.
Graph cartesian_product_k2(const Graph& g);

InducedStructure induced_subgraph(const Graph& g,
                                  std::span<const Vertex> vertices);

// BFS 2-colouring from vertex 0. Throws NotBipartiteError carrying an odd
// closed walk when g has an odd cycle.
Bipartition bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

class NotBipartiteError : public GraphError {
 public:
  explicit NotBipartiteError(std::vector<Vertex> walk);
  const std::vector<Vertex>& odd_walk() const { return walk_; }

 private:
  std::vector<Vertex> walk_;
};

using Matching = std::vector<EdgeIndex>;  // sorted edge indices

// Splits a regular bipartite graph into Delta perfect matchings by repeated
// augmenting-path extraction. Deterministic for a given graph.
std::vector<Matching> matching_decomposition(const Graph& g,
                                             const Bipartition& b);

// Returns a perfect matching of the spanning subgraph formed by `allowed`
// edges (indexed like g.edges()), or nullopt when none exists.
std::optional<Matching> perfect_matching(const Graph& g,
                                         const Bipartition& b,
                                         const std::vector<bool>& allowed);

nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace qmu
