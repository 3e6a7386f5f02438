#include "qmu/structure.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qmu {

std::string to_string(PatternKind k) {
  switch (k) {
    case PatternKind::kClaw: return "claw";
    case PatternKind::kCycle6: return "cycle6";
    case PatternKind::kCycle8: return "cycle8";
  }
  return "?";
}

std::vector<Vertex> mask_vertices(VertexMask mask) {
  std::vector<Vertex> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

VertexMask vertices_mask(const std::vector<Vertex>& vertices) {
  VertexMask m = 0;
  for (Vertex x : vertices) {
    if (x < 0 || x >= kMaskVertexCap) {
      throw std::invalid_argument("vertex id exceeds mask width");
    }
    m |= VertexMask{1} << x;
  }
  return m;
}

std::vector<VertexMask> adjacency_masks(const Graph& g) {
  if (g.vertex_count() > kMaskVertexCap) {
    throw std::invalid_argument("graph too large for vertex masks");
  }
  std::vector<VertexMask> adj(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= VertexMask{1} << e.v;
    adj[e.v] |= VertexMask{1} << e.u;
  }
  return adj;
}

namespace {

// Degree <= 2 everywhere and #edges = #vertices - #components.
bool path_forest_masks(const std::vector<VertexMask>& adj, VertexMask s) {
  int vertices = 0, degree_sum = 0;
  for (VertexMask rest = s; rest; rest &= rest - 1) {
    int x = std::countr_zero(rest);
    int d = std::popcount(adj[x] & s);
    if (d > 2) return false;
    degree_sum += d;
    ++vertices;
  }
  int components = 0;
  VertexMask unseen = s;
  while (unseen) {
    ++components;
    VertexMask frontier = unseen & -unseen;
    VertexMask comp = frontier;
    while (frontier) {
      int x = std::countr_zero(frontier);
      frontier &= frontier - 1;
      VertexMask next = adj[x] & s & ~comp;
      comp |= next;
      frontier |= next;
    }
    unseen &= ~comp;
  }
  return degree_sum / 2 == vertices - components;
}

}  // namespace

bool is_path_forest(const Graph& g, VertexMask vertices) {
  if (vertices == 0) throw std::invalid_argument("empty vertex set");
  return path_forest_masks(adjacency_masks(g), vertices);
}

bool is_path_forest(const Graph& g, const std::vector<Vertex>& vertices) {
  InducedStructure s = induced_subgraph(g, vertices);
  const int k = static_cast<int>(s.vertices.size());
  std::vector<int> index(g.vertex_count(), -1);
  for (int i = 0; i < k; ++i) index[s.vertices[i]] = i;
  std::vector<int> degree(k, 0);
  // Union-find detects the first cycle-closing edge.
  std::vector<int> parent(k);
  for (int i = 0; i < k; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : s.edges) {
    int a = index[e.u], b = index[e.v];
    if (++degree[a] > 2 || ++degree[b] > 2) return false;
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

bool check_lemma3(const Graph& g, const EdgeColoring& c) {
  if (g.min_degree() < 2) {
    throw std::invalid_argument("path-forest property needs min degree >= 2");
  }
  if (c.palette() != g.edge_count() || c.edge_count() != g.edge_count()) {
    throw std::invalid_argument("path-forest property needs t = |E|");
  }
  SpectrumReport r = spectrum_report(g, c);
  if (r.v_int.empty()) return true;
  return is_path_forest(g, r.v_int);
}

// ---------------------------------------------------------------------------

namespace {

int cycle_length(PatternKind k) {
  return k == PatternKind::kCycle6 ? 6 : k == PatternKind::kCycle8 ? 8 : 0;
}

void sort_unique(std::vector<VertexMask>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Extends an induced path start -> ... -> last whose vertices exceed start,
// closing it into a chordless cycle of `length` vertices.
void grow_cycle(const std::vector<VertexMask>& adj, int start, int last,
                VertexMask path, int size, int length,
                std::vector<VertexMask>& out) {
  const VertexMask above = ~((VertexMask{2} << start) - 1);
  if (size == length) {
    if (adj[last] >> start & 1) out.push_back(path);
    return;
  }
  VertexMask interior = path & ~(VertexMask{1} << start) & ~(VertexMask{1} << last);
  for (VertexMask cand = adj[last] & above & ~path; cand; cand &= cand - 1) {
    int y = std::countr_zero(cand);
    // y may touch only `last` among interior vertices; touching start is
    // allowed only when y closes the cycle.
    if (adj[y] & interior) continue;
    if (last != start && (adj[y] >> start & 1) && size + 1 != length) {
      continue;
    }
    grow_cycle(adj, start, y, path | VertexMask{1} << y, size + 1, length, out);
  }
}

}  // namespace

std::vector<VertexMask> enumerate_patterns(const Graph& g, PatternKind kind) {
  auto adj = adjacency_masks(g);
  std::vector<VertexMask> out;
  const int n = g.vertex_count();
  if (kind == PatternKind::kClaw) {
    for (int c = 0; c < n; ++c) {
      auto leaves = mask_vertices(adj[c]);
      const int k = static_cast<int>(leaves.size());
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
          for (int d = b + 1; d < k; ++d) {
            int x = leaves[a], y = leaves[b], z = leaves[d];
            if ((adj[x] >> y & 1) || (adj[x] >> z & 1) || (adj[y] >> z & 1)) {
              continue;
            }
            out.push_back(VertexMask{1} << c | VertexMask{1} << x |
                          VertexMask{1} << y | VertexMask{1} << z);
          }
    }
  } else {
    const int length = cycle_length(kind);
    // Start at the minimum vertex of the cycle.
    for (int s = 0; s < n; ++s) {
      grow_cycle(adj, s, s, VertexMask{1} << s, 1, length, out);
    }
  }
  sort_unique(out);
  return out;
}

std::vector<VertexMask> enumerate_patterns(int n, PatternKind kind) {
  bool ok = (n == 3 || n == 4) &&
            (kind == PatternKind::kClaw ||
             (kind == PatternKind::kCycle6 && n == 3) ||
             (kind == PatternKind::kCycle8 && n == 4));
  if (!ok) {
    throw std::invalid_argument("pattern " + to_string(kind) +
                                " not supported for n = " + std::to_string(n));
  }
  return enumerate_patterns(hypercube(n), kind);
}

bool induces_pattern(const Graph& g, VertexMask mask, PatternKind kind) {
  return certify_pattern(g, mask, kind).has_value();
}

std::optional<PatternCertificate> certify_pattern(const Graph& g,
                                                  VertexMask mask,
                                                  PatternKind kind) {
  auto adj = adjacency_masks(g);
  auto verts = mask_vertices(mask);
  const int k = static_cast<int>(verts.size());
  int edges = 0;
  std::vector<int> degree;
  for (Vertex x : verts) {
    degree.push_back(std::popcount(adj[x] & mask));
    edges += degree.back();
  }
  edges /= 2;

  if (kind == PatternKind::kClaw) {
    if (k != 4 || edges != 3) return std::nullopt;
    auto centre = std::find(degree.begin(), degree.end(), 3);
    if (centre == degree.end()) return std::nullopt;
    Vertex c = verts[centre - degree.begin()];
    PatternCertificate cert{kind, {c}};
    for (Vertex x : verts) {
      if (x != c) cert.vertices.push_back(x);
    }
    return cert;
  }

  const int length = cycle_length(kind);
  if (k != length || edges != length) return std::nullopt;
  if (!std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; })) {
    return std::nullopt;
  }
  // 2-regular: connected iff walking from one vertex covers all of them.
  PatternCertificate cert{kind, {verts[0]}};
  Vertex prev = -1, cur = verts[0];
  while (true) {
    VertexMask nb = adj[cur] & mask;
    Vertex next = std::countr_zero(nb);
    if (next == prev) next = std::countr_zero(nb & (nb - 1));
    if (next == verts[0]) break;
    cert.vertices.push_back(next);
    prev = cur;
    cur = next;
    if (static_cast<int>(cert.vertices.size()) > length) return std::nullopt;
  }
  if (static_cast<int>(cert.vertices.size()) != length) return std::nullopt;
  return cert;
}

SubsetVerdict verify_subset_property(const Graph& g, int threshold,
                                     const std::vector<VertexMask>& patterns) {
  const int n = g.vertex_count();
  if (n > 30) throw std::invalid_argument("subset scan limited to 30 vertices");
  SubsetVerdict v;
  const VertexMask end = VertexMask{1} << n;
  for (VertexMask s = 0; s < end; ++s) {
    if (std::popcount(s) < threshold) continue;
    ++v.subsets_checked;
    bool hit = std::any_of(patterns.begin(), patterns.end(),
                           [s](VertexMask p) { return (s & p) == p; });
    if (!hit) {
      v.holds = false;
      v.counterexample = s;
      return v;
    }
  }
  return v;
}

SubsetVerdict verify_subset_lemma(int n) {
  if (n != 3 && n != 4) {
    throw std::invalid_argument("subset lemma checked only for n = 3, 4");
  }
  Graph g = hypercube(n);
  auto patterns = enumerate_patterns(g, PatternKind::kClaw);
  auto cycles = enumerate_patterns(
      g, n == 3 ? PatternKind::kCycle6 : PatternKind::kCycle8);
  patterns.insert(patterns.end(), cycles.begin(), cycles.end());
  int threshold = n == 3 ? 6 : (1 << (n - 1)) + 1;
  return verify_subset_property(g, threshold, patterns);
}

int max_path_forest_size(const Graph& g, VertexMask universe) {
  const int n = g.vertex_count();
  if (n > 30) throw std::invalid_argument("subset scan limited to 30 vertices");
  auto adj = adjacency_masks(g);
  universe &= (VertexMask{1} << n) - 1;
  int best = 0;
  // Enumerate submasks of the universe.
  for (VertexMask s = universe;; s = (s - 1) & universe) {
    int size = std::popcount(s);
    if (size > best && path_forest_masks(adj, s)) best = size;
    if (s == 0) break;
  }
  return best;
}

int max_pathforest_subset(int n) {
  if (n != 3 && n != 4) {
    throw std::invalid_argument("path-forest scan supported for n = 3, 4");
  }
  return max_path_forest_size(hypercube(n));
}

}  // namespace qmu
