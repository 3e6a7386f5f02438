#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>

#include "qmu/constructions.hpp"
#include "qmu/sampling.hpp"
#include "qmu/structure.hpp"

using namespace qmu;

namespace {

// Induced degrees inside `mask`, computed from the edge list only.
std::vector<int> induced_degrees(const Graph& g, VertexMask mask) {
  std::vector<int> d(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    if ((mask >> e.u & 1) && (mask >> e.v & 1)) {
      ++d[e.u];
      ++d[e.v];
    }
  }
  return d;
}

int induced_edges(const Graph& g, VertexMask mask) {
  auto d = induced_degrees(g, mask);
  return std::accumulate(d.begin(), d.end(), 0) / 2;
}

bool connected_in(const Graph& g, VertexMask mask) {
  VertexMask seen = mask & -mask, frontier = seen;
  while (frontier) {
    VertexMask next = 0;
    for (const Edge& e : g.edges()) {
      if (!((mask >> e.u & 1) && (mask >> e.v & 1))) continue;
      if ((frontier >> e.u & 1) && !(seen >> e.v & 1)) next |= VertexMask{1} << e.v;
      if ((frontier >> e.v & 1) && !(seen >> e.u & 1)) next |= VertexMask{1} << e.u;
    }
    seen |= next;
    frontier = next;
  }
  return seen == mask;
}

bool is_claw(const Graph& g, VertexMask mask) {
  if (std::popcount(mask) != 4 || induced_edges(g, mask) != 3) return false;
  auto d = induced_degrees(g, mask);
  return std::any_of(d.begin(), d.end(), [](int x) { return x == 3; });
}

bool is_cycle(const Graph& g, VertexMask mask, int len) {
  if (std::popcount(mask) != len) return false;
  auto d = induced_degrees(g, mask);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if ((mask >> v & 1) && d[v] != 2) return false;
  }
  return connected_in(g, mask);
}

template <typename P>
std::vector<VertexMask> scan(const Graph& g, int size, P pred) {
  std::vector<VertexMask> out;
  const int n = g.vertex_count();
  for (VertexMask m = 0; m < (VertexMask{1} << n); ++m) {
    if (std::popcount(m) == size && pred(m)) out.push_back(m);
  }
  return out;
}

// Path forest by definition: acyclic with degree at most 2.
bool forest_oracle(const Graph& g, VertexMask mask) {
  auto d = induced_degrees(g, mask);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (d[v] > 2) return false;
  }
  // Acyclic iff every component has one fewer edge than vertices.
  VertexMask left = mask;
  while (left) {
    VertexMask comp = left & -left, grow = comp;
    while (grow) {
      VertexMask next = 0;
      for (const Edge& e : g.edges()) {
        if (!((mask >> e.u & 1) && (mask >> e.v & 1))) continue;
        if ((comp >> e.u & 1) && !(comp >> e.v & 1)) next |= VertexMask{1} << e.v;
        if ((comp >> e.v & 1) && !(comp >> e.u & 1)) next |= VertexMask{1} << e.u;
      }
      comp |= next;
      grow = next;
    }
    if (induced_edges(g, comp) != std::popcount(comp) - 1) return false;
    left &= ~comp;
  }
  return true;
}

}  // namespace

TEST_CASE("pattern enumeration matches brute-force scans") {
  Graph q3 = hypercube(3), q4 = hypercube(4);
  auto claws3 = scan(q3, 4, [&](VertexMask m) { return is_claw(q3, m); });
  CHECK(claws3.size() == 8u);
  CHECK(enumerate_patterns(q3, PatternKind::kClaw) == claws3);
  CHECK(enumerate_patterns(3, PatternKind::kClaw) == claws3);

  auto claws4 = scan(q4, 4, [&](VertexMask m) { return is_claw(q4, m); });
  CHECK(claws4.size() == 16u * 4u);
  CHECK(enumerate_patterns(4, PatternKind::kClaw) == claws4);

  auto c6 = scan(q3, 6, [&](VertexMask m) { return is_cycle(q3, m, 6); });
  CHECK(c6.size() == 4u);
  CHECK(enumerate_patterns(3, PatternKind::kCycle6) == c6);

  auto c8 = scan(q4, 8, [&](VertexMask m) { return is_cycle(q4, m, 8); });
  CHECK_FALSE(c8.empty());
  CHECK(enumerate_patterns(4, PatternKind::kCycle8) == c8);

  CHECK_THROWS(enumerate_patterns(4, PatternKind::kCycle6));
  CHECK_THROWS(enumerate_patterns(3, PatternKind::kCycle8));
  CHECK_THROWS(enumerate_patterns(5, PatternKind::kClaw));
}

TEST_CASE("certificates re-derive the pattern") {
  Graph q3 = hypercube(3);
  for (VertexMask m : enumerate_patterns(q3, PatternKind::kClaw)) {
    auto cert = certify_pattern(q3, m, PatternKind::kClaw);
    REQUIRE(cert.has_value());
    REQUIRE(cert->vertices.size() == 4u);
    for (int i = 1; i < 4; ++i) CHECK(q3.adjacent(cert->vertices[0], cert->vertices[i]));
    CHECK(induces_pattern(q3, m, PatternKind::kClaw));
  }
  for (VertexMask m : enumerate_patterns(q3, PatternKind::kCycle6)) {
    auto cert = certify_pattern(q3, m, PatternKind::kCycle6);
    REQUIRE(cert.has_value());
    const auto& c = cert->vertices;
    for (size_t i = 0; i < c.size(); ++i) CHECK(q3.adjacent(c[i], c[(i + 1) % c.size()]));
  }
  CHECK_FALSE(induces_pattern(q3, 0b1111, PatternKind::kClaw));
  CHECK_FALSE(certify_pattern(q3, 0xFF, PatternKind::kCycle6).has_value());
}

TEST_CASE("path forest predicate") {
  Graph q3 = hypercube(3);
  for (VertexMask m = 1; m < 256; ++m) {
    bool expect = forest_oracle(q3, m);
    CHECK(is_path_forest(q3, m) == expect);
    CHECK(is_path_forest(q3, mask_vertices(m)) == expect);
  }
  CHECK(vertices_mask({0, 3, 5}) == 0b101001);
  CHECK(mask_vertices(0b101001) == std::vector<Vertex>{0, 3, 5});
}

TEST_CASE("interval vertices of bijective colourings form a path forest") {
  Graph c4 = cycle(4);
  std::vector<Color> p{1, 2, 3, 4};
  int n = 0;
  do {
    CHECK(check_lemma3(c4, validate(c4, 4, p)));
    ++n;
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(n == 24);

  Graph q3 = hypercube(3);
  CHECK(check_lemma3(q3, q3_psi()));
  CHECK_THROWS_AS(check_lemma3(hypercube(1), validate(hypercube(1), 1, {1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_lemma3(q3, q3_phi()), std::invalid_argument);

  Rng rng(99);
  for (const Graph& g : {hypercube(3), cycle(5), cycle(6), complete(4), hypercube(4)}) {
    for (int i = 0; i < 300; ++i) {
      EdgeColoring c = random_bijective_coloring(g, rng);
      CHECK(check_lemma3(g, c));
      CHECK(forest_oracle(g, vertices_mask(spectrum_report(g, c).v_int)));
    }
  }
}

TEST_CASE("large subsets contain a claw or a long induced cycle") {
  SubsetVerdict v3 = verify_subset_lemma(3);
  CHECK(v3.holds);
  CHECK(v3.subsets_checked == 37u);  // C(8,6)+C(8,7)+C(8,8)
  SubsetVerdict v4 = verify_subset_lemma(4);
  CHECK(v4.holds);
  CHECK(v4.subsets_checked == 26333u);  // sizes 9..16 of 16
  CHECK_THROWS(verify_subset_lemma(5));

  // Removing the patterns breaks the property.
  Graph q3 = hypercube(3);
  SubsetVerdict none = verify_subset_property(q3, 6, {});
  CHECK_FALSE(none.holds);
  REQUIRE(none.counterexample.has_value());
  CHECK(std::popcount(*none.counterexample) >= 6);
  // Threshold 5 fails: a 5-vertex induced path forest exists.
  auto pats = enumerate_patterns(q3, PatternKind::kClaw);
  auto c6 = enumerate_patterns(q3, PatternKind::kCycle6);
  pats.insert(pats.end(), c6.begin(), c6.end());
  SubsetVerdict five = verify_subset_property(q3, 5, pats);
  CHECK_FALSE(five.holds);
  CHECK(forest_oracle(q3, *five.counterexample));
}

TEST_CASE("largest induced path forest") {
  CHECK(max_pathforest_subset(3) == 5);
  CHECK(max_pathforest_subset(4) == 8);
  Graph q3 = hypercube(3);
  // Oracle over all masks.
  int best = 0;
  for (VertexMask m = 1; m < 256; ++m) {
    if (forest_oracle(q3, m)) best = std::max(best, std::popcount(m));
  }
  CHECK(max_path_forest_size(q3) == best);
  CHECK(max_path_forest_size(q3, vertices_mask(bipartition(q3).part_r)) == 4);
  // Q3 minus one edge is no longer claw-or-C6 packed.
  auto es = q3.edges();
  std::vector<std::pair<int, int>> keep;
  for (size_t i = 1; i < es.size(); ++i) keep.push_back({es[i].u, es[i].v});
  Graph minus = Graph::from_edges(8, keep);
  CHECK(max_path_forest_size(minus) >= best);
}
