#include <doctest.h>

#include <numeric>
#include <set>

#include "qmu/constructions.hpp"
#include "qmu/sampling.hpp"

using namespace qmu;

TEST_CASE("phi: no vertex of Q3 is interval") {
  Graph q3 = hypercube(3);
  EdgeColoring phi = q3_phi();
  CHECK(phi.palette() == 4);
  const std::set<std::vector<Color>> allowed{{1, 2, 4}, {1, 3, 4}};
  for (Vertex v = 0; v < 8; ++v) {
    CHECK(allowed.count(spectrum(q3, phi, v)) == 1);
  }
  CHECK(interval_count(q3, phi) == 0);
  for (Color c = 1; c <= 4; ++c) CHECK_FALSE(phi.color_class(c).empty());
}

TEST_CASE("psi: bijective, harmonic, five interval vertices on a path") {
  Graph q3 = hypercube(3);
  EdgeColoring psi = q3_psi();
  CHECK(psi.palette() == 12);
  CHECK(interval_count(q3, psi) == 5);
  CHECK(is_harmonic(q3, psi));

  // Residue classes mod 3 as explicit matchings.
  for (int r = 0; r < 3; ++r) {
    std::vector<int> cover(8, 0);
    for (Color c = r + 1; c <= 12; c += 3) {
      for (EdgeIndex e : psi.color_class(c)) {
        ++cover[q3.edge(e).u];
        ++cover[q3.edge(e).v];
      }
    }
    for (int k : cover) CHECK(k <= 1);
  }

  auto v_int = spectrum_report(q3, psi).v_int;
  auto s = induced_subgraph(q3, v_int);
  std::vector<Edge> expect{{1, 3}, {2, 3}, {2, 6}, {4, 6}};
  CHECK(s.edges == expect);
}

TEST_CASE("zero-interval lift") {
  Graph g = hypercube(3);
  EdgeColoring c = q3_phi();
  for (int n = 4; n <= 6; ++n) {
    c = lift_zero(g, c);
    g = cartesian_product_k2(g);
    CHECK(g == hypercube(n));
    CHECK(c.palette() == n + 1);
    CHECK(spectrum_report(g, c).f == 0);
    // Rungs carry the new top colour.
    for (Vertex v = 0; v < g.vertex_count() / 2; ++v) {
      CHECK(c[*g.edge_between(v, v + g.vertex_count() / 2)] == n + 1);
    }
  }
  Graph q3 = hypercube(3);
  CHECK_THROWS_AS(lift_zero(q3, q3_psi()), std::invalid_argument);
  CHECK_THROWS_AS(lift_zero(q3, *delta_coloring(q3)), std::invalid_argument);
  // Palette right but f != 0.
  EdgeColoring shifted = interval_on_part(q3, bipartition(q3), 4);
  REQUIRE(interval_count(q3, shifted) > 0);
  CHECK_THROWS_AS(lift_zero(q3, shifted), std::invalid_argument);
  CHECK_THROWS_AS(lift_zero(cycle(4), *delta_coloring(cycle(4))),
                  std::invalid_argument);
}

TEST_CASE("harmonic predicate") {
  Graph q3 = hypercube(3);
  for (int n = 1; n <= 5; ++n) {
    Graph g = hypercube(n);
    CHECK(is_harmonic(g, *delta_coloring(g)));
  }
  // Edges (0,1) and (0,2) share vertex 0 and get colours 1 and 4.
  std::vector<Color> colors{1, 4, 2, 3, 5, 6, 7, 8, 9, 10, 11, 12};
  EdgeColoring c = validate(q3, 12, colors);
  CHECK_FALSE(is_harmonic(q3, c));
  CHECK_THROWS_AS(is_harmonic(complete(3), validate(complete(3), 3, {1, 2, 3})),
                  GraphError);
}

TEST_CASE("shift step and sequence") {
  Graph q3 = hypercube(3);
  EdgeColoring psi = q3_psi();
  EdgeColoring next = shift_step(q3, psi);
  CHECK(next.palette() == 11);
  const auto& [x, y] = kQ3Labels;
  EdgeIndex top = *q3.edge_between(y[1], y[2]);
  for (EdgeIndex e = 0; e < 12; ++e) {
    CHECK(next[e] == (e == top ? 9 : psi[e]));
  }

  ShiftSequence seq = shift_sequence(q3, psi);
  REQUIRE(seq.steps.size() == 10u);
  CHECK(seq.base() == psi);
  for (size_t j = 0; j < seq.steps.size(); ++j) {
    CHECK(seq.steps[j].palette() == 12 - static_cast<int>(j));
    CHECK(validate(q3, seq.steps[j].palette(), seq.steps[j].colors()) ==
          seq.steps[j]);
    CHECK(is_harmonic(q3, seq.steps[j]));
  }
  CHECK(interval_count(q3, seq.steps.back()) == 8);

  EdgeColoring delta = *delta_coloring(q3);
  CHECK_THROWS_AS(shift_step(q3, delta), std::invalid_argument);
  CHECK(shift_sequence(q3, delta).steps.size() == 1u);
  CHECK_THROWS_AS(shift_step(q3, validate(q3, 12, {1, 4, 2, 3, 5, 6, 7, 8, 9,
                                                    10, 11, 12})),
                  std::invalid_argument);
}

TEST_CASE("interval preservation along shifts") {
  Graph q3 = hypercube(3);
  ShiftSequence seq = shift_sequence(q3, q3_psi());
  const auto& [x, y] = kQ3Labels;
  CHECK(preserves_interval_at(q3, seq, y[0]));
  CHECK(preserves_interval_at(q3, seq, x[3]));
  CHECK(spectrum(q3, seq.base(), x[3]) == std::vector<Color>{5, 6, 7});
  CHECK_THROWS_AS(preserves_interval_at(q3, seq, x[0]), std::invalid_argument);
}

TEST_CASE("block harmonic colouring") {
  Graph q1 = hypercube(1);
  CHECK(block_harmonic(q1, bipartition(q1)).colors() == std::vector<Color>{1});

  for (int n = 2; n <= 5; ++n) {
    Graph g = hypercube(n);
    Bipartition b = bipartition(g);
    EdgeColoring c = block_harmonic(g, b);
    CHECK(c.palette() == g.edge_count());
    std::vector<Color> sorted = c.colors();
    std::sort(sorted.begin(), sorted.end());
    std::vector<Color> all(g.edge_count());
    std::iota(all.begin(), all.end(), 1);
    CHECK(sorted == all);
    CHECK(is_harmonic(g, c));
    for (size_t i = 0; i < b.part_r.size(); ++i) {
      std::vector<Color> expect(n);
      std::iota(expect.begin(), expect.end(), static_cast<int>(i) * n + 1);
      CHECK(spectrum(g, c, b.part_r[i]) == expect);
    }
    // Residue class j is the j-th matching.
    auto ms = matching_decomposition(g, b);
    for (int j = 0; j < n; ++j) {
      Matching cls;
      for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        if ((c[e] - 1) % n == j) cls.push_back(e);
      }
      CHECK(cls == ms[j]);
    }
  }
  CHECK_THROWS(block_harmonic(path(3), bipartition(path(3))));
  Graph q3 = hypercube(3);
  Bipartition b = bipartition(q3);
  CHECK_THROWS_AS(block_harmonic(q3, b, BlockOrder{{0, 3, 5}, {}}),
                  std::invalid_argument);
}

TEST_CASE("interval on one part for every palette") {
  Graph q3 = hypercube(3);
  Bipartition b3 = bipartition(q3);
  CHECK(interval_count(q3, interval_on_part(q3, b3, 3)) == 8);
  EdgeColoring top = interval_on_part(q3, b3, 12);
  CHECK(top == block_harmonic(q3, b3));
  CHECK(interval_count(q3, top) >= 4);
  Graph q4 = hypercube(4);
  CHECK(interval_count(q4, interval_on_part(q4, bipartition(q4), 17)) >= 8);
  CHECK_THROWS_AS(interval_on_part(q3, b3, 2), std::invalid_argument);
  CHECK_THROWS_AS(interval_on_part(q3, b3, 13), std::invalid_argument);

  for (int n = 1; n <= 5; ++n) {
    Graph g = hypercube(n);
    Bipartition b = bipartition(g);
    for (int t = n; t <= g.edge_count(); ++t) {
      EdgeColoring c = interval_on_part(g, b, t);
      CHECK(c.palette() == t);
      for (Vertex v : b.part_r) CHECK(is_interval_at(g, c, v));
    }
  }
}

TEST_CASE("shifts keep harmonicity and max-degree intervals (random orders)") {
  Rng rng(2024);
  for (int n : {3, 4}) {
    Graph g = hypercube(n);
    Bipartition b = bipartition(g);
    for (int s = 0; s < 50; ++s) {
      EdgeColoring c = block_harmonic(g, b, random_block_order(g, b, rng));
      while (c.palette() > n) {
        EdgeColoring next = shift_step(g, c);
        CHECK(is_harmonic(g, next));
        for (Vertex z = 0; z < g.vertex_count(); ++z) {
          if (is_interval_at(g, c, z)) CHECK(is_interval_at(g, next, z));
        }
        c = next;
      }
    }
  }
}

TEST_CASE("witness certificates") {
  Graph q3 = hypercube(3);
  WitnessCertificate psi{q3, q3_psi(), claim::FEquals{5}};
  auto j = to_json(psi);
  CHECK(j["claim"]["kind"] == "f_equals");
  CHECK(nlohmann::json::parse(j.dump()) == j);
  WitnessVerdict v = check_witness(j);
  CHECK(v.ok);
  CHECK(v.f == 5);

  CHECK(check_witness(WitnessCertificate{q3, q3_psi(), claim::Harmonic{}}).ok);
  CHECK(check_witness(WitnessCertificate{q3, q3_phi(), claim::Mu11Zero{4}}).ok);
  CHECK_FALSE(
      check_witness(WitnessCertificate{q3, q3_phi(), claim::Mu11Zero{5}}).ok);
  CHECK_FALSE(
      check_witness(WitnessCertificate{q3, q3_phi(), claim::Harmonic{}}).ok);
  Bipartition b = bipartition(q3);
  CHECK(check_witness(to_json(WitnessCertificate{
                          q3, interval_on_part(q3, b, 7),
                          claim::IntervalOn{b.part_r}}))
            .ok);
  CHECK_FALSE(check_witness(WitnessCertificate{q3, q3_phi(),
                                               claim::IntervalOn{b.part_r}})
                  .ok);
  Graph q4 = hypercube(4);
  CHECK(check_witness(WitnessCertificate{q4, interval_on_part(q4, bipartition(q4), 17),
                                         claim::Mu2LowerBound{17, 8}})
            .ok);

  auto wrong_f = j;
  wrong_f["claim"]["value"] = 6;
  CHECK_FALSE(check_witness(wrong_f).ok);

  auto clash = j;
  clash["coloring"]["colors"][0] = clash["coloring"]["colors"][1];
  WitnessVerdict bad = check_witness(clash);
  CHECK_FALSE(bad.ok);
  CHECK(bad.f == -1);

  auto shuffled = j;
  std::swap(shuffled["graph"]["edges"][0], shuffled["graph"]["edges"][1]);
  CHECK_FALSE(check_witness(shuffled).ok);

  CHECK_FALSE(check_witness(nlohmann::json::parse(R"({"graph":1})")).ok);
  auto unknown = j;
  unknown["claim"]["kind"] = "nonsense";
  CHECK_FALSE(check_witness(unknown).ok);
}
