#include "qmu/constructions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qmu {

namespace {

struct LabelledEdge {
  Vertex a;
  Vertex b;
  Color color;
};

EdgeColoring from_labelled(const Graph& g, int t,
                           const std::vector<LabelledEdge>& entries) {
  std::vector<Color> colors(g.edge_count(), 0);
  for (const auto& [a, b, col] : entries) {
    auto e = g.edge_between(a, b);
    if (!e) throw std::logic_error("labelled edge missing from graph");
    colors[*e] = col;
  }
  return validate(g, t, std::move(colors));
}

}  // namespace

EdgeColoring q3_phi() {
  const auto& [x, y] = kQ3Labels;
  // x[0] is x1, etc.
  return from_labelled(hypercube(3), 4,
                       {{x[0], x[1], 1}, {x[2], x[3], 1},
                        {y[0], y[1], 1}, {y[2], y[3], 1},
                        {x[0], x[3], 2}, {x[1], x[2], 2},
                        {y[0], y[3], 3}, {y[1], y[2], 3},
                        {x[0], y[0], 4}, {x[1], y[1], 4},
                        {x[2], y[2], 4}, {x[3], y[3], 4}});
}

EdgeColoring q3_psi() {
  const auto& [x, y] = kQ3Labels;
  return from_labelled(hypercube(3), 12,
                       {{x[0], y[0], 1},  {y[0], y[1], 2},
                        {y[0], y[3], 3},  {y[2], y[3], 4},
                        {x[3], y[3], 5},  {x[0], x[3], 6},
                        {x[2], x[3], 7},  {x[2], y[2], 8},
                        {x[1], x[2], 9},  {x[1], y[1], 10},
                        {x[0], x[1], 11}, {y[1], y[2], 12}});
}

EdgeColoring lift_zero(const Graph& g, const EdgeColoring& c) {
  if (!g.is_regular()) throw std::invalid_argument("lift needs a regular graph");
  const int r = g.max_degree();
  if (r < 3) throw std::invalid_argument("lift needs degree at least 3");
  if (c.edge_count() != g.edge_count()) {
    throw std::invalid_argument("colouring does not match graph");
  }
  if (c.palette() != r + 1) {
    throw std::invalid_argument("lift needs palette r+1 = " +
                                std::to_string(r + 1) + ", got " +
                                std::to_string(c.palette()));
  }
  if (int f = interval_count(g, c); f != 0) {
    throw std::invalid_argument("lift needs f = 0, got " + std::to_string(f));
  }

  Graph lifted = cartesian_product_k2(g);
  const int n = g.vertex_count();
  std::vector<Color> colors(lifted.edge_count(), 0);
  for (EdgeIndex e = 0; e < lifted.edge_count(); ++e) {
    const Edge& ed = lifted.edge(e);
    if (ed.v - ed.u == n && ed.u < n) {
      colors[e] = r + 2;  // rung
    } else {
      colors[e] = c[*g.edge_between(ed.u % n, ed.v % n)];
    }
  }
  return validate(lifted, r + 2, std::move(colors));
}

namespace {

void require_class_one(const Graph& g) {
  // Only bipartite graphs are certified cheaply; others fall back to search.
  if (chromatic_index(g) != g.max_degree()) {
    throw GraphError("harmonic colourings need chi'(G) = Delta(G)");
  }
}

bool residues_distinct(const Graph& g, const EdgeColoring& c) {
  const int delta = g.max_degree();
  std::vector<int> seen(delta, -1);
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    for (const Incidence& inc : g.incident(x)) {
      int r = (c[inc.edge] - 1) % delta;
      if (seen[r] == x) return false;
      seen[r] = x;
    }
  }
  return true;
}

}  // namespace

bool is_harmonic(const Graph& g, const EdgeColoring& c) {
  require_class_one(g);
  if (c.edge_count() != g.edge_count()) {
    throw std::invalid_argument("colouring does not match graph");
  }
  return residues_distinct(g, c);
}

EdgeColoring shift_step(const Graph& g, const EdgeColoring& c) {
  const int delta = g.max_degree();
  const int t = c.palette();
  if (t <= delta) {
    throw std::invalid_argument("shift needs a palette above Delta = " +
                                std::to_string(delta));
  }
  if (!is_harmonic(g, c)) {
    throw std::invalid_argument("shift needs a harmonic colouring");
  }
  std::vector<Color> colors(c.colors());
  for (Color& x : colors) {
    if (x == t) x -= delta;
  }
  return validate(g, t - 1, std::move(colors));
}

ShiftSequence shift_sequence(const Graph& g, const EdgeColoring& c) {
  if (!is_harmonic(g, c)) {
    throw std::invalid_argument("shift sequence needs a harmonic colouring");
  }
  ShiftSequence seq;
  seq.steps.push_back(c);
  while (seq.steps.back().palette() > g.max_degree()) {
    seq.steps.push_back(shift_step(g, seq.steps.back()));
  }
  return seq;
}

bool preserves_interval_at(const Graph& g, const ShiftSequence& seq,
                           Vertex z0) {
  if (z0 < 0 || z0 >= g.vertex_count()) {
    throw std::invalid_argument("vertex out of range");
  }
  if (g.degree(z0) != g.max_degree()) {
    throw std::invalid_argument("vertex " + std::to_string(z0) +
                                " does not have maximum degree");
  }
  if (!is_interval_at(g, seq.base(), z0)) {
    throw std::invalid_argument("base colouring is not interval at vertex " +
                                std::to_string(z0));
  }
  return std::all_of(seq.steps.begin(), seq.steps.end(),
                     [&](const EdgeColoring& c) {
                       return is_interval_at(g, c, z0);
                     });
}

EdgeColoring block_harmonic(const Graph& g, const Bipartition& b,
                            const BlockOrder& order) {
  if (!g.is_regular()) {
    throw GraphError("block harmonic colouring needs a regular graph");
  }
  auto matchings = matching_decomposition(g, b);
  const int r = g.max_degree();

  std::vector<Vertex> parts = order.part_order.empty() ? b.part_r
                                                       : order.part_order;
  std::vector<int> mo = order.matching_order;
  if (mo.empty()) {
    for (int j = 0; j < r; ++j) mo.push_back(j);
  }
  {
    auto sorted_parts = parts;
    std::sort(sorted_parts.begin(), sorted_parts.end());
    auto sorted_r = b.part_r;
    std::sort(sorted_r.begin(), sorted_r.end());
    auto sorted_mo = mo;
    std::sort(sorted_mo.begin(), sorted_mo.end());
    bool mo_ok = static_cast<int>(sorted_mo.size()) == r;
    for (int j = 0; mo_ok && j < r; ++j) mo_ok = sorted_mo[j] == j;
    if (sorted_parts != sorted_r || !mo_ok) {
      throw std::invalid_argument("block order is not a permutation");
    }
  }

  std::vector<int> rank(g.vertex_count(), -1);
  for (size_t i = 0; i < parts.size(); ++i) rank[parts[i]] = static_cast<int>(i);

  std::vector<Color> colors(g.edge_count(), 0);
  for (int j = 0; j < r; ++j) {
    for (EdgeIndex e : matchings[mo[j]]) {
      const Edge& ed = g.edge(e);
      int i = rank[ed.u] >= 0 ? rank[ed.u] : rank[ed.v];
      colors[e] = i * r + j + 1;
    }
  }
  return validate(g, g.edge_count(), std::move(colors));
}

EdgeColoring interval_on_part(const Graph& g, const Bipartition& b, int t,
                              const BlockOrder& order) {
  const int delta = g.max_degree();
  if (t < delta || t > g.edge_count()) {
    throw std::invalid_argument("palette " + std::to_string(t) +
                                " outside [" + std::to_string(delta) + "," +
                                std::to_string(g.edge_count()) + "]");
  }
  EdgeColoring c = block_harmonic(g, b, order);
  while (c.palette() > t) c = shift_step(g, c);
  return c;
}

// ---------------------------------------------------------------------------

nlohmann::json to_json(const Claim& c) {
  return std::visit(
      [](const auto& v) -> nlohmann::json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, claim::FEquals>) {
          return {{"kind", "f_equals"}, {"value", v.value}};
        } else if constexpr (std::is_same_v<T, claim::IntervalOn>) {
          return {{"kind", "interval_on"}, {"vertices", v.vertices}};
        } else if constexpr (std::is_same_v<T, claim::Harmonic>) {
          return {{"kind", "harmonic"}};
        } else if constexpr (std::is_same_v<T, claim::Mu2LowerBound>) {
          return {{"kind", "mu2_lower_bound"}, {"t", v.t}, {"value", v.value}};
        } else {
          return {{"kind", "mu11_zero"}, {"t", v.t}};
        }
      },
      c);
}

nlohmann::json to_json(const WitnessCertificate& w) {
  return {{"graph", to_json(w.graph)},
          {"coloring", to_json(w.coloring)},
          {"claim", to_json(w.claim)}};
}

namespace {

Claim claim_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "f_equals") return claim::FEquals{j.at("value").get<int>()};
  if (kind == "interval_on") {
    return claim::IntervalOn{j.at("vertices").get<std::vector<Vertex>>()};
  }
  if (kind == "harmonic") return claim::Harmonic{};
  if (kind == "mu2_lower_bound") {
    return claim::Mu2LowerBound{j.at("t").get<int>(), j.at("value").get<int>()};
  }
  if (kind == "mu11_zero") return claim::Mu11Zero{j.at("t").get<int>()};
  throw std::invalid_argument("unknown claim kind '" + kind + "'");
}

}  // namespace

WitnessVerdict check_witness(const WitnessCertificate& w) {
  WitnessVerdict out;
  const Graph& g = w.graph;
  std::string why;
  auto c = try_validate(g, w.coloring.palette(), w.coloring.colors(), &why);
  if (!c) {
    out.detail = "colouring invalid: " + why;
    return out;
  }
  out.f = interval_count(g, *c);
  std::ostringstream msg;
  msg << "t=" << c->palette() << " f=" << out.f;

  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, claim::FEquals>) {
          out.ok = out.f == v.value;
          msg << (out.ok ? "; f equals " : "; f differs from claimed ")
              << v.value;
        } else if constexpr (std::is_same_v<T, claim::IntervalOn>) {
          out.ok = !v.vertices.empty();
          for (Vertex x : v.vertices) {
            if (x < 0 || x >= g.vertex_count() || !is_interval_at(g, *c, x)) {
              out.ok = false;
              msg << "; not interval at " << x;
              break;
            }
          }
          if (out.ok) msg << "; interval on " << v.vertices.size() << " vertices";
        } else if constexpr (std::is_same_v<T, claim::Harmonic>) {
          try {
            out.ok = is_harmonic(g, *c);
            msg << (out.ok ? "; harmonic" : "; not harmonic");
          } catch (const std::exception& e) {
            msg << "; " << e.what();
          }
        } else if constexpr (std::is_same_v<T, claim::Mu2LowerBound>) {
          out.ok = c->palette() == v.t && out.f >= v.value;
          msg << "; mu2(G," << v.t << ") >= " << v.value
              << (out.ok ? " witnessed" : " not witnessed");
        } else {
          out.ok = c->palette() == v.t && out.f == 0;
          msg << "; mu1(G," << v.t << ") = 0"
              << (out.ok ? " witnessed" : " not witnessed");
        }
      },
      w.claim);
  out.detail = msg.str();
  return out;
}

WitnessVerdict check_witness(const nlohmann::json& j) {
  WitnessVerdict out;
  try {
    if (!j.is_object() || !j.contains("graph") || !j.contains("coloring") ||
        !j.contains("claim")) {
      out.detail = "witness needs \"graph\", \"coloring\" and \"claim\"";
      return out;
    }
    Graph g = graph_from_json(j["graph"]);
    // Colour indices refer to the listed edge order, so it must already be
    // canonical.
    if (to_json(g)["edges"] != j["graph"]["edges"]) {
      out.detail = "graph edges are not listed in canonical order";
      return out;
    }
    const auto& cj = j["coloring"];
    if (!cj.is_object() || !cj.contains("t") || !cj.contains("colors")) {
      out.detail = "colouring JSON needs \"t\" and \"colors\"";
      return out;
    }
    std::string why;
    auto c = try_validate(g, cj["t"].get<int>(),
                          cj["colors"].get<std::vector<Color>>(), &why);
    if (!c) {
      out.detail = "colouring invalid: " + why;
      return out;
    }
    return check_witness(
        WitnessCertificate{std::move(g), std::move(*c),
                           claim_from_json(j["claim"])});
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("malformed witness: ") + e.what();
    return out;
  }
}

}  // namespace qmu
