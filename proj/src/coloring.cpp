#include "qmu/coloring.hpp"

#include <algorithm>
#include <sstream>

namespace qmu {

ColoringError::ColoringError(Kind kind, std::string message,
                             std::vector<Conflict> conflicts, Color color)
    : std::runtime_error(std::move(message)),
      kind_(kind),
      conflicts_(std::move(conflicts)),
      color_(color) {}

std::vector<EdgeIndex> EdgeColoring::color_class(Color j) const {
  std::vector<EdgeIndex> out;
  for (EdgeIndex e = 0; e < edge_count(); ++e) {
    if (colors_[e] == j) out.push_back(e);
  }
  return out;
}

EdgeColoring validate(const Graph& g, int t, std::vector<Color> colors) {
  using Kind = ColoringError::Kind;
  if (static_cast<int>(colors.size()) != g.edge_count()) {
    throw ColoringError(Kind::kLengthMismatch,
                        "colouring has " + std::to_string(colors.size()) +
                            " entries for " +
                            std::to_string(g.edge_count()) + " edges");
  }
  if (t < 1 || t > g.edge_count()) {
    throw ColoringError(Kind::kBadPalette,
                        "palette size " + std::to_string(t) +
                            " outside [1," + std::to_string(g.edge_count()) +
                            "]");
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (colors[e] < 1 || colors[e] > t) {
      std::ostringstream msg;
      msg << "edge " << e << " has colour " << colors[e] << " outside [1,"
          << t << "]";
      throw ColoringError(Kind::kColorOutOfRange, msg.str(), {}, colors[e]);
    }
  }

  std::vector<ColoringError::Conflict> conflicts;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    auto inc = g.incident(x);
    for (size_t i = 0; i < inc.size(); ++i) {
      for (size_t j = i + 1; j < inc.size(); ++j) {
        if (colors[inc[i].edge] == colors[inc[j].edge]) {
          conflicts.push_back({x, std::min(inc[i].edge, inc[j].edge),
                               std::max(inc[i].edge, inc[j].edge)});
        }
      }
    }
  }
  if (!conflicts.empty()) {
    std::ostringstream msg;
    msg << "adjacent edges share a colour:";
    for (const auto& c : conflicts) {
      msg << " [vertex " << c.vertex << ": edges " << c.first << ","
          << c.second << " colour " << colors[c.first] << "]";
    }
    throw ColoringError(Kind::kAdjacentConflict, msg.str(),
                        std::move(conflicts));
  }

  std::vector<bool> used(t + 1, false);
  for (Color c : colors) used[c] = true;
  for (Color c = 1; c <= t; ++c) {
    if (!used[c]) {
      throw ColoringError(Kind::kUnusedColor,
                          "colour " + std::to_string(c) + " is never used",
                          {}, c);
    }
  }
  return EdgeColoring(t, std::move(colors));
}

std::optional<EdgeColoring> try_validate(const Graph& g, int t,
                                         std::vector<Color> colors,
                                         std::string* why) {
  try {
    return validate(g, t, std::move(colors));
  } catch (const ColoringError& e) {
    if (why) *why = e.what();
    return std::nullopt;
  }
}

namespace {

void check_sizes(const Graph& g, const EdgeColoring& c) {
  if (c.edge_count() != g.edge_count()) {
    throw ColoringError(ColoringError::Kind::kLengthMismatch,
                        "colouring belongs to a graph with " +
                            std::to_string(c.edge_count()) + " edges");
  }
}

}  // namespace

std::vector<Color> spectrum(const Graph& g, const EdgeColoring& c, Vertex x) {
  check_sizes(g, c);
  if (x < 0 || x >= g.vertex_count()) {
    throw GraphError("vertex " + std::to_string(x) + " out of range");
  }
  std::vector<Color> s;
  s.reserve(g.degree(x));
  for (const Incidence& inc : g.incident(x)) s.push_back(c[inc.edge]);
  std::sort(s.begin(), s.end());
  return s;
}

bool is_interval(std::span<const Color> s) {
  if (s.empty()) throw std::invalid_argument("interval test on empty set");
  return s.back() - s.front() + 1 == static_cast<int>(s.size());
}

bool is_interval_at(const Graph& g, const EdgeColoring& c, Vertex x) {
  return is_interval(spectrum(g, c, x));
}

SpectrumReport spectrum_report(const Graph& g, const EdgeColoring& c) {
  SpectrumReport r;
  r.spectra.reserve(g.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    r.spectra.push_back(spectrum(g, c, x));
    if (is_interval(r.spectra.back())) r.v_int.push_back(x);
  }
  r.f = static_cast<int>(r.v_int.size());
  return r;
}

int interval_count(const Graph& g, const EdgeColoring& c) {
  check_sizes(g, c);
  int f = 0;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    Color lo = c.palette() + 1, hi = 0;
    for (const Incidence& inc : g.incident(x)) {
      lo = std::min(lo, c[inc.edge]);
      hi = std::max(hi, c[inc.edge]);
    }
    // Properness makes the incident colours distinct.
    if (hi - lo + 1 == g.degree(x)) ++f;
  }
  return f;
}

EdgeColoring reversed(const Graph& g, const EdgeColoring& c) {
  std::vector<Color> out(c.colors());
  for (Color& x : out) x = c.palette() + 1 - x;
  return validate(g, c.palette(), std::move(out));
}

EdgeColoring permuted(const Graph& g, const EdgeColoring& c,
                      std::span<const Color> perm) {
  if (static_cast<int>(perm.size()) != c.palette()) {
    throw std::invalid_argument("permutation length differs from palette");
  }
  std::vector<Color> out(c.colors());
  for (Color& x : out) x = perm[x - 1];
  return validate(g, c.palette(), std::move(out));
}

namespace {

class DeltaColorer {
 public:
  DeltaColorer(const Graph& g, int colors)
      : g_(g), k_(colors), color_(g.edge_count(), 0),
        used_(g.vertex_count(), 0) {
    // Edges in BFS discovery order keep the frontier compact.
    std::vector<bool> queued(g.edge_count(), false);
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<Vertex> frontier{0};
    seen[0] = true;
    for (size_t head = 0; head < frontier.size(); ++head) {
      for (const Incidence& inc : g.incident(frontier[head])) {
        if (!queued[inc.edge]) {
          queued[inc.edge] = true;
          order_.push_back(inc.edge);
        }
        if (!seen[inc.neighbor]) {
          seen[inc.neighbor] = true;
          frontier.push_back(inc.neighbor);
        }
      }
    }
  }

  bool run() { return step(0, 0); }
  const std::vector<Color>& colors() const { return color_; }

 private:
  bool step(size_t pos, int max_used) {
    if (pos == order_.size()) return true;
    EdgeIndex e = order_[pos];
    const Edge& ed = g_.edge(e);
    unsigned blocked = used_[ed.u] | used_[ed.v];
    // Colours above max_used+1 are interchangeable with max_used+1.
    int limit = std::min(k_, max_used + 1);
    for (Color c = 1; c <= limit; ++c) {
      unsigned bit = 1u << (c - 1);
      if (blocked & bit) continue;
      color_[e] = c;
      used_[ed.u] |= bit;
      used_[ed.v] |= bit;
      if (step(pos + 1, std::max(max_used, c))) return true;
      used_[ed.u] &= ~bit;
      used_[ed.v] &= ~bit;
    }
    color_[e] = 0;
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<EdgeIndex> order_;
  std::vector<Color> color_;
  std::vector<unsigned> used_;
};

}  // namespace

std::optional<EdgeColoring> delta_coloring(const Graph& g, int edge_cap) {
  const int delta = g.max_degree();
  if (g.is_regular() && is_bipartite(g)) {
    auto matchings = matching_decomposition(g, bipartition(g));
    std::vector<Color> colors(g.edge_count(), 0);
    for (int j = 0; j < delta; ++j) {
      for (EdgeIndex e : matchings[j]) colors[e] = j + 1;
    }
    return validate(g, delta, std::move(colors));
  }
  if (g.edge_count() > edge_cap) {
    throw GraphError("edge-colouring search capped at " +
                     std::to_string(edge_cap) + " edges; graph has " +
                     std::to_string(g.edge_count()));
  }
  if (delta > 31) throw GraphError("maximum degree too large for search");
  DeltaColorer colorer(g, delta);
  if (!colorer.run()) return std::nullopt;
  return validate(g, delta, colorer.colors());
}

int chromatic_index(const Graph& g, int edge_cap) {
  if (is_bipartite(g)) return g.max_degree();
  return delta_coloring(g, edge_cap) ? g.max_degree() : g.max_degree() + 1;
}

nlohmann::json to_json(const EdgeColoring& c) {
  return {{"t", c.palette()}, {"colors", c.colors()}};
}

EdgeColoring coloring_from_json(const Graph& g, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("t") || !j.contains("colors") ||
      !j["t"].is_number_integer() || !j["colors"].is_array()) {
    throw ColoringError(ColoringError::Kind::kLengthMismatch,
                        "colouring JSON needs integer \"t\" and \"colors\"");
  }
  std::vector<Color> colors;
  for (const auto& x : j["colors"]) {
    if (!x.is_number_integer()) {
      throw ColoringError(ColoringError::Kind::kColorOutOfRange,
                          "colouring JSON has a non-integer colour");
    }
    colors.push_back(x.get<int>());
  }
  return validate(g, j["t"].get<int>(), std::move(colors));
}

std::string to_dot(const Graph& g, const EdgeColoring* c) {
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle];\n";
  if (c) {
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
      bool interval = is_interval_at(g, *c, x);
      out << "  " << x << (interval ? " [style=filled, fillcolor=lightgray]"
                                    : "")
          << ";\n";
    }
  } else {
    for (Vertex x = 0; x < g.vertex_count(); ++x) out << "  " << x << ";\n";
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    out << "  " << ed.u << " -- " << ed.v;
    if (c) out << " [label=\"" << (*c)[e] << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace qmu
