#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmu/graph.hpp"

namespace qmu {

using Color = int;  // 1-based

class ColoringError : public std::runtime_error {
 public:
  enum class Kind { kLengthMismatch, kColorOutOfRange, kAdjacentConflict,
                    kUnusedColor, kBadPalette };

  struct Conflict {
    Vertex vertex;
    EdgeIndex first;
    EdgeIndex second;
  };

  ColoringError(Kind kind, std::string message,
                std::vector<Conflict> conflicts = {}, Color color = 0);

  Kind kind() const { return kind_; }
  // Every clash found, for kAdjacentConflict.
  const std::vector<Conflict>& conflicts() const { return conflicts_; }
  // The offending colour, for kUnusedColor and kColorOutOfRange.
  Color color() const { return color_; }

 private:
  Kind kind_;
  std::vector<Conflict> conflicts_;
  Color color_;
};

// A proper edge t-colouring that uses every colour of [1,t]. The only way to
// obtain one is validate(), so holding an EdgeColoring means the colouring
// has been checked against some graph with matching edge count.
class EdgeColoring {
 public:
  int palette() const { return t_; }
  const std::vector<Color>& colors() const { return colors_; }
  Color operator[](EdgeIndex e) const { return colors_.at(e); }
  int edge_count() const { return static_cast<int>(colors_.size()); }

  // E(G, c, j): edges carrying colour j.
  std::vector<EdgeIndex> color_class(Color j) const;

  bool operator==(const EdgeColoring&) const = default;

 private:
  friend EdgeColoring validate(const Graph& g, int t,
                               std::vector<Color> colors);
  EdgeColoring(int t, std::vector<Color> colors)
      : t_(t), colors_(std::move(colors)) {}

  int t_;
  std::vector<Color> colors_;
};

EdgeColoring validate(const Graph& g, int t, std::vector<Color> colors);

// Non-throwing variant; the error message is written to `why` when given.
std::optional<EdgeColoring> try_validate(const Graph& g, int t,
                                         std::vector<Color> colors,
                                         std::string* why = nullptr);

// Sorted colour set on the edges at x.
std::vector<Color> spectrum(const Graph& g, const EdgeColoring& c, Vertex x);

// True iff s is a run of consecutive integers. s must be sorted, nonempty.
bool is_interval(std::span<const Color> s);

struct SpectrumReport {
  std::vector<std::vector<Color>> spectra;
  std::vector<Vertex> v_int;
  int f = 0;
};

SpectrumReport spectrum_report(const Graph& g, const EdgeColoring& c);
int interval_count(const Graph& g, const EdgeColoring& c);  // f only
bool is_interval_at(const Graph& g, const EdgeColoring& c, Vertex x);

// Colour i -> t+1-i.
EdgeColoring reversed(const Graph& g, const EdgeColoring& c);

// Relabels colour i to perm[i-1]; perm must be a permutation of [1,t].
EdgeColoring permuted(const Graph& g, const EdgeColoring& c,
                      std::span<const Color> perm);

inline constexpr int kDefaultChromaticEdgeCap = 24;

// chi'(g). Bipartite graphs return Delta (Konig). Others decide Delta versus
// Delta+1 by backtracking and throw GraphError above `edge_cap` edges.
int chromatic_index(const Graph& g, int edge_cap = kDefaultChromaticEdgeCap);

// A proper Delta-colouring when one exists within the cap, else nullopt.
std::optional<EdgeColoring> delta_coloring(
    const Graph& g, int edge_cap = kDefaultChromaticEdgeCap);

nlohmann::json to_json(const EdgeColoring& c);
EdgeColoring coloring_from_json(const Graph& g, const nlohmann::json& j);

// Graphviz rendering. With a colouring, edges are labelled and interval
// vertices are drawn filled.
std::string to_dot(const Graph& g, const EdgeColoring* c = nullptr);

}  // namespace qmu
