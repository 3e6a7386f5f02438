#include "qmu/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <iomanip>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qmu {

void SearchBudget::check() const {
  if (node_limit == 0 || time_limit.count() <= 0 || thread_count <= 0) {
    throw std::invalid_argument("search budget limits must be positive");
  }
}

SearchBudget SearchBudget::from_env() {
  SearchBudget b;
  if (const char* ms = std::getenv("QMU_BUDGET_MS")) {
    char* end = nullptr;
    long long v = std::strtoll(ms, &end, 10);
    if (end != ms && *end == '\0' && v > 0) {
      b.time_limit = std::chrono::milliseconds(v);
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  b.thread_count = hw == 0 ? 1 : static_cast<int>(hw);
  return b;
}

std::string to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::kExact: return "exact";
    case BoundStatus::kLowerBound: return "lower_bound";
    case BoundStatus::kUpperBound: return "upper_bound";
    case BoundStatus::kInterval: return "interval";
  }
  return "?";
}

int MuValue::value() const {
  return status == BoundStatus::kUpperBound ? hi : lo;
}

// ---------------------------------------------------------------------------
// Automorphisms (used only to decide whether the first branching edge may be
// pinned to colour 1).

namespace {

class AutomorphismFinder {
 public:
  explicit AutomorphismFinder(const Graph& g)
      : g_(g), n_(g.vertex_count()), adj_(static_cast<size_t>(n_) * n_, 0) {
    for (const Edge& e : g.edges()) {
      adj_[e.u * n_ + e.v] = adj_[e.v * n_ + e.u] = 1;
    }
  }

  // Some automorphism sends a -> c and b -> d?
  bool maps(Vertex a, Vertex b, Vertex c, Vertex d) {
    if (g_.degree(a) != g_.degree(c) || g_.degree(b) != g_.degree(d)) {
      return false;
    }
    map_.assign(n_, -1);
    inv_.assign(n_, -1);
    parent_.assign(n_, -1);
    order_.clear();
    // BFS order from a; every later vertex has an earlier neighbour.
    std::vector<bool> seen(n_, false);
    order_.push_back(a);
    seen[a] = true;
    for (size_t h = 0; h < order_.size(); ++h) {
      for (const Incidence& inc : g_.incident(order_[h])) {
        if (!seen[inc.neighbor]) {
          seen[inc.neighbor] = true;
          parent_[inc.neighbor] = order_[h];
          order_.push_back(inc.neighbor);
        }
      }
    }
    map_[a] = c;
    inv_[c] = a;
    if (!consistent(b, d)) return false;
    map_[b] = d;
    inv_[d] = b;
    return extend(1);
  }

 private:
  bool consistent(Vertex v, Vertex image) const {
    if (inv_[image] >= 0 || g_.degree(v) != g_.degree(image)) return false;
    for (Vertex x = 0; x < n_; ++x) {
      if (map_[x] >= 0 &&
          adj_[v * n_ + x] != adj_[image * n_ + map_[x]]) {
        return false;
      }
    }
    return true;
  }

  bool extend(size_t k) {
    while (k < order_.size() && map_[order_[k]] >= 0) ++k;
    if (k == order_.size()) return true;
    Vertex v = order_[k];
    Vertex p = parent_[v];
    for (const Incidence& inc : g_.incident(map_[p])) {
      Vertex cand = inc.neighbor;
      if (!consistent(v, cand)) continue;
      map_[v] = cand;
      inv_[cand] = v;
      if (extend(k + 1)) return true;
      map_[v] = -1;
      inv_[cand] = -1;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::vector<char> adj_;
  std::vector<Vertex> map_, inv_, parent_, order_;
};

inline constexpr int kAutomorphismVertexCap = 128;

}  // namespace

bool edge_transitive_from(const Graph& g, EdgeIndex from) {
  if (g.vertex_count() > kAutomorphismVertexCap) return false;
  AutomorphismFinder finder(g);
  const Edge& a = g.edge(from);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (e == from) continue;
    const Edge& b = g.edge(e);
    if (!finder.maps(a.u, a.v, b.u, b.v) && !finder.maps(a.u, a.v, b.v, b.u)) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Branch and bound

namespace {

inline constexpr int kMaxSearchPalette = 127;

struct ColorMask {
  std::array<std::uint64_t, 2> w{};
  void set(int c) { w[c >> 6] |= 1ULL << (c & 63); }
  void reset(int c) { w[c >> 6] &= ~(1ULL << (c & 63)); }
  bool test(int c) const { return (w[c >> 6] >> (c & 63)) & 1ULL; }
};

enum class Mode { kMin, kMax, kFeasible };

enum VertexState : signed char { kUndecided = 0, kInterval = 1, kBroken = 2 };

struct Problem {
  const Graph* g;
  int t;
  Mode mode;
  std::vector<EdgeIndex> order;
  std::vector<char> required;
  bool pin_first_to_one = false;
  bool reverse_first = false;
};

struct Shared {
  std::atomic<int> best;
  std::atomic<bool> stop{false};
  std::atomic<bool> aborted{false};
  std::atomic<std::uint64_t> nodes{0};
  std::uint64_t node_limit;
  std::chrono::steady_clock::time_point deadline;
  std::mutex mutex;
  std::vector<Color> best_colors;
};

class Worker {
 public:
  Worker(const Problem& p, Shared& s)
      : p_(p), s_(s), g_(*p.g), n_(g_.vertex_count()), m_(g_.edge_count()),
        color_(m_, 0), mask_(n_), lo_(n_, 0), hi_(n_, 0), count_(n_, 0),
        rem_(n_), state_(n_, kUndecided), use_(p.t + 1, 0), frames_(m_),
        unused_(p.t) {
    for (Vertex x = 0; x < n_; ++x) rem_[x] = g_.degree(x);
  }

  // Applies colour c at branching position pos. Returns false when the
  // resulting node is pruned; the caller must undo() either way.
  bool assign(int pos, Color c) {
    EdgeIndex e = p_.order[pos];
    const Edge& ed = g_.edge(e);
    Frame& f = frames_[pos];
    f.lo_u = lo_[ed.u];
    f.hi_u = hi_[ed.u];
    f.lo_v = lo_[ed.v];
    f.hi_v = hi_[ed.v];
    f.trail = trail_.size();

    color_[e] = c;
    place(ed.u, c);
    place(ed.v, c);
    if (use_[c]++ == 0) --unused_;

    evaluate(ed.u);
    evaluate(ed.v);
    for (Vertex end : {ed.u, ed.v}) {
      for (const Incidence& inc : g_.incident(end)) {
        if (color_[inc.edge] == 0) evaluate(inc.neighbor);
      }
    }
    return viable(pos);
  }

  void undo(int pos) {
    EdgeIndex e = p_.order[pos];
    const Edge& ed = g_.edge(e);
    const Frame& f = frames_[pos];
    while (trail_.size() > f.trail) {
      Vertex x = trail_.back();
      trail_.pop_back();
      if (state_[x] == kInterval) --intervals_;
      if (state_[x] == kBroken) {
        --broken_;
        if (p_.required[x]) --required_broken_;
      }
      state_[x] = kUndecided;
    }
    Color c = color_[e];
    if (--use_[c] == 0) ++unused_;
    color_[e] = 0;
    for (Vertex x : {ed.u, ed.v}) {
      mask_[x].reset(c);
      --count_[x];
      ++rem_[x];
    }
    lo_[ed.u] = f.lo_u;
    hi_[ed.u] = f.hi_u;
    lo_[ed.v] = f.lo_v;
    hi_[ed.v] = f.hi_v;
  }

  void dfs(int pos) {
    if (s_.stop.load(std::memory_order_relaxed)) return;
    if (++local_nodes_ >= kNodeBatch) flush_nodes();
    if (pos == m_) {
      leaf();
      return;
    }
    std::array<Color, kMaxSearchPalette + 1> cand;
    int k = candidates(pos, cand);
    for (int i = 0; i < k; ++i) {
      if (assign(pos, cand[i])) dfs(pos + 1);
      undo(pos);
      if (s_.stop.load(std::memory_order_relaxed)) return;
    }
  }

  // Enumerates viable prefixes of the given depth for work splitting.
  void prefixes(int pos, int depth, std::vector<Color>& prefix,
                std::vector<std::vector<Color>>& out) {
    if (pos == depth) {
      out.push_back(prefix);
      return;
    }
    std::array<Color, kMaxSearchPalette + 1> cand;
    int k = candidates(pos, cand);
    for (int i = 0; i < k; ++i) {
      if (assign(pos, cand[i])) {
        prefix.push_back(cand[i]);
        prefixes(pos + 1, depth, prefix, out);
        prefix.pop_back();
      }
      undo(pos);
    }
  }

  // Replays a prefix and searches below it.
  void run_prefix(const std::vector<Color>& prefix) {
    int applied = 0;
    bool ok = true;
    for (; applied < static_cast<int>(prefix.size()); ++applied) {
      bool viable_node = assign(applied, prefix[applied]);
      if (!viable_node) {
        ++applied;
        ok = false;
        break;
      }
    }
    if (ok) dfs(applied);
    while (applied > 0) undo(--applied);
  }

  void flush_nodes() {
    std::uint64_t total =
        s_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed) +
        local_nodes_;
    local_nodes_ = 0;
    if (total >= s_.node_limit ||
        std::chrono::steady_clock::now() >= s_.deadline) {
      s_.aborted = true;
      s_.stop = true;
    }
  }

 private:
  static constexpr std::uint64_t kNodeBatch = 1 << 12;

  struct Frame {
    int lo_u, hi_u, lo_v, hi_v;
    size_t trail;
  };

  void place(Vertex x, Color c) {
    mask_[x].set(c);
    if (count_[x] == 0) {
      lo_[x] = hi_[x] = c;
    } else {
      lo_[x] = std::min(lo_[x], c);
      hi_[x] = std::max(hi_[x], c);
    }
    ++count_[x];
    --rem_[x];
  }

  // Can colour c still be put on some uncoloured edge at x?
  bool placeable(Vertex x, Color c) const {
    for (const Incidence& inc : g_.incident(x)) {
      if (color_[inc.edge] == 0 && !mask_[inc.neighbor].test(c)) return true;
    }
    return false;
  }

  VertexState classify(Vertex x) const {
    if (count_[x] == 0) return kUndecided;
    const int d = g_.degree(x);
    if (hi_[x] - lo_[x] + 1 > d) return kBroken;
    if (rem_[x] == 0) return kInterval;
    // Some window [a, a+d-1] inside [1,t] covering [lo,hi] must have every
    // missing colour still placeable at x.
    int first = std::max(1, hi_[x] - d + 1);
    int last = std::min(lo_[x], p_.t - d + 1);
    for (int a = first; a <= last; ++a) {
      bool ok = true;
      for (Color c = a; ok && c < a + d; ++c) {
        if (!mask_[x].test(c) && !placeable(x, c)) ok = false;
      }
      if (ok) return kUndecided;
    }
    return kBroken;
  }

  void evaluate(Vertex x) {
    if (state_[x] != kUndecided) return;
    VertexState s = classify(x);
    if (s == kUndecided) return;
    state_[x] = s;
    trail_.push_back(x);
    if (s == kInterval) {
      ++intervals_;
    } else {
      ++broken_;
      if (p_.required[x]) ++required_broken_;
    }
  }

  bool viable(int pos) const {
    if (unused_ > m_ - pos - 1) return false;
    if (required_broken_ > 0) return false;
    int best = s_.best.load(std::memory_order_relaxed);
    switch (p_.mode) {
      case Mode::kMax: return n_ - broken_ > best;
      case Mode::kMin: return intervals_ < best;
      case Mode::kFeasible: return true;
    }
    return true;
  }

  // Span beyond degree that colour c would force at x.
  int excess(Vertex x, Color c) const {
    if (count_[x] == 0) return 0;
    int span = std::max(hi_[x], c) - std::min(lo_[x], c) + 1;
    return std::max(0, span - g_.degree(x));
  }

  int candidates(int pos, std::array<Color, kMaxSearchPalette + 1>& out) const {
    EdgeIndex e = p_.order[pos];
    const Edge& ed = g_.edge(e);
    const bool must_be_new = unused_ == m_ - pos;
    int k = 0;
    for (Color c = 1; c <= p_.t; ++c) {
      if (mask_[ed.u].test(c) || mask_[ed.v].test(c)) continue;
      if (must_be_new && use_[c] != 0) continue;
      if (pos == 0 && p_.pin_first_to_one && c != 1) continue;
      if (pos == 0 && p_.reverse_first && 2 * c > p_.t + 1) continue;
      out[k++] = c;
    }
    std::array<int, kMaxSearchPalette + 1> score;
    for (int i = 0; i < k; ++i) {
      score[out[i]] = excess(ed.u, out[i]) + excess(ed.v, out[i]);
    }
    if (p_.mode == Mode::kMin) {
      std::stable_sort(out.begin(), out.begin() + k, [&](Color a, Color b) {
        return score[a] > score[b];
      });
    } else {
      std::stable_sort(out.begin(), out.begin() + k, [&](Color a, Color b) {
        return score[a] < score[b];
      });
    }
    return k;
  }

  void leaf() {
    // Every vertex is decided once all edges are coloured.
    const int f = intervals_;
    std::lock_guard<std::mutex> lock(s_.mutex);
    int best = s_.best.load();
    bool better = false;
    switch (p_.mode) {
      case Mode::kMax: better = f > best; break;
      case Mode::kMin: better = f < best; break;
      case Mode::kFeasible: better = s_.best_colors.empty(); break;
    }
    if (!better) return;
    s_.best = f;
    s_.best_colors = color_;
    if (p_.mode == Mode::kFeasible || (p_.mode == Mode::kMax && f == n_) ||
        (p_.mode == Mode::kMin && f == 0)) {
      s_.stop = true;
    }
  }

  const Problem& p_;
  Shared& s_;
  const Graph& g_;
  int n_;
  int m_;
  std::vector<Color> color_;
  std::vector<ColorMask> mask_;
  std::vector<int> lo_, hi_, count_, rem_;
  std::vector<VertexState> state_;
  std::vector<int> use_;
  std::vector<Frame> frames_;
  std::vector<Vertex> trail_;
  int unused_;
  int intervals_ = 0;
  int broken_ = 0;
  int required_broken_ = 0;
  std::uint64_t local_nodes_ = 0;
};

std::vector<EdgeIndex> branching_order(const Graph& g) {
  std::vector<EdgeIndex> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](EdgeIndex a, EdgeIndex b) {
    const Edge& ea = g.edge(a);
    const Edge& eb = g.edge(b);
    return g.degree(ea.u) + g.degree(ea.v) > g.degree(eb.u) + g.degree(eb.v);
  });
  return order;
}

struct RunResult {
  bool completed;
  int best;
  std::vector<Color> colors;
  std::uint64_t nodes;
};

RunResult run_search(Problem& p, int initial_best, const SearchBudget& budget,
                     bool symmetry) {
  budget.check();
  const Graph& g = *p.g;
  if (p.t < 1 || p.t > g.edge_count()) {
    throw std::invalid_argument("palette " + std::to_string(p.t) +
                                " outside [1," +
                                std::to_string(g.edge_count()) + "]");
  }
  if (p.t > kMaxSearchPalette) {
    throw std::invalid_argument("palette too large for exact search");
  }
  p.order = branching_order(g);
  if (p.required.empty()) p.required.assign(g.vertex_count(), 0);
  if (symmetry) {
    // Automorphisms preserve f and interval sets only when R is invariant,
    // so pinning is limited to unconstrained searches.
    bool constrained = std::any_of(p.required.begin(), p.required.end(),
                                   [](char r) { return r != 0; });
    if (!constrained && edge_transitive_from(g, p.order[0])) {
      p.pin_first_to_one = true;
    } else {
      p.reverse_first = true;
    }
  }

  Shared s;
  s.best = initial_best;
  s.node_limit = budget.node_limit;
  s.deadline = std::chrono::steady_clock::now() + budget.time_limit;

  if (budget.thread_count <= 1) {
    Worker w(p, s);
    w.dfs(0);
    w.flush_nodes();
  } else {
    std::vector<std::vector<Color>> tasks;
    {
      Worker splitter(p, s);
      int depth = 1;
      const size_t want = 16 * static_cast<size_t>(budget.thread_count);
      for (; depth < g.edge_count(); ++depth) {
        tasks.clear();
        std::vector<Color> prefix;
        splitter.prefixes(0, depth, prefix, tasks);
        if (tasks.size() >= want) break;
      }
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int i = 0; i < budget.thread_count; ++i) {
      pool.emplace_back([&] {
        Worker w(p, s);
        for (size_t k = next++; k < tasks.size() && !s.stop; k = next++) {
          w.run_prefix(tasks[k]);
        }
        w.flush_nodes();
      });
    }
    for (auto& th : pool) th.join();
  }
  return {!s.aborted.load(), s.best.load(), s.best_colors, s.nodes.load()};
}

}  // namespace

MuValue mu_exact(const Graph& g, int t, Objective objective,
                 const SearchBudget& budget, const SearchOptions& options) {
  Problem p;
  p.g = &g;
  p.t = t;
  p.mode = objective == Objective::kMax ? Mode::kMax : Mode::kMin;
  const int n = g.vertex_count();
  int initial = objective == Objective::kMax ? -1 : n + 1;
  RunResult r = run_search(p, initial, budget, options.symmetry);

  MuValue out;
  out.nodes = r.nodes;
  if (!r.colors.empty()) out.witness = validate(g, t, r.colors);
  const bool found = out.witness.has_value();
  if (r.completed) {
    if (!found) {
      throw std::invalid_argument("no proper surjective " +
                                  std::to_string(t) + "-colouring exists");
    }
    out.lo = out.hi = r.best;
    out.status = BoundStatus::kExact;
  } else if (objective == Objective::kMax) {
    out.lo = found ? r.best : 0;
    out.hi = n;
    out.status = found ? BoundStatus::kLowerBound : BoundStatus::kInterval;
  } else {
    out.lo = 0;
    out.hi = found ? r.best : n;
    out.status = found ? BoundStatus::kUpperBound : BoundStatus::kInterval;
  }
  return out;
}

FeasibilityResult interval_feasible(const Graph& g,
                                    const std::vector<Vertex>& required,
                                    int t, const SearchBudget& budget) {
  Problem p;
  p.g = &g;
  p.t = t;
  p.mode = Mode::kFeasible;
  p.required.assign(g.vertex_count(), 0);
  for (Vertex x : required) p.required.at(x) = 1;
  RunResult r = run_search(p, 0, budget, true);
  FeasibilityResult out;
  if (!r.colors.empty()) {
    out.status = Feasibility::kFeasible;
    out.witness = validate(g, t, r.colors);
  } else {
    out.status = r.completed ? Feasibility::kInfeasible : Feasibility::kUnknown;
  }
  return out;
}

IntervalSpan interval_span(const Graph& g, const std::vector<Vertex>& required,
                           const SearchBudget& budget) {
  IntervalSpan span;
  const int lo = g.max_degree();
  const int hi = g.edge_count();
  for (int t = lo; t <= hi && !span.least; ++t) {
    auto r = interval_feasible(g, required, t, budget);
    if (r.status == Feasibility::kFeasible) span.least = t;
    if (r.status == Feasibility::kUnknown) span.exact = false;
  }
  if (!span.least) return span;
  for (int t = hi; t >= *span.least && !span.greatest; --t) {
    auto r = interval_feasible(g, required, t, budget);
    if (r.status == Feasibility::kFeasible) span.greatest = t;
    if (r.status == Feasibility::kUnknown) span.exact = false;
  }
  return span;
}

// ---------------------------------------------------------------------------

BruteForceResult brute_force_mu(const Graph& g, int t) {
  const int m = g.edge_count();
  const int n = g.vertex_count();
  if (m > kBruteForceEdgeCap) {
    throw std::invalid_argument("brute force limited to " +
                                std::to_string(kBruteForceEdgeCap) + " edges");
  }
  if (t < 1 || t > m) throw std::invalid_argument("palette out of range");

  std::vector<Color> colors(m, 1);
  int lo = n + 1, hi = -1;
  while (true) {
    bool proper = true;
    for (Vertex x = 0; x < n && proper; ++x) {
      std::set<Color> seen;
      for (const Incidence& inc : g.incident(x)) {
        if (!seen.insert(colors[inc.edge]).second) proper = false;
      }
    }
    std::set<Color> used(colors.begin(), colors.end());
    if (proper && static_cast<int>(used.size()) == t) {
      int f = 0;
      for (Vertex x = 0; x < n; ++x) {
        std::set<Color> s;
        for (const Incidence& inc : g.incident(x)) s.insert(colors[inc.edge]);
        if (*s.rbegin() - *s.begin() + 1 == static_cast<int>(s.size())) ++f;
      }
      lo = std::min(lo, f);
      hi = std::max(hi, f);
    }
    int i = 0;
    while (i < m && colors[i] == t) colors[i++] = 1;
    if (i == m) break;
    ++colors[i];
  }
  if (hi < 0) {
    throw std::invalid_argument("no proper surjective " + std::to_string(t) +
                                "-colouring exists");
  }
  return {lo, hi};
}

// ---------------------------------------------------------------------------

void aggregate(MuTable& table) {
  auto fold = [&](auto pick, bool take_min) {
    MuAggregate a;
    a.exact = !table.rows.empty();
    bool first = true;
    for (const MuRow& row : table.rows) {
      const MuValue& v = pick(row);
      a.exact = a.exact && v.exact();
      if (first) {
        a.lo = v.lo;
        a.hi = v.hi;
        first = false;
      } else if (take_min) {
        a.lo = std::min(a.lo, v.lo);
        a.hi = std::min(a.hi, v.hi);
      } else {
        a.lo = std::max(a.lo, v.lo);
        a.hi = std::max(a.hi, v.hi);
      }
    }
    return a;
  };
  auto mu1 = [](const MuRow& r) -> const MuValue& { return r.mu1; };
  auto mu2 = [](const MuRow& r) -> const MuValue& { return r.mu2; };
  table.mu11 = fold(mu1, true);
  table.mu12 = fold(mu1, false);
  table.mu21 = fold(mu2, true);
  table.mu22 = fold(mu2, false);
}

MuTable mu_table(const Graph& g, const SearchBudget& budget,
                 const SearchOptions& options) {
  MuTable table;
  for (int t = chromatic_index(g); t <= g.edge_count(); ++t) {
    table.rows.push_back({t, mu_exact(g, t, Objective::kMin, budget, options),
                          mu_exact(g, t, Objective::kMax, budget, options)});
  }
  aggregate(table);
  return table;
}

MuTable mu_table_for(const Graph& g, int t, const SearchBudget& budget,
                     const SearchOptions& options) {
  int lo = chromatic_index(g);
  if (t < lo || t > g.edge_count()) {
    throw std::invalid_argument("palette " + std::to_string(t) +
                                " outside [" + std::to_string(lo) + "," +
                                std::to_string(g.edge_count()) + "]");
  }
  MuTable table;
  table.rows.push_back({t, mu_exact(g, t, Objective::kMin, budget, options),
                        mu_exact(g, t, Objective::kMax, budget, options)});
  aggregate(table);
  return table;
}

MuAggregates closed_form_qn(int n) {
  if (n < 1 || n > 62) throw std::invalid_argument("n must be in [1,62]");
  const long long all = 1LL << n;
  const long long half = 1LL << (n - 1);
  // ceil(1 - min(4,n)/4) = ceil((4 - min(4,n)) / 4)
  const long long bump = (4 - std::min(4, n) + 3) / 4;
  return {3 - std::min(3, n), all, half + bump, all};
}

bool mu_inequalities_check(const MuTable& table) {
  if (!table.all_exact()) {
    throw std::invalid_argument("inequality check needs exact aggregates");
  }
  const int a = table.mu11.lo, b = table.mu12.lo, c = table.mu21.lo,
            d = table.mu22.lo;
  return a <= b && b <= d && a <= c && c <= d;
}

namespace {

std::string status_text(const MuValue& v) {
  if (v.status == BoundStatus::kInterval) {
    return "interval(" + std::to_string(v.lo) + ";" + std::to_string(v.hi) +
           ")";
  }
  return to_string(v.status);
}

std::string aggregate_text(const MuAggregate& a) {
  if (a.exact) return std::to_string(a.lo) + " (exact)";
  if (a.lo == a.hi) return std::to_string(a.lo) + " (bounded)";
  return "[" + std::to_string(a.lo) + ";" + std::to_string(a.hi) + "]";
}

}  // namespace

std::string to_csv(const MuTable& table) {
  std::ostringstream out;
  out << "t,mu1,mu1_status,mu2,mu2_status\n";
  for (const MuRow& r : table.rows) {
    out << r.t << ',' << r.mu1.value() << ',' << status_text(r.mu1) << ','
        << r.mu2.value() << ',' << status_text(r.mu2) << '\n';
  }
  out << "# mu11=" << aggregate_text(table.mu11)
      << " mu12=" << aggregate_text(table.mu12)
      << " mu21=" << aggregate_text(table.mu21)
      << " mu22=" << aggregate_text(table.mu22) << '\n';
  return out.str();
}

std::string to_pretty(const MuTable& table) {
  std::ostringstream out;
  out << std::setw(5) << "t" << std::setw(6) << "mu1" << std::setw(16)
      << "status" << std::setw(6) << "mu2" << std::setw(16) << "status"
      << '\n';
  for (const MuRow& r : table.rows) {
    out << std::setw(5) << r.t << std::setw(6) << r.mu1.value()
        << std::setw(16) << status_text(r.mu1) << std::setw(6)
        << r.mu2.value() << std::setw(16) << status_text(r.mu2) << '\n';
  }
  out << "mu11 = " << aggregate_text(table.mu11) << '\n'
      << "mu12 = " << aggregate_text(table.mu12) << '\n'
      << "mu21 = " << aggregate_text(table.mu21) << '\n'
      << "mu22 = " << aggregate_text(table.mu22) << '\n';
  return out.str();
}

}  // namespace qmu
