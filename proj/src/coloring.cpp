#include "triples/coloring.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "triples/rng.hpp"

namespace triples {

namespace {

using Clock = std::chrono::steady_clock;
using Deadline = std::optional<Clock::time_point>;

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// Dense, support-indexed coloring state with an incrementally maintained
// list of monochromatic edges; a recolor costs time proportional to the
// vertex degree.
class RepairState {
 public:
  explicit RepairState(const TripleSystem& sys) : sys_(sys) {
    const auto& edges = sys.edges();
    edge_ix_.reserve(edges.size());
    for (const Triple& t : edges)
      edge_ix_.push_back({*sys.support_index(t.a), *sys.support_index(t.b),
                          *sys.support_index(t.c)});
    colors_.assign(sys.support().size(), -1);
    pos_.assign(edges.size(), kNone);
  }

  const std::vector<int>& colors() const { return colors_; }
  std::size_t conflict_count() const { return conflicts_.size(); }

  void load(const std::vector<int>& colors) {
    colors_ = colors;
    rebuild();
  }

  void greedy_fill(int c, Rng& rng) {
    std::fill(colors_.begin(), colors_.end(), -1);
    std::fill(pos_.begin(), pos_.end(), kNone);
    conflicts_.clear();
    std::vector<int> created(c);
    std::vector<int> ties;
    const auto& sup = sys_.support();
    for (std::uint32_t ix = 0; ix < sup.size(); ++ix) {
      std::fill(created.begin(), created.end(), 0);
      for (std::uint32_t e : sys_.incident_edges(sup[ix])) {
        const auto [j, k] = others(e, ix);
        if (colors_[j] >= 0 && colors_[j] == colors_[k]) ++created[colors_[j]];
      }
      int best = created[0];
      for (int d = 1; d < c; ++d) best = std::min(best, created[d]);
      ties.clear();
      for (int d = 0; d < c; ++d)
        if (created[d] == best) ties.push_back(d);
      set_color(ix, ties[rng.below(ties.size())]);
    }
  }

  void set_color(std::uint32_t ix, int c) {
    colors_[ix] = c;
    for (std::uint32_t e : sys_.incident_edges(sys_.support()[ix])) {
      const bool was = pos_[e] != kNone;
      const bool now = is_mono(e);
      if (was == now) continue;
      if (now) {
        pos_[e] = static_cast<std::uint32_t>(conflicts_.size());
        conflicts_.push_back(e);
      } else {
        const std::uint32_t at = pos_[e];
        const std::uint32_t moved = conflicts_.back();
        conflicts_[at] = moved;
        pos_[moved] = at;
        conflicts_.pop_back();
        pos_[e] = kNone;
      }
    }
  }

  // Change in total conflicts if ix were recolored to c.
  int delta(std::uint32_t ix, int c) const {
    int d = 0;
    for (std::uint32_t e : sys_.incident_edges(sys_.support()[ix])) {
      const auto [j, k] = others(e, ix);
      const bool was = pos_[e] != kNone;
      const bool now = colors_[j] == c && colors_[k] == c;
      d += static_cast<int>(now) - static_cast<int>(was);
    }
    return d;
  }

  // One repair pass; returns flips consumed. Snapshots every improvement
  // into best_colors/best_count.
  std::uint64_t repair(int c, double noise, std::uint64_t max_flips, Rng& rng,
                       const Deadline& deadline, std::vector<int>& best_colors,
                       std::size_t& best_count) {
    std::uint64_t flips = 0;
    while (!conflicts_.empty() && flips < max_flips) {
      if ((flips & 1023) == 0 && deadline && Clock::now() >= *deadline) break;
      const std::uint32_t e = conflicts_[rng.below(conflicts_.size())];
      const auto& ix3 = edge_ix_[e];
      std::uint32_t target;
      int new_color;
      if (rng.chance(noise)) {
        target = ix3[rng.below(3)];
        const int cc = colors_[target];
        const int draw = static_cast<int>(rng.below(static_cast<std::uint64_t>(c - 1)));
        new_color = draw >= cc ? draw + 1 : draw;
      } else {
        target = ix3[0];
        new_color = 0;
        int best_delta = std::numeric_limits<int>::max();
        for (const std::uint32_t ix : ix3) {
          const int cc = colors_[ix];
          for (int d = 0; d < c; ++d) {
            if (d == cc) continue;
            const int dl = delta(ix, d);
            if (dl < best_delta) {
              best_delta = dl;
              target = ix;
              new_color = d;
            }
          }
        }
      }
      set_color(target, new_color);
      ++flips;
      if (conflicts_.size() < best_count) {
        best_count = conflicts_.size();
        best_colors = colors_;
      }
    }
    return flips;
  }

 private:
  std::pair<std::uint32_t, std::uint32_t> others(std::uint32_t e, std::uint32_t ix) const {
    const auto& t = edge_ix_[e];
    if (t[0] == ix) return {t[1], t[2]};
    if (t[1] == ix) return {t[0], t[2]};
    return {t[0], t[1]};
  }

  bool is_mono(std::uint32_t e) const {
    const auto& t = edge_ix_[e];
    return colors_[t[0]] >= 0 && colors_[t[0]] == colors_[t[1]] &&
           colors_[t[1]] == colors_[t[2]];
  }

  void rebuild() {
    std::fill(pos_.begin(), pos_.end(), kNone);
    conflicts_.clear();
    for (std::uint32_t e = 0; e < edge_ix_.size(); ++e) {
      if (!is_mono(e)) continue;
      pos_[e] = static_cast<std::uint32_t>(conflicts_.size());
      conflicts_.push_back(e);
    }
  }

  const TripleSystem& sys_;
  std::vector<std::array<std::uint32_t, 3>> edge_ix_;
  std::vector<int> colors_;
  std::vector<std::uint32_t> conflicts_;
  std::vector<std::uint32_t> pos_;
};

std::vector<int> dense_colors(const TripleSystem& sys, const Coloring& col) {
  const auto& sup = sys.support();
  std::vector<int> colors(sup.size(), -1);
  std::size_t i = 0;
  for (const auto& [v, c] : col.assignments) {
    while (i < sup.size() && sup[i] < v) ++i;
    if (i == sup.size()) break;
    if (sup[i] == v) colors[i] = c;
  }
  return colors;
}

Coloring sparse_coloring(const TripleSystem& sys, const std::vector<int>& colors,
                         int color_count) {
  Coloring col;
  col.color_count = color_count;
  col.limit = sys.limit();
  const auto& sup = sys.support();
  col.assignments.reserve(sup.size());
  for (std::size_t i = 0; i < sup.size(); ++i)
    if (colors[i] >= 0) col.assignments.emplace_back(sup[i], colors[i]);
  return col;
}

struct WorkerResult {
  std::vector<int> colors;
  std::size_t count = std::numeric_limits<std::size_t>::max();
};

WorkerResult search_worker(const TripleSystem& sys, int c, const SearchConfig& cfg,
                           const std::optional<std::vector<int>>& initial,
                           const Deadline& deadline) {
  Rng rng(cfg.seed);
  RepairState state(sys);
  WorkerResult best;
  const int attempts = 1 + std::max(0, cfg.restarts);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    if (best.count == 0) break;
    // the first attempt always runs so a coloring is always produced
    if (attempt > 0 && deadline && Clock::now() >= *deadline) break;
    if (attempt == 0 && initial)
      state.load(*initial);
    else
      state.greedy_fill(c, rng);
    if (state.conflict_count() < best.count) {
      best.count = state.conflict_count();
      best.colors = state.colors();
    }
    state.repair(c, cfg.noise, cfg.max_flips, rng, deadline, best.colors, best.count);
  }
  return best;
}

}  // namespace

std::optional<int> Coloring::color_of(Vertex v) const {
  auto it = std::lower_bound(assignments.begin(), assignments.end(), v,
                             [](const auto& p, Vertex x) { return p.first < x; });
  if (it == assignments.end() || it->first != v) return std::nullopt;
  return it->second;
}

void Coloring::assign(Vertex v, int color) {
  auto it = std::lower_bound(assignments.begin(), assignments.end(), v,
                             [](const auto& p, Vertex x) { return p.first < x; });
  if (it != assignments.end() && it->first == v)
    it->second = color;
  else
    assignments.emplace(it, v, color);
}

ConflictReport verify(const TripleSystem& sys, const Coloring& col) {
  const std::vector<int> colors = dense_colors(sys, col);
  ConflictReport report;
  for (const Triple& t : sys.edges()) {
    const int ca = colors[*sys.support_index(t.a)];
    if (ca < 0) continue;
    if (ca == colors[*sys.support_index(t.b)] && ca == colors[*sys.support_index(t.c)])
      report.monochromatic_edges.push_back(t);
  }
  report.count = report.monochromatic_edges.size();
  return report;
}

Coloring valuation_coloring(Vertex limit, Vertex base) {
  if (base < 2) throw std::invalid_argument("valuation_coloring: base must be >= 2");
  if (limit < 1) throw std::invalid_argument("valuation_coloring: limit must be >= 1");
  Coloring col;
  col.limit = limit;
  int count = 1;
  for (Vertex p = 1; p <= limit / base; p *= base) ++count;
  col.color_count = count;
  col.assignments.reserve(static_cast<std::size_t>(limit));
  for (Vertex n = 1; n <= limit; ++n) {
    int e = 0;
    for (Vertex m = n; m % base == 0; m /= base) ++e;
    col.assignments.emplace_back(n, e);
  }
  return col;
}

std::pair<Coloring, ConflictReport> greedy_color(const TripleSystem& sys, int colors,
                                                 const SearchConfig& cfg) {
  if (colors < 1) throw std::invalid_argument("greedy_color: need at least one color");
  Rng rng(cfg.seed);
  RepairState state(sys);
  state.greedy_fill(colors, rng);
  Coloring col = sparse_coloring(sys, state.colors(), colors);
  ConflictReport report = verify(sys, col);
  return {std::move(col), std::move(report)};
}

std::pair<Coloring, ConflictReport> local_search(const TripleSystem& sys, int colors,
                                                 const SearchConfig& cfg,
                                                 std::optional<Coloring> initial,
                                                 int workers) {
  if (colors < 2) throw std::invalid_argument("local_search: need at least two colors");
  if (workers < 1) throw std::invalid_argument("local_search: need at least one worker");
  Deadline deadline;
  if (cfg.time_budget)
    deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(*cfg.time_budget));
  std::optional<std::vector<int>> initial_dense;
  if (initial) {
    for (const auto& [v, c] : initial->assignments)
      if (c < 0 || c >= colors)
        throw std::invalid_argument("local_search: initial coloring uses color " +
                                    std::to_string(c) + ", outside 0.." +
                                    std::to_string(colors - 1));
    initial_dense = dense_colors(sys, *initial);
  }
  if (!sys.empty()) sys.incident_edges(sys.support().front());  // build index up front

  WorkerResult merged;
  if (workers == 1) {
    merged = search_worker(sys, colors, cfg, initial_dense, deadline);
  } else {
    std::vector<WorkerResult> results(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int i = 0; i < workers; ++i)
      threads.emplace_back([&, i] {
        SearchConfig wcfg = cfg;
        wcfg.seed = cfg.seed + static_cast<std::uint64_t>(i);
        results[i] = search_worker(sys, colors, wcfg, initial_dense, deadline);
      });
    for (auto& t : threads) t.join();
    merged = std::move(results[0]);
    for (int i = 1; i < workers; ++i)
      if (results[i].count < merged.count) merged = std::move(results[i]);
  }

  if (merged.colors.empty()) merged.colors.assign(sys.support().size(), -1);
  Coloring col = sparse_coloring(sys, merged.colors, colors);
  ConflictReport report = verify(sys, col);
  return {std::move(col), std::move(report)};
}

std::optional<Coloring> exact_2color(const TripleSystem& sys, std::size_t support_cap) {
  const auto& sup = sys.support();
  if (sup.size() > support_cap)
    throw std::runtime_error("exact_2color: support has " + std::to_string(sup.size()) +
                             " vertices, above the cap of " + std::to_string(support_cap) +
                             "; use local_search or the CNF export instead");
  const std::size_t n = sup.size();
  std::vector<std::array<std::uint32_t, 3>> edge_ix;
  edge_ix.reserve(sys.edge_count());
  for (const Triple& t : sys.edges())
    edge_ix.push_back({*sys.support_index(t.a), *sys.support_index(t.b),
                       *sys.support_index(t.c)});

  std::vector<int> colors(n, -1);
  std::vector<std::uint32_t> trail;
  trail.reserve(n);

  auto assign = [&](std::uint32_t ix, int c) {
    colors[ix] = c;
    trail.push_back(ix);
  };
  auto undo_to = [&](std::size_t mark) {
    while (trail.size() > mark) {
      colors[trail.back()] = -1;
      trail.pop_back();
    }
  };
  // Unit propagation from trail position `from`; false on contradiction.
  auto propagate = [&](std::size_t from) {
    for (std::size_t q = from; q < trail.size(); ++q) {
      for (std::uint32_t e : sys.incident_edges(sup[trail[q]])) {
        const auto& t = edge_ix[e];
        int assigned = 0, color_sum = 0;
        std::uint32_t open = 0;
        bool same_two = false;
        const int c0 = colors[t[0]], c1 = colors[t[1]], c2 = colors[t[2]];
        if (c0 >= 0) ++assigned;
        if (c1 >= 0) ++assigned;
        if (c2 >= 0) ++assigned;
        if (assigned == 3) {
          if (c0 == c1 && c1 == c2) return false;
          continue;
        }
        if (assigned != 2) continue;
        if (c0 < 0) {
          open = t[0];
          same_two = c1 == c2;
          color_sum = c1;
        } else if (c1 < 0) {
          open = t[1];
          same_two = c0 == c2;
          color_sum = c0;
        } else {
          open = t[2];
          same_two = c0 == c1;
          color_sum = c0;
        }
        if (same_two) assign(open, 1 - color_sum);
      }
    }
    return true;
  };

  std::uint32_t cursor = 0;
  auto dfs = [&](auto&& self) -> bool {
    std::uint32_t ix = cursor;
    while (ix < n && colors[ix] >= 0) ++ix;
    if (ix == n) return true;
    const std::uint32_t saved_cursor = cursor;
    cursor = ix;
    for (int c = 0; c < 2; ++c) {
      const std::size_t mark = trail.size();
      assign(ix, c);
      if (propagate(mark) && self(self)) return true;
      undo_to(mark);
    }
    cursor = saved_cursor;
    return false;
  };

  if (n > 0) {
    assign(0, 0);  // complement symmetry: some solution has the first vertex 0
    if (!propagate(0)) return std::nullopt;
  }
  if (n > 0 && !dfs(dfs)) return std::nullopt;

  Coloring col = sparse_coloring(sys, colors, 2);
  return col;
}

std::pair<Coloring, int> strong_color_greedy(const TripleSystem& sys) {
  const auto& sup = sys.support();
  std::vector<int> colors(sup.size(), -1);
  std::vector<int> neighbor_colors;
  int used = 0;
  for (std::uint32_t ix = 0; ix < sup.size(); ++ix) {
    neighbor_colors.clear();
    for (std::uint32_t e : sys.incident_edges(sup[ix])) {
      const Triple& t = sys.edges()[e];
      for (Vertex v : {t.a, t.b, t.c}) {
        if (v == sup[ix]) continue;
        const int c = colors[*sys.support_index(v)];
        if (c >= 0) neighbor_colors.push_back(c);
      }
    }
    std::sort(neighbor_colors.begin(), neighbor_colors.end());
    int mex = 0;
    for (int c : neighbor_colors) {
      if (c > mex) break;
      if (c == mex) ++mex;
    }
    colors[ix] = mex;
    used = std::max(used, mex + 1);
  }
  Coloring col = sparse_coloring(sys, colors, std::max(1, used));
  return {std::move(col), used};
}

}  // namespace triples
