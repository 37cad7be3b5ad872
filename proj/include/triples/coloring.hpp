#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "triples/core.hpp"

namespace triples {

/// Partial assignment of colors 0..color_count-1 to vertices. Assignments are
/// kept ascending by vertex; vertices may be left unassigned.
struct Coloring {
  int color_count = 1;
  std::optional<Vertex> limit;  // carried through files and renders
  std::vector<std::pair<Vertex, int>> assignments;

  std::optional<int> color_of(Vertex v) const;
  void assign(Vertex v, int color);  // insert or overwrite, keeps order
};

struct ConflictReport {
  std::size_t count = 0;
  std::vector<Triple> monochromatic_edges;  // sorted; count == size
};

struct SearchConfig {
  std::uint64_t seed = 1;
  std::uint64_t max_flips = 10'000'000;  // per attempt
  int restarts = 20;                     // attempts beyond the first
  double noise = 0.3;
  std::optional<double> time_budget;  // wall-clock seconds for the whole call;
                                      // when set, results may depend on timing
};

/// Lists the edges whose three vertices are all assigned one common color.
/// Edges with any unassigned vertex never conflict.
ConflictReport verify(const TripleSystem& sys, const Coloring& col);

/// Colors every n in 1..limit by the exponent of base in n;
/// color_count = 1 + floor(log_base limit). Requires base >= 2, limit >= 1.
Coloring valuation_coloring(Vertex limit, Vertex base = 5);

/// Assigns support vertices in ascending order; each takes a color creating
/// the fewest new monochromatic edges, ties broken uniformly from cfg.seed.
/// Requires colors >= 1.
std::pair<Coloring, ConflictReport> greedy_color(const TripleSystem& sys, int colors,
                                                 const SearchConfig& cfg);

/// Iterative repair: pick a random monochromatic edge; with probability
/// cfg.noise recolor a random vertex of it to a random other color, otherwise
/// recolor the vertex whose best move lowers total conflicts most (vertex
/// ties go to the lowest vertex, color ties to the lowest color). The first
/// attempt starts from `initial` when given, else from a fresh greedy
/// coloring; cfg.restarts further attempts always start from fresh greedy
/// colorings. Returns the best coloring seen across all attempts.
///
/// Worker i > 0 repeats the whole search seeded cfg.seed + i; the best report
/// wins, ties broken by lowest worker index, so output is deterministic for
/// fixed (seed, workers) as long as no time budget is set. Requires
/// colors >= 2, workers >= 1.
std::pair<Coloring, ConflictReport> local_search(const TripleSystem& sys, int colors,
                                                 const SearchConfig& cfg,
                                                 std::optional<Coloring> initial = std::nullopt,
                                                 int workers = 1);

/// Complete backtracking 2-coloring with unit propagation (two same-colored
/// vertices of an edge force the third to the other color). Returns nullopt
/// when no valid 2-coloring exists. Refuses supports larger than support_cap
/// by throwing std::runtime_error; use local_search or the CNF export there.
std::optional<Coloring> exact_2color(const TripleSystem& sys,
                                     std::size_t support_cap = 64);

/// Greedy proper coloring of shadow(sys) in ascending vertex order: each
/// vertex takes the least color absent from its shadow neighbors, so every
/// edge ends with three distinct colors. Also returns the number of colors
/// used (0 for an empty system).
std::pair<Coloring, int> strong_color_greedy(const TripleSystem& sys);

}  // namespace triples
