#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "triples/core.hpp"

namespace triples {

/// Two antipode vertices u, w plus an even cycle z0..z_{2k-1} of other
/// vertices; the 2k edges are {u, z_{2j}, z_{2j+1}} and {w, z_{2j-1}, z_{2j}}
/// with indices mod 2k. Stored in canonical form: u < w, z0 the smallest
/// cycle vertex, z1 < z_{2k-1}.
struct Bicycle {
  int k = 0;
  VertexPair antipodes;
  std::vector<Vertex> cycle;

  std::vector<Triple> edges() const;

  auto operator<=>(const Bicycle&) const = default;
};

/// Rewrites an antipode pair plus cycle into the canonical form above,
/// swapping the antipode roles when needed. Throws on malformed input
/// (odd cycle, length < 4, repeated vertices, antipodes in the cycle).
Bicycle canonical_bicycle(Vertex u, Vertex w, std::vector<Vertex> cycle);

/// True when all of the bicycle's edges are edges of sys and the vertex
/// counts match the definition.
bool bicycle_in_system(const TripleSystem& sys, const Bicycle& bc);

/// All canonical bicycles with k_min <= k <= k_max, optionally restricted to
/// one antipode pair. Exhaustive; results sorted by (k, antipodes, cycle).
std::vector<Bicycle> find_bicycles(const TripleSystem& sys, int k_min, int k_max,
                                   std::optional<VertexPair> antipodes = std::nullopt);

/// All vertex sets of the given order (7 or 9) whose induced edges contain a
/// Steiner triple system of that order. Exhaustive; sets ascending, results
/// sorted.
std::vector<std::vector<Vertex>> find_sts_subsystems(const TripleSystem& sys, int order);

/// A 7-vertex set together with 6 of its induced edges forming a copy of the
/// Fano plane minus one line.
struct NearFano {
  std::vector<Vertex> vertices;  // ascending, size 7
  std::vector<Triple> edges;     // sorted, size 6
  auto operator<=>(const NearFano&) const = default;
};

/// All 7-vertex subsets carrying six edges isomorphic to the Fano plane minus
/// one line. Exhaustive; one result per distinct edge set, sorted.
std::vector<NearFano> find_near_fano(const TripleSystem& sys);

/// True when every pair of support vertices lies in exactly one edge.
bool is_steiner(const TripleSystem& sys);

/// Constructive bicycle extraction from a Steiner triple system: finds the
/// edge {v, w, z}, forms the links of v and w with the pairs meeting z
/// removed, and walks the alternating cycle through the smallest remaining
/// vertex. Throws if sys is not an STS with more than one edge or if v, w do
/// not name two distinct support vertices.
Bicycle extract_bicycle_from_sts(const TripleSystem& sys, Vertex v, Vertex w);

struct ComponentReport {
  std::size_t component_count = 0;
  std::vector<std::vector<Vertex>> components;  // each ascending; sorted by minimum
};

/// Connected components of the support under shared-edge adjacency.
ComponentReport components(const TripleSystem& sys);

struct CliqueReport {
  std::size_t size = 0;
  std::vector<Vertex> witness;  // ascending
};

/// Maximum clique in shadow(sys), exact up to size_cap: a returned size below
/// the cap is the true maximum, a returned size equal to the cap means "at
/// least this large". Requires size_cap >= 3.
CliqueReport max_clique_shadow(const TripleSystem& sys, std::size_t size_cap);

}  // namespace triples
