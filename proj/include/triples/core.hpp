#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace triples {

using Vertex = std::int64_t;
using VertexPair = std::pair<Vertex, Vertex>;

/// A 3-element edge over positive integers, stored strictly ascending.
struct Triple {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;

  /// Builds a triple from three distinct positive integers in any order.
  /// Throws std::invalid_argument on repeats or non-positive members.
  static Triple of(Vertex x, Vertex y, Vertex z);

  bool contains(Vertex v) const { return v == a || v == b || v == c; }

  /// The member that is neither x nor y; requires both to be members.
  Vertex third(Vertex x, Vertex y) const;

  auto operator<=>(const Triple&) const = default;
};

enum class Family { pyth, prim, schur, custom };

std::string_view family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);

/// An immutable triple system: a canonically sorted edge set together with
/// its support (the set of covered integers). The vertex ordering is always
/// the natural integer order. Lookup indexes are built lazily and shared;
/// const access is safe from concurrent threads.
class TripleSystem {
 public:
  TripleSystem();

  /// Canonicalizes (sorts, dedups) and validates the edge list. Family-tagged
  /// systems are checked against their defining equation: a^2 + b^2 = c^2 for
  /// pyth/prim (plus gcd(a,b,c) = 1 for prim) and c = a + b for schur.
  static TripleSystem from_edges(std::vector<Triple> edges,
                                 Family family = Family::custom,
                                 std::optional<Vertex> limit = std::nullopt);

  const std::vector<Triple>& edges() const { return edges_; }
  const std::vector<Vertex>& support() const { return support_; }
  Family family() const { return family_; }
  std::optional<Vertex> limit() const { return limit_; }

  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  bool covers(Vertex v) const;
  /// Position of v in support(), if covered.
  std::optional<std::uint32_t> support_index(Vertex v) const;

  bool contains_edge(const Triple& t) const;

  /// Ids (indices into edges()) of the edges containing v, ascending.
  std::span<const std::uint32_t> incident_edges(Vertex v) const;

  /// Ids of the edges containing both x and y, ascending.
  std::span<const std::uint32_t> edges_with_pair(Vertex x, Vertex y) const;
  bool pair_covered(Vertex x, Vertex y) const;

 private:
  struct LazyIndex;

  std::vector<Triple> edges_;    // lexicographically sorted, no duplicates
  std::vector<Vertex> support_;  // sorted ascending
  Family family_ = Family::custom;
  std::optional<Vertex> limit_;
  std::shared_ptr<LazyIndex> lazy_;

  const LazyIndex& incidence() const;
  const LazyIndex& pair_index() const;
};

/// All primitive Pythagorean triples with every member <= limit, via the
/// Euclid parametrization (m^2 - n^2, 2mn, m^2 + n^2) over coprime m > n
/// of opposite parity.
TripleSystem generate_prim(Vertex limit);

/// All Pythagorean triples with hypotenuse <= limit (the union of the
/// d-dilates of the primitive system).
TripleSystem generate_pyth(Vertex limit);

/// All {a, b, a+b} with a < b and a + b <= limit. Requires limit >= 3.
TripleSystem generate_schur(Vertex limit);

/// Returns the first pair of distinct edges sharing at least two vertices,
/// scanning edges in canonical order, or nullopt if the system is linear.
std::optional<std::pair<Triple, Triple>> is_linear(const TripleSystem& sys);

/// The pairs completing a vertex to an edge (the star of the vertex).
struct LinkGraph {
  Vertex center = 0;
  std::vector<VertexPair> pairs;  // sorted, each pair ascending
};

LinkGraph link(const TripleSystem& sys, Vertex v);

/// The graph of all pairs contained in some edge (the 1-skeleton).
struct ShadowGraph {
  std::vector<Vertex> vertices;
  std::vector<VertexPair> pairs;  // sorted, each pair ascending
};

ShadowGraph shadow(const TripleSystem& sys);

}  // namespace triples
