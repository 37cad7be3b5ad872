#pragma once

// Brute-force references and fixtures shared by the test binaries.
// Everything here trades speed for obviousness.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "triples/coloring.hpp"
#include "triples/core.hpp"
#include "triples/properties.hpp"
#include "triples/rng.hpp"

namespace testsupport {

using triples::Coloring;
using triples::Family;
using triples::Triple;
using triples::TripleSystem;
using triples::Vertex;

inline Vertex exact_sqrt(Vertex n) {
  auto r = static_cast<Vertex>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n ? r : -1;
}

inline std::vector<Triple> brute_pyth_edges(Vertex limit) {
  std::vector<Triple> out;
  for (Vertex a = 1; a <= limit; ++a)
    for (Vertex b = a + 1; b <= limit; ++b) {
      const Vertex c = exact_sqrt(a * a + b * b);
      if (c > 0 && c <= limit) out.push_back(Triple{a, b, c});
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Triple> brute_prim_edges(Vertex limit) {
  std::vector<Triple> out;
  for (const Triple& t : brute_pyth_edges(limit))
    if (std::gcd(t.a, t.b) == 1) out.push_back(t);
  return out;
}

inline std::vector<Triple> brute_schur_edges(Vertex limit) {
  std::vector<Triple> out;
  for (Vertex a = 1; a <= limit; ++a)
    for (Vertex b = a + 1; a + b <= limit; ++b) out.push_back(Triple{a, b, a + b});
  std::sort(out.begin(), out.end());
  return out;
}

// 7-point projective plane over GF(2).
inline TripleSystem fano_plane() {
  return TripleSystem::from_edges({Triple{1, 2, 3}, Triple{1, 4, 5}, Triple{1, 6, 7},
                                   Triple{2, 4, 6}, Triple{2, 5, 7}, Triple{3, 4, 7},
                                   Triple{3, 5, 6}});
}

// Affine plane of order 3 on the 3x3 grid 1..9.
inline TripleSystem sts9() {
  return TripleSystem::from_edges(
      {Triple{1, 2, 3}, Triple{4, 5, 6}, Triple{7, 8, 9}, Triple{1, 4, 7},
       Triple{2, 5, 8}, Triple{3, 6, 9}, Triple{1, 5, 9}, Triple{2, 6, 7},
       Triple{3, 4, 8}, Triple{1, 6, 8}, Triple{2, 4, 9}, Triple{3, 5, 7}});
}

// Cyclic system on 1..13 from the base blocks {0,1,4} and {0,2,7} mod 13.
inline TripleSystem sts13() {
  std::vector<Triple> edges;
  for (Vertex s = 0; s < 13; ++s) {
    auto shifted = [&](Vertex x, Vertex y, Vertex z) {
      return Triple::of((x + s) % 13 + 1, (y + s) % 13 + 1, (z + s) % 13 + 1);
    };
    edges.push_back(shifted(0, 1, 4));
    edges.push_back(shifted(0, 2, 7));
  }
  return TripleSystem::from_edges(std::move(edges));
}

// Projective space PG(3,2): lines {x, y, x xor y} on 1..15.
inline TripleSystem sts15() {
  std::vector<Triple> edges;
  for (Vertex x = 1; x <= 15; ++x)
    for (Vertex y = x + 1; y <= 15; ++y) {
      const Vertex z = x ^ y;
      if (z > y) edges.push_back(Triple{x, y, z});
    }
  return TripleSystem::from_edges(std::move(edges));
}

inline TripleSystem random_system(triples::Rng& rng, Vertex max_vertex, double density) {
  std::vector<Triple> edges;
  for (Vertex a = 1; a + 2 <= max_vertex; ++a)
    for (Vertex b = a + 1; b + 1 <= max_vertex; ++b)
      for (Vertex c = b + 1; c <= max_vertex; ++c)
        if (rng.unit() < density) edges.push_back(Triple{a, b, c});
  return TripleSystem::from_edges(std::move(edges));
}

inline bool violates(const Triple& e, const Triple& f, triples::SumProperty p) {
  switch (p) {
    case triples::SumProperty::sum: return triples::violates_sum(e, f);
    case triples::SumProperty::upper_sum: return triples::violates_upper_sum(e, f);
    default: return triples::violates_lower_sum(e, f);
  }
}

// Lexicographically first violating ordered pair, scanning i then j.
inline std::optional<std::pair<Triple, Triple>> brute_violation(const TripleSystem& sys,
                                                                triples::SumProperty p) {
  const auto& edges = sys.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = 0; j < edges.size(); ++j)
      if (j != i && violates(edges[i], edges[j], p)) return std::make_pair(edges[i], edges[j]);
  return std::nullopt;
}

// True when the edges cover every pair of verts exactly once and nothing else.
inline bool covers_pairs_exactly_once(const std::vector<Triple>& edges,
                                      const std::vector<Vertex>& verts) {
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const Triple& t : edges) {
    for (auto [x, y] : {std::pair{t.a, t.b}, std::pair{t.a, t.c}, std::pair{t.b, t.c}}) {
      if (!std::binary_search(verts.begin(), verts.end(), x) ||
          !std::binary_search(verts.begin(), verts.end(), y))
        return false;
      if (!seen.emplace(x, y).second) return false;
    }
  }
  return seen.size() == verts.size() * (verts.size() - 1) / 2;
}

inline std::vector<Triple> induced_edges(const TripleSystem& sys,
                                         const std::vector<Vertex>& verts) {
  std::vector<Triple> out;
  for (const Triple& t : sys.edges())
    if (std::binary_search(verts.begin(), verts.end(), t.a) &&
        std::binary_search(verts.begin(), verts.end(), t.b) &&
        std::binary_search(verts.begin(), verts.end(), t.c))
      out.push_back(t);
  return out;
}

namespace detail {
inline bool cover_pairs(const std::vector<Triple>& pool,
                        std::set<std::pair<Vertex, Vertex>>& uncovered) {
  if (uncovered.empty()) return true;
  const auto [x, y] = *uncovered.begin();
  for (const Triple& t : pool) {
    if (!(t.contains(x) && t.contains(y))) continue;
    const std::pair<Vertex, Vertex> p1{std::min(t.a, t.b), std::max(t.a, t.b)};
    const std::pair<Vertex, Vertex> p2{std::min(t.a, t.c), std::max(t.a, t.c)};
    const std::pair<Vertex, Vertex> p3{std::min(t.b, t.c), std::max(t.b, t.c)};
    if (!uncovered.count(p1) || !uncovered.count(p2) || !uncovered.count(p3)) continue;
    uncovered.erase(p1);
    uncovered.erase(p2);
    uncovered.erase(p3);
    if (cover_pairs(pool, uncovered)) return true;
    uncovered.insert(p1);
    uncovered.insert(p2);
    uncovered.insert(p3);
  }
  return false;
}
}  // namespace detail

// True when some subset of the induced edges is a Steiner system on verts.
inline bool carries_steiner(const TripleSystem& sys, const std::vector<Vertex>& verts) {
  const std::vector<Triple> pool = induced_edges(sys, verts);
  if (3 * pool.size() < verts.size() * (verts.size() - 1) / 2) return false;
  std::set<std::pair<Vertex, Vertex>> uncovered;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) uncovered.emplace(verts[i], verts[j]);
  return detail::cover_pairs(pool, uncovered);
}

// All order-sized vertex sets carrying a Steiner system, by subset scan.
inline std::vector<std::vector<Vertex>> brute_sts_subsystems(const TripleSystem& sys,
                                                             int order) {
  const auto& sup = sys.support();
  std::vector<std::vector<Vertex>> found;
  if (static_cast<int>(sup.size()) < order) return found;
  std::vector<std::size_t> pick(order);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<Vertex> verts(order);
    for (int i = 0; i < order; ++i) verts[i] = sup[pick[i]];
    if (carries_steiner(sys, verts)) found.push_back(verts);
    int i = order - 1;
    while (i >= 0 && pick[i] == sup.size() - order + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < order; ++j) pick[j] = pick[j - 1] + 1;
  }
  return found;
}

inline bool brute_two_colorable(const TripleSystem& sys) {
  const auto& sup = sys.support();
  if (sup.size() > 25) throw std::invalid_argument("brute_two_colorable: support too large");
  std::vector<std::array<std::uint32_t, 3>> ix;
  ix.reserve(sys.edge_count());
  for (const Triple& t : sys.edges())
    ix.push_back({*sys.support_index(t.a), *sys.support_index(t.b), *sys.support_index(t.c)});
  const std::uint32_t total = 1u << sup.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    bool ok = true;
    for (const auto& e : ix) {
      const int s = ((mask >> e[0]) & 1) + ((mask >> e[1]) & 1) + ((mask >> e[2]) & 1);
      if (s == 0 || s == 3) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

inline std::size_t naive_conflicts(const TripleSystem& sys, const Coloring& col) {
  std::size_t n = 0;
  for (const Triple& t : sys.edges()) {
    const auto x = col.color_of(t.a), y = col.color_of(t.b), z = col.color_of(t.c);
    if (x && y && z && *x == *y && *y == *z) ++n;
  }
  return n;
}

}  // namespace testsupport
