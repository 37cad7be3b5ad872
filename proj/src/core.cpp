#include "triples/core.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace triples {

namespace {

std::string edge_str(const Triple& t) {
  return "(" + std::to_string(t.a) + " " + std::to_string(t.b) + " " +
         std::to_string(t.c) + ")";
}

std::uint64_t pair_key(std::uint32_t lo, std::uint32_t hi) {
  return (static_cast<std::uint64_t>(lo) << 32) | hi;
}

}  // namespace

Triple Triple::of(Vertex x, Vertex y, Vertex z) {
  Triple t{x, y, z};
  if (t.a > t.b) std::swap(t.a, t.b);
  if (t.b > t.c) std::swap(t.b, t.c);
  if (t.a > t.b) std::swap(t.a, t.b);
  if (t.a <= 0) throw std::invalid_argument("triple members must be positive: " + edge_str(t));
  if (t.a == t.b || t.b == t.c)
    throw std::invalid_argument("triple members must be distinct: " + edge_str(t));
  return t;
}

Vertex Triple::third(Vertex x, Vertex y) const {
  if (!contains(x) || !contains(y) || x == y)
    throw std::invalid_argument("third(): arguments must be two distinct members");
  return a + b + c - x - y;
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::pyth: return "pyth";
    case Family::prim: return "prim";
    case Family::schur: return "schur";
    case Family::custom: return "custom";
  }
  return "custom";
}

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "pyth") return Family::pyth;
  if (name == "prim") return Family::prim;
  if (name == "schur") return Family::schur;
  if (name == "custom") return Family::custom;
  return std::nullopt;
}

struct TripleSystem::LazyIndex {
  std::once_flag incidence_once;
  std::vector<std::uint32_t> inc_offsets;  // CSR over support indices
  std::vector<std::uint32_t> inc_edges;

  std::once_flag pair_once;
  std::vector<std::uint64_t> pair_keys;  // sorted; parallel to pair_edges
  std::vector<std::uint32_t> pair_edges;
};

TripleSystem::TripleSystem() : lazy_(std::make_shared<LazyIndex>()) {}

TripleSystem TripleSystem::from_edges(std::vector<Triple> edges, Family family,
                                      std::optional<Vertex> limit) {
  for (const Triple& t : edges) {
    if (!(0 < t.a && t.a < t.b && t.b < t.c))
      throw std::invalid_argument("edge not strictly ascending positive: " + edge_str(t));
    if (family == Family::pyth || family == Family::prim) {
      if (t.a * t.a + t.b * t.b != t.c * t.c)
        throw std::invalid_argument("edge violates a^2+b^2=c^2: " + edge_str(t));
      if (family == Family::prim && std::gcd(std::gcd(t.a, t.b), t.c) != 1)
        throw std::invalid_argument("edge is not primitive: " + edge_str(t));
    } else if (family == Family::schur) {
      if (t.a + t.b != t.c)
        throw std::invalid_argument("edge violates a+b=c: " + edge_str(t));
    }
    if (limit && t.c > *limit)
      throw std::invalid_argument("edge exceeds limit: " + edge_str(t));
  }
  if (!std::is_sorted(edges.begin(), edges.end())) std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  TripleSystem sys;
  sys.family_ = family;
  sys.limit_ = limit;

  // Support = union of edge vertices. Small labels go through a bitmap,
  // arbitrary labels through sort+unique.
  Vertex max_elem = 0;
  for (const Triple& t : edges) max_elem = std::max(max_elem, t.c);
  if (max_elem > 0 && max_elem <= (Vertex{1} << 26)) {
    std::vector<bool> seen(static_cast<std::size_t>(max_elem) + 1, false);
    for (const Triple& t : edges) {
      seen[static_cast<std::size_t>(t.a)] = true;
      seen[static_cast<std::size_t>(t.b)] = true;
      seen[static_cast<std::size_t>(t.c)] = true;
    }
    for (Vertex v = 1; v <= max_elem; ++v)
      if (seen[static_cast<std::size_t>(v)]) sys.support_.push_back(v);
  } else {
    sys.support_.reserve(edges.size() * 3);
    for (const Triple& t : edges) {
      sys.support_.push_back(t.a);
      sys.support_.push_back(t.b);
      sys.support_.push_back(t.c);
    }
    std::sort(sys.support_.begin(), sys.support_.end());
    sys.support_.erase(std::unique(sys.support_.begin(), sys.support_.end()),
                       sys.support_.end());
  }
  sys.edges_ = std::move(edges);
  return sys;
}

bool TripleSystem::covers(Vertex v) const { return support_index(v).has_value(); }

std::optional<std::uint32_t> TripleSystem::support_index(Vertex v) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), v);
  if (it == support_.end() || *it != v) return std::nullopt;
  return static_cast<std::uint32_t>(it - support_.begin());
}

bool TripleSystem::contains_edge(const Triple& t) const {
  return std::binary_search(edges_.begin(), edges_.end(), t);
}

const TripleSystem::LazyIndex& TripleSystem::incidence() const {
  std::call_once(lazy_->incidence_once, [this] {
    LazyIndex& ix = *lazy_;
    const std::size_t n = support_.size();
    ix.inc_offsets.assign(n + 1, 0);
    for (const Triple& t : edges_) {
      ++ix.inc_offsets[*support_index(t.a) + 1];
      ++ix.inc_offsets[*support_index(t.b) + 1];
      ++ix.inc_offsets[*support_index(t.c) + 1];
    }
    for (std::size_t i = 1; i <= n; ++i) ix.inc_offsets[i] += ix.inc_offsets[i - 1];
    ix.inc_edges.resize(edges_.size() * 3);
    std::vector<std::uint32_t> cursor(ix.inc_offsets.begin(), ix.inc_offsets.end() - 1);
    for (std::uint32_t e = 0; e < edges_.size(); ++e) {
      const Triple& t = edges_[e];
      ix.inc_edges[cursor[*support_index(t.a)]++] = e;
      ix.inc_edges[cursor[*support_index(t.b)]++] = e;
      ix.inc_edges[cursor[*support_index(t.c)]++] = e;
    }
  });
  return *lazy_;
}

std::span<const std::uint32_t> TripleSystem::incident_edges(Vertex v) const {
  auto ixv = support_index(v);
  if (!ixv) return {};
  const LazyIndex& ix = incidence();
  return {ix.inc_edges.data() + ix.inc_offsets[*ixv],
          ix.inc_edges.data() + ix.inc_offsets[*ixv + 1]};
}

const TripleSystem::LazyIndex& TripleSystem::pair_index() const {
  std::call_once(lazy_->pair_once, [this] {
    LazyIndex& ix = *lazy_;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> entries;
    entries.reserve(edges_.size() * 3);
    for (std::uint32_t e = 0; e < edges_.size(); ++e) {
      const Triple& t = edges_[e];
      const std::uint32_t ia = *support_index(t.a);
      const std::uint32_t ib = *support_index(t.b);
      const std::uint32_t ic = *support_index(t.c);
      entries.emplace_back(pair_key(ia, ib), e);
      entries.emplace_back(pair_key(ia, ic), e);
      entries.emplace_back(pair_key(ib, ic), e);
    }
    std::sort(entries.begin(), entries.end());
    ix.pair_keys.reserve(entries.size());
    ix.pair_edges.reserve(entries.size());
    for (const auto& [key, e] : entries) {
      ix.pair_keys.push_back(key);
      ix.pair_edges.push_back(e);
    }
  });
  return *lazy_;
}

std::span<const std::uint32_t> TripleSystem::edges_with_pair(Vertex x, Vertex y) const {
  if (x == y) return {};
  auto ixx = support_index(x);
  auto ixy = support_index(y);
  if (!ixx || !ixy) return {};
  if (*ixx > *ixy) std::swap(*ixx, *ixy);
  const LazyIndex& ix = pair_index();
  auto [lo, hi] = std::equal_range(ix.pair_keys.begin(), ix.pair_keys.end(),
                                   pair_key(*ixx, *ixy));
  return {ix.pair_edges.data() + (lo - ix.pair_keys.begin()),
          ix.pair_edges.data() + (hi - ix.pair_keys.begin())};
}

bool TripleSystem::pair_covered(Vertex x, Vertex y) const {
  return !edges_with_pair(x, y).empty();
}

TripleSystem generate_prim(Vertex limit) {
  if (limit < 1) throw std::invalid_argument("generate_prim: limit must be >= 1");
  std::vector<Triple> edges;
  for (Vertex m = 2; m * m < limit; ++m) {
    for (Vertex n = 1; n < m; ++n) {
      if (((m - n) & 1) == 0 || std::gcd(m, n) != 1) continue;
      const Vertex c = m * m + n * n;
      if (c > limit) break;  // c grows with n
      Vertex a = m * m - n * n;
      Vertex b = 2 * m * n;
      if (a > b) std::swap(a, b);
      edges.push_back(Triple{a, b, c});
    }
  }
  return TripleSystem::from_edges(std::move(edges), Family::prim, limit);
}

TripleSystem generate_pyth(Vertex limit) {
  if (limit < 1) throw std::invalid_argument("generate_pyth: limit must be >= 1");
  std::vector<Triple> edges;
  for (Vertex m = 2; m * m < limit; ++m) {
    for (Vertex n = 1; n < m; ++n) {
      if (((m - n) & 1) == 0 || std::gcd(m, n) != 1) continue;
      const Vertex c = m * m + n * n;
      if (c > limit) break;
      Vertex a = m * m - n * n;
      Vertex b = 2 * m * n;
      if (a > b) std::swap(a, b);
      for (Vertex d = 1; d * c <= limit; ++d)
        edges.push_back(Triple{d * a, d * b, d * c});
    }
  }
  return TripleSystem::from_edges(std::move(edges), Family::pyth, limit);
}

TripleSystem generate_schur(Vertex limit) {
  if (limit < 3) throw std::invalid_argument("generate_schur: limit must be >= 3");
  std::vector<Triple> edges;
  std::size_t count = 0;
  for (Vertex a = 1; 2 * a + 1 <= limit; ++a) count += static_cast<std::size_t>(limit - 2 * a);
  edges.reserve(count);
  for (Vertex a = 1; 2 * a + 1 <= limit; ++a)
    for (Vertex b = a + 1; a + b <= limit; ++b)
      edges.push_back(Triple{a, b, a + b});
  return TripleSystem::from_edges(std::move(edges), Family::schur, limit);
}

std::optional<std::pair<Triple, Triple>> is_linear(const TripleSystem& sys) {
  // First collision in canonical scan order: edges lexicographically, the
  // three pairs of each edge in (ab, ac, bc) order.
  std::unordered_map<std::uint64_t, std::uint32_t> first_owner;
  first_owner.reserve(sys.edge_count() * 3 + 1);
  const auto& edges = sys.edges();
  for (std::uint32_t e = 0; e < edges.size(); ++e) {
    const Triple& t = edges[e];
    const std::uint32_t ia = *sys.support_index(t.a);
    const std::uint32_t ib = *sys.support_index(t.b);
    const std::uint32_t ic = *sys.support_index(t.c);
    for (std::uint64_t key : {pair_key(ia, ib), pair_key(ia, ic), pair_key(ib, ic)}) {
      auto [it, inserted] = first_owner.emplace(key, e);
      if (!inserted) return std::make_pair(edges[it->second], t);
    }
  }
  return std::nullopt;
}

LinkGraph link(const TripleSystem& sys, Vertex v) {
  LinkGraph lg;
  lg.center = v;
  for (std::uint32_t e : sys.incident_edges(v)) {
    const Triple& t = sys.edges()[e];
    Vertex x = 0, y = 0;
    if (t.a == v) {
      x = t.b;
      y = t.c;
    } else if (t.b == v) {
      x = t.a;
      y = t.c;
    } else {
      x = t.a;
      y = t.b;
    }
    lg.pairs.emplace_back(x, y);
  }
  std::sort(lg.pairs.begin(), lg.pairs.end());
  return lg;
}

ShadowGraph shadow(const TripleSystem& sys) {
  ShadowGraph sg;
  sg.vertices = sys.support();
  sg.pairs.reserve(sys.edge_count() * 3);
  for (const Triple& t : sys.edges()) {
    sg.pairs.emplace_back(t.a, t.b);
    sg.pairs.emplace_back(t.a, t.c);
    sg.pairs.emplace_back(t.b, t.c);
  }
  std::sort(sg.pairs.begin(), sg.pairs.end());
  sg.pairs.erase(std::unique(sg.pairs.begin(), sg.pairs.end()), sg.pairs.end());
  return sg;
}

}  // namespace triples
