#include "triples/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace triples {

namespace {

// ---- bicycle search -------------------------------------------------------

using AdjMap = std::map<Vertex, std::vector<Vertex>>;

struct BicycleDfs {
  const AdjMap& adj_u;
  const AdjMap& adj_w;
  Vertex u, w;
  std::size_t min_len, max_len;
  std::set<Bicycle>& out;
  std::vector<Vertex> path;

  void run(Vertex z0) {
    path.assign(1, z0);
    extend();
  }

  void extend() {
    const std::size_t len = path.size();
    if (len % 2 == 0 && len >= min_len) {
      auto it = adj_w.find(path.back());
      if (it != adj_w.end() &&
          std::binary_search(it->second.begin(), it->second.end(), path.front()))
        out.insert(canonical_bicycle(u, w, path));
    }
    if (len == max_len) return;
    const AdjMap& next = (len % 2 == 1) ? adj_u : adj_w;  // pair (z_{len-1}, z_len)
    auto it = next.find(path.back());
    if (it == next.end()) return;
    for (Vertex t : it->second) {
      if (t <= path.front()) continue;
      if (std::find(path.begin(), path.end(), t) != path.end()) continue;
      path.push_back(t);
      extend();
      path.pop_back();
    }
  }
};

void add_link_pairs(const TripleSystem& sys, Vertex center, Vertex excluded, AdjMap& adj) {
  for (std::uint32_t e : sys.incident_edges(center)) {
    const Triple& t = sys.edges()[e];
    if (t.contains(excluded)) continue;
    const Vertex x = (t.a == center) ? t.b : t.a;
    const Vertex y = (t.c == center) ? t.b : t.c;
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  for (auto& [v, nbrs] : adj) std::sort(nbrs.begin(), nbrs.end());
}

void bicycles_for_antipodes(const TripleSystem& sys, Vertex u, Vertex w, int k_min,
                            int k_max, std::set<Bicycle>& out) {
  AdjMap adj_u, adj_w;
  add_link_pairs(sys, u, w, adj_u);
  if (adj_u.size() < 2 * static_cast<std::size_t>(k_min)) return;
  add_link_pairs(sys, w, u, adj_w);
  if (adj_w.size() < 2 * static_cast<std::size_t>(k_min)) return;

  BicycleDfs dfs{adj_u, adj_w, u, w,
                 2 * static_cast<std::size_t>(k_min),
                 2 * static_cast<std::size_t>(k_max), out, {}};
  for (const auto& [z0, nbrs] : adj_u)
    if (adj_w.count(z0)) dfs.run(z0);
}

// ---- STS subsystem search -------------------------------------------------

struct StsCompletion {
  const TripleSystem& sys;
  const std::vector<Vertex>& subset;  // ascending, size = order
  int order;
  std::uint64_t full_mask = 0;
  std::vector<std::uint64_t> candidate_masks;

  int index_of(Vertex v) const {
    return static_cast<int>(std::lower_bound(subset.begin(), subset.end(), v) -
                            subset.begin());
  }

  std::uint64_t slot(int i, int j) const {  // i < j
    return std::uint64_t{1} << (i * order - i * (i + 1) / 2 + (j - i - 1));
  }

  std::uint64_t edge_mask(const Triple& t) const {
    const int ia = index_of(t.a), ib = index_of(t.b), ic = index_of(t.c);
    return slot(ia, ib) | slot(ia, ic) | slot(ib, ic);
  }

  bool complete(Vertex apex, const std::vector<VertexPair>& matching) {
    const int n = order;
    full_mask = (n * (n - 1) / 2 == 64)
                    ? ~std::uint64_t{0}
                    : (std::uint64_t{1} << (n * (n - 1) / 2)) - 1;
    std::uint64_t covered = 0;
    const int ia = index_of(apex);
    for (int j = 0; j < n; ++j)
      if (j != ia) covered |= slot(std::min(ia, j), std::max(ia, j));
    for (const auto& [x, y] : matching) covered |= slot(index_of(x), index_of(y));

    candidate_masks.clear();
    std::set<std::uint32_t> seen;
    for (int i = 0; i < n; ++i) {
      if (subset[i] == apex) continue;
      for (int j = i + 1; j < n; ++j) {
        if (subset[j] == apex) continue;
        for (std::uint32_t e : sys.edges_with_pair(subset[i], subset[j])) {
          const Triple& t = sys.edges()[e];
          if (t.contains(apex)) continue;
          if (!std::binary_search(subset.begin(), subset.end(), t.a) ||
              !std::binary_search(subset.begin(), subset.end(), t.b) ||
              !std::binary_search(subset.begin(), subset.end(), t.c))
            continue;
          if (seen.insert(e).second) candidate_masks.push_back(edge_mask(t));
        }
      }
    }
    return cover(covered);
  }

  bool cover(std::uint64_t covered) {
    if (covered == full_mask) return true;
    const int lowest = std::countr_one(covered);  // first uncovered slot
    for (std::uint64_t m : candidate_masks) {
      if (!((m >> lowest) & 1) || (m & covered)) continue;
      if (cover(covered | m)) return true;
    }
    return false;
  }
};

struct StsSeeder {
  const TripleSystem& sys;
  int order;
  int matching_size;
  Vertex apex = 0;
  std::vector<VertexPair> pairs;  // candidate link pairs above the apex
  std::vector<VertexPair> chosen;
  std::set<std::vector<Vertex>>& results;

  void seed(Vertex v) {
    apex = v;
    pairs.clear();
    for (const auto& p : link(sys, v).pairs)
      if (p.first > v) pairs.push_back(p);
    if (pairs.size() < static_cast<std::size_t>(matching_size)) return;
    chosen.clear();
    choose(0);
  }

  bool compatible(const VertexPair& p) const {
    for (const auto& q : chosen) {
      if (p.first == q.first || p.first == q.second || p.second == q.first ||
          p.second == q.second)
        return false;
      if (!sys.pair_covered(p.first, q.first) || !sys.pair_covered(p.first, q.second) ||
          !sys.pair_covered(p.second, q.first) || !sys.pair_covered(p.second, q.second))
        return false;
    }
    return true;
  }

  void choose(std::size_t start) {
    if (chosen.size() == static_cast<std::size_t>(matching_size)) {
      std::vector<Vertex> subset;
      subset.reserve(order);
      subset.push_back(apex);
      for (const auto& [x, y] : chosen) {
        subset.push_back(x);
        subset.push_back(y);
      }
      std::sort(subset.begin(), subset.end());
      if (results.count(subset)) return;
      StsCompletion completion{sys, subset, order};
      if (completion.complete(apex, chosen)) results.insert(subset);
      return;
    }
    const std::size_t missing = matching_size - chosen.size();
    for (std::size_t i = start; i + missing <= pairs.size(); ++i) {
      if (!compatible(pairs[i])) continue;
      chosen.push_back(pairs[i]);
      choose(i + 1);
      chosen.pop_back();
    }
  }
};

// ---- near-Fano search -----------------------------------------------------

// Fano plane minus one line, edges ordered so each one shares vertices with
// its predecessors; vertex degrees 3,3,2,3,2,2,3.
constexpr int kNearFanoEdge[6][3] = {{1, 2, 3}, {1, 4, 5}, {2, 4, 6},
                                     {3, 4, 7}, {2, 5, 7}, {1, 6, 7}};
constexpr int kNearFanoDegree[8] = {0, 3, 3, 2, 3, 2, 2, 3};

struct NearFanoSearch {
  const TripleSystem& sys;
  std::array<Vertex, 8> image{};  // pattern vertex -> host vertex, 0 = unset
  std::vector<Triple> mapped;
  std::set<std::vector<Triple>>& edge_sets;

  bool used(Vertex h) const {
    for (Vertex v : image)
      if (v == h) return true;
    return false;
  }

  bool assignable(int p, Vertex h) const {
    return !used(h) && sys.incident_edges(h).size() >=
                           static_cast<std::size_t>(kNearFanoDegree[p]);
  }

  void record() {
    std::vector<Triple> es = mapped;
    std::sort(es.begin(), es.end());
    edge_sets.insert(std::move(es));
  }

  void match(int ei) {
    if (ei == 6) {
      record();
      return;
    }
    const int* pe = kNearFanoEdge[ei];
    int unset[3], mapped_count = 0, unset_count = 0;
    Vertex host_of[3];
    for (int s = 0; s < 3; ++s) {
      if (image[pe[s]] == 0)
        unset[unset_count++] = pe[s];
      else
        host_of[mapped_count++] = image[pe[s]];
    }
    if (unset_count == 0) {
      const Triple t = Triple::of(host_of[0], host_of[1], host_of[2]);
      if (!sys.contains_edge(t)) return;
      mapped.push_back(t);
      match(ei + 1);
      mapped.pop_back();
      return;
    }
    if (unset_count == 3) {
      for (const Triple& h : sys.edges()) {
        const Vertex hv[3] = {h.a, h.b, h.c};
        constexpr int kPerm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                     {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (const auto& perm : kPerm) try_assign(ei, h, unset, 3, {hv[perm[0]], hv[perm[1]], hv[perm[2]]});
      }
      return;
    }
    if (unset_count == 1) {
      for (std::uint32_t e : sys.edges_with_pair(host_of[0], host_of[1])) {
        const Triple& h = sys.edges()[e];
        try_assign(ei, h, unset, 1, {h.third(host_of[0], host_of[1]), 0, 0});
      }
      return;
    }
    // one pattern vertex mapped, two fresh
    for (std::uint32_t e : sys.incident_edges(host_of[0])) {
      const Triple& h = sys.edges()[e];
      Vertex x = (h.a == host_of[0]) ? h.b : h.a;
      Vertex y = (h.c == host_of[0]) ? h.b : h.c;
      try_assign(ei, h, unset, 2, {x, y, 0});
      try_assign(ei, h, unset, 2, {y, x, 0});
    }
  }

  void try_assign(int ei, const Triple& host_edge, const int* unset, int count,
                  std::array<Vertex, 3> hosts) {
    for (int s = 0; s < count; ++s) {
      if (!assignable(unset[s], hosts[s])) {
        for (int r = 0; r < s; ++r) image[unset[r]] = 0;
        return;
      }
      for (int r = 0; r < s; ++r)
        if (hosts[r] == hosts[s]) {
          for (int q = 0; q < s; ++q) image[unset[q]] = 0;
          return;
        }
      image[unset[s]] = hosts[s];
    }
    mapped.push_back(host_edge);
    match(ei + 1);
    mapped.pop_back();
    for (int s = 0; s < count; ++s) image[unset[s]] = 0;
  }
};

// ---- shadow clique search -------------------------------------------------

struct CliqueSearch {
  std::size_t n = 0, words = 0, cap = 0;
  std::vector<std::uint64_t> adj;  // n rows of `words` words
  std::vector<std::uint32_t> current, best;
  bool cap_hit = false;

  const std::uint64_t* row(std::size_t v) const { return adj.data() + v * words; }

  static bool test(const std::uint64_t* set, std::size_t v) {
    return (set[v >> 6] >> (v & 63)) & 1;
  }
  static void clear(std::uint64_t* set, std::size_t v) { set[v >> 6] &= ~(1ull << (v & 63)); }
  static void put(std::uint64_t* set, std::size_t v) { set[v >> 6] |= 1ull << (v & 63); }

  std::size_t count(const std::uint64_t* set) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words; ++i) c += std::popcount(set[i]);
    return c;
  }

  std::size_t count_and(const std::uint64_t* a, const std::uint64_t* b) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words; ++i) c += std::popcount(a[i] & b[i]);
    return c;
  }

  void expand(std::vector<std::uint64_t>& p) {
    if (cap_hit) return;
    if (current.size() > best.size()) {
      best = current;
      if (best.size() >= cap) {
        cap_hit = true;
        return;
      }
    }
    const std::size_t p_count = count(p.data());
    if (p_count == 0 || current.size() + p_count <= best.size()) return;

    // pivot with most candidates retained; branch only outside its row
    std::size_t pivot = n, pivot_score = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (!test(p.data(), v)) continue;
      const std::size_t score = count_and(p.data(), row(v));
      if (pivot == n || score > pivot_score) {
        pivot = v;
        pivot_score = score;
      }
    }
    for (std::size_t v = 0; v < n && !cap_hit; ++v) {
      if (!test(p.data(), v) || test(row(pivot), v)) continue;
      std::vector<std::uint64_t> np(words);
      for (std::size_t i = 0; i < words; ++i) np[i] = p[i] & row(v)[i];
      current.push_back(static_cast<std::uint32_t>(v));
      expand(np);
      current.pop_back();
      clear(p.data(), v);
    }
  }
};

}  // namespace

std::vector<Triple> Bicycle::edges() const {
  const int n = 2 * k;
  std::vector<Triple> out;
  out.reserve(n);
  for (int j = 0; j < k; ++j) {
    out.push_back(Triple::of(antipodes.first, cycle[2 * j], cycle[2 * j + 1]));
    out.push_back(Triple::of(antipodes.second, cycle[(2 * j + n - 1) % n], cycle[2 * j]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Bicycle canonical_bicycle(Vertex u, Vertex w, std::vector<Vertex> cycle) {
  const int n = static_cast<int>(cycle.size());
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("bicycle cycle length must be even and at least 4");
  if (u == w) throw std::invalid_argument("bicycle antipodes must differ");
  std::vector<Vertex> all(cycle);
  all.push_back(u);
  all.push_back(w);
  std::sort(all.begin(), all.end());
  if (all.front() <= 0) throw std::invalid_argument("bicycle vertices must be positive");
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw std::invalid_argument("bicycle vertices must be distinct");

  // The smaller antipode owns the even-position pairs of the canonical cycle.
  // Among the rotations/reflections preserving that role assignment, take the
  // lexicographically least cycle; its first vertex is the smallest one.
  const Vertex lo = std::min(u, w);
  std::vector<Vertex> best, cand(cycle.size());
  for (int r = 0; r < n; ++r) {
    for (int d : {1, -1}) {
      const bool first_pair_is_u = (d == 1) ? (r % 2 == 0) : (r % 2 == 1);
      if ((first_pair_is_u ? u : w) != lo) continue;
      for (int i = 0; i < n; ++i) cand[i] = cycle[((r + d * i) % n + n) % n];
      if (best.empty() || cand < best) best = cand;
    }
  }
  Bicycle bc;
  bc.k = n / 2;
  bc.antipodes = {lo, std::max(u, w)};
  bc.cycle = std::move(best);
  return bc;
}

bool bicycle_in_system(const TripleSystem& sys, const Bicycle& bc) {
  if (bc.k < 2 || bc.cycle.size() != 2 * static_cast<std::size_t>(bc.k)) return false;
  std::vector<Vertex> all(bc.cycle);
  all.push_back(bc.antipodes.first);
  all.push_back(bc.antipodes.second);
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
  std::vector<Triple> es;
  try {
    es = bc.edges();
  } catch (const std::invalid_argument&) {
    return false;
  }
  if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
  for (const Triple& t : es)
    if (!sys.contains_edge(t)) return false;
  return true;
}

std::vector<Bicycle> find_bicycles(const TripleSystem& sys, int k_min, int k_max,
                                   std::optional<VertexPair> antipodes) {
  if (k_min < 2 || k_min > k_max)
    throw std::invalid_argument("find_bicycles: need 2 <= k_min <= k_max");
  std::set<Bicycle> found;
  if (antipodes) {
    auto [u, w] = *antipodes;
    if (u > w) std::swap(u, w);
    if (u != w && sys.covers(u) && sys.covers(w))
      bicycles_for_antipodes(sys, u, w, k_min, k_max, found);
  } else {
    const auto& sup = sys.support();
    std::vector<Vertex> busy;  // vertices with enough incident edges
    for (Vertex v : sup)
      if (sys.incident_edges(v).size() >= static_cast<std::size_t>(k_min))
        busy.push_back(v);
    for (std::size_t i = 0; i < busy.size(); ++i)
      for (std::size_t j = i + 1; j < busy.size(); ++j)
        bicycles_for_antipodes(sys, busy[i], busy[j], k_min, k_max, found);
  }
  return {found.begin(), found.end()};
}

std::vector<std::vector<Vertex>> find_sts_subsystems(const TripleSystem& sys, int order) {
  if (order != 7 && order != 9)
    throw std::invalid_argument("find_sts_subsystems: order must be 7 or 9");
  std::set<std::vector<Vertex>> results;
  StsSeeder seeder{sys, order, (order - 1) / 2, 0, {}, {}, results};
  for (Vertex v : sys.support()) seeder.seed(v);
  return {results.begin(), results.end()};
}

std::vector<NearFano> find_near_fano(const TripleSystem& sys) {
  std::set<std::vector<Triple>> edge_sets;
  NearFanoSearch search{sys, {}, {}, edge_sets};
  search.match(0);
  std::vector<NearFano> out;
  out.reserve(edge_sets.size());
  for (const auto& es : edge_sets) {
    NearFano nf;
    nf.edges = es;
    for (const Triple& t : es) {
      nf.vertices.push_back(t.a);
      nf.vertices.push_back(t.b);
      nf.vertices.push_back(t.c);
    }
    std::sort(nf.vertices.begin(), nf.vertices.end());
    nf.vertices.erase(std::unique(nf.vertices.begin(), nf.vertices.end()),
                      nf.vertices.end());
    out.push_back(std::move(nf));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_steiner(const TripleSystem& sys) {
  const std::size_t v = sys.support().size();
  return 6 * sys.edge_count() == v * (v - 1) && !is_linear(sys).has_value();
}

Bicycle extract_bicycle_from_sts(const TripleSystem& sys, Vertex v, Vertex w) {
  if (v == w || !sys.covers(v) || !sys.covers(w))
    throw std::invalid_argument(
        "extract_bicycle_from_sts: antipodes must be two distinct covered vertices");
  if (sys.edge_count() <= 1 || !is_steiner(sys))
    throw std::invalid_argument(
        "extract_bicycle_from_sts: input must be a Steiner triple system with more "
        "than one edge");
  const Triple& vw_edge = sys.edges()[sys.edges_with_pair(v, w).front()];
  const Vertex z = vw_edge.third(v, w);

  auto matching_avoiding = [&](Vertex center, Vertex other) {
    std::map<Vertex, Vertex> m;
    for (std::uint32_t e : sys.incident_edges(center)) {
      const Triple& t = sys.edges()[e];
      if (t.contains(other)) continue;
      const Vertex x = (t.a == center) ? t.b : t.a;
      const Vertex y = (t.c == center) ? t.b : t.c;
      m[x] = y;
      m[y] = x;
    }
    return m;
  };
  const auto m1 = matching_avoiding(v, w);
  const auto m2 = matching_avoiding(w, v);

  const Vertex start = m1.begin()->first;  // smallest vertex off {v, w, z}
  std::vector<Vertex> cycle{start};
  bool use_m1 = true;
  for (;;) {
    const auto& m = use_m1 ? m1 : m2;
    const Vertex next = m.at(cycle.back());
    if (next == start) break;
    cycle.push_back(next);
    use_m1 = !use_m1;
  }
  return canonical_bicycle(v, w, std::move(cycle));
}

ComponentReport components(const TripleSystem& sys) {
  const auto& sup = sys.support();
  std::vector<std::uint32_t> parent(sup.size());
  std::vector<std::uint32_t> rank(sup.size(), 0);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank[a] < rank[b]) std::swap(a, b);
    parent[b] = a;
    if (rank[a] == rank[b]) ++rank[a];
  };
  for (const Triple& t : sys.edges()) {
    const std::uint32_t ia = *sys.support_index(t.a);
    unite(ia, *sys.support_index(t.b));
    unite(ia, *sys.support_index(t.c));
  }

  ComponentReport report;
  std::unordered_map<std::uint32_t, std::size_t> slot_of_root;
  for (std::uint32_t i = 0; i < sup.size(); ++i) {
    const std::uint32_t root = find(i);
    auto [it, fresh] = slot_of_root.emplace(root, report.components.size());
    if (fresh) report.components.emplace_back();
    report.components[it->second].push_back(sup[i]);
  }
  report.component_count = report.components.size();
  return report;
}

CliqueReport max_clique_shadow(const TripleSystem& sys, std::size_t size_cap) {
  if (size_cap < 3)
    throw std::invalid_argument("max_clique_shadow: size_cap must be at least 3");
  CliqueReport report;
  const auto& sup = sys.support();
  if (sup.empty()) return report;

  CliqueSearch cs;
  cs.n = sup.size();
  cs.words = (cs.n + 63) / 64;
  cs.cap = size_cap;
  cs.adj.assign(cs.n * cs.words, 0);
  auto connect = [&](std::uint32_t i, std::uint32_t j) {
    cs.adj[i * cs.words + (j >> 6)] |= 1ull << (j & 63);
    cs.adj[j * cs.words + (i >> 6)] |= 1ull << (i & 63);
  };
  for (const Triple& t : sys.edges()) {
    const std::uint32_t ia = *sys.support_index(t.a);
    const std::uint32_t ib = *sys.support_index(t.b);
    const std::uint32_t ic = *sys.support_index(t.c);
    connect(ia, ib);
    connect(ia, ic);
    connect(ib, ic);
  }
  std::vector<std::uint64_t> p(cs.words, 0);
  for (std::size_t v = 0; v < cs.n; ++v) CliqueSearch::put(p.data(), v);
  cs.expand(p);

  report.size = cs.best.size();
  std::sort(cs.best.begin(), cs.best.end());
  for (std::uint32_t i : cs.best) report.witness.push_back(sup[i]);
  return report;
}

}  // namespace triples
