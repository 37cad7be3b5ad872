#include "triples/properties.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

namespace triples {

namespace {

constexpr Vertex kNegInf = std::numeric_limits<Vertex>::min();

// Fenwick tree over value ranks supporting prefix maxima.
class PrefixMax {
 public:
  explicit PrefixMax(std::size_t n) : tree_(n + 1, kNegInf) {}

  void raise(std::size_t rank, Vertex value) {
    for (std::size_t i = rank + 1; i < tree_.size(); i += i & (~i + 1))
      tree_[i] = std::max(tree_[i], value);
  }

  // max over ranks [0, rank]
  Vertex query(std::size_t rank) const {
    Vertex best = kNegInf;
    for (std::size_t i = rank + 1; i > 0; i -= i & (~i + 1))
      best = std::max(best, tree_[i]);
    return best;
  }

 private:
  std::vector<Vertex> tree_;
};

bool sum_violation_exists(const std::vector<Triple>& edges) {
  if (edges.size() < 2) return false;
  std::vector<Vertex> a_values;
  a_values.reserve(edges.size());
  for (const Triple& t : edges) a_values.push_back(t.a);  // already ascending
  a_values.erase(std::unique(a_values.begin(), a_values.end()), a_values.end());
  auto a_rank = [&](Vertex a) {
    return static_cast<std::size_t>(
        std::lower_bound(a_values.begin(), a_values.end(), a) - a_values.begin());
  };

  std::vector<std::uint32_t> by_b(edges.size());
  std::iota(by_b.begin(), by_b.end(), 0u);
  std::stable_sort(by_b.begin(), by_b.end(), [&](std::uint32_t x, std::uint32_t y) {
    return edges[x].b < edges[y].b;
  });

  PrefixMax max_c(a_values.size());
  for (std::size_t i = 0; i < by_b.size();) {
    std::size_t j = i;
    while (j < by_b.size() && edges[by_b[j]].b == edges[by_b[i]].b) ++j;
    for (std::size_t k = i; k < j; ++k) {
      const Triple& f = edges[by_b[k]];
      if (max_c.query(a_rank(f.a)) >= f.c) return true;
    }
    for (std::size_t k = i; k < j; ++k) {
      const Triple& e = edges[by_b[k]];
      max_c.raise(a_rank(e.a), e.c);
    }
    i = j;
  }
  return false;
}

bool upper_violation_exists(const std::vector<Triple>& edges) {
  // Lex order keeps equal-a groups contiguous with b ascending inside.
  for (std::size_t i = 0; i < edges.size();) {
    std::size_t j = i;
    while (j < edges.size() && edges[j].a == edges[i].a) ++j;
    Vertex max_c_smaller_b = kNegInf;
    for (std::size_t k = i; k < j;) {
      std::size_t r = k;
      Vertex run_max = kNegInf;
      while (r < j && edges[r].b == edges[k].b) {
        if (max_c_smaller_b >= edges[r].c) return true;
        run_max = std::max(run_max, edges[r].c);
        ++r;
      }
      max_c_smaller_b = std::max(max_c_smaller_b, run_max);
      k = r;
    }
    i = j;
  }
  return false;
}

bool lower_violation_exists(const std::vector<Triple>& edges) {
  if (edges.size() < 2) return false;
  std::vector<std::uint32_t> by_c(edges.size());
  std::iota(by_c.begin(), by_c.end(), 0u);
  std::stable_sort(by_c.begin(), by_c.end(), [&](std::uint32_t x, std::uint32_t y) {
    return edges[x].c < edges[y].c;  // ties keep lex (a, b) order
  });
  for (std::size_t i = 0; i < by_c.size();) {
    std::size_t j = i;
    while (j < by_c.size() && edges[by_c[j]].c == edges[by_c[i]].c) ++j;
    Vertex min_b = std::numeric_limits<Vertex>::max();
    for (std::size_t k = i; k < j; ++k) {
      const Triple& e = edges[by_c[k]];
      if (min_b <= e.b) return true;
      min_b = std::min(min_b, e.b);
    }
    i = j;
  }
  return false;
}

template <typename Violates>
std::optional<std::pair<Triple, Triple>> first_witness(const std::vector<Triple>& edges,
                                                       Violates violates) {
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = 0; j < edges.size(); ++j)
      if (i != j && violates(edges[i], edges[j]))
        return std::make_pair(edges[i], edges[j]);
  return std::nullopt;
}

PropertyVerdict verdict_from(SumProperty p,
                             std::optional<std::pair<Triple, Triple>> witness) {
  PropertyVerdict v;
  v.property = p;
  v.holds = !witness.has_value();
  v.witness = std::move(witness);
  return v;
}

}  // namespace

std::string_view property_name(SumProperty p) {
  switch (p) {
    case SumProperty::sum: return "sum";
    case SumProperty::upper_sum: return "upper-sum";
    case SumProperty::lower_sum: return "lower-sum";
  }
  return "sum";
}

bool violates_sum(const Triple& e, const Triple& f) {
  return e.a <= f.a && e.b < f.b && e.c >= f.c;
}

bool violates_upper_sum(const Triple& e, const Triple& f) {
  return e.a == f.a && e.b > f.b && e.c <= f.c;
}

bool violates_lower_sum(const Triple& e, const Triple& f) {
  return !(e == f) && e.c == f.c && e.a >= f.a && e.b >= f.b;
}

PropertyVerdict check_sum(const TripleSystem& sys) {
  const auto& edges = sys.edges();
  if (!sum_violation_exists(edges)) return verdict_from(SumProperty::sum, std::nullopt);
  return verdict_from(SumProperty::sum, first_witness(edges, violates_sum));
}

PropertyVerdict check_upper_sum(const TripleSystem& sys) {
  const auto& edges = sys.edges();
  if (!upper_violation_exists(edges))
    return verdict_from(SumProperty::upper_sum, std::nullopt);
  return verdict_from(SumProperty::upper_sum, first_witness(edges, violates_upper_sum));
}

PropertyVerdict check_lower_sum(const TripleSystem& sys) {
  const auto& edges = sys.edges();
  if (!lower_violation_exists(edges))
    return verdict_from(SumProperty::lower_sum, std::nullopt);
  return verdict_from(SumProperty::lower_sum, first_witness(edges, violates_lower_sum));
}

PropertyVerdict check_property(const TripleSystem& sys, SumProperty p) {
  switch (p) {
    case SumProperty::sum: return check_sum(sys);
    case SumProperty::upper_sum: return check_upper_sum(sys);
    case SumProperty::lower_sum: return check_lower_sum(sys);
  }
  return check_sum(sys);
}

}  // namespace triples
