#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "triples/core.hpp"

namespace triples {

enum class SumProperty { sum, upper_sum, lower_sum };

std::string_view property_name(SumProperty p);  // "sum", "upper-sum", "lower-sum"

struct PropertyVerdict {
  SumProperty property = SumProperty::sum;
  bool holds = true;
  std::optional<std::pair<Triple, Triple>> witness;
};

/// Violation predicates over an ordered pair of distinct edges, each written
/// (min, mid, max). A pair violates when the premise holds and the conclusion
/// fails; an edge paired with itself never violates.
bool violates_sum(const Triple& e, const Triple& f);        // e.a <= f.a, e.b < f.b, yet e.c >= f.c
bool violates_upper_sum(const Triple& e, const Triple& f);  // shared min, e.b > f.b, yet e.c <= f.c
bool violates_lower_sum(const Triple& e, const Triple& f);  // shared max, e.a >= f.a, yet e.b >= f.b

/// Each check quantifies over all ordered pairs of distinct edges and, when
/// the property fails, reports the lexicographically first violating pair.
PropertyVerdict check_sum(const TripleSystem& sys);
PropertyVerdict check_upper_sum(const TripleSystem& sys);
PropertyVerdict check_lower_sum(const TripleSystem& sys);

PropertyVerdict check_property(const TripleSystem& sys, SumProperty p);

}  // namespace triples
