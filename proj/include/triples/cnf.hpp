#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "triples/coloring.hpp"
#include "triples/core.hpp"

namespace triples {

/// 2-coloring feasibility as CNF: variable n stands for integer n being
/// colored 1; each edge contributes one all-positive and one all-negative
/// clause.
struct CnfDocument {
  Vertex variable_count = 0;  // max element of the support
  std::vector<std::vector<Vertex>> clauses;
};

CnfDocument cnf_document(const TripleSystem& sys);

/// DIMACS text: "p cnf <vars> <clauses>" then one 0-terminated clause per
/// line, edges in canonical order, positive clause before negative.
std::string dimacs_text(const CnfDocument& doc);

/// Reads a solver model: whitespace-separated signed literals terminated by
/// 0. Lines starting with 'c' or 's' are skipped, a leading 'v' per line is
/// allowed.
std::vector<Vertex> read_model(std::istream& in);

/// Positive literal -> color 1, negative -> color 0. Every covered vertex
/// must appear; a missing one raises std::runtime_error naming it.
Coloring model_coloring(const std::vector<Vertex>& literals, const TripleSystem& sys);

}  // namespace triples
