#include "triples/cnf.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace triples {

CnfDocument cnf_document(const TripleSystem& sys) {
  CnfDocument doc;
  if (!sys.support().empty()) doc.variable_count = sys.support().back();
  doc.clauses.reserve(sys.edge_count() * 2);
  for (const Triple& t : sys.edges()) {
    doc.clauses.push_back({t.a, t.b, t.c});
    doc.clauses.push_back({-t.a, -t.b, -t.c});
  }
  return doc;
}

std::string dimacs_text(const CnfDocument& doc) {
  std::ostringstream out;
  out << "p cnf " << doc.variable_count << ' ' << doc.clauses.size() << '\n';
  for (const auto& clause : doc.clauses) {
    for (Vertex lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

std::vector<Vertex> read_model(std::istream& in) {
  std::vector<Vertex> literals;
  std::string line;
  bool terminated = false;
  while (!terminated && std::getline(in, line)) {
    std::istringstream ls(line);
    std::string token;
    bool first = true;
    while (ls >> token) {
      if (first && (token == "c" || token == "s")) break;  // comment / status line
      if (first && token == "v") {
        first = false;
        continue;
      }
      first = false;
      Vertex lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stoll(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw std::runtime_error("model: bad literal '" + token + "'");
      }
      if (lit == 0) {
        terminated = true;
        break;
      }
      literals.push_back(lit);
    }
  }
  return literals;
}

Coloring model_coloring(const std::vector<Vertex>& literals, const TripleSystem& sys) {
  std::unordered_map<Vertex, int> value;
  value.reserve(literals.size());
  for (Vertex lit : literals) {
    if (lit == 0) continue;
    value[lit > 0 ? lit : -lit] = lit > 0 ? 1 : 0;  // later literals win
  }
  Coloring col;
  col.color_count = 2;
  col.limit = sys.limit();
  col.assignments.reserve(sys.support().size());
  for (Vertex v : sys.support()) {
    auto it = value.find(v);
    if (it == value.end())
      throw std::runtime_error("model assigns no value to vertex " + std::to_string(v));
    col.assignments.emplace_back(v, it->second);
  }
  return col;
}

}  // namespace triples
