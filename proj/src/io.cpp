#include "triples/io.hpp"

#include <cctype>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <vector>

namespace triples {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

bool significant(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return false;
    if (!std::isspace(static_cast<unsigned char>(ch))) return true;
  }
  return false;
}

// Reads consecutive whitespace-separated tokens; complains about leftovers.
template <typename... Ts>
void parse_fields(std::size_t line_no, const std::string& line, const char* shape,
                  Ts&... fields) {
  std::istringstream ls(line);
  const bool ok = (static_cast<bool>(ls >> fields) && ...);
  std::string extra;
  if (!ok || (ls >> extra)) fail(line_no, std::string("expected '") + shape + "'");
}

void validate_edge_line(std::size_t line_no, const Triple& t, Family family,
                        Vertex limit) {
  if (!(0 < t.a && t.a < t.b && t.b < t.c))
    fail(line_no, "edge must be strictly ascending positive");
  if ((family == Family::pyth || family == Family::prim) &&
      t.a * t.a + t.b * t.b != t.c * t.c)
    fail(line_no, "edge violates a^2+b^2=c^2");
  if (family == Family::prim && std::gcd(std::gcd(t.a, t.b), t.c) != 1)
    fail(line_no, "edge is not primitive");
  if (family == Family::schur && t.a + t.b != t.c)
    fail(line_no, "edge violates a+b=c");
  if (t.c > limit) fail(line_no, "edge exceeds the header limit");
}

}  // namespace

TripleSystem read_system(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  Family family = Family::custom;
  Vertex limit = 0;
  std::vector<Triple> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (!significant(line)) continue;
    if (!have_header) {
      std::string kw_family, tag, kw_limit;
      parse_fields(line_no, line, "family <tag> limit <N>", kw_family, tag, kw_limit,
                   limit);
      if (kw_family != "family" || kw_limit != "limit")
        fail(line_no, "expected 'family <tag> limit <N>'");
      const auto fam = family_from_name(tag);
      if (!fam) fail(line_no, "unknown family '" + tag + "'");
      if (limit < 0) fail(line_no, "limit must be nonnegative");
      family = *fam;
      have_header = true;
      continue;
    }
    Triple t;
    parse_fields(line_no, line, "a b c", t.a, t.b, t.c);
    validate_edge_line(line_no, t, family, limit);
    if (!edges.empty() && !(edges.back() < t))
      fail(line_no, "edges must be in ascending order without duplicates");
    edges.push_back(t);
  }
  if (!have_header) fail(line_no + 1, "missing 'family <tag> limit <N>' header");
  return TripleSystem::from_edges(std::move(edges), family, limit);
}

void write_system(std::ostream& out, const TripleSystem& sys) {
  Vertex limit = 0;
  if (sys.limit())
    limit = *sys.limit();
  else if (!sys.support().empty())
    limit = sys.support().back();
  out << "family " << family_name(sys.family()) << " limit " << limit << '\n';
  for (const Triple& t : sys.edges()) out << t.a << ' ' << t.b << ' ' << t.c << '\n';
}

std::string system_text(const TripleSystem& sys) {
  std::ostringstream out;
  write_system(out, sys);
  return out.str();
}

Coloring read_coloring(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  Coloring col;
  Vertex limit = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!significant(line)) continue;
    if (!have_header) {
      std::string kw_colors, kw_limit;
      parse_fields(line_no, line, "colors <c> limit <N>", kw_colors, col.color_count,
                   kw_limit, limit);
      if (kw_colors != "colors" || kw_limit != "limit")
        fail(line_no, "expected 'colors <c> limit <N>'");
      if (col.color_count < 1) fail(line_no, "color count must be at least 1");
      if (limit < 0) fail(line_no, "limit must be nonnegative");
      col.limit = limit;
      have_header = true;
      continue;
    }
    Vertex v;
    int c;
    parse_fields(line_no, line, "n color", v, c);
    if (v < 1) fail(line_no, "vertex must be positive");
    if (c < 0 || c >= col.color_count) fail(line_no, "color out of range");
    if (!col.assignments.empty() && col.assignments.back().first >= v)
      fail(line_no, "vertices must be strictly ascending");
    col.assignments.emplace_back(v, c);
  }
  if (!have_header) fail(line_no + 1, "missing 'colors <c> limit <N>' header");
  return col;
}

void write_coloring(std::ostream& out, const Coloring& col) {
  Vertex limit = 0;
  if (col.limit)
    limit = *col.limit;
  else if (!col.assignments.empty())
    limit = col.assignments.back().first;
  out << "colors " << col.color_count << " limit " << limit << '\n';
  for (const auto& [v, c] : col.assignments) out << v << ' ' << c << '\n';
}

std::string coloring_text(const Coloring& col) {
  std::ostringstream out;
  write_coloring(out, col);
  return out.str();
}

}  // namespace triples
