#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "triples/coloring.hpp"
#include "triples/core.hpp"

namespace triples {

/// Raised on malformed input files; the message names the offending line.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Text format: '#' comment lines, a header "family <tag> limit <N>", then
/// one edge per line as "a b c" ascending, lines in lexicographic order.
TripleSystem read_system(std::istream& in);
void write_system(std::ostream& out, const TripleSystem& sys);
std::string system_text(const TripleSystem& sys);

/// Text format: '#' comment lines, a header "colors <c> limit <N>", then
/// "n color" per assigned vertex with n ascending.
Coloring read_coloring(std::istream& in);
void write_coloring(std::ostream& out, const Coloring& col);
std::string coloring_text(const Coloring& col);

}  // namespace triples
