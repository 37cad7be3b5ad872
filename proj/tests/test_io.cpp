#include <sstream>
#include <string>

#include "doctest.h"
#include "support.hpp"
#include "triples/core.hpp"
#include "triples/io.hpp"

using namespace triples;

namespace {

TripleSystem from_text(const std::string& text) {
  std::istringstream in(text);
  return read_system(in);
}

Coloring coloring_from_text(const std::string& text) {
  std::istringstream in(text);
  return read_coloring(in);
}

std::string error_of_system(const std::string& text) {
  try {
    from_text(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

std::string error_of_coloring(const std::string& text) {
  try {
    coloring_from_text(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("system writing") {
  CHECK(system_text(generate_pyth(12)) ==
        "family pyth limit 12\n3 4 5\n6 8 10\n");
  const auto custom = TripleSystem::from_edges({Triple{1, 2, 3}, Triple{2, 5, 9}});
  CHECK(system_text(custom) == "family custom limit 9\n1 2 3\n2 5 9\n");
  CHECK(system_text(TripleSystem{}) == "family custom limit 0\n");
}

TEST_CASE("system round trips are byte stable") {
  for (const TripleSystem& sys :
       {generate_pyth(20), generate_prim(100), generate_schur(25),
        TripleSystem::from_edges({Triple{1, 2, 3}, Triple{4, 7, 9}})}) {
    const std::string once = system_text(sys);
    const TripleSystem back = from_text(once);
    CHECK(back.edges() == sys.edges());
    CHECK(back.family() == sys.family());
    CHECK(system_text(back) == once);
  }
}

TEST_CASE("system reading tolerates comments and blank lines") {
  const auto sys = from_text(
      "# generated for a demo\n"
      "\n"
      "family pyth limit 20\n"
      "  # indented comment\n"
      "3 4 5\n"
      "\n"
      "5 12 13\n");
  CHECK(sys.edges() == std::vector<Triple>{{3, 4, 5}, {5, 12, 13}});
  CHECK(sys.family() == Family::pyth);
  CHECK(sys.limit() == 20);
}

TEST_CASE("system reading reports the offending line") {
  CHECK(error_of_system("") == "line 1: missing 'family <tag> limit <N>' header");
  CHECK(error_of_system("# only a comment\n") ==
        "line 2: missing 'family <tag> limit <N>' header");
  CHECK(error_of_system("family nope limit 5\n") == "line 1: unknown family 'nope'");
  CHECK(error_of_system("family pyth bound 5\n") ==
        "line 1: expected 'family <tag> limit <N>'");
  CHECK(error_of_system("family pyth limit x\n") ==
        "line 1: expected 'family <tag> limit <N>'");
  CHECK(error_of_system("family custom limit 9\n1 2\n") ==
        "line 2: expected 'a b c'");
  CHECK(error_of_system("family custom limit 9\n1 2 3 4\n") ==
        "line 2: expected 'a b c'");
  CHECK(error_of_system("family custom limit 9\n3 2 4\n") ==
        "line 2: edge must be strictly ascending positive");
  CHECK(error_of_system("family pyth limit 9\n2 3 4\n") ==
        "line 2: edge violates a^2+b^2=c^2");
  CHECK(error_of_system("family prim limit 10\n6 8 10\n") ==
        "line 2: edge is not primitive");
  CHECK(error_of_system("family schur limit 9\n1 2 4\n") ==
        "line 2: edge violates a+b=c");
  CHECK(error_of_system("family custom limit 5\n1 2 6\n") ==
        "line 2: edge exceeds the header limit");
  CHECK(error_of_system("family custom limit 9\n2 5 9\n1 2 3\n") ==
        "line 3: edges must be in ascending order without duplicates");
  CHECK(error_of_system("family custom limit 9\n1 2 3\n1 2 3\n") ==
        "line 3: edges must be in ascending order without duplicates");
}

TEST_CASE("coloring writing") {
  Coloring col;
  col.color_count = 3;
  col.limit = 10;
  col.assign(2, 1);
  col.assign(7, 0);
  CHECK(coloring_text(col) == "colors 3 limit 10\n2 1\n7 0\n");

  Coloring bare;
  bare.color_count = 2;
  bare.assign(4, 1);
  CHECK(coloring_text(bare) == "colors 2 limit 4\n4 1\n");
  CHECK(coloring_text(Coloring{}) == "colors 1 limit 0\n");
}

TEST_CASE("coloring round trips are byte stable") {
  Coloring col;
  col.color_count = 4;
  col.limit = 50;
  for (Vertex v = 1; v <= 50; v += 3) col.assign(v, static_cast<int>(v % 4));
  const std::string once = coloring_text(col);
  const Coloring back = coloring_from_text(once);
  CHECK(back.assignments == col.assignments);
  CHECK(back.color_count == 4);
  CHECK(back.limit == 50);
  CHECK(coloring_text(back) == once);
}

TEST_CASE("coloring reading reports the offending line") {
  CHECK(error_of_coloring("") == "line 1: missing 'colors <c> limit <N>' header");
  CHECK(error_of_coloring("colors 0 limit 5\n") ==
        "line 1: color count must be at least 1");
  CHECK(error_of_coloring("colors 2 limit 5\n0 1\n") ==
        "line 2: vertex must be positive");
  CHECK(error_of_coloring("colors 2 limit 5\n3 2\n") == "line 2: color out of range");
  CHECK(error_of_coloring("colors 2 limit 5\n3 -1\n") == "line 2: color out of range");
  CHECK(error_of_coloring("colors 2 limit 5\n3 1\n2 0\n") ==
        "line 3: vertices must be strictly ascending");
  CHECK(error_of_coloring("colors 2 limit 5\n3 1 9\n") == "line 2: expected 'n color'");
}

TEST_CASE("sparse colorings survive the trip") {
  const auto col = coloring_from_text(
      "# partial assignment\n"
      "colors 2 limit 100\n"
      "5 1\n"
      "40 0\n");
  CHECK(col.color_of(5) == 1);
  CHECK(col.color_of(40) == 0);
  CHECK_FALSE(col.color_of(6).has_value());
  CHECK(col.limit == 100);
}

}  // TEST_SUITE
