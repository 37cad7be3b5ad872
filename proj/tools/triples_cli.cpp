#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "triples/cnf.hpp"
#include "triples/coloring.hpp"
#include "triples/core.hpp"
#include "triples/io.hpp"
#include "triples/properties.hpp"
#include "triples/render.hpp"
#include "triples/search.hpp"

namespace {

using namespace triples;

TripleSystem load_system(const std::string& path) {
  if (path == "-") return read_system(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  try {
    return read_system(in);
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

Coloring load_coloring(const std::string& path) {
  if (path == "-") return read_coloring(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  try {
    return read_coloring(in);
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << text;
  if (!out) throw std::runtime_error(path + ": write failed");
}

std::string edge_text(const Triple& t) {
  std::ostringstream s;
  s << '(' << t.a << ' ' << t.b << ' ' << t.c << ')';
  return s.str();
}

std::string joined(const std::vector<Vertex>& vs) {
  std::ostringstream s;
  for (std::size_t i = 0; i < vs.size(); ++i) s << (i ? "," : "") << vs[i];
  return s.str();
}

struct PatternSpec {
  enum class Kind { bicycle, sts, near_fano } kind = Kind::bicycle;
  int k = 2;      // bicycle size
  int order = 7;  // sts order
};

PatternSpec parse_pattern(const std::string& name) {
  PatternSpec p;
  if (name == "pasch") return p;
  if (name.rfind("bicycle:", 0) == 0) {
    const std::string arg = name.substr(8);
    try {
      std::size_t used = 0;
      p.k = std::stoi(arg, &used);
      if (used != arg.size() || p.k < 2) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--pattern", "bicycle size must be an integer >= 2");
    }
    return p;
  }
  if (name == "sts7" || name == "sts9") {
    p.kind = PatternSpec::Kind::sts;
    p.order = name == "sts7" ? 7 : 9;
    return p;
  }
  if (name == "fano-minus-one") {
    p.kind = PatternSpec::Kind::near_fano;
    return p;
  }
  throw CLI::ValidationError(
      "--pattern", "expected pasch, bicycle:<k>, sts7, sts9 or fano-minus-one");
}

int run_search(const std::string& input, const std::string& pattern, bool expect_absent) {
  const PatternSpec p = parse_pattern(pattern);
  const TripleSystem sys = load_system(input);
  std::size_t found = 0;
  switch (p.kind) {
    case PatternSpec::Kind::bicycle:
      for (const Bicycle& bc : find_bicycles(sys, p.k, p.k)) {
        ++found;
        std::cout << "BICYCLE k=" << bc.k << " antipodes=(" << bc.antipodes.first << ','
                  << bc.antipodes.second << ") cycle=(" << joined(bc.cycle) << ")\n";
      }
      break;
    case PatternSpec::Kind::sts:
      for (const auto& vs : find_sts_subsystems(sys, p.order)) {
        ++found;
        std::cout << "STS" << p.order << " vertices=(" << joined(vs) << ")\n";
      }
      break;
    case PatternSpec::Kind::near_fano:
      for (const NearFano& nf : find_near_fano(sys)) {
        ++found;
        std::cout << "NEARFANO vertices=(" << joined(nf.vertices) << ") edges=(";
        for (std::size_t i = 0; i < nf.edges.size(); ++i)
          std::cout << (i ? "," : "") << edge_text(nf.edges[i]);
        std::cout << ")\n";
      }
      break;
  }
  if (found == 0) std::cout << "none found\n";
  return (found > 0 && expect_absent) ? 1 : 0;
}

struct ColorOptions {
  std::string input;
  std::string method = "local";
  int colors = 2;
  std::uint64_t seed = 1;
  int workers = 1;
  std::optional<double> time_budget;
  std::uint64_t max_flips = SearchConfig{}.max_flips;
  int restarts = SearchConfig{}.restarts;
  double noise = SearchConfig{}.noise;
  std::size_t cap = 64;
  Vertex base = 5;
  std::string initial_path;
  std::string model_path;
  std::string out;
};

int run_color(const ColorOptions& opt) {
  const TripleSystem sys = load_system(opt.input);
  SearchConfig cfg;
  cfg.seed = opt.seed;
  cfg.max_flips = opt.max_flips;
  cfg.restarts = opt.restarts;
  cfg.noise = opt.noise;
  cfg.time_budget = opt.time_budget;

  Coloring col;
  if (!opt.model_path.empty()) {
    std::ifstream in(opt.model_path);
    if (!in) throw std::runtime_error(opt.model_path + ": cannot open");
    col = model_coloring(read_model(in), sys);
  } else if (opt.method == "greedy") {
    std::cout << "SEED " << cfg.seed << '\n';
    col = greedy_color(sys, opt.colors, cfg).first;
  } else if (opt.method == "local") {
    std::cout << "SEED " << cfg.seed << '\n';
    std::optional<Coloring> initial;
    if (!opt.initial_path.empty()) initial = load_coloring(opt.initial_path);
    col = local_search(sys, opt.colors, cfg, std::move(initial), opt.workers).first;
  } else if (opt.method == "exact") {
    if (opt.colors != 2)
      throw CLI::ValidationError("--method", "exact handles --colors 2 only");
    auto solved = exact_2color(sys, opt.cap);
    if (!solved) {
      std::cout << "UNSAT\n";
      return 1;
    }
    col = std::move(*solved);
  } else if (opt.method == "valuation") {
    Vertex limit = 0;
    if (sys.limit())
      limit = *sys.limit();
    else if (!sys.support().empty())
      limit = sys.support().back();
    if (limit < 1) throw std::runtime_error("valuation: system has no usable limit");
    col = valuation_coloring(limit, opt.base);
  } else {
    throw CLI::ValidationError("--method", "expected greedy, local, exact or valuation");
  }

  const ConflictReport report = verify(sys, col);
  std::cout << "COLORS " << col.color_count << '\n';
  std::cout << "CONFLICTS count=" << report.count << '\n';
  if (!opt.out.empty()) write_text(opt.out, coloring_text(col));
  return report.count == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triple systems: generation, property checks, pattern search, coloring"};
  app.require_subcommand(1);

  std::string gen_family, gen_out = "-";
  Vertex gen_limit = 0;
  auto* gen = app.add_subcommand("gen", "Generate a family system and write it out");
  gen->add_option("--family", gen_family, "pyth, prim or schur")->required();
  gen->add_option("--limit", gen_limit, "largest allowed element")->required();
  gen->add_option("--out", gen_out, "output path, - for stdout");

  std::string check_input, check_prop_name;
  auto* check = app.add_subcommand("check", "Check a structural property");
  check->add_option("input", check_input, "system file, - for stdin")->required();
  check->add_option("--property", check_prop_name, "linear, sum, upper-sum or lower-sum")
      ->required();

  std::string search_input, search_pattern;
  bool expect_absent = false;
  auto* search = app.add_subcommand("search", "Search for a forbidden pattern");
  search->add_option("input", search_input, "system file, - for stdin")->required();
  search
      ->add_option("--pattern", search_pattern,
                   "pasch, bicycle:<k>, sts7, sts9 or fano-minus-one")
      ->required();
  search->add_flag("--expect-absent", expect_absent,
                   "exit 1 when the pattern is present");

  ColorOptions copt;
  double budget_arg = -1;
  auto* color = app.add_subcommand("color", "Find a coloring with no one-color edge");
  color->add_option("input", copt.input, "system file, - for stdin")->required();
  color->add_option("--colors", copt.colors, "number of colors");
  color->add_option("--method", copt.method, "greedy, local, exact or valuation");
  color->add_option("--seed", copt.seed, "random seed (default 1)");
  color->add_option("--workers", copt.workers, "parallel searchers for local");
  color->add_option("--time-budget", budget_arg, "wall-clock seconds for local");
  color->add_option("--max-flips", copt.max_flips, "repair steps per attempt");
  color->add_option("--restarts", copt.restarts, "extra attempts after the first");
  color->add_option("--noise", copt.noise, "random-move probability");
  color->add_option("--cap", copt.cap, "largest support exact will attempt");
  color->add_option("--base", copt.base, "valuation base");
  color->add_option("--initial", copt.initial_path, "starting coloring for local");
  color->add_option("--from-model", copt.model_path, "read a SAT model as the coloring");
  color->add_option("--out", copt.out, "write the coloring here");

  std::string verify_system, verify_coloring;
  auto* verify_cmd = app.add_subcommand("verify", "Re-check a coloring against a system");
  verify_cmd->add_option("system", verify_system, "system file")->required();
  verify_cmd->add_option("coloring", verify_coloring, "coloring file")->required();

  std::string cnf_input, cnf_out = "-";
  auto* cnf = app.add_subcommand("export-cnf", "Write the 2-coloring problem as DIMACS");
  cnf->add_option("input", cnf_input, "system file, - for stdin")->required();
  cnf->add_option("--out", cnf_out, "output path, - for stdout");

  std::string comp_input;
  auto* comp = app.add_subcommand("components", "Report connected components");
  comp->add_option("input", comp_input, "system file, - for stdin")->required();

  std::string render_input, render_out = "-";
  RenderSpec rspec;
  auto* render = app.add_subcommand("render", "Draw a coloring as a block grid");
  render->add_option("input", render_input, "coloring file, - for stdin")->required();
  render->add_option("--out", render_out, "output path; .svg selects SVG");
  render->add_option("--row-width", rspec.row_width, "blocks per row");
  render->add_option("--cell-size", rspec.cell_size, "pixels per block");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  try {
    if (gen->parsed()) {
      const auto fam = family_from_name(gen_family);
      if (!fam || *fam == Family::custom)
        throw CLI::ValidationError("--family", "expected pyth, prim or schur");
      TripleSystem sys;
      switch (*fam) {
        case Family::pyth: sys = generate_pyth(gen_limit); break;
        case Family::prim: sys = generate_prim(gen_limit); break;
        default: sys = generate_schur(gen_limit); break;
      }
      write_text(gen_out, system_text(sys));
      return 0;
    }
    if (check->parsed()) {
      const TripleSystem sys = load_system(check_input);
      if (check_prop_name == "linear") {
        const auto pair = is_linear(sys);
        if (!pair) {
          std::cout << "PROPERTY linear HOLDS\n";
          return 0;
        }
        std::cout << "PROPERTY linear FAILS: " << edge_text(pair->first) << " vs "
                  << edge_text(pair->second) << '\n';
        return 1;
      }
      SumProperty prop;
      if (check_prop_name == "sum")
        prop = SumProperty::sum;
      else if (check_prop_name == "upper-sum")
        prop = SumProperty::upper_sum;
      else if (check_prop_name == "lower-sum")
        prop = SumProperty::lower_sum;
      else
        throw CLI::ValidationError("--property",
                                   "expected linear, sum, upper-sum or lower-sum");
      const PropertyVerdict verdict = check_property(sys, prop);
      if (verdict.holds) {
        std::cout << "PROPERTY " << property_name(prop) << " HOLDS\n";
        return 0;
      }
      std::cout << "PROPERTY " << property_name(prop)
                << " FAILS: " << edge_text(verdict.witness->first) << " vs "
                << edge_text(verdict.witness->second) << '\n';
      return 1;
    }
    if (search->parsed()) return run_search(search_input, search_pattern, expect_absent);
    if (color->parsed()) {
      if (budget_arg >= 0) copt.time_budget = budget_arg;
      return run_color(copt);
    }
    if (verify_cmd->parsed()) {
      const TripleSystem sys = load_system(verify_system);
      const Coloring col = load_coloring(verify_coloring);
      const ConflictReport report = verify(sys, col);
      std::cout << "CONFLICTS count=" << report.count << '\n';
      for (std::size_t i = 0; i < report.monochromatic_edges.size() && i < 10; ++i)
        std::cout << edge_text(report.monochromatic_edges[i]) << '\n';
      return report.count == 0 ? 0 : 1;
    }
    if (cnf->parsed()) {
      const TripleSystem sys = load_system(cnf_input);
      write_text(cnf_out, dimacs_text(cnf_document(sys)));
      return 0;
    }
    if (comp->parsed()) {
      const TripleSystem sys = load_system(comp_input);
      const ComponentReport report = components(sys);
      std::cout << "COMPONENTS count=" << report.component_count << '\n';
      for (const auto& members : report.components) std::cout << joined(members) << '\n';
      return 0;
    }
    if (render->parsed()) {
      const Coloring col = load_coloring(render_input);
      const bool svg =
          render_out.size() >= 4 && render_out.rfind(".svg") == render_out.size() - 4;
      write_text(render_out, svg ? render_svg(col, rspec) : render_ppm(col, rspec));
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  return 0;
}
