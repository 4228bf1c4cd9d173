#include "trifree/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

#include "trifree/bench.hpp"
#include "trifree/error.hpp"
#include "trifree/generators.hpp"
#include "trifree/graph_io.hpp"
#include "trifree/oracle.hpp"
#include "trifree/solver.hpp"

namespace trifree {

namespace {

struct Precolor {
  std::vector<VertexId> cycle;
  std::vector<Color> phi;
};

// Orders the precolored vertices along the facial walk they span.
Precolor read_precolor(const PlaneGraph& g, const std::string& path) {
  const Coloring col = parse_coloring(read_file(path), g.vertex_capacity());
  std::vector<VertexId> ids;
  for (VertexId v = 0; v < col.size(); ++v) {
    if (col[v] != kNoColor) ids.push_back(v);
  }
  if (ids.empty() || ids.size() > 5) {
    throw Error(ErrorCode::kNotAFacialCycle, "precolor file must list 1 to 5 vertices");
  }
  for (DartId d : g.darts_of(ids[0])) {
    const auto walk = g.short_face(d, 5);
    if (walk.size() != ids.size()) continue;
    std::vector<VertexId> cyc;
    for (DartId e : walk) cyc.push_back(g.origin(e));
    std::vector<VertexId> sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != ids) continue;
    Precolor p;
    p.cycle = cyc;
    for (VertexId v : cyc) p.phi.push_back(col[v]);
    return p;
  }
  throw Error(ErrorCode::kNotAFacialCycle, "precolored vertices do not span a facial cycle");
}

void print_stats(std::ostream& err, const PlaneGraph& g, const SolverStats& s) {
  err << "n\t" << g.num_vertices() << '\n'
      << "m\t" << g.num_edges() << '\n'
      << "insertions\t" << s.queue_insertions << '\n'
      << "pops\t" << s.pivot_pops << '\n'
      << "work\t" << s.work << '\n';
  for (Kind k : kKindOrder) {
    err << "reductions." << kind_name(k) << '\t' << s.reductions[static_cast<std::size_t>(k)]
        << '\n';
  }
  err << "max_edges_deleted\t" << s.max_edges_deleted << '\n'
      << "max_edges_added\t" << s.max_edges_added << '\n'
      << "max_edge_close\t" << s.max_edge_close << '\n';
}

int cmd_color(const std::string& input, const std::string& precolor, bool validate, bool stats,
              std::ostream& out, std::ostream& err) {
  const PlaneGraph g = parse_graph(read_file(input));
  SolverOptions opts;
  opts.validate = validate;
  SolverStats s;
  Coloring col;
  if (precolor.empty()) {
    col = three_color(g, opts, &s);
  } else {
    const Precolor p = read_precolor(g, precolor);
    col = three_color_precolored(g, p.cycle, p.phi, opts, &s);
  }
  if (!is_proper(SimpleGraph::from_plane(g), col)) {
    err << "error: solver produced an improper coloring\n";
    return kExitFailure;
  }
  out << serialize_coloring(g, col);
  if (stats) print_stats(err, g, s);
  return kExitOk;
}

int cmd_check(const std::string& input, const std::string& coloring, std::ostream& out) {
  const PlaneGraph g = parse_graph(read_file(input));
  const Coloring col = parse_coloring(read_file(coloring), g.vertex_capacity());
  const bool ok = is_proper(SimpleGraph::from_plane(g), col);
  out << (ok ? "proper" : "improper") << '\n';
  return ok ? kExitOk : kExitFailure;
}

int cmd_oracle(const std::string& input, std::ostream& out) {
  const PlaneGraph g = parse_graph(read_file(input));
  const SimpleGraph sg = SimpleGraph::from_plane(g);
  const bool tf = is_triangle_free(sg);
  out << "triangle_free\t" << (tf ? "yes" : "no") << '\n';
  out << "brute_force\t";
  if (g.num_vertices() > kBruteForceCap) {
    out << "skipped\n";
  } else {
    out << (brute_force_3color(sg) ? "colorable" : "not_colorable") << '\n';
  }
  out << "secure_multigrams\t";
  if (g.num_vertices() > kSlowMultigramCap || !tf) {
    out << "skipped\n";
  } else {
    out << all_secure_multigrams_slow(g, ConstraintCycle()).size() << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"3-coloring of triangle-free plane graphs", "trifree"};
  app.require_subcommand(1);

  std::string input, precolor, coloring, out_file, kind_str;
  bool validate = false, stats = false;
  std::size_t size = 0;
  std::uint64_t seed = 0;
  double deletion = 0.0;
  std::vector<std::size_t> sizes;
  std::size_t runs = 5;

  auto* color = app.add_subcommand("color", "3-color a graph file");
  color->add_option("--precolor", precolor, "file with 'id color' lines on one facial cycle");
  color->add_flag("--validate", validate, "full embedding scan after every reduction");
  color->add_flag("--stats", stats, "print solver counters to stderr");
  color->add_option("INPUT", input)->required();

  auto* check = app.add_subcommand("check", "exit 0 iff the coloring is proper");
  check->add_option("INPUT", input)->required();
  check->add_option("COLORING", coloring)->required();

  auto* gen = app.add_subcommand("gen", "generate a triangle-free plane graph");
  gen->add_option("--kind", kind_str)->required();
  gen->add_option("--size", size)->required();
  gen->add_option("--seed", seed)->required();
  gen->add_option("--out", out_file);
  gen->add_option("--deletion", deletion);

  auto* oracle = app.add_subcommand("oracle", "reference checks on a small graph");
  oracle->add_option("INPUT", input)->required();

  auto* benchc = app.add_subcommand("bench", "median solve times over a size ladder");
  benchc->add_option("--kind", kind_str)->required();
  benchc->add_option("--sizes", sizes)->required()->delimiter(',');
  benchc->add_option("--seed", seed)->required();
  benchc->add_option("--runs", runs);

  std::vector<std::string> argv_store{"trifree"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  auto kind_of = [&]() -> std::optional<GenKind> {
    auto k = parse_gen_kind(kind_str);
    if (!k) err << "usage error: unknown kind '" << kind_str << "'\n";
    return k;
  };

  try {
    if (*color) return cmd_color(input, precolor, validate, stats, out, err);
    if (*check) return cmd_check(input, coloring, out);
    if (*oracle) return cmd_oracle(input, out);
    if (*gen) {
      const auto k = kind_of();
      if (!k) return kExitUsage;
      const std::string text = serialize(generate({*k, size, seed, deletion}));
      if (out_file.empty()) {
        out << text;
      } else {
        write_file(out_file, text);
      }
      return kExitOk;
    }
    if (*benchc) {
      const auto k = kind_of();
      if (!k) return kExitUsage;
      print_bench_header(out);
      for (const auto& row : bench(*k, sizes, seed, runs)) print_bench_row(out, row);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace trifree
