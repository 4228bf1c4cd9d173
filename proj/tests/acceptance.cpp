// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "trifree/cli.hpp"
#include "trifree/closeness.hpp"
#include "trifree/generators.hpp"
#include "trifree/graph_io.hpp"
#include "trifree/multigram.hpp"
#include "trifree/oracle.hpp"
#include "trifree/solver.hpp"

namespace fs = std::filesystem;
using namespace trifree;
using trifree::testing::Instance;

namespace {

// Queue insertions per vertex on the grid ladder, measured once and frozen.
constexpr double kFrozenInsertionsPerVertex = 10.02;
constexpr double kRegressionTolerance = 1.10;
constexpr double kMaxTimeRatio = 2.5;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Aggregate {
  std::size_t max_deleted = 0;
  std::size_t max_added = 0;
  std::size_t min_removed = SIZE_MAX;
  std::size_t reductions = 0;
  std::size_t max_edge_close = 0;
  std::size_t edge_events = 0;
};

Aggregate g_agg;

void report(int id, const std::string& title, const Outcome& o, double seconds) {
  std::printf("criterion %d: %s  %s  [%s] (%.1fs)\n", id, o.pass ? "PASS" : "FAIL", title.c_str(),
              o.detail.c_str(), seconds);
  std::fflush(stdout);
}

std::vector<std::vector<Color>> proper_cycle_colorings(std::size_t k) {
  std::vector<std::vector<Color>> out;
  std::vector<Color> phi(k, 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < k; ++i, c /= 3) phi[i] = static_cast<Color>(c % 3);
    bool ok = true;
    for (std::size_t i = 0; i < k; ++i) ok = ok && phi[i] != phi[(i + 1) % k];
    if (ok) out.push_back(phi);
  }
  return out;
}

std::vector<std::vector<VertexId>> short_facial_cycles(const PlaneGraph& g, std::size_t max_len) {
  std::vector<std::vector<VertexId>> out;
  for (auto& f : facial_cycles_slow(g)) {
    if (f.size() <= max_len) out.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------------------

Outcome correctness_at_scale() {
  std::vector<GenSpec> specs;
  std::mt19937_64 rng(20261016);
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  for (std::uint64_t s = 0; s < 200; ++s) {
    specs.push_back({GenKind::kGrid, pick(2, 45), s, (s % 4) * 0.15});
  }
  for (GenKind kind : {GenKind::kQuad, GenKind::kAugmented}) {
    for (std::uint64_t s = 0; s < 400; ++s) {
      const std::size_t n = s < 300 ? pick(4, 300) : pick(300, 5000);
      specs.push_back({kind, n, s, 0.0});
    }
  }
  specs.push_back({GenKind::kGrid, 224, 1, 0.1});
  specs.push_back({GenKind::kGrid, 316, 2, 0.0});
  specs.push_back({GenKind::kQuad, 50000, 3, 0.0});
  specs.push_back({GenKind::kQuad, 100000, 4, 0.0});
  specs.push_back({GenKind::kAugmented, 50000, 5, 0.0});
  specs.push_back({GenKind::kAugmented, 100000, 6, 0.0});

  const fs::path dir = fs::temp_directory_path() / "trifree_acceptance";
  fs::create_directories(dir);
  std::size_t failures = 0, graphs = 0, max_n = 0, cli_runs = 0;
  double worst_ratio = 0;
  std::string first_failure;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto& spec = specs[i];
    std::string label = std::string(gen_kind_name(spec.kind)) + ":" + std::to_string(spec.size) +
                        ":" + std::to_string(spec.seed);
    try {
      const PlaneGraph g = parse_graph(serialize(generate(spec)));
      ++graphs;
      max_n = std::max(max_n, g.num_vertices());
      SolverStats s;
      const Coloring col = three_color(g, {}, &s);
      bool ok = is_proper(SimpleGraph::from_plane(g), col);
      if (i % 25 == 0) {
        const std::string in = (dir / "g.txt").string(), cf = (dir / "c.txt").string();
        write_file(in, serialize(g));
        std::ostringstream out, err, out2;
        ok = ok && run_cli({"color", in}, out, err) == kExitOk;
        write_file(cf, out.str());
        ok = ok && run_cli({"check", in, cf}, out2, err) == kExitOk;
        ++cli_runs;
      }
      if (!ok && first_failure.empty()) first_failure = label;
      failures += ok ? 0 : 1;
      g_agg.max_deleted = std::max(g_agg.max_deleted, s.max_edges_deleted);
      g_agg.max_added = std::max(g_agg.max_added, s.max_edges_added);
      g_agg.reductions += s.total_reductions();
      if (s.total_reductions() > 0) g_agg.min_removed = std::min(g_agg.min_removed, s.min_vertices_removed);
      g_agg.max_edge_close = std::max(g_agg.max_edge_close, s.max_edge_close);
      g_agg.edge_events += s.edge_events;
      if (g.num_vertices() > 0) {
        worst_ratio = std::max(worst_ratio, double(s.queue_insertions) / double(g.num_vertices()));
      }
    } catch (const std::exception& e) {
      ++failures;
      if (first_failure.empty()) first_failure = label + " " + e.what();
    }
  }
  Outcome o;
  o.pass = failures == 0 && graphs >= 1000;
  o.detail = std::to_string(graphs) + " graphs, max n " + std::to_string(max_n) + ", " +
             std::to_string(cli_runs) + " through the CLI, " + std::to_string(failures) +
             " failures, max insertions/n " + std::to_string(worst_ratio);
  if (!first_failure.empty()) o.detail += ", first failure " + first_failure;
  return o;
}

Outcome small_corpus_existence(const std::vector<Instance>& corpus) {
  std::size_t bad = 0, count = 0;
  std::string first;
  for (const auto& inst : corpus) {
    ++count;
    const SimpleGraph sg = SimpleGraph::from_plane(inst.graph);
    const auto col = brute_force_3color(sg);
    bool ok = col && is_proper(sg, *col);
    if (!inst.graph.empty()) ok = ok && !all_secure_multigrams_slow(inst.graph, {}).empty();
    if (!ok) {
      ++bad;
      if (first.empty()) first = inst.name;
    }
  }
  Outcome o;
  o.pass = bad == 0 && count > 0;
  o.detail = std::to_string(count) + " instances, " + std::to_string(bad) + " failures";
  if (!first.empty()) o.detail += ", first " + first;
  return o;
}

struct EquivalenceCounts {
  std::size_t checks = 0;
  std::size_t verdict_mismatch = 0;
  std::size_t existence_mismatch = 0;
  std::size_t missing_candidates = 0;
  std::string first;
};

void compare_fast_slow(const PlaneGraph& g, const ConstraintCycle& c, const std::string& name,
                       EquivalenceCounts& n) {
  const auto slow = all_secure_multigrams_slow(g, c);
  for (VertexId v : g.alive_vertices()) {
    const auto cands = candidates_at(g, v);
    for (const auto& m : cands) {
      ++n.checks;
      if (is_secure(g, m, c) != is_secure_slow(g, m, c)) {
        ++n.verdict_mismatch;
        if (n.first.empty()) n.first = name + " verdict " + std::string(kind_name(m.kind)) + "@" + std::to_string(v);
      }
    }
    bool slow_any = false;
    for (const auto& m : slow) {
      if (m.pivot() != v) continue;
      slow_any = true;
      const bool listed = std::any_of(cands.begin(), cands.end(),
                                      [&](const Multigram& x) { return x.same_configuration(m); });
      if (!listed) {
        ++n.missing_candidates;
        if (n.first.empty()) n.first = name + " missing " + std::string(kind_name(m.kind)) + "@" + std::to_string(v);
      }
    }
    const auto found = find_secure_with_pivot(g, v, c);
    if (found.has_value() != slow_any || (found && !is_secure_slow(g, *found, c))) {
      ++n.existence_mismatch;
      if (n.first.empty()) n.first = name + " existence@" + std::to_string(v);
    }
  }
}

Outcome fast_slow_equivalence(const std::vector<Instance>& corpus) {
  EquivalenceCounts n;
  std::size_t states = 0;
  for (const auto& inst : corpus) {
    compare_fast_slow(inst.graph, {}, inst.name, n);
    ++states;
    const auto cycles = short_facial_cycles(inst.graph, 6);
    const std::size_t limit = inst.graph.num_vertices() > 40 ? 2 : cycles.size();
    for (std::size_t i = 0; i < std::min(limit, cycles.size()); ++i) {
      compare_fast_slow(inst.graph, ConstraintCycle(cycles[i]), inst.name + "+C", n);
      ++states;
    }
    if (inst.graph.num_vertices() <= 40) {
      // every intermediate graph of a solver run
      SolverOptions opts;
      opts.loop_head_hook = [&](const Solver& s) {
        compare_fast_slow(s.graph(), s.constraint(), inst.name + "~", n);
        ++states;
      };
      Solver(inst.graph, opts).run();
    }
  }
  Outcome o;
  o.pass = n.verdict_mismatch == 0 && n.existence_mismatch == 0 && n.missing_candidates == 0;
  o.detail = std::to_string(states) + " graph states, " + std::to_string(n.checks) +
             " verdicts, mismatches: verdict " + std::to_string(n.verdict_mismatch) +
             ", existence " + std::to_string(n.existence_mismatch) + ", missing " +
             std::to_string(n.missing_candidates);
  if (!n.first.empty()) o.detail += ", first " + n.first;
  return o;
}

Outcome worklist_invariant(const std::vector<Instance>& corpus) {
  std::size_t heads = 0, violations = 0, runs = 0;
  std::string first;
  for (const auto& inst : corpus) {
    SolverOptions opts;
    opts.validate = true;
    std::string run_name;
    opts.loop_head_hook = [&](const Solver& s) {
      ++heads;
      for (const auto& m : all_secure_multigrams_slow(s.graph(), s.constraint())) {
        if (s.queue().contains(m.pivot())) continue;
        ++violations;
        if (first.empty()) first = run_name + " pivot " + std::to_string(m.pivot());
      }
    };
    run_name = inst.name;
    Solver(inst.graph, opts).run();
    ++runs;
    const auto cycles = short_facial_cycles(inst.graph, 5);
    if (!cycles.empty()) {
      const auto& cyc = cycles.front();
      const auto phi = proper_cycle_colorings(cyc.size()).front();
      run_name = inst.name + "+C";
      Solver(inst.graph, opts).run_precolored(cyc, phi);
      ++runs;
    }
  }
  Outcome o;
  o.pass = violations == 0;
  o.detail = std::to_string(runs) + " runs, " + std::to_string(heads) + " loop heads, " +
             std::to_string(violations) + " violations";
  if (!first.empty()) o.detail += ", first " + first;
  return o;
}

Outcome reduction_bounds() {
  Outcome o;
  o.pass = g_agg.reductions > 0 && g_agg.max_deleted <= kMaxEdgesDeleted &&
           g_agg.max_added <= kMaxEdgesAdded && g_agg.min_removed >= 1;
  o.detail = std::to_string(g_agg.reductions) + " reductions, max deleted " +
             std::to_string(g_agg.max_deleted) + " (<= 126), max added " +
             std::to_string(g_agg.max_added) + " (<= 116), min removed " +
             std::to_string(g_agg.min_removed) + " (>= 1)";
  return o;
}

Outcome edge_close_bound(const std::vector<Instance>& corpus) {
  std::size_t incomplete = 0, oversize = 0, edges = 0, max_seen = 0;
  std::string first;
  for (const auto& inst : corpus) {
    const PlaneGraph& g = inst.graph;
    if (g.num_vertices() > 90) continue;
    const auto verts = g.alive_vertices();
    for (DartId d = 0; d < g.dart_capacity(); d += 2) {
      if (!g.dart_alive(d)) continue;
      ++edges;
      auto fast = close_to_edge(g, d);
      max_seen = std::max(max_seen, fast.size());
      if (fast.size() > 10) ++oversize;
      std::sort(fast.begin(), fast.end());
      for (VertexId w : verts) {
        if (close_to_edge_slow(g, g.origin(d), g.head(d), w) &&
            !std::binary_search(fast.begin(), fast.end(), w)) {
          ++incomplete;
          if (first.empty()) first = inst.name + " edge " + std::to_string(d) + " misses " + std::to_string(w);
        }
      }
    }
  }
  Outcome o;
  o.pass = oversize == 0 && incomplete == 0 && g_agg.max_edge_close <= 10 && g_agg.edge_events > 0;
  o.detail = std::to_string(g_agg.edge_events) + " logged edge events, max edge-close " +
             std::to_string(g_agg.max_edge_close) + " (<= 10); corpus: " + std::to_string(edges) +
             " edges, max " + std::to_string(max_seen) + ", " + std::to_string(incomplete) +
             " missed vs oracle";
  if (!first.empty()) o.detail += ", first " + first;
  return o;
}

Outcome linear_scaling() {
  const std::vector<std::size_t> sides = {100, 141, 200, 283, 400};
  constexpr int kRuns = 7;
  std::vector<double> times;
  std::vector<double> per_vertex;
  std::ostringstream rows;
  for (std::size_t k : sides) {
    const PlaneGraph g = generate({GenKind::kGrid, k, 0, 0.0});
    Solver(g).run();  // warm-up
    std::vector<double> t;
    std::size_t insertions = 0;
    for (int r = 0; r < kRuns; ++r) {
      PlaneGraph copy = g;
      const auto t0 = std::chrono::steady_clock::now();
      Solver s(std::move(copy));
      s.run();
      t.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
      insertions = s.stats().queue_insertions;
    }
    std::sort(t.begin(), t.end());
    times.push_back(t[kRuns / 2]);
    per_vertex.push_back(double(insertions) / double(g.num_vertices()));
    rows << " n=" << g.num_vertices() << ":" << t[kRuns / 2] << "s," << per_vertex.back() << "/n";
  }
  double worst = 0;
  for (std::size_t i = 1; i < times.size(); ++i) worst = std::max(worst, times[i] / times[i - 1]);
  const double max_pv = *std::max_element(per_vertex.begin(), per_vertex.end());
  Outcome o;
  o.pass = worst <= kMaxTimeRatio && max_pv <= kFrozenInsertionsPerVertex * kRegressionTolerance;
  std::ostringstream d;
  d << "worst time ratio " << worst << " (<= 2.5), max insertions/n " << max_pv << " (frozen "
    << kFrozenInsertionsPerVertex << " +10%);" << rows.str();
  o.detail = d.str();
  return o;
}

Outcome precoloring_extension(const std::vector<Instance>& corpus) {
  std::size_t solves = 0, bad = 0, cycles_seen = 0;
  std::string first;
  for (const auto& inst : corpus) {
    const SimpleGraph sg = SimpleGraph::from_plane(inst.graph);
    SolverOptions opts;
    opts.validate = inst.graph.num_vertices() <= 40;
    for (const auto& cyc : short_facial_cycles(inst.graph, 5)) {
      ++cycles_seen;
      for (const auto& phi : proper_cycle_colorings(cyc.size())) {
        ++solves;
        bool ok = false;
        try {
          const Coloring col = three_color_precolored(inst.graph, cyc, phi, opts);
          ok = is_proper(sg, col);
          for (std::size_t i = 0; i < cyc.size(); ++i) ok = ok && col[cyc[i]] == phi[i];
        } catch (const std::exception& e) {
          if (first.empty()) first = inst.name + " " + e.what();
        }
        if (!ok) {
          ++bad;
          if (first.empty()) first = inst.name;
        }
      }
    }
  }
  Outcome o;
  o.pass = bad == 0 && solves > 0;
  o.detail = std::to_string(cycles_seen) + " facial 4/5-cycles, " + std::to_string(solves) +
             " precolorings, " + std::to_string(bad) + " failures";
  if (!first.empty()) o.detail += ", first " + first;
  return o;
}

template <class F>
bool timed(int id, const std::string& title, F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = f();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  report(id, title, o, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  return o.pass;
}

}  // namespace

int main() {
  const auto small = trifree::testing::small_corpus();
  const auto extended = trifree::testing::extended_corpus();
  std::printf("corpus: %zu small instances, %zu extended instances\n", small.size(), extended.size());
  bool all = true;
  all &= timed(1, "correctness at scale", correctness_at_scale);
  all &= timed(2, "small-corpus 3-colorability and secure multigram existence",
               [&] { return small_corpus_existence(small); });
  all &= timed(3, "fast/slow secure multigram equivalence", [&] { return fast_slow_equivalence(extended); });
  all &= timed(4, "worklist covers every secure pivot", [&] { return worklist_invariant(extended); });
  all &= timed(5, "per-reduction edge and vertex bounds", reduction_bounds);
  all &= timed(6, "edge-close set size", [&] { return edge_close_bound(extended); });
  all &= timed(7, "linear scaling on grids", linear_scaling);
  all &= timed(8, "precoloring extension", [&] { return precoloring_extension(extended); });
  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
