#include "trifree/bench.hpp"

#include <algorithm>
#include <chrono>

#include "trifree/error.hpp"
#include "trifree/solver.hpp"

namespace trifree {

std::vector<BenchRow> bench(GenKind kind, const std::vector<std::size_t>& sizes,
                            std::uint64_t seed, std::size_t runs) {
  if (runs == 0) throw Error(ErrorCode::kInvalidSpec, "bench needs at least one run");
  std::vector<BenchRow> rows;
  for (std::size_t size : sizes) {
    const PlaneGraph g = generate({kind, size, seed, 0.0});
    BenchRow row;
    row.n = g.num_vertices();
    std::vector<double> times;
    for (std::size_t r = 0; r < runs; ++r) {
      PlaneGraph copy = g;
      const auto t0 = std::chrono::steady_clock::now();
      Solver solver(std::move(copy));
      solver.run();
      const auto t1 = std::chrono::steady_clock::now();
      times.push_back(std::chrono::duration<double>(t1 - t0).count());
      row.insertions = solver.stats().queue_insertions;
      row.reductions = solver.stats().reductions;
    }
    std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
    row.seconds = times[times.size() / 2];
    rows.push_back(row);
  }
  return rows;
}

void print_bench_header(std::ostream& out) {
  out << "n\tseconds\tinsertions";
  for (Kind k : kKindOrder) out << '\t' << kind_name(k);
  out << '\n';
}

void print_bench_row(std::ostream& out, const BenchRow& row) {
  out << row.n << '\t' << row.seconds << '\t' << row.insertions;
  for (Kind k : kKindOrder) out << '\t' << row.reductions[static_cast<std::size_t>(k)];
  out << '\n';
}

}  // namespace trifree
