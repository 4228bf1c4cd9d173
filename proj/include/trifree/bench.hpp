#pragma once

// Scaling measurements over generated instances.

#include <array>
#include <cstdint>
#include <ostream>
#include <vector>

#include "trifree/generators.hpp"
#include "trifree/multigram.hpp"

namespace trifree {

struct BenchRow {
  std::size_t n = 0;
  double seconds = 0;  // median wall time of the solve
  std::size_t insertions = 0;
  std::array<std::size_t, kNumKinds> reductions{};
};

/// One row per size; each size is generated once and solved `runs` times.
std::vector<BenchRow> bench(GenKind kind, const std::vector<std::size_t>& sizes,
                            std::uint64_t seed, std::size_t runs = 5);

void print_bench_header(std::ostream& out);
void print_bench_row(std::ostream& out, const BenchRow& row);

}  // namespace trifree
