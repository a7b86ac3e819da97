#pragma once

#include <chrono>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "vne/model.hpp"

namespace vne {

// Bench config document:
//   {"grid": [{"f": 8, "r": 5, "p": 0.5, "seeds": [1,2,3]}],
//    "timeout_ms": 60000, "parallelism": 1}
// Each (f, r, p, seed) tuple becomes one fat-tree + ER-request instance.
struct BenchConfig {
  struct Cell {
    int f = 4;
    std::size_t r = 5;
    double p = 0.5;
    std::vector<std::uint64_t> seeds;
  };
  std::vector<Cell> grid;
  std::optional<std::chrono::milliseconds> timeout;
  unsigned parallelism = 1;
  int max_resample = 1000;
};

BenchConfig parse_bench_config(const std::string& text);

// Runs the grid and streams one CSV row per instance in grid order, flushing
// as results arrive. Solves may run concurrently up to `parallelism`; each
// solve stays single-threaded, so costs are identical either way. Timeouts
// become status=Timeout rows and the run continues.
void run_bench(const BenchConfig& config, std::ostream& out);

}  // namespace vne
