#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iman/simulate.hpp"

namespace iman {

struct NoiseSpec {
  enum class Kind { kUniformRandom, kTwoPoint };
  Kind kind = Kind::kUniformRandom;
  double p = 0.5;    // two-point only
  int position = 0;  // two-point only

  std::string label() const;
};

// "uniform" or "twopoint:P" or "twopoint:P:POS".
NoiseSpec parse_noise_spec(const std::string& text);

// Uniform-random noise is redrawn per trial from the given stream.
Distribution make_noise(const NoiseSpec& spec, Modulus m, Rng& rng);

struct BenchCell {
  int d = 4;
  int m = 4;
  int n = 1000;
  double p_a = 0.5;
  NoiseSpec noise;
};

// Grid spec: semicolon-separated key=value pairs with comma lists, e.g.
// "d=4;m=4;n=100,1000,10000;pa=0.5;noise=uniform". Cells are the cross
// product, expanded in d, m, n, pa, noise order. d, m and n are required.
std::vector<BenchCell> parse_grid(const std::string& spec);

struct BenchCellResult {
  BenchCell cell;
  int trials = 0;
  int failures = 0;      // trials aborted by insufficient data
  double mean_ero = 0.0;  // over successful trials
  double mean_acc = 0.0;
  double mean_ct_ms = 0.0;  // wall-clock of the discovery call per trial
};

// Runs `trials` independent trials of simulate-then-discover for one grid
// cell. Per-trial RNG substreams are derived from (seed, cell_index,
// trial), so results do not depend on the number of worker threads.
BenchCellResult run_bench_cell(const BenchCell& cell, int trials, std::uint64_t seed,
                               std::size_t cell_index, double alpha, int threads);

// Worker count: IMAN_THREADS caps hardware concurrency when set.
int bench_thread_count();

std::string bench_report_header();
std::string bench_report_row(const BenchCellResult& r);

}  // namespace iman
