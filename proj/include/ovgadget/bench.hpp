// Copyright 2026 The ovgadget Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Scaling benchmark over OV_dia: build time, brute-force oracle time and the
// time of one BFS from every a_p (after a BFS-order relabeling, which is
// included in that time), one configuration at a time.

#ifndef OVGADGET_BENCH_HPP_
#define OVGADGET_BENCH_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "ovgadget/solvers.hpp"

namespace ovgadget {

struct BenchRecord {
  std::size_t n = 0;
  std::size_t d = 0;
  Hops p = 0;
  std::string gadget = "dia";
  std::uint64_t seed = 0;
  std::string status = "ok";  // "ok" or "skipped"

  std::size_t expected_nodes = 0;
  std::size_t expected_edges = 0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t estimated_bytes = 0;

  double build_ms = 0;
  double oracle_ms = 0;
  double bfs_all_a_p_ms = 0;

  // Largest d(a_p, b_p) seen by the BFS sweep; decision is max >= 6p.
  Hops max_end_distance = 0;
  bool decision = false;
  bool oracle = false;
};

struct BenchConfig {
  std::vector<std::size_t> ns;
  std::size_t d = 16;
  unsigned multiplier = 4;
  std::vector<std::uint64_t> seeds{1};
  double density = 0.5;
  // 0 means: read OVGADGET_MEM_MB, default 2048.
  std::size_t memory_cap_mb = 0;
};

// Estimated peak bytes for building and sweeping a graph of this size.
std::size_t estimate_bytes(std::size_t nodes, std::size_t edges);
std::size_t default_memory_cap_mb();

BenchRecord bench_one(std::size_t n, std::size_t d, unsigned multiplier, std::uint64_t seed,
                      double density, std::size_t memory_cap_mb);
// Calls on_record after every row so long runs stream their output.
std::vector<BenchRecord> run_bench(const BenchConfig& config,
                                   const std::function<void(const BenchRecord&)>& on_record = {});

std::string bench_csv_header();
std::string bench_csv_row(const BenchRecord& r);
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

// Least-squares slope of log(y) against log(x). Needs >= 2 points.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace ovgadget

#endif  // OVGADGET_BENCH_HPP_
