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

#include "ovgadget/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ovgadget/gadgets.hpp"
#include "ovgadget/ovcore.hpp"
#include "ovgadget/transform.hpp"

namespace ovgadget {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

std::size_t estimate_bytes(std::size_t nodes, std::size_t edges) {
  // Roles, offsets, BFS distance and queue per node; builder edge list plus
  // both CSR directions per edge.
  return nodes * (sizeof(NodeRole) + 3 * sizeof(std::size_t) + 2 * sizeof(Hops)) +
         edges * (2 * sizeof(NodeId) + 2 * sizeof(NodeId));
}

std::size_t default_memory_cap_mb() {
  if (const char* env = std::getenv("OVGADGET_MEM_MB")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 2048;
}

BenchRecord bench_one(std::size_t n, std::size_t d, unsigned multiplier, std::uint64_t seed,
                      double density, std::size_t memory_cap_mb) {
  BenchRecord r;
  r.n = n;
  r.d = d;
  r.seed = seed;
  r.p = default_p(n, d, multiplier);
  const OVInstance inst = gen_random(n, d, density, seed);
  const SizeFormula expect = expected_size(GadgetKind::kOvDia, inst, r.p);
  r.expected_nodes = expect.nodes;
  r.expected_edges = expect.edges;
  r.estimated_bytes = estimate_bytes(expect.nodes, expect.edges);
  if (r.estimated_bytes > (memory_cap_mb << 20)) {
    r.status = "skipped";
    return r;
  }

  auto start = Clock::now();
  r.oracle = find_orthogonal_pair(inst).found;
  r.oracle_ms = ms_since(start);

  start = Clock::now();
  const Gadget gadget = build_ov_dia(inst, r.p);
  r.build_ms = ms_since(start);
  r.nodes = gadget.meta.node_count;
  r.edges = gadget.meta.edge_count;

  const CopyLandmarks& lm = gadget.meta.copies[0];
  start = Clock::now();
  const Relabeled local = relabel_bfs_order(gadget.graph, *lm.a_shortcut_root);
  Bfs bfs(local.graph);
  for (NodeId s : lm.a_end) {
    bfs.run(local.new_id[s]);
    for (NodeId t : lm.b_end) {
      r.max_end_distance = std::max(r.max_end_distance, bfs.distances()[local.new_id[t]]);
    }
  }
  r.bfs_all_a_p_ms = ms_since(start);
  r.decision = r.max_end_distance == kUnreachable || r.max_end_distance >= 6 * r.p;
  return r;
}

std::vector<BenchRecord> run_bench(const BenchConfig& config,
                                   const std::function<void(const BenchRecord&)>& on_record) {
  const std::size_t cap = config.memory_cap_mb != 0 ? config.memory_cap_mb : default_memory_cap_mb();
  std::vector<BenchRecord> out;
  for (std::size_t n : config.ns) {
    for (std::uint64_t seed : config.seeds) {
      out.push_back(bench_one(n, config.d, config.multiplier, seed, config.density, cap));
      if (on_record) on_record(out.back());
    }
  }
  return out;
}

std::string bench_csv_header() {
  return "n,d,p,gadget,seed,status,expected_nodes,expected_edges,nodes,edges,estimated_bytes,"
         "build_ms,oracle_ms,bfs_all_a_p_ms,max_end_distance,decision,oracle";
}

std::string bench_csv_row(const BenchRecord& r) {
  std::ostringstream out;
  out << r.n << ',' << r.d << ',' << r.p << ',' << r.gadget << ',' << r.seed << ',' << r.status
      << ',' << r.expected_nodes << ',' << r.expected_edges << ',' << r.nodes << ',' << r.edges
      << ',' << r.estimated_bytes << ',' << r.build_ms << ',' << r.oracle_ms << ','
      << r.bfs_all_a_p_ms << ',';
  if (r.max_end_distance == kUnreachable) {
    out << "inf";
  } else {
    out << r.max_end_distance;
  }
  out << ',' << (r.decision ? 1 : 0) << ',' << (r.oracle ? 1 : 0);
  return out.str();
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << bench_csv_header() << '\n';
  for (const BenchRecord& r : records) out << bench_csv_row(r) << '\n';
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("loglog_slope: need two or more paired points");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0 || y[i] <= 0) throw std::invalid_argument("loglog_slope: nonpositive value");
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = k * sxx - sx * sx;
  if (denom == 0) throw std::invalid_argument("loglog_slope: x values are all equal");
  return (k * sxy - sx * sy) / denom;
}

}  // namespace ovgadget
