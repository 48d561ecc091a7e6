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

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "ovgadget/gadgets.hpp"

namespace ovgadget {
namespace {

TEST(BenchTest, SmallRowMatchesFormulaAndOracle) {
  const BenchRecord r = bench_one(8, 4, 4, 3, 0.5, 1024);
  EXPECT_EQ(r.status, "ok");
  EXPECT_EQ(r.p, default_p(8, 4, 4));
  EXPECT_EQ(r.nodes, r.expected_nodes);
  EXPECT_EQ(r.edges, r.expected_edges);
  EXPECT_EQ(r.decision, r.oracle);
  EXPECT_GE(r.build_ms, 0.0);
  EXPECT_GE(r.bfs_all_a_p_ms, 0.0);
  EXPECT_GE(r.oracle_ms, 0.0);
}

TEST(BenchTest, OverBudgetIsSkipped) {
  const BenchRecord r = bench_one(64, 16, 4, 1, 0.5, 0);
  EXPECT_EQ(r.status, "skipped");
  EXPECT_EQ(r.nodes, 0u);
  EXPECT_GT(r.expected_nodes, 0u);
}

TEST(BenchTest, RunStreamsRows) {
  BenchConfig config;
  config.ns = {2, 4};
  config.d = 4;
  config.seeds = {1, 2};
  config.memory_cap_mb = 64;
  std::size_t streamed = 0;
  const auto rows = run_bench(config, [&](const BenchRecord&) { ++streamed; });
  EXPECT_EQ(rows.size(), 4u);
  EXPECT_EQ(streamed, 4u);
}

TEST(BenchTest, CsvLayout) {
  BenchRecord r;
  r.n = 2;
  r.d = 4;
  std::ostringstream out;
  write_bench_csv(out, {r, r});
  const std::string text = out.str();
  EXPECT_EQ(text.rfind(bench_csv_header(), 0), 0u);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
  const std::string header = bench_csv_header();
  const std::string row = bench_csv_row(r);
  EXPECT_EQ(std::count(header.begin(), header.end(), ','), std::count(row.begin(), row.end(), ','));
}

TEST(LogLogSlopeTest, PowerLaws) {
  const std::vector<double> x = {1, 2, 4, 8, 16};
  std::vector<double> y;
  for (double v : x) y.push_back(3 * v * v);
  EXPECT_NEAR(loglog_slope(x, y), 2.0, 1e-12);
  EXPECT_NEAR(loglog_slope(x, x), 1.0, 1e-12);
  EXPECT_THROW(loglog_slope({1}, {1}), std::invalid_argument);
  EXPECT_THROW(loglog_slope({1, 2}, {1}), std::invalid_argument);
}

TEST(EstimateBytesTest, Monotone) {
  EXPECT_LT(estimate_bytes(100, 100), estimate_bytes(1000, 1000));
}

}  // namespace
}  // namespace ovgadget
