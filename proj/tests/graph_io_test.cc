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

#include "ovgadget/graph_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "ovgadget/gadgets.hpp"
#include "ovgadget/transform.hpp"
#include "test_support.hpp"

namespace ovgadget {
namespace {

TEST(EdgeListTest, RoundTripsGadgets) {
  const OVInstance inst = gen_random(3, 3, 0.5, 1);
  const Hops p = default_p(3, 3, 4);
  for (const Gadget& g : {build_ov_graph(inst), build_ov_dia(inst, p), build_ov_rad(inst, p),
                          build_rc_gadget(inst, p), build_bc_bounded(inst, p).g2}) {
    EXPECT_EQ(parse_edge_list(to_edge_list(g.graph)), g.graph);
  }
  const SplitGraph s = split_to_degree3(build_ov_dia(inst, p).graph);
  EXPECT_EQ(parse_edge_list(to_edge_list(s.graph)), s.graph);
}

TEST(EdgeListTest, Layout) {
  const LabeledGraph g = testing::path_graph(2);
  EXPECT_EQ(to_edge_list(g),
            "# ovgadget edge-list v1\n"
            "nodes 2 edges 1\n"
            "role 0 PathNode A 0 0 0 0\n"
            "role 1 PathNode A 0 1 0 0\n"
            "0 1\n");
}

TEST(EdgeListTest, RejectsMalformed) {
  EXPECT_THROW(parse_edge_list(""), std::invalid_argument);
  EXPECT_THROW(parse_edge_list("# ovgadget edge-list v1\nnodes 1 edges 0\n"),
               std::invalid_argument);
  EXPECT_THROW(parse_edge_list("# ovgadget edge-list v1\nnodes 1 edges 0\n"
                               "role 0 Bogus A 0 0 0 0\n"),
               std::invalid_argument);
  EXPECT_THROW(parse_edge_list("# ovgadget edge-list v1\nnodes 2 edges 1\n"
                               "role 0 PathNode A 0 0 0 0\nrole 1 PathNode A 0 1 0 0\n0 5\n"),
               std::invalid_argument);
  EXPECT_THROW(parse_edge_list("# ovgadget edge-list v1\nnodes 2 edges 2\n"
                               "role 0 PathNode A 0 0 0 0\nrole 1 PathNode A 0 1 0 0\n0 1\n"),
               std::invalid_argument);
}

TEST(EdgeListTest, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "graph_io_test.edges";
  const Gadget g = build_ov_dia(gen_random(2, 2, 0.5, 3), 12);
  write_edge_list(g.graph, path);
  EXPECT_EQ(read_edge_list(path), g.graph);
  std::filesystem::remove(path);
}

TEST(DotTest, LabelsAndLandmarks) {
  const Gadget g = build_rc_gadget(gen_random(2, 2, 0.5, 3), 12);
  const std::string dot = to_dot(g.graph, "rc");
  EXPECT_EQ(dot.rfind("graph \"rc\" {", 0), 0u);
  EXPECT_NE(dot.find("label=\"u\""), std::string::npos);
  EXPECT_NE(dot.find("label=\"a_p[1]\""), std::string::npos);
  EXPECT_NE(dot.find("doublecircle"), std::string::npos);
  EXPECT_EQ(dot.back(), '\n');
}

TEST(DotTest, DescribeAppendsLandmarkTable) {
  const Gadget g = build_ov_dia(gen_random(2, 2, 0.5, 3), 12);
  const std::string text = describe(g);
  EXPECT_NE(text.find("// gadget dia n=2 d=2 p=12"), std::string::npos);
  EXPECT_NE(text.find("// a_r[0] "), std::string::npos);
}

}  // namespace
}  // namespace ovgadget
