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

#include "ovgadget/solvers.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "ovgadget/gadgets.hpp"
#include "test_support.hpp"

namespace ovgadget {
namespace {

using testing::cycle_graph;
using testing::graph_from_edges;
using testing::path_graph;
using testing::star_graph;

TEST(BfsTest, PathFromEnd) {
  EXPECT_EQ(bfs_distances(path_graph(3), 0), (std::vector<Hops>{0, 1, 2}));
}

TEST(BfsTest, StarFromCenter) {
  EXPECT_EQ(bfs_distances(star_graph(3), 0), (std::vector<Hops>{0, 1, 1, 1}));
}

TEST(BfsTest, UnreachableIsSentinel) {
  const auto d = bfs_distances(graph_from_edges(4, {{0, 1}, {2, 3}}), 0);
  EXPECT_EQ(d[1], 1u);
  EXPECT_EQ(d[2], kUnreachable);
}

TEST(BfsTest, InvalidSourceThrows) {
  EXPECT_THROW(bfs_distances(path_graph(3), 3), std::out_of_range);
}

TEST(BfsTest, PendantPathLengthInDia) {
  const OVInstance inst = gen_random(2, 2, 0.5, 4);
  const Gadget g = build_ov_dia(inst, 10);
  const auto& lm = g.meta.copies[0];
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(bfs_distances(g.graph, lm.a_end[i])[lm.a_root[i]], 10u);
  }
}

TEST(BfsTest, MatchesFloydWarshall) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    const LabeledGraph g = testing::random_connected_graph(2 + k % 12, 0.15, rng);
    const auto fw = testing::floyd_warshall(g);
    for (NodeId s = 0; s < g.node_count(); ++s) EXPECT_EQ(bfs_distances(g, s), fw[s]);
  }
}

TEST(BfsTest, TriangleInequality) {
  std::mt19937_64 rng(12);
  const LabeledGraph g = testing::random_connected_graph(20, 0.1, rng);
  std::vector<std::vector<Hops>> d;
  for (NodeId s = 0; s < g.node_count(); ++s) d.push_back(bfs_distances(g, s));
  for (NodeId a = 0; a < 20; ++a) {
    EXPECT_EQ(d[a][a], 0u);
    for (NodeId b = 0; b < 20; ++b) {
      EXPECT_EQ(d[a][b], d[b][a]);
      for (NodeId c = 0; c < 20; ++c) EXPECT_LE(d[a][c], d[a][b] + d[b][c]);
    }
  }
}

TEST(EccentricityTest, Cycle) {
  const LabeledGraph g = cycle_graph(6);
  for (Hops e : all_eccentricities(g)) EXPECT_EQ(e, 3u);
  EXPECT_EQ(diameter(g), 3u);
  EXPECT_EQ(radius(g), 3u);
}

TEST(EccentricityTest, Path) {
  const LabeledGraph g = path_graph(5);
  EXPECT_EQ(diameter(g), 4u);
  EXPECT_EQ(radius(g), 2u);
  EXPECT_EQ(eccentricity(g, 0), 4u);
  EXPECT_EQ(eccentricity(g, 4), 4u);
  EXPECT_EQ(eccentricity(g, 2), 2u);
}

TEST(EccentricityTest, DisconnectedThrows) {
  const LabeledGraph g = graph_from_edges(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(eccentricity(g, 0), DisconnectedGraphError);
  EXPECT_THROW(diameter(g), DisconnectedGraphError);
  EXPECT_THROW(radius(g), DisconnectedGraphError);
}

TEST(EccentricityTest, DiameterAndRadiusAreExtremes) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 30; ++k) {
    const LabeledGraph g = testing::random_connected_graph(3 + k, 0.05, rng);
    const auto ecc = all_eccentricities(g);
    EXPECT_EQ(diameter(g), *std::max_element(ecc.begin(), ecc.end()));
    EXPECT_EQ(radius(g), *std::min_element(ecc.begin(), ecc.end()));
  }
}

TEST(EccentricityTest, PlantedDiaReachesSixP) {
  const OVInstance inst = gen_planted_orthogonal(2, 2, 1);
  const Gadget g = build_ov_dia(inst, 24);
  const Hops d = is_connected(g.graph) ? diameter(g.graph) : kUnreachable;
  EXPECT_GE(d, 144u);
}

TEST(EccentricityTest, SubsetMatchesAll) {
  std::mt19937_64 rng(14);
  const LabeledGraph g = testing::random_connected_graph(30, 0.05, rng);
  const auto all = all_eccentricities(g);
  const std::vector<NodeId> some{3, 0, 29, 3};
  const auto part = eccentricities(g, some);
  for (std::size_t i = 0; i < some.size(); ++i) EXPECT_EQ(part[i], all[some[i]]);
}

TEST(ReachCentralityTest, PathCenter) { EXPECT_EQ(reach_centrality(path_graph(5), 2), 2u); }

TEST(ReachCentralityTest, Star) {
  EXPECT_EQ(reach_centrality(star_graph(4), 0), 1u);
  EXPECT_EQ(reach_centrality(star_graph(4), 1), 0u);
}

TEST(ReachCentralityTest, MatchesReorderedScan) {
  std::mt19937_64 rng(15);
  for (int k = 0; k < 60; ++k) {
    const LabeledGraph g = testing::random_connected_graph(2 + k % 15, 0.1, rng);
    for (NodeId u = 0; u < g.node_count(); ++u) {
      const Hops rc = reach_centrality(g, u);
      EXPECT_EQ(rc, testing::reach_centrality_scan(g, u));
      EXPECT_LE(rc, eccentricity(g, u));
    }
  }
}

TEST(ReachCentralityTest, RcGadgetFreeInstance) {
  const OVInstance inst = gen_orthogonal_free(2, 2, 3);
  const Gadget g = build_rc_gadget(inst, 32);
  const Hops rc = reach_centrality(g.graph, *g.meta.mid);
  EXPECT_EQ(rc, testing::reach_centrality_scan(g.graph, *g.meta.mid));
  EXPECT_LE(rc, 64u);
}

TEST(ReachCentralityTest, DisconnectedThrows) {
  EXPECT_THROW(reach_centrality(graph_from_edges(4, {{0, 1}, {2, 3}}), 0),
               DisconnectedGraphError);
}

TEST(DegreeTest, CycleAndComponents) {
  EXPECT_EQ(max_degree(cycle_graph(6)), 2u);
  EXPECT_TRUE(is_connected(cycle_graph(6)));
  const LabeledGraph two = graph_from_edges(4, {{0, 1}, {2, 3}});
  EXPECT_FALSE(is_connected(two));
  EXPECT_EQ(component_count(two), 2u);
}

TEST(DegreeTest, DiaHasDegreeFour) {
  const OVInstance inst = gen_orthogonal_free(4, 4, 2);
  const Gadget g = build_ov_dia(inst, 16);
  EXPECT_EQ(max_degree(g.graph), 4u);
  EXPECT_TRUE(is_connected(g.graph));
}

}  // namespace
}  // namespace ovgadget
