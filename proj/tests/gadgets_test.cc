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

#include "ovgadget/gadgets.hpp"

#include <gtest/gtest.h>

#include "ovgadget/solvers.hpp"
#include "ovgadget/transform.hpp"

namespace ovgadget {
namespace {

OVInstance Inst(std::vector<BitRow> a, std::vector<BitRow> b) {
  return OVInstance::make(std::move(a), std::move(b));
}

Hops Dist(const LabeledGraph& g, NodeId s, NodeId t) { return bfs_distances(g, s)[t]; }

std::vector<OVInstance> Corpus() {
  std::vector<OVInstance> out;
  for (std::size_t n : {1, 2, 3, 5, 8}) {
    for (std::size_t d : {2, 3, 4, 7}) {
      for (std::uint64_t seed : {1, 2}) {
        out.push_back(gen_random(n, d, 0.4, seed));
        out.push_back(gen_planted_orthogonal(n, d, seed));
        out.push_back(gen_orthogonal_free(n, d, seed));
      }
    }
  }
  out.push_back(Inst({{1}}, {{1}}));
  return out;
}

TEST(DefaultPTest, Arithmetic) {
  EXPECT_EQ(default_p(16, 8, 4), 32u);
  EXPECT_EQ(default_p(2, 2, 4), 12u);
  EXPECT_EQ(default_p(16, 8, 32), 228u);
  EXPECT_EQ(default_p(1, 1, 4), 4u);
  EXPECT_THROW(default_p(2, 2, 3), ParameterError);
  EXPECT_EQ(min_p(4, 8), 6u);
}

TEST(GadgetKindTest, Names) {
  for (auto kind : {GadgetKind::kOvGraph, GadgetKind::kOvDia, GadgetKind::kOvRad,
                    GadgetKind::kRc, GadgetKind::kBcSparse, GadgetKind::kBcBounded}) {
    EXPECT_EQ(parse_gadget_kind(gadget_kind_name(kind)), kind);
  }
  EXPECT_THROW(parse_gadget_kind("diameter"), std::invalid_argument);
}

TEST(OvGraphTest, OrthogonalPairIsDisconnected) {
  const Gadget g = build_ov_graph(Inst({{1, 0}}, {{0, 1}}));
  EXPECT_EQ(g.graph.node_count(), 4u);
  EXPECT_EQ(g.graph.edge_count(), 2u);
  EXPECT_EQ(g.meta.components, 2u);
  const auto& lm = g.meta.copies[0];
  EXPECT_EQ(Dist(g.graph, lm.a_root[0], lm.b_root[0]), kUnreachable);
}

TEST(OvGraphTest, SharedCoordinates) {
  const Gadget g = build_ov_graph(Inst({{1, 1}}, {{1, 1}}));
  const auto& lm = g.meta.copies[0];
  EXPECT_EQ(Dist(g.graph, lm.a_root[0], lm.b_root[0]), 2u);
  EXPECT_EQ(g.meta.components, 1u);
}

TEST(OvGraphTest, DistanceTwoIffIntersecting) {
  const OVInstance inst = gen_random(8, 6, 0.3, 4);
  const Gadget g = build_ov_graph(inst);
  const auto& lm = g.meta.copies[0];
  for (std::size_t i = 0; i < 8; ++i) {
    const auto dist = bfs_distances(g.graph, lm.a_root[i]);
    for (std::size_t j = 0; j < 8; ++j) {
      EXPECT_EQ(dist[lm.b_root[j]] <= 2, !is_orthogonal(inst.a_vectors()[i], inst.b_vectors()[j]));
    }
  }
}

TEST(OvDiaTest, DegenerateSingleCoordinate) {
  const Gadget g = build_ov_dia(Inst({{1}}, {{1}}), 4);
  const auto& lm = g.meta.copies[0];
  EXPECT_EQ(Dist(g.graph, lm.a_end[0], lm.b_end[0]), 16u);
}

TEST(OvDiaTest, FreeEndpointsWithinBound) {
  const Gadget g = build_ov_dia(gen_orthogonal_free(2, 2, 3), 12);
  const auto& lm = g.meta.copies[0];
  for (NodeId a : lm.a_end) {
    for (NodeId b : lm.b_end) EXPECT_LE(Dist(g.graph, a, b), 52u);
  }
}

TEST(OvDiaTest, PlantedPairFarApart) {
  const OVInstance inst = gen_planted_orthogonal(2, 2, 3);
  const auto [i, j] = *find_orthogonal_pair(inst).witness;
  const Gadget g = build_ov_dia(inst, 12);
  const auto& lm = g.meta.copies[0];
  EXPECT_GE(Dist(g.graph, lm.a_end[i], lm.b_end[j]), 72u);
}

TEST(OvDiaTest, LeavesHaveDegreeAtMostTwo) {
  for (const OVInstance& inst : Corpus()) {
    const Gadget g = build_ov_dia(inst, default_p(inst.n(), inst.d(), 4));
    for (NodeId v = 0; v < g.graph.node_count(); ++v) {
      const NodeRole& r = g.graph.role(v);
      const bool tree = r.kind == RoleKind::kVectorTreeNode || r.kind == RoleKind::kCTreeNode;
      if (!tree) continue;
      // Leaves have one tree neighbor; a degree above 3 means an internal node.
      if (g.graph.degree(v) <= 2) continue;
      std::size_t tree_neighbors = 0;
      for (NodeId w : g.graph.neighbors(v)) {
        const RoleKind k = g.graph.role(w).kind;
        tree_neighbors += (k == r.kind || k == RoleKind::kVectorRoot || k == RoleKind::kCoordNode);
      }
      EXPECT_GE(tree_neighbors, 2u) << inst.descriptor() << " node " << v;
    }
  }
}

TEST(OvDiaTest, RejectsSmallP) {
  const OVInstance inst = gen_random(4, 4, 0.5, 1);
  EXPECT_THROW(build_ov_dia(inst, min_p(4, 4) - 1), ParameterError);
  EXPECT_NO_THROW(build_ov_dia(inst, min_p(4, 4)));
}

TEST(OvRadTest, GluingArithmetic) {
  const OVInstance inst = Inst({{1}}, {{1}});
  EXPECT_EQ(build_ov_rad(inst, 4).graph.node_count(), 2 * build_ov_dia(inst, 4).graph.node_count() - 1);
}

TEST(OvRadTest, SharedEndsHaveDegreeTwo) {
  const Gadget g = build_ov_rad(gen_random(3, 4, 0.5, 5), 20);
  ASSERT_EQ(g.meta.copies.size(), 2u);
  EXPECT_EQ(g.meta.copies[0].a_end, g.meta.copies[1].a_end);
  for (NodeId a : g.meta.copies[0].a_end) EXPECT_EQ(g.graph.degree(a), 2u);
  EXPECT_NE(g.meta.copies[0].b_end, g.meta.copies[1].b_end);
}

TEST(OvRadTest, HittingVectorIsCentral) {
  const OVInstance inst = Inst({{1, 1}, {1, 0}}, {{1, 0}, {0, 1}});
  const Gadget g = build_ov_rad(inst, 12);
  // 4p + 4 ceil(lg n) + 2 ceil(lg d); the route to the far b_p climbs the
  // shortcut tree of the other copy as well.
  EXPECT_EQ(eccentricity(g.graph, g.meta.copies[0].a_end[0]), 53u);
  EXPECT_LE(eccentricity(g.graph, g.meta.copies[0].a_end[0]), 54u);
}

TEST(OvRadTest, HittingFreeEndsAreEccentric) {
  const Gadget g = build_ov_rad(gen_hitting_free(2, 2, 4), 12);
  for (NodeId a : g.meta.copies[0].a_end) EXPECT_GE(eccentricity(g.graph, a), 72u);
}

TEST(RcGadgetTest, MidpointIsTwoPFromEveryRoot) {
  const Gadget g = build_rc_gadget(gen_random(2, 2, 0.5, 6), 12);
  ASSERT_TRUE(g.meta.mid.has_value());
  const auto dist = bfs_distances(g.graph, *g.meta.mid);
  for (NodeId a : g.meta.copies[0].a_root) EXPECT_EQ(dist[a], 24u);
  for (NodeId b : g.meta.copies[0].b_root) EXPECT_EQ(dist[b], 24u);
  EXPECT_EQ(g.meta.connector_length, 2 * (12 - 1));
}

TEST(RcGadgetTest, MidpointEquidistantForUnevenTrees) {
  for (std::size_t n : {3, 5, 6, 7}) {
    const Gadget g = build_rc_gadget(gen_random(n, 3, 0.5, 6), 20);
    const auto dist = bfs_distances(g.graph, *g.meta.mid);
    for (NodeId a : g.meta.copies[0].a_root) EXPECT_EQ(dist[a], 40u) << n;
    for (NodeId b : g.meta.copies[0].b_root) EXPECT_EQ(dist[b], 40u) << n;
  }
}

TEST(RcGadgetTest, ReachSeparatesInstances) {
  const Gadget free = build_rc_gadget(gen_orthogonal_free(4, 4, 7), 20);
  EXPECT_LE(reach_centrality(free.graph, *free.meta.mid), 54u);
  const Gadget planted = build_rc_gadget(gen_planted_orthogonal(4, 4, 7), 20);
  EXPECT_GE(reach_centrality(planted.graph, *planted.meta.mid), 60u);
}

TEST(BcSparseTest, G1DropsBSide) {
  const BcPair pair = build_bc_sparse(gen_random(3, 4, 0.5, 8));
  EXPECT_EQ(pair.g1.meta.role_counts.count(RoleKind::kYNode), 1u);
  for (NodeId v = 0; v < pair.g1.graph.node_count(); ++v) {
    const NodeRole& r = pair.g1.graph.role(v);
    EXPECT_FALSE(r.kind == RoleKind::kVectorRoot && r.side == Side::kB);
  }
  EXPECT_EQ(pair.g2.graph.degree(*pair.g2.meta.x), 3u + 1u);
  EXPECT_TRUE(pair.g2.graph.has_edge(*pair.g2.meta.x, *pair.g2.meta.y));
}

TEST(BcBoundedTest, RootDistances) {
  const OVInstance inst = Inst({{1, 1}, {1, 0}}, {{0, 1}, {1, 1}});
  const BcPair pair = build_bc_bounded(inst, 12);
  const auto& lm = pair.g2.meta.copies[0];
  // a0.b0 = 1, a1.b0 = 0.
  EXPECT_EQ(Dist(pair.g2.graph, lm.a_root[0], lm.b_root[0]), 28u);
  EXPECT_EQ(Dist(pair.g2.graph, lm.a_root[1], lm.b_root[0]), 38u);
  EXPECT_EQ(pair.g2.meta.b_prime.size(), 2u);
  EXPECT_TRUE(pair.g1.meta.b_prime.empty());
}

TEST(BcBoundedTest, XTreeSize) {
  for (std::size_t n : {1, 2, 3, 5, 8}) {
    const BcPair pair = build_bc_bounded(gen_random(n, 4, 0.5, 1), 12);
    const auto& counts = pair.g1.meta.role_counts;
    const auto it = counts.find(RoleKind::kXTreeNode);
    EXPECT_EQ(it == counts.end() ? 0 : it->second, 2 * n - 2) << n;
  }
}

TEST(GadgetInvariantsTest, CountsAuditAndDegree) {
  for (const OVInstance& inst : Corpus()) {
    const Hops p = default_p(inst.n(), inst.d(), 4);
    std::vector<std::pair<GadgetKind, Gadget>> built = {
        {GadgetKind::kOvGraph, build_ov_graph(inst)},
        {GadgetKind::kOvDia, build_ov_dia(inst, p)},
        {GadgetKind::kOvRad, build_ov_rad(inst, p)},
        {GadgetKind::kRc, build_rc_gadget(inst, p)},
    };
    for (auto& [kind, g] : built) {
      const SizeFormula f = expected_size(kind, inst, p);
      EXPECT_EQ(g.graph.node_count(), f.nodes) << gadget_kind_name(kind) << " " << inst.descriptor();
      EXPECT_EQ(g.graph.edge_count(), f.edges) << gadget_kind_name(kind) << " " << inst.descriptor();
      for (const auto& m : audit_gadget(g)) ADD_FAILURE() << gadget_kind_name(kind) << " " << inst.descriptor() << ": " << m;
      if (kind != GadgetKind::kOvGraph) {
        EXPECT_LE(max_degree(g.graph), 4u);
        EXPECT_LE(max_degree(split_to_degree3(g.graph).graph), 3u);
      }
    }
    for (auto [kind, pair] : {std::pair{GadgetKind::kBcSparse, build_bc_sparse(inst)},
                              std::pair{GadgetKind::kBcBounded, build_bc_bounded(inst, p)}}) {
      for (bool g2 : {false, true}) {
        const Gadget& g = g2 ? pair.g2 : pair.g1;
        const SizeFormula f = expected_size(kind, inst, p, g2);
        EXPECT_EQ(g.graph.node_count(), f.nodes) << gadget_kind_name(kind) << " g2=" << g2;
        EXPECT_EQ(g.graph.edge_count(), f.edges) << gadget_kind_name(kind) << " g2=" << g2;
        for (const auto& m : audit_gadget(g)) ADD_FAILURE() << gadget_kind_name(kind) << " " << inst.descriptor() << ": " << m;
        EXPECT_TRUE(is_connected(g.graph));
      }
      if (kind == GadgetKind::kBcBounded) EXPECT_LE(max_degree(pair.g2.graph), 4u);
    }
  }
}

// The two sides meet only through a coordinate both of them use.
TEST(GadgetInvariantsTest, DiaConnectedIffSomePairIntersects) {
  for (const OVInstance& inst : Corpus()) {
    bool intersecting = false;
    for (const BitRow& a : inst.a_vectors()) {
      for (const BitRow& b : inst.b_vectors()) intersecting |= !is_orthogonal(a, b);
    }
    EXPECT_EQ(is_connected(build_ov_dia(inst, default_p(inst.n(), inst.d(), 4)).graph),
              intersecting)
        << inst.descriptor();
  }
}

TEST(GadgetInvariantsTest, Deterministic) {
  const OVInstance inst = gen_random(5, 6, 0.5, 9);
  EXPECT_EQ(build_ov_dia(inst, 24).graph, build_ov_dia(inst, 24).graph);
  EXPECT_EQ(build_rc_gadget(inst, 24).graph, build_rc_gadget(inst, 24).graph);
  EXPECT_EQ(build_bc_bounded(inst, 24).g2.graph, build_bc_bounded(inst, 24).g2.graph);
}

TEST(DescribeTest, LandmarkTable) {
  const Gadget g = build_rc_gadget(gen_random(2, 2, 0.5, 1), 12);
  const std::string table = landmark_table(g.meta);
  EXPECT_NE(table.find("u " + std::to_string(*g.meta.mid)), std::string::npos);
  EXPECT_NE(table.find("a_p[0] "), std::string::npos);
}

}  // namespace
}  // namespace ovgadget
