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

// Undirected unweighted graph with a role tag on every node.

#ifndef OVGADGET_GRAPH_HPP_
#define OVGADGET_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ovgadget/ovcore.hpp"

namespace ovgadget {

// Dense node index, stable for the lifetime of a graph.
using NodeId = std::uint32_t;

enum class RoleKind : std::uint8_t {
  kVectorRoot,        // a_r / b_r (the plain vector node in the OV-graph)
  kVectorTreeNode,    // internal or leaf node of a vector tree
  kCoordNode,         // c_j
  kCTreeNode,         // node of a c_A- or c_B-tree below c_j
  kPathNode,          // internal node of a subdivided edge
  kShortcutTreeNode,  // node of the A- or B-shortcut tree
  kPathEnd,           // a_p / b_p
  kMidNode,           // u, middle of the RC connecting path
  kXNode,
  kYNode,
  kXTreeNode,
  kYTreeNode,
  kBPrime,            // pendant b' on b_r
};

std::string_view role_kind_name(RoleKind kind);
// Throws std::invalid_argument for unknown names.
RoleKind parse_role_kind(std::string_view name);

// Flat tagged role. Fields that a kind does not use stay zero:
//   side   - VectorRoot, VectorTreeNode, CTreeNode, ShortcutTreeNode, PathEnd
//   index  - vector index, coordinate index, or path id for PathNode
//   depth  - tree depth, or position along the path for PathNode
//   copy   - which gadget copy (OV_rad halves, BC G1/G2)
//   twin   - 0 for an ordinary node, 1 or 2 for the halves of a split node
struct NodeRole {
  RoleKind kind = RoleKind::kPathNode;
  Side side = Side::kA;
  std::uint32_t index = 0;
  std::uint32_t depth = 0;
  std::uint8_t copy = 0;
  std::uint8_t twin = 0;

  static NodeRole vector_root(Side s, std::uint32_t i, std::uint8_t copy = 0) {
    return {RoleKind::kVectorRoot, s, i, 0, copy, 0};
  }
  static NodeRole vector_tree(Side s, std::uint32_t i, std::uint32_t depth,
                              std::uint8_t copy = 0) {
    return {RoleKind::kVectorTreeNode, s, i, depth, copy, 0};
  }
  static NodeRole coord(std::uint32_t j, std::uint8_t copy = 0) {
    return {RoleKind::kCoordNode, Side::kA, j, 0, copy, 0};
  }
  static NodeRole c_tree(std::uint32_t j, Side s, std::uint32_t depth,
                         std::uint8_t copy = 0) {
    return {RoleKind::kCTreeNode, s, j, depth, copy, 0};
  }
  static NodeRole path(std::uint32_t path_id, std::uint32_t pos, std::uint8_t copy = 0) {
    return {RoleKind::kPathNode, Side::kA, path_id, pos, copy, 0};
  }
  static NodeRole shortcut(Side s, std::uint32_t depth, std::uint8_t copy = 0) {
    return {RoleKind::kShortcutTreeNode, s, 0, depth, copy, 0};
  }
  static NodeRole path_end(Side s, std::uint32_t i, std::uint8_t copy = 0) {
    return {RoleKind::kPathEnd, s, i, 0, copy, 0};
  }
  static NodeRole mid() { return {RoleKind::kMidNode, Side::kA, 0, 0, 0, 0}; }
  static NodeRole x(std::uint8_t copy) { return {RoleKind::kXNode, Side::kA, 0, 0, copy, 0}; }
  static NodeRole y(std::uint8_t copy) { return {RoleKind::kYNode, Side::kA, 0, 0, copy, 0}; }
  static NodeRole x_tree(std::uint32_t depth, std::uint8_t copy = 0) {
    return {RoleKind::kXTreeNode, Side::kA, 0, depth, copy, 0};
  }
  static NodeRole y_tree(std::uint32_t depth, std::uint8_t copy = 0) {
    return {RoleKind::kYTreeNode, Side::kB, 0, depth, copy, 0};
  }
  static NodeRole b_prime(std::uint32_t i, std::uint8_t copy = 0) {
    return {RoleKind::kBPrime, Side::kB, i, 0, copy, 0};
  }

  bool is_landmark() const;

  friend bool operator==(const NodeRole&, const NodeRole&) = default;
};

// Short human label such as "a_r[3]", "c[1]", "path#7@2" or "u".
std::string role_label(const NodeRole& role);

// Immutable CSR adjacency; neighbor lists sorted ascending.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  std::size_t node_count() const { return roles_.size(); }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  const NodeRole& role(NodeId v) const { return roles_[v]; }
  const std::vector<NodeRole>& roles() const { return roles_; }

  bool has_edge(NodeId u, NodeId v) const;
  // Each undirected edge once, as (min, max), in ascending order.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  friend class GraphBuilder;

  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> targets_;
  std::vector<NodeRole> roles_;
};

class GraphBuilder {
 public:
  NodeId add_node(const NodeRole& role);
  // Self-loops and parallel edges are rejected at build().
  void add_edge(NodeId u, NodeId v);

  std::size_t node_count() const { return roles_.size(); }
  NodeRole& role(NodeId v) { return roles_.at(v); }

  // Throws std::logic_error on self-loops, parallel edges or bad ids.
  LabeledGraph build() &&;

 private:
  std::vector<NodeRole> roles_;
  std::vector<std::pair<NodeId, NodeId>> edges_;
};

}  // namespace ovgadget

#endif  // OVGADGET_GRAPH_HPP_
