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

#include "ovgadget/graph.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace ovgadget {

namespace {

constexpr std::array<std::pair<RoleKind, std::string_view>, 13> kRoleNames{{
    {RoleKind::kVectorRoot, "VectorRoot"},
    {RoleKind::kVectorTreeNode, "VectorTreeNode"},
    {RoleKind::kCoordNode, "CoordNode"},
    {RoleKind::kCTreeNode, "CTreeNode"},
    {RoleKind::kPathNode, "PathNode"},
    {RoleKind::kShortcutTreeNode, "ShortcutTreeNode"},
    {RoleKind::kPathEnd, "PathEnd"},
    {RoleKind::kMidNode, "MidNode"},
    {RoleKind::kXNode, "XNode"},
    {RoleKind::kYNode, "YNode"},
    {RoleKind::kXTreeNode, "XTreeNode"},
    {RoleKind::kYTreeNode, "YTreeNode"},
    {RoleKind::kBPrime, "BPrime"},
}};

}  // namespace

std::string_view role_kind_name(RoleKind kind) {
  for (const auto& [k, name] : kRoleNames) {
    if (k == kind) return name;
  }
  return "?";
}

RoleKind parse_role_kind(std::string_view name) {
  for (const auto& [k, n] : kRoleNames) {
    if (n == name) return k;
  }
  throw std::invalid_argument("unknown role kind: " + std::string(name));
}

bool NodeRole::is_landmark() const {
  switch (kind) {
    case RoleKind::kVectorRoot:
    case RoleKind::kCoordNode:
    case RoleKind::kPathEnd:
    case RoleKind::kMidNode:
    case RoleKind::kXNode:
    case RoleKind::kYNode:
    case RoleKind::kBPrime:
      return twin <= 1;
    default:
      return false;
  }
}

std::string role_label(const NodeRole& role) {
  const char s = role.side == Side::kA ? 'a' : 'b';
  const std::string idx = std::to_string(role.index);
  std::string label;
  switch (role.kind) {
    case RoleKind::kVectorRoot:
      label = std::string(1, s) + "_r[" + idx + "]";
      break;
    case RoleKind::kVectorTreeNode:
      label = std::string(1, s) + "tree[" + idx + "]@" + std::to_string(role.depth);
      break;
    case RoleKind::kCoordNode:
      label = "c[" + idx + "]";
      break;
    case RoleKind::kCTreeNode:
      label = "c" + std::string(1, side_char(role.side)) + "[" + idx + "]@" +
              std::to_string(role.depth);
      break;
    case RoleKind::kPathNode:
      label = "path#" + idx + "@" + std::to_string(role.depth);
      break;
    case RoleKind::kShortcutTreeNode:
      label = std::string(1, side_char(role.side)) + "-shortcut@" + std::to_string(role.depth);
      break;
    case RoleKind::kPathEnd:
      label = std::string(1, s) + "_p[" + idx + "]";
      break;
    case RoleKind::kMidNode:
      label = "u";
      break;
    case RoleKind::kXNode:
      label = "x";
      break;
    case RoleKind::kYNode:
      label = "y";
      break;
    case RoleKind::kXTreeNode:
      label = "xtree@" + std::to_string(role.depth);
      break;
    case RoleKind::kYTreeNode:
      label = "ytree@" + std::to_string(role.depth);
      break;
    case RoleKind::kBPrime:
      label = "b'[" + idx + "]";
      break;
  }
  if (role.copy != 0) label += "/" + std::to_string(role.copy + 1);
  if (role.twin != 0) label += "~" + std::to_string(role.twin);
  return label;
}

bool LabeledGraph::has_edge(NodeId u, NodeId v) const {
  if (u >= node_count() || v >= node_count()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<NodeId, NodeId>> LabeledGraph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

NodeId GraphBuilder::add_node(const NodeRole& role) {
  roles_.push_back(role);
  return static_cast<NodeId>(roles_.size() - 1);
}

void GraphBuilder::add_edge(NodeId u, NodeId v) { edges_.emplace_back(u, v); }

LabeledGraph GraphBuilder::build() && {
  const std::size_t n = roles_.size();
  std::vector<std::size_t> degree(n, 0);
  for (auto [u, v] : edges_) {
    if (u >= n || v >= n) throw std::logic_error("GraphBuilder: edge endpoint out of range");
    if (u == v) throw std::logic_error("GraphBuilder: self-loop at " + std::to_string(u));
    ++degree[u];
    ++degree[v];
  }
  LabeledGraph g;
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.targets_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : edges_) {
    g.targets_[fill[u]++] = v;
    g.targets_[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) {
      throw std::logic_error("GraphBuilder: parallel edge at node " + std::to_string(v));
    }
  }
  g.roles_ = std::move(roles_);
  edges_.clear();
  return g;
}

}  // namespace ovgadget
