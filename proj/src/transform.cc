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

#include "ovgadget/transform.hpp"

#include <stdexcept>

#include "ovgadget/solvers.hpp"

namespace ovgadget {

SplitGraph split_to_degree3(const LabeledGraph& g) {
  const auto n = static_cast<NodeId>(g.node_count());
  constexpr NodeId kNone = static_cast<NodeId>(-1);
  std::vector<NodeId> second(n, kNone);

  GraphBuilder builder;
  SplitGraph out;
  for (NodeId v = 0; v < n; ++v) {
    if (g.degree(v) > 4) {
      throw std::invalid_argument("split_to_degree3: node " + std::to_string(v) +
                                  " has degree " + std::to_string(g.degree(v)));
    }
    NodeRole role = g.role(v);
    if (g.degree(v) == 4) role.twin = 1;
    builder.add_node(role);
    out.origin.push_back(v);
  }
  for (NodeId v = 0; v < n; ++v) {
    if (g.degree(v) != 4) continue;
    NodeRole role = g.role(v);
    role.twin = 2;
    second[v] = builder.add_node(role);
    out.origin.push_back(v);
    builder.add_edge(v, second[v]);
  }

  // Endpoint of edge {v, w} on v's side: the second twin unless w is one of
  // v's two lowest-id neighbors.
  auto endpoint = [&](NodeId v, NodeId w) {
    if (second[v] == kNone) return v;
    auto nb = g.neighbors(v);
    return (w == nb[0] || w == nb[1]) ? v : second[v];
  };
  for (auto [v, w] : g.edges()) builder.add_edge(endpoint(v, w), endpoint(w, v));

  out.graph = std::move(builder).build();
  return out;
}

Relabeled relabel_bfs_order(const LabeledGraph& g, NodeId root) {
  const auto n = static_cast<NodeId>(g.node_count());
  if (root >= n) throw std::out_of_range("relabel_bfs_order: bad root " + std::to_string(root));
  constexpr NodeId kNone = static_cast<NodeId>(-1);
  Relabeled out;
  out.new_id.assign(n, kNone);
  out.old_id.reserve(n);
  Bfs bfs(g);
  NodeId next_root = root;
  while (true) {
    bfs.run(next_root);
    for (NodeId v : bfs.order()) {
      out.new_id[v] = static_cast<NodeId>(out.old_id.size());
      out.old_id.push_back(v);
    }
    if (out.old_id.size() == n) break;
    next_root = 0;
    while (out.new_id[next_root] != kNone) ++next_root;
  }
  GraphBuilder builder;
  for (NodeId v : out.old_id) builder.add_node(g.role(v));
  for (auto [u, v] : g.edges()) builder.add_edge(out.new_id[u], out.new_id[v]);
  out.graph = std::move(builder).build();
  return out;
}

}  // namespace ovgadget
