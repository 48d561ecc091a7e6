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

// Exact BFS-based distance measures: eccentricity, diameter, radius and
// reach centrality.

#ifndef OVGADGET_SOLVERS_HPP_
#define OVGADGET_SOLVERS_HPP_

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ovgadget/graph.hpp"

namespace ovgadget {

using Hops = std::uint32_t;

// Marks a node that BFS did not reach. Never compared as a number: every
// solver that needs a finite distance raises DisconnectedGraphError instead.
inline constexpr Hops kUnreachable = std::numeric_limits<Hops>::max();

class DisconnectedGraphError : public std::runtime_error {
 public:
  explicit DisconnectedGraphError(const std::string& what) : std::runtime_error(what) {}
};

// Reusable BFS scratch space for sweeps over many sources.
class Bfs {
 public:
  explicit Bfs(const LabeledGraph& g);

  // Fills distances() from s; returns the largest finite distance.
  Hops run(NodeId s);
  const std::vector<Hops>& distances() const { return dist_; }
  // Nodes reached by the last run, in visiting order.
  std::span<const NodeId> order() const { return {queue_.data(), reached_}; }
  bool reached_all() const { return reached_ == g_->node_count(); }

 private:
  const LabeledGraph* g_;
  std::vector<Hops> dist_;
  std::vector<NodeId> queue_;
  std::size_t reached_ = 0;
};

// Throws std::out_of_range for an invalid source.
std::vector<Hops> bfs_distances(const LabeledGraph& g, NodeId s);

// The following throw DisconnectedGraphError on an unreachable node.
Hops eccentricity(const LabeledGraph& g, NodeId s);
std::vector<Hops> eccentricities(const LabeledGraph& g, std::span<const NodeId> sources);
std::vector<Hops> all_eccentricities(const LabeledGraph& g);
Hops diameter(const LabeledGraph& g);
Hops radius(const LabeledGraph& g);

// max over pairs (s,t) with d(s,t) = d(s,u) + d(u,t) of min(d(s,u), d(u,t)).
Hops reach_centrality(const LabeledGraph& g, NodeId u);

std::size_t max_degree(const LabeledGraph& g);
std::size_t component_count(const LabeledGraph& g);
bool is_connected(const LabeledGraph& g);

}  // namespace ovgadget

#endif  // OVGADGET_SOLVERS_HPP_
