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

#ifndef OVGADGET_TRANSFORM_HPP_
#define OVGADGET_TRANSFORM_HPP_

#include <vector>

#include "ovgadget/graph.hpp"

namespace ovgadget {

struct SplitGraph {
  LabeledGraph graph;
  // origin[v'] = node of the input graph that v' came from.
  std::vector<NodeId> origin;
};

// Replaces every degree-4 node v by adjacent twins: v keeps its id and the
// edges to its two lowest-id neighbors, a new node appended after the
// original ids takes the other two. Both twins are tagged twin=1/2.
// Throws std::invalid_argument if some degree exceeds 4.
SplitGraph split_to_degree3(const LabeledGraph& g);

struct Relabeled {
  LabeledGraph graph;
  std::vector<NodeId> new_id;  // indexed by old id
  std::vector<NodeId> old_id;  // indexed by new id
};

// Renumbers nodes in BFS order from `root` (remaining components follow in
// order of their lowest old id). Distances are unchanged; BFS sweeps over
// the result touch memory far more sequentially.
Relabeled relabel_bfs_order(const LabeledGraph& g, NodeId root);

}  // namespace ovgadget

#endif  // OVGADGET_TRANSFORM_HPP_
