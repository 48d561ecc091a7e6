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

#include <algorithm>
#include <numeric>

#include "ovgadget/parallel.hpp"

namespace ovgadget {

namespace {

void check_node(const LabeledGraph& g, NodeId s) {
  if (s >= g.node_count()) {
    throw std::out_of_range("node id " + std::to_string(s) + " out of range");
  }
}

[[noreturn]] void throw_disconnected(NodeId s) {
  throw DisconnectedGraphError("graph is disconnected (BFS from node " +
                               std::to_string(s) + " did not reach every node)");
}

}  // namespace

Bfs::Bfs(const LabeledGraph& g)
    : g_(&g), dist_(g.node_count(), kUnreachable), queue_(g.node_count()) {}

Hops Bfs::run(NodeId s) {
  check_node(*g_, s);
  std::fill(dist_.begin(), dist_.end(), kUnreachable);
  dist_[s] = 0;
  queue_[0] = s;
  std::size_t head = 0;
  std::size_t tail = 1;
  while (head < tail) {
    const NodeId v = queue_[head++];
    const Hops next = dist_[v] + 1;
    for (NodeId w : g_->neighbors(v)) {
      if (dist_[w] == kUnreachable) {
        dist_[w] = next;
        queue_[tail++] = w;
      }
    }
  }
  reached_ = tail;
  return dist_[queue_[tail - 1]];
}

std::vector<Hops> bfs_distances(const LabeledGraph& g, NodeId s) {
  Bfs bfs(g);
  bfs.run(s);
  return bfs.distances();
}

Hops eccentricity(const LabeledGraph& g, NodeId s) {
  Bfs bfs(g);
  const Hops ecc = bfs.run(s);
  if (!bfs.reached_all()) throw_disconnected(s);
  return ecc;
}

std::vector<Hops> eccentricities(const LabeledGraph& g, std::span<const NodeId> sources) {
  for (NodeId s : sources) check_node(g, s);
  std::vector<Hops> out(sources.size());
  parallel_for(sources.size(), [&](unsigned, std::size_t begin, std::size_t end) {
    Bfs bfs(g);
    for (std::size_t i = begin; i < end; ++i) {
      out[i] = bfs.run(sources[i]);
      if (!bfs.reached_all()) throw_disconnected(sources[i]);
    }
  });
  return out;
}

std::vector<Hops> all_eccentricities(const LabeledGraph& g) {
  std::vector<NodeId> all(g.node_count());
  std::iota(all.begin(), all.end(), NodeId{0});
  return eccentricities(g, all);
}

Hops diameter(const LabeledGraph& g) {
  if (g.node_count() == 0) throw std::invalid_argument("diameter of empty graph");
  const auto ecc = all_eccentricities(g);
  return *std::max_element(ecc.begin(), ecc.end());
}

Hops radius(const LabeledGraph& g) {
  if (g.node_count() == 0) throw std::invalid_argument("radius of empty graph");
  const auto ecc = all_eccentricities(g);
  return *std::min_element(ecc.begin(), ecc.end());
}

Hops reach_centrality(const LabeledGraph& g, NodeId u) {
  check_node(g, u);
  Bfs from_u(g);
  from_u.run(u);
  if (!from_u.reached_all()) throw_disconnected(u);
  const std::vector<Hops> du = from_u.distances();

  // min(d(s,u), .) <= d(s,u), so sources no farther than the best value so
  // far cannot improve it; visit them far-to-near and stop early.
  std::vector<NodeId> sources(g.node_count());
  std::iota(sources.begin(), sources.end(), NodeId{0});
  std::stable_sort(sources.begin(), sources.end(),
                   [&](NodeId a, NodeId b) { return du[a] > du[b]; });

  Hops best = 0;
  Bfs from_s(g);
  for (NodeId s : sources) {
    const Hops dsu = du[s];
    if (dsu <= best) break;
    from_s.run(s);
    const auto& ds = from_s.distances();
    for (NodeId t = 0; t < g.node_count(); ++t) {
      if (du[t] > best && dsu + du[t] == ds[t]) best = std::min(dsu, du[t]);
    }
  }
  return best;
}

std::size_t max_degree(const LabeledGraph& g) {
  std::size_t best = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::size_t component_count(const LabeledGraph& g) {
  std::vector<char> seen(g.node_count(), 0);
  std::vector<NodeId> stack;
  std::size_t components = 0;
  for (NodeId s = 0; s < g.node_count(); ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      for (NodeId w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

bool is_connected(const LabeledGraph& g) { return component_count(g) <= 1; }

}  // namespace ovgadget
