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

// Small graph factories and independent oracles shared by the tests. The
// oracles deliberately use different algorithms from the library code.

#ifndef OVGADGET_TESTS_TEST_SUPPORT_HPP_
#define OVGADGET_TESTS_TEST_SUPPORT_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "ovgadget/betweenness.hpp"
#include "ovgadget/graph.hpp"
#include "ovgadget/ovcore.hpp"
#include "ovgadget/solvers.hpp"

namespace ovgadget::testing {

inline LabeledGraph graph_from_edges(std::size_t nodes,
                                     const std::vector<std::pair<NodeId, NodeId>>& edges) {
  GraphBuilder b;
  for (std::size_t i = 0; i < nodes; ++i) b.add_node(NodeRole::path(0, static_cast<std::uint32_t>(i)));
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

inline LabeledGraph path_graph(std::size_t k) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  return graph_from_edges(k, e);
}

inline LabeledGraph cycle_graph(std::size_t k) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId i = 0; i < k; ++i) e.emplace_back(i, static_cast<NodeId>((i + 1) % k));
  return graph_from_edges(k, e);
}

// Center 0, leaves 1..k.
inline LabeledGraph star_graph(std::size_t leaves) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return graph_from_edges(leaves + 1, e);
}

// Connected random graph: a random spanning tree plus extra edges.
inline LabeledGraph random_connected_graph(std::size_t nodes, double extra, std::mt19937_64& rng) {
  std::vector<std::vector<bool>> adj(nodes, std::vector<bool>(nodes, false));
  std::vector<std::pair<NodeId, NodeId>> e;
  auto add = [&](NodeId u, NodeId v) {
    if (u == v || adj[u][v]) return;
    adj[u][v] = adj[v][u] = true;
    e.emplace_back(u, v);
  };
  for (NodeId v = 1; v < nodes; ++v) {
    std::uniform_int_distribution<NodeId> pick(0, v - 1);
    add(pick(rng), v);
  }
  std::bernoulli_distribution coin(extra);
  for (NodeId u = 0; u < nodes; ++u) {
    for (NodeId v = u + 1; v < nodes; ++v) {
      if (coin(rng)) add(u, v);
    }
  }
  return graph_from_edges(nodes, e);
}

// Floyd-Warshall; kUnreachable for no path.
inline std::vector<std::vector<Hops>> floyd_warshall(const LabeledGraph& g) {
  const std::size_t n = g.node_count();
  constexpr std::uint64_t kInf = std::uint64_t{1} << 40;
  std::vector<std::vector<std::uint64_t>> d(n, std::vector<std::uint64_t>(n, kInf));
  for (NodeId u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (NodeId v : g.neighbors(u)) d[u][v] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  std::vector<std::vector<Hops>> out(n, std::vector<Hops>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out[i][j] = d[i][j] >= kInf ? kUnreachable : static_cast<Hops>(d[i][j]);
    }
  }
  return out;
}

// Enumerates every shortest s-t path explicitly and, for each unordered
// pair, adds (#paths through u) / (#paths) to every interior u.
inline std::vector<Rational> enumerate_betweenness(const LabeledGraph& g) {
  const std::size_t n = g.node_count();
  const auto dist = floyd_warshall(g);
  std::vector<Rational> bc(n, Rational(0));
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < n; ++s) {
    for (NodeId t = s + 1; t < n; ++t) {
      if (dist[s][t] == kUnreachable) continue;
      std::vector<std::uint64_t> through(n, 0);
      std::uint64_t total = 0;
      // Depth-first walk that only steps to neighbors one hop closer to t.
      auto walk = [&](auto&& self, NodeId v) -> void {
        if (v == t) {
          ++total;
          for (std::size_t k = 1; k + 1 < stack.size(); ++k) ++through[stack[k]];
          return;
        }
        for (NodeId w : g.neighbors(v)) {
          if (dist[w][t] + 1 == dist[v][t]) {
            stack.push_back(w);
            self(self, w);
            stack.pop_back();
          }
        }
      };
      stack.assign(1, s);
      walk(walk, s);
      for (NodeId u = 0; u < n; ++u) {
        if (through[u] != 0) {
          bc[u] += Rational(static_cast<long long>(through[u]), static_cast<long long>(total));
        }
      }
    }
  }
  return bc;
}

// All-pairs reach-centrality scan with the target loop outermost.
inline Hops reach_centrality_scan(const LabeledGraph& g, NodeId u) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<Hops>> dist(n);
  for (NodeId v = 0; v < n; ++v) dist[v] = bfs_distances(g, v);
  Hops best = 0;
  for (NodeId t = 0; t < n; ++t) {
    for (NodeId s = 0; s < n; ++s) {
      if (dist[s][u] + dist[u][t] == dist[s][t]) {
        best = std::max(best, std::min(dist[s][u], dist[u][t]));
      }
    }
  }
  return best;
}

// OV scan with B outermost and coordinates walked backwards.
inline bool ov_scan_reversed(const OVInstance& inst) {
  for (std::size_t j = inst.n(); j-- > 0;) {
    for (std::size_t i = inst.n(); i-- > 0;) {
      bool clash = false;
      for (std::size_t k = inst.d(); k-- > 0 && !clash;) {
        clash = inst.a_vectors()[i][k] != 0 && inst.b_vectors()[j][k] != 0;
      }
      if (!clash) return true;
    }
  }
  return false;
}

}  // namespace ovgadget::testing

#endif  // OVGADGET_TESTS_TEST_SUPPORT_HPP_
