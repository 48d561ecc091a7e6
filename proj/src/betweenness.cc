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

#include "ovgadget/betweenness.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>

#include "ovgadget/parallel.hpp"
#include "ovgadget/solvers.hpp"

namespace ovgadget {

namespace {

using BigInt = boost::multiprecision::cpp_int;

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("shortest-path count exceeds 64 bits");
  }
  return out;
}

// BFS that also counts shortest paths. Returns false if some node is
// unreachable.
bool count_paths(const LabeledGraph& g, NodeId s, std::vector<Hops>& dist,
                 std::vector<std::uint64_t>& sigma, std::vector<NodeId>& order) {
  const std::size_t n = g.node_count();
  dist.assign(n, kUnreachable);
  sigma.assign(n, 0);
  order.clear();
  dist[s] = 0;
  sigma[s] = 1;
  order.push_back(s);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const NodeId v = order[head];
    for (NodeId w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        order.push_back(w);
      }
      if (dist[w] == dist[v] + 1) sigma[w] = checked_add(sigma[w], sigma[v]);
    }
  }
  return order.size() == n;
}

[[noreturn]] void throw_disconnected() {
  throw DisconnectedGraphError("betweenness: graph is disconnected");
}

}  // namespace

const Rational& BcValue::exact() const {
  if (!is_exact()) throw std::logic_error("BcValue: float-mode value has no exact form");
  return std::get<Rational>(value_);
}

double BcValue::approx() const {
  if (is_exact()) return std::get<Rational>(value_).convert_to<double>();
  return std::get<double>(value_);
}

std::string BcValue::str() const {
  if (is_exact()) return std::get<Rational>(value_).str();
  return std::to_string(std::get<double>(value_));
}

std::vector<BcValue> betweenness(const LabeledGraph& g, BcMode mode) {
  const std::size_t n = g.node_count();
  std::vector<Hops> dist;
  std::vector<std::uint64_t> sigma;
  std::vector<NodeId> order;

  if (mode == BcMode::kFloat) {
    std::vector<double> total(n, 0.0);
    std::vector<double> delta(n);
    for (NodeId s = 0; s < n; ++s) {
      if (!count_paths(g, s, dist, sigma, order)) throw_disconnected();
      std::fill(delta.begin(), delta.end(), 0.0);
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const NodeId w = *it;
        for (NodeId v : g.neighbors(w)) {
          if (dist[v] + 1 == dist[w]) {
            delta[v] += static_cast<double>(sigma[v]) / static_cast<double>(sigma[w]) *
                        (1.0 + delta[w]);
          }
        }
        if (w != s) total[w] += delta[w];
      }
    }
    std::vector<BcValue> out;
    out.reserve(n);
    for (double v : total) out.emplace_back(v / 2.0);
    return out;
  }

  std::vector<Rational> total(n);
  std::vector<Rational> delta(n);
  for (NodeId s = 0; s < n; ++s) {
    if (!count_paths(g, s, dist, sigma, order)) throw_disconnected();
    for (auto& x : delta) x = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const NodeId w = *it;
      for (NodeId v : g.neighbors(w)) {
        if (dist[v] + 1 == dist[w]) {
          delta[v] += Rational(BigInt(sigma[v]), BigInt(sigma[w])) * (1 + delta[w]);
        }
      }
      if (w != s) total[w] += delta[w];
    }
  }
  std::vector<BcValue> out;
  out.reserve(n);
  for (auto& v : total) out.emplace_back(Rational(v / 2));
  return out;
}

Rational node_betweenness(const LabeledGraph& g, NodeId u) {
  return node_betweenness(g, u, nullptr);
}

Rational node_betweenness(const LabeledGraph& g, NodeId u,
                          const std::function<bool(NodeId, NodeId)>& keep) {
  if (u >= g.node_count()) throw std::out_of_range("node_betweenness: bad node id");
  std::vector<Hops> du;
  std::vector<std::uint64_t> sigma_u;
  std::vector<NodeId> order;
  if (!count_paths(g, u, du, sigma_u, order)) throw_disconnected();

  // Per source, sum sigma_ut / sigma_st grouped by the denominator; most
  // denominators are 1 in gadget graphs, so the rational sum stays short.
  const std::size_t n = g.node_count();
  const unsigned workers = worker_count();
  std::vector<Rational> partial(workers);
  parallel_for(n, [&](unsigned w, std::size_t begin, std::size_t end) {
    std::vector<Hops> ds;
    std::vector<std::uint64_t> sigma_s;
    std::vector<NodeId> ord;
    std::map<std::uint64_t, BigInt> by_denominator;
    Rational acc = 0;
    for (std::size_t si = begin; si < end; ++si) {
      const auto s = static_cast<NodeId>(si);
      if (s == u) continue;
      count_paths(g, s, ds, sigma_s, ord);
      const Hops dsu = ds[u];
      by_denominator.clear();
      for (NodeId t = 0; t < n; ++t) {
        if (t == u || t == s) continue;
        if (dsu + du[t] != ds[t]) continue;
        if (keep && !keep(s, t)) continue;
        by_denominator[sigma_s[t]] += sigma_u[t];
      }
      for (const auto& [den, num] : by_denominator) {
        acc += Rational(num * sigma_s[u], BigInt(den));
      }
    }
    partial[w] += acc;
  });
  Rational total = 0;
  for (const auto& p : partial) total += p;
  return total / 2;
}

}  // namespace ovgadget
