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

// Betweenness centrality, BC(u) = sum over unordered pairs {s,t} with
// s != t, both != u, of sigma_st(u) / sigma_st.
//
// Exact mode keeps shortest-path counts as checked 64-bit integers and the
// accumulated dependencies as arbitrary-precision rationals. Float mode is
// plain Brandes in double precision and is only meant for timing runs.

#ifndef OVGADGET_BETWEENNESS_HPP_
#define OVGADGET_BETWEENNESS_HPP_

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ovgadget/graph.hpp"

namespace ovgadget {

using Rational = boost::multiprecision::cpp_rational;

enum class BcMode { kExact, kFloat };

class BcValue {
 public:
  BcValue() : value_(Rational(0)) {}
  explicit BcValue(Rational v) : value_(std::move(v)) {}
  explicit BcValue(double v) : value_(v) {}

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  // Throws std::logic_error in float mode.
  const Rational& exact() const;
  double approx() const;
  std::string str() const;

 private:
  std::variant<Rational, double> value_;
};

// Brandes dependency accumulation from every source. Throws
// DisconnectedGraphError on a disconnected graph and std::overflow_error if
// a path count exceeds 64 bits in exact mode.
std::vector<BcValue> betweenness(const LabeledGraph& g, BcMode mode);

// Exact BC of a single node via sigma_su * sigma_ut / sigma_st over all
// pairs; one BFS per source, no per-node rational state.
Rational node_betweenness(const LabeledGraph& g, NodeId u);

// node_betweenness restricted to the pairs {s,t} with keep(s,t); `keep`
// must be symmetric.
Rational node_betweenness(const LabeledGraph& g, NodeId u,
                          const std::function<bool(NodeId, NodeId)>& keep);

}  // namespace ovgadget

#endif  // OVGADGET_BETWEENNESS_HPP_
