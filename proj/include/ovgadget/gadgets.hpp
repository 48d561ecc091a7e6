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

// Reduction graphs built from an OV instance.
//
// Conventions shared by every constructor:
//  * A balanced tree with k leaves is a heap-shaped full binary tree with
//    2k-1 nodes and height ceil(lg k); its leaves are numbered left to right.
//    Leaf j of a vector tree serves coordinate j, leaf i of a c-tree serves
//    vector i, so every leaf carries at most one extra path.
//  * A path of length p between two existing nodes adds p-1 PathNodes.
//  * Coordinates that no vector uses get no c-node (it would be an isolated
//    component contributing nothing). `CopyLandmarks::coord` holds nullopt
//    for them.

#ifndef OVGADGET_GADGETS_HPP_
#define OVGADGET_GADGETS_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ovgadget/graph.hpp"
#include "ovgadget/ovcore.hpp"
#include "ovgadget/solvers.hpp"

namespace ovgadget {

enum class GadgetKind { kOvGraph, kOvDia, kOvRad, kRc, kBcSparse, kBcBounded };

std::string_view gadget_kind_name(GadgetKind kind);
// Accepts the CLI spellings: ov, dia, rad, rc, bc-sparse, bc-bounded.
GadgetKind parse_gadget_kind(std::string_view name);

// Raised when p is below a constructor's precondition.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

struct CopyLandmarks {
  std::vector<NodeId> a_root;
  std::vector<NodeId> b_root;
  std::vector<NodeId> a_end;  // a_p; shared between the two OV_rad copies
  std::vector<NodeId> b_end;
  std::vector<std::optional<NodeId>> coord;
  std::optional<NodeId> a_shortcut_root;
  std::optional<NodeId> b_shortcut_root;
};

struct GadgetMeta {
  GadgetKind kind = GadgetKind::kOvGraph;
  std::size_t n = 0;
  std::size_t d = 0;
  Hops p = 0;
  unsigned h_vec = 0;    // ceil(lg d)
  unsigned h_c = 0;      // ceil(lg n)
  unsigned h_short = 0;  // ceil(lg n)
  std::vector<CopyLandmarks> copies;
  std::optional<NodeId> mid;  // u
  std::optional<NodeId> x;
  std::optional<NodeId> y;
  std::vector<NodeId> b_prime;
  Hops connector_length = 0;  // RC: hops between the two shortcut roots
  std::size_t active_coords = 0;

  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::map<RoleKind, std::size_t> role_counts;
  std::size_t components = 0;
};

struct Gadget {
  LabeledGraph graph;
  GadgetMeta meta;
};

// G2 extends G1 by the B side (sparse) or by the b' pendants (bounded).
struct BcPair {
  Gadget g1;
  Gadget g2;
};

// K * (ceil(lg n) + ceil(lg d)) + 4. Throws ParameterError for K < 4.
Hops default_p(std::size_t n, std::size_t d, unsigned multiplier);
// Smallest p accepted by the OV_dia-family constructors: ceil(lg n) + ceil(lg d) + 1.
Hops min_p(std::size_t n, std::size_t d);

Gadget build_ov_graph(const OVInstance& inst);
Gadget build_ov_dia(const OVInstance& inst, Hops p);
Gadget build_ov_rad(const OVInstance& inst, Hops p);
// OV_dia plus a 2(p - ceil(lg n)) path joining the shortcut roots, with u
// at its middle. Shortcut leaves one level short of ceil(lg n) get a path of
// p + 1 to their vector root, so d(u, a_r) = d(u, b_r) = 2p for every vector.
Gadget build_rc_gadget(const OVInstance& inst, Hops p);
BcPair build_bc_sparse(const OVInstance& inst);
BcPair build_bc_bounded(const OVInstance& inst, Hops p);

// Closed-form node/edge counts for a constructor's output. For BC pairs use
// the g2 flag to pick the copy.
struct SizeFormula {
  std::size_t nodes = 0;
  std::size_t edges = 0;
};
SizeFormula expected_size(GadgetKind kind, const OVInstance& inst, Hops p, bool g2 = false);

// Structural audit: counts match meta, every landmark resolves to a node of
// the expected role, max degree <= 4. Returns one message per problem.
std::vector<std::string> audit_gadget(const Gadget& gadget);

// Landmark table, one "name id" line per landmark.
std::string landmark_table(const GadgetMeta& meta);
// Role-annotated DOT followed by the landmark table as DOT comments.
std::string describe(const Gadget& gadget);

}  // namespace ovgadget

#endif  // OVGADGET_GADGETS_HPP_
