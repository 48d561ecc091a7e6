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

#include "ovgadget/gadgets.hpp"

#include <functional>
#include <sstream>

#include "ovgadget/graph_io.hpp"

namespace ovgadget {

namespace {

using RoleAtDepth = std::function<NodeRole(std::uint32_t depth)>;

std::uint32_t heap_depth(std::size_t heap_index) {
  std::uint32_t depth = 0;
  while (heap_index > 0) {
    heap_index = (heap_index - 1) / 2;
    ++depth;
  }
  return depth;
}

class GadgetBuilder {
 public:
  NodeId node(const NodeRole& role) { return graph_.add_node(role); }
  void edge(NodeId u, NodeId v) { graph_.add_edge(u, v); }

  // Hangs a balanced tree with `leaves` leaves below `root` and returns the
  // leaves left to right. With one leaf the root is the leaf. `depths`, if
  // given, receives the depth of each returned leaf.
  std::vector<NodeId> tree(NodeId root, std::size_t leaves, const RoleAtDepth& role,
                           std::vector<unsigned>* depths = nullptr) {
    const std::size_t size = 2 * leaves - 1;
    std::vector<NodeId> ids(size);
    ids[0] = root;
    for (std::size_t i = 1; i < size; ++i) {
      ids[i] = node(role(heap_depth(i)));
      edge(ids[(i - 1) / 2], ids[i]);
    }
    std::vector<NodeId> out;
    out.reserve(leaves);
    std::vector<std::size_t> stack{0};
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      if (2 * i + 1 >= size) {
        out.push_back(ids[i]);
        if (depths != nullptr) depths->push_back(heap_depth(i));
      } else {
        stack.push_back(2 * i + 2);
        stack.push_back(2 * i + 1);
      }
    }
    return out;
  }

  // Path of `length` hops from u to v through fresh PathNodes.
  void path(NodeId u, NodeId v, Hops length, std::uint8_t copy) {
    const std::uint32_t id = next_path_id_++;
    NodeId prev = u;
    for (Hops pos = 1; pos < length; ++pos) {
      const NodeId w = node(NodeRole::path(id, pos, copy));
      edge(prev, w);
      prev = w;
    }
    edge(prev, v);
  }

  // Path of `length` hops from u whose far end gets `end_role`; returns it.
  NodeId pendant(NodeId u, Hops length, const NodeRole& end_role, std::uint8_t copy) {
    const std::uint32_t id = next_path_id_++;
    NodeId prev = u;
    for (Hops pos = 1; pos < length; ++pos) {
      const NodeId w = node(NodeRole::path(id, pos, copy));
      edge(prev, w);
      prev = w;
    }
    const NodeId end = node(end_role);
    edge(prev, end);
    return end;
  }

  // Path of `length` hops with the node at `mid_pos` tagged MidNode.
  NodeId path_with_mid(NodeId u, NodeId v, Hops length, Hops mid_pos) {
    const std::uint32_t id = next_path_id_++;
    NodeId prev = u;
    NodeId mid = u;
    for (Hops pos = 1; pos < length; ++pos) {
      const NodeId w = node(pos == mid_pos ? NodeRole::mid() : NodeRole::path(id, pos));
      if (pos == mid_pos) mid = w;
      edge(prev, w);
      prev = w;
    }
    edge(prev, v);
    return mid;
  }

  std::size_t node_count() const { return graph_.node_count(); }

  Gadget finish(GadgetMeta meta) && {
    Gadget g{std::move(graph_).build(), std::move(meta)};
    g.meta.node_count = g.graph.node_count();
    g.meta.edge_count = g.graph.edge_count();
    for (const NodeRole& r : g.graph.roles()) ++g.meta.role_counts[r.kind];
    g.meta.components = component_count(g.graph);
    return g;
  }

 private:
  GraphBuilder graph_;
  std::uint32_t next_path_id_ = 0;
};

std::size_t count_active_coords(const OVInstance& inst) {
  std::size_t active = 0;
  for (std::size_t j = 0; j < inst.d(); ++j) active += inst.coordinate_used(j) ? 1 : 0;
  return active;
}

std::size_t count_ones(const OVInstance& inst) {
  std::size_t ones = 0;
  for (const auto* side : {&inst.a_vectors(), &inst.b_vectors()}) {
    for (const BitRow& row : *side) {
      for (auto v : row) ones += v;
    }
  }
  return ones;
}

GadgetMeta base_meta(GadgetKind kind, const OVInstance& inst, Hops p) {
  GadgetMeta meta;
  meta.kind = kind;
  meta.n = inst.n();
  meta.d = inst.d();
  meta.p = p;
  meta.h_vec = ceil_log2(inst.d());
  meta.h_c = ceil_log2(inst.n());
  meta.h_short = ceil_log2(inst.n());
  meta.active_coords = count_active_coords(inst);
  return meta;
}

void require_p(const OVInstance& inst, Hops p) {
  if (p < min_p(inst.n(), inst.d())) {
    throw ParameterError("p=" + std::to_string(p) + " is below the minimum " +
                         std::to_string(min_p(inst.n(), inst.d())) +
                         " (ceil(lg n) + ceil(lg d) + 1)");
  }
}

// Vector trees, c-trees and the length-p paths realizing every 1-bit.
// Fills roots and coordinate landmarks of `lm`.
void add_vector_and_c_trees(GadgetBuilder& b, const OVInstance& inst, Hops p,
                            std::uint8_t copy, CopyLandmarks& lm) {
  const std::size_t n = inst.n();
  const std::size_t d = inst.d();
  std::vector<std::vector<NodeId>> vec_leaves[2];
  for (Side s : {Side::kA, Side::kB}) {
    auto& roots = s == Side::kA ? lm.a_root : lm.b_root;
    for (std::size_t i = 0; i < n; ++i) {
      const auto idx = static_cast<std::uint32_t>(i);
      const NodeId root = b.node(NodeRole::vector_root(s, idx, copy));
      roots.push_back(root);
      vec_leaves[static_cast<int>(s)].push_back(b.tree(root, d, [&](std::uint32_t depth) {
        return NodeRole::vector_tree(s, idx, depth, copy);
      }));
    }
  }
  lm.coord.assign(d, std::nullopt);
  for (std::size_t j = 0; j < d; ++j) {
    if (!inst.coordinate_used(j)) continue;
    const auto jdx = static_cast<std::uint32_t>(j);
    const NodeId c = b.node(NodeRole::coord(jdx, copy));
    lm.coord[j] = c;
    for (Side s : {Side::kA, Side::kB}) {
      const auto c_leaves = b.tree(c, n, [&](std::uint32_t depth) {
        return NodeRole::c_tree(jdx, s, depth, copy);
      });
      const auto& rows = inst.vectors(s);
      for (std::size_t i = 0; i < n; ++i) {
        if (rows[i][j] != 0) {
          b.path(vec_leaves[static_cast<int>(s)][i][j], c_leaves[i], p, copy);
        }
      }
    }
  }
}

// One OV_dia copy. With `shared_a_end` the pendant paths of the A side end
// on those existing nodes instead of creating new a_p nodes. With
// `level_shortcuts` a shortcut leaf at depth h-1 gets a path of p+1 so every
// vector root is exactly p + ceil(lg n) below its shortcut root.
CopyLandmarks add_ov_dia(GadgetBuilder& b, const OVInstance& inst, Hops p, std::uint8_t copy,
                         const std::vector<NodeId>* shared_a_end, bool level_shortcuts = false) {
  CopyLandmarks lm;
  add_vector_and_c_trees(b, inst, p, copy, lm);
  const std::size_t n = inst.n();
  for (Side s : {Side::kA, Side::kB}) {
    const auto& roots = s == Side::kA ? lm.a_root : lm.b_root;
    const NodeId sc_root = b.node(NodeRole::shortcut(s, 0, copy));
    (s == Side::kA ? lm.a_shortcut_root : lm.b_shortcut_root) = sc_root;
    std::vector<unsigned> depths;
    const auto leaves = b.tree(
        sc_root, n, [&](std::uint32_t depth) { return NodeRole::shortcut(s, depth, copy); },
        &depths);
    const unsigned h = ceil_log2(n);
    for (std::size_t i = 0; i < n; ++i) {
      b.path(leaves[i], roots[i], level_shortcuts ? p + (h - depths[i]) : p, copy);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::uint32_t>(i);
    if (shared_a_end != nullptr) {
      b.path(lm.a_root[i], (*shared_a_end)[i], p, copy);
      lm.a_end.push_back((*shared_a_end)[i]);
    } else {
      lm.a_end.push_back(b.pendant(lm.a_root[i], p, NodeRole::path_end(Side::kA, idx, copy), copy));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::uint32_t>(i);
    lm.b_end.push_back(b.pendant(lm.b_root[i], p, NodeRole::path_end(Side::kB, idx, copy), copy));
  }
  return lm;
}

Gadget bc_bounded_copy(const OVInstance& inst, Hops p, bool with_b_prime) {
  const auto copy = static_cast<std::uint8_t>(with_b_prime ? 1 : 0);
  GadgetBuilder b;
  GadgetMeta meta = base_meta(GadgetKind::kBcBounded, inst, p);
  CopyLandmarks lm;
  add_vector_and_c_trees(b, inst, p, copy, lm);
  const std::size_t n = inst.n();
  const NodeId x = b.node(NodeRole::x(copy));
  const auto x_leaves =
      b.tree(x, n, [&](std::uint32_t depth) { return NodeRole::x_tree(depth, copy); });
  for (std::size_t i = 0; i < n; ++i) b.path(x_leaves[i], lm.a_root[i], p, copy);
  const NodeId y = b.node(NodeRole::y(copy));
  const auto y_leaves =
      b.tree(y, n, [&](std::uint32_t depth) { return NodeRole::y_tree(depth, copy); });
  for (std::size_t i = 0; i < n; ++i) b.path(y_leaves[i], lm.b_root[i], p, copy);
  b.path(x, y, p, copy);
  if (with_b_prime) {
    for (std::size_t i = 0; i < n; ++i) {
      const NodeId bp = b.node(NodeRole::b_prime(static_cast<std::uint32_t>(i), copy));
      b.edge(lm.b_root[i], bp);
      meta.b_prime.push_back(bp);
    }
  }
  meta.x = x;
  meta.y = y;
  meta.copies.push_back(std::move(lm));
  return std::move(b).finish(std::move(meta));
}

Gadget bc_sparse_copy(const OVInstance& inst, bool with_b) {
  const auto copy = static_cast<std::uint8_t>(with_b ? 1 : 0);
  GadgetBuilder b;
  GadgetMeta meta = base_meta(GadgetKind::kBcSparse, inst, 0);
  CopyLandmarks lm;
  const NodeId x = b.node(NodeRole::x(copy));
  const NodeId y = b.node(NodeRole::y(copy));
  b.edge(x, y);
  lm.coord.assign(inst.d(), std::nullopt);
  std::size_t active = 0;
  for (std::size_t j = 0; j < inst.d(); ++j) {
    const bool used = inst.coordinate_used(Side::kA, j) ||
                      (with_b && inst.coordinate_used(Side::kB, j));
    if (!used) continue;
    lm.coord[j] = b.node(NodeRole::coord(static_cast<std::uint32_t>(j), copy));
    ++active;
  }
  for (Side s : {Side::kA, Side::kB}) {
    if (s == Side::kB && !with_b) break;
    auto& roots = s == Side::kA ? lm.a_root : lm.b_root;
    const auto& rows = inst.vectors(s);
    for (std::size_t i = 0; i < inst.n(); ++i) {
      const NodeId v = b.node(NodeRole::vector_root(s, static_cast<std::uint32_t>(i), copy));
      roots.push_back(v);
      b.edge(v, s == Side::kA ? x : y);
      for (std::size_t j = 0; j < inst.d(); ++j) {
        if (rows[i][j] != 0) b.edge(v, *lm.coord[j]);
      }
    }
  }
  meta.active_coords = active;
  meta.x = x;
  meta.y = y;
  meta.copies.push_back(std::move(lm));
  return std::move(b).finish(std::move(meta));
}

void expect_role(std::vector<std::string>& problems, const LabeledGraph& g,
                 std::optional<NodeId> id, RoleKind kind, const std::string& name) {
  if (!id) return;
  if (*id >= g.node_count()) {
    problems.push_back(name + ": id out of range");
  } else if (g.role(*id).kind != kind) {
    problems.push_back(name + ": expected role " + std::string(role_kind_name(kind)) +
                       ", found " + std::string(role_kind_name(g.role(*id).kind)));
  }
}

}  // namespace

std::string_view gadget_kind_name(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::kOvGraph:
      return "ov";
    case GadgetKind::kOvDia:
      return "dia";
    case GadgetKind::kOvRad:
      return "rad";
    case GadgetKind::kRc:
      return "rc";
    case GadgetKind::kBcSparse:
      return "bc-sparse";
    case GadgetKind::kBcBounded:
      return "bc-bounded";
  }
  return "?";
}

GadgetKind parse_gadget_kind(std::string_view name) {
  for (GadgetKind k : {GadgetKind::kOvGraph, GadgetKind::kOvDia, GadgetKind::kOvRad,
                       GadgetKind::kRc, GadgetKind::kBcSparse, GadgetKind::kBcBounded}) {
    if (gadget_kind_name(k) == name) return k;
  }
  throw std::invalid_argument("unknown gadget: " + std::string(name));
}

Hops default_p(std::size_t n, std::size_t d, unsigned multiplier) {
  if (multiplier < 4) {
    throw ParameterError("multiplier K must be >= 4 for the distance gaps to separate");
  }
  return static_cast<Hops>(multiplier * (ceil_log2(n) + ceil_log2(d)) + 4);
}

Hops min_p(std::size_t n, std::size_t d) {
  return static_cast<Hops>(ceil_log2(n) + ceil_log2(d) + 1);
}

Gadget build_ov_graph(const OVInstance& inst) {
  GadgetBuilder b;
  GadgetMeta meta = base_meta(GadgetKind::kOvGraph, inst, 0);
  CopyLandmarks lm;
  for (std::size_t i = 0; i < inst.n(); ++i) {
    lm.a_root.push_back(b.node(NodeRole::vector_root(Side::kA, static_cast<std::uint32_t>(i))));
  }
  for (std::size_t i = 0; i < inst.n(); ++i) {
    lm.b_root.push_back(b.node(NodeRole::vector_root(Side::kB, static_cast<std::uint32_t>(i))));
  }
  for (std::size_t j = 0; j < inst.d(); ++j) {
    lm.coord.emplace_back(b.node(NodeRole::coord(static_cast<std::uint32_t>(j))));
  }
  for (std::size_t i = 0; i < inst.n(); ++i) {
    for (std::size_t j = 0; j < inst.d(); ++j) {
      if (inst.a_vectors()[i][j] != 0) b.edge(lm.a_root[i], *lm.coord[j]);
      if (inst.b_vectors()[i][j] != 0) b.edge(lm.b_root[i], *lm.coord[j]);
    }
  }
  meta.active_coords = inst.d();
  meta.copies.push_back(std::move(lm));
  return std::move(b).finish(std::move(meta));
}

Gadget build_ov_dia(const OVInstance& inst, Hops p) {
  require_p(inst, p);
  GadgetBuilder b;
  GadgetMeta meta = base_meta(GadgetKind::kOvDia, inst, p);
  meta.copies.push_back(add_ov_dia(b, inst, p, 0, nullptr));
  return std::move(b).finish(std::move(meta));
}

Gadget build_ov_rad(const OVInstance& inst, Hops p) {
  require_p(inst, p);
  GadgetBuilder b;
  GadgetMeta meta = base_meta(GadgetKind::kOvRad, inst, p);
  meta.copies.push_back(add_ov_dia(b, inst, p, 0, nullptr));
  const std::vector<NodeId> glue = meta.copies[0].a_end;
  meta.copies.push_back(add_ov_dia(b, inst, p, 1, &glue));
  return std::move(b).finish(std::move(meta));
}

Gadget build_rc_gadget(const OVInstance& inst, Hops p) {
  require_p(inst, p);
  const unsigned h = ceil_log2(inst.n());
  if (p <= h + 1) {
    throw ParameterError("rc: p must exceed ceil(lg n) + 1 so the connecting path is nontrivial");
  }
  GadgetBuilder b;
  GadgetMeta meta = base_meta(GadgetKind::kRc, inst, p);
  CopyLandmarks lm = add_ov_dia(b, inst, p, 0, nullptr, true);
  const Hops half = p - h;
  meta.connector_length = 2 * half;
  meta.mid = b.path_with_mid(*lm.a_shortcut_root, *lm.b_shortcut_root, 2 * half, half);
  meta.copies.push_back(std::move(lm));
  return std::move(b).finish(std::move(meta));
}

BcPair build_bc_sparse(const OVInstance& inst) {
  return {bc_sparse_copy(inst, false), bc_sparse_copy(inst, true)};
}

BcPair build_bc_bounded(const OVInstance& inst, Hops p) {
  require_p(inst, p);
  return {bc_bounded_copy(inst, p, false), bc_bounded_copy(inst, p, true)};
}

SizeFormula expected_size(GadgetKind kind, const OVInstance& inst, Hops p, bool g2) {
  const std::size_t n = inst.n();
  const std::size_t d = inst.d();
  const std::size_t ones = count_ones(inst);
  const std::size_t act = count_active_coords(inst);
  // Trees: vector trees 2d-1 nodes each; per active coordinate c plus two
  // trees sharing it, 4n-3 nodes; a tree with k leaves has 2k-2 edges.
  const std::size_t tree_nodes = 2 * n * (2 * d - 1) + act * (4 * n - 3);
  const std::size_t tree_edges = 2 * n * (2 * d - 2) + act * 4 * (n - 1);
  const std::size_t path_internal = p == 0 ? 0 : p - 1;

  SizeFormula dia;
  dia.nodes = tree_nodes + 2 * (2 * n - 1) + path_internal * (ones + 2 * n) + 2 * n * p;
  dia.edges = tree_edges + 4 * (n - 1) + p * ones + 4 * n * p;

  switch (kind) {
    case GadgetKind::kOvGraph:
      return {2 * n + d, ones};
    case GadgetKind::kOvDia:
      return dia;
    case GadgetKind::kOvRad:
      return {2 * dia.nodes - n, 2 * dia.edges};
    case GadgetKind::kRc: {
      const unsigned h = ceil_log2(n);
      const std::size_t conn = 2 * (p - h);
      // Shallow shortcut leaves, (2^h - n) per side, get one extra hop.
      const std::size_t level = 2 * ((std::size_t{1} << h) - n);
      return {dia.nodes + conn - 1 + level, dia.edges + conn + level};
    }
    case GadgetKind::kBcSparse: {
      std::size_t coords = 0;
      std::size_t edges = 1 + n + (g2 ? n : 0);
      for (std::size_t j = 0; j < d; ++j) {
        if (inst.coordinate_used(Side::kA, j) || (g2 && inst.coordinate_used(Side::kB, j))) {
          ++coords;
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          edges += inst.a_vectors()[i][j];
          if (g2) edges += inst.b_vectors()[i][j];
        }
      }
      return {2 + n * (g2 ? 2 : 1) + coords, edges};
    }
    case GadgetKind::kBcBounded: {
      SizeFormula s;
      s.nodes = tree_nodes + 2 * (2 * n - 1) + path_internal * (ones + 2 * n + 1) +
                (g2 ? n : 0);
      s.edges = tree_edges + 4 * (n - 1) + p * (ones + 2 * n + 1) + (g2 ? n : 0);
      return s;
    }
  }
  return {};
}

std::vector<std::string> audit_gadget(const Gadget& gadget) {
  const LabeledGraph& g = gadget.graph;
  const GadgetMeta& m = gadget.meta;
  std::vector<std::string> problems;
  if (m.node_count != g.node_count()) problems.push_back("node count differs from meta");
  if (m.edge_count != g.edge_count()) problems.push_back("edge count differs from meta");
  std::size_t role_total = 0;
  for (const auto& [kind, count] : m.role_counts) role_total += count;
  if (role_total != g.node_count()) problems.push_back("role accounting does not sum to |V|");
  const bool bounded = m.kind != GadgetKind::kOvGraph && m.kind != GadgetKind::kBcSparse;
  if (bounded && max_degree(g) > 4) {
    problems.push_back("max degree " + std::to_string(max_degree(g)) + " exceeds 4");
  }
  for (std::size_t c = 0; c < m.copies.size(); ++c) {
    const CopyLandmarks& lm = m.copies[c];
    const std::string pre = "copy " + std::to_string(c) + " ";
    for (std::size_t i = 0; i < lm.a_root.size(); ++i) {
      expect_role(problems, g, lm.a_root[i], RoleKind::kVectorRoot, pre + "a_r");
    }
    for (std::size_t i = 0; i < lm.b_root.size(); ++i) {
      expect_role(problems, g, lm.b_root[i], RoleKind::kVectorRoot, pre + "b_r");
    }
    for (NodeId v : lm.a_end) expect_role(problems, g, v, RoleKind::kPathEnd, pre + "a_p");
    for (NodeId v : lm.b_end) expect_role(problems, g, v, RoleKind::kPathEnd, pre + "b_p");
    for (const auto& c_id : lm.coord) {
      expect_role(problems, g, c_id, RoleKind::kCoordNode, pre + "c");
    }
    expect_role(problems, g, lm.a_shortcut_root, RoleKind::kShortcutTreeNode, pre + "A-root");
    expect_role(problems, g, lm.b_shortcut_root, RoleKind::kShortcutTreeNode, pre + "B-root");
  }
  expect_role(problems, g, m.mid, RoleKind::kMidNode, "u");
  expect_role(problems, g, m.x, RoleKind::kXNode, "x");
  expect_role(problems, g, m.y, RoleKind::kYNode, "y");
  for (NodeId v : m.b_prime) expect_role(problems, g, v, RoleKind::kBPrime, "b'");
  return problems;
}

std::string landmark_table(const GadgetMeta& m) {
  std::ostringstream out;
  out << "gadget " << gadget_kind_name(m.kind) << " n=" << m.n << " d=" << m.d << " p=" << m.p
      << " h_vec=" << m.h_vec << " h_c=" << m.h_c << " h_short=" << m.h_short << '\n';
  out << "nodes " << m.node_count << " edges " << m.edge_count << " components "
      << m.components << '\n';
  for (std::size_t c = 0; c < m.copies.size(); ++c) {
    const CopyLandmarks& lm = m.copies[c];
    const std::string suffix = m.copies.size() > 1 ? "/" + std::to_string(c + 1) : "";
    auto list = [&](const char* name, const std::vector<NodeId>& ids) {
      for (std::size_t i = 0; i < ids.size(); ++i) {
        out << name << '[' << i << ']' << suffix << ' ' << ids[i] << '\n';
      }
    };
    list("a_r", lm.a_root);
    list("b_r", lm.b_root);
    list("a_p", lm.a_end);
    list("b_p", lm.b_end);
    for (std::size_t j = 0; j < lm.coord.size(); ++j) {
      if (lm.coord[j]) out << "c[" << j << ']' << suffix << ' ' << *lm.coord[j] << '\n';
    }
    if (lm.a_shortcut_root) out << "A-shortcut-root" << suffix << ' ' << *lm.a_shortcut_root << '\n';
    if (lm.b_shortcut_root) out << "B-shortcut-root" << suffix << ' ' << *lm.b_shortcut_root << '\n';
  }
  if (m.mid) out << "u " << *m.mid << " connector " << m.connector_length << '\n';
  if (m.x) out << "x " << *m.x << '\n';
  if (m.y) out << "y " << *m.y << '\n';
  for (std::size_t i = 0; i < m.b_prime.size(); ++i) {
    out << "b'[" << i << "] " << m.b_prime[i] << '\n';
  }
  return out.str();
}

std::string describe(const Gadget& gadget) {
  std::string out = to_dot(gadget.graph, gadget_kind_name(gadget.meta.kind));
  std::istringstream table(landmark_table(gadget.meta));
  std::string line;
  while (std::getline(table, line)) out += "// " + line + "\n";
  return out;
}

}  // namespace ovgadget
