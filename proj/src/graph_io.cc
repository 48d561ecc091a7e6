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

#include "ovgadget/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ovgadget {

namespace {

constexpr std::string_view kEdgeListMagic = "# ovgadget edge-list v1";

std::string_view fill_color(RoleKind kind) {
  switch (kind) {
    case RoleKind::kVectorRoot:
    case RoleKind::kVectorTreeNode:
      return "palegreen";
    case RoleKind::kCoordNode:
    case RoleKind::kCTreeNode:
      return "lightblue";
    case RoleKind::kShortcutTreeNode:
      return "salmon";
    case RoleKind::kPathEnd:
      return "gold";
    case RoleKind::kMidNode:
    case RoleKind::kXNode:
    case RoleKind::kYNode:
      return "orchid";
    case RoleKind::kXTreeNode:
    case RoleKind::kYTreeNode:
      return "plum";
    case RoleKind::kBPrime:
      return "white";
    case RoleKind::kPathNode:
      break;
  }
  return "gray90";
}

[[noreturn]] void malformed(std::size_t line, const std::string& why) {
  throw std::invalid_argument("edge list line " + std::to_string(line) + ": " + why);
}

}  // namespace

std::string to_edge_list(const LabeledGraph& g) {
  std::ostringstream out;
  out << kEdgeListMagic << '\n';
  out << "nodes " << g.node_count() << " edges " << g.edge_count() << '\n';
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const NodeRole& r = g.role(v);
    out << "role " << v << ' ' << role_kind_name(r.kind) << ' ' << side_char(r.side) << ' '
        << r.index << ' ' << r.depth << ' ' << unsigned{r.copy} << ' ' << unsigned{r.twin}
        << '\n';
  }
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

LabeledGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line) || line != kEdgeListMagic) malformed(line_no, "missing header");

  std::size_t nodes = 0;
  std::size_t edges = 0;
  ++line_no;
  {
    std::getline(in, line);
    std::istringstream ls(line);
    std::string kw1;
    std::string kw2;
    if (!(ls >> kw1 >> nodes >> kw2 >> edges) || kw1 != "nodes" || kw2 != "edges") {
      malformed(line_no, "expected \"nodes N edges M\"");
    }
  }

  GraphBuilder builder;
  for (std::size_t i = 0; i < nodes; ++i) {
    ++line_no;
    if (!std::getline(in, line)) malformed(line_no, "missing role line");
    std::istringstream ls(line);
    std::string kw;
    std::size_t id = 0;
    std::string kind;
    char side = 0;
    unsigned copy = 0;
    unsigned twin = 0;
    NodeRole role;
    if (!(ls >> kw >> id >> kind >> side >> role.index >> role.depth >> copy >> twin) ||
        kw != "role") {
      malformed(line_no, "bad role line");
    }
    if (id != i) malformed(line_no, "role lines must be in id order");
    if (side != 'A' && side != 'B') malformed(line_no, "side must be A or B");
    if (copy > 255 || twin > 2) malformed(line_no, "copy/twin out of range");
    role.kind = parse_role_kind(kind);
    role.side = side == 'A' ? Side::kA : Side::kB;
    role.copy = static_cast<std::uint8_t>(copy);
    role.twin = static_cast<std::uint8_t>(twin);
    builder.add_node(role);
  }
  for (std::size_t e = 0; e < edges; ++e) {
    ++line_no;
    if (!std::getline(in, line)) malformed(line_no, "missing edge line");
    std::istringstream ls(line);
    std::size_t u = 0;
    std::size_t v = 0;
    if (!(ls >> u >> v) || u >= nodes || v >= nodes) malformed(line_no, "bad edge");
    builder.add_edge(static_cast<NodeId>(u), static_cast<NodeId>(v));
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty()) malformed(line_no, "trailing data");
  }
  try {
    return std::move(builder).build();
  } catch (const std::logic_error& e) {
    throw std::invalid_argument(std::string("edge list: ") + e.what());
  }
}

LabeledGraph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

void write_edge_list(const LabeledGraph& g, const std::filesystem::path& path) {
  write_text_file(path, to_edge_list(g));
}

std::string to_dot(const LabeledGraph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  out << "  node [shape=circle, style=filled, fontsize=8, width=0.1, height=0.1];\n";
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const NodeRole& r = g.role(v);
    out << "  " << v << " [";
    if (r.kind == RoleKind::kPathNode) {
      out << "label=\"\", ";
    } else {
      out << "label=\"" << role_label(r) << "\", ";
    }
    out << "fillcolor=" << fill_color(r.kind);
    if (r.is_landmark()) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace ovgadget
