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

// Edge-list and DOT serialization.
//
// Edge-list layout:
//   # ovgadget edge-list v1
//   nodes <N> edges <M>
//   role <id> <kind> <A|B> <index> <depth> <copy> <twin>     (N lines, id order)
//   <u> <v>                                                  (M lines, u < v)

#ifndef OVGADGET_GRAPH_IO_HPP_
#define OVGADGET_GRAPH_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "ovgadget/graph.hpp"

namespace ovgadget {

std::string to_edge_list(const LabeledGraph& g);
// Throws std::invalid_argument on malformed input.
LabeledGraph parse_edge_list(std::string_view text);

LabeledGraph read_edge_list(const std::filesystem::path& path);
void write_edge_list(const LabeledGraph& g, const std::filesystem::path& path);

// Undirected DOT with the role label and a per-kind fill color on each node.
std::string to_dot(const LabeledGraph& g, std::string_view name = "G");

void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace ovgadget

#endif  // OVGADGET_GRAPH_IO_HPP_
