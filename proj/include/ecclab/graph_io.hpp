// Copyright 2026 The ecclab Authors
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

#ifndef ECCLAB_GRAPH_IO_HPP_
#define ECCLAB_GRAPH_IO_HPP_

#include <istream>
#include <ostream>
#include <string>

#include "ecclab/graph.hpp"

namespace ecclab {

// Text format: `p <n> <m> <D|U> <W|1>`, then m lines `u v` or `u v w`.
// Vertices are 0-indexed; `#` starts a comment.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

// Shared helpers for the line-oriented formats.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace ecclab

#endif  // ECCLAB_GRAPH_IO_HPP_
