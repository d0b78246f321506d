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

#include "ecclab/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "ecclab/error.hpp"

namespace ecclab {
namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t n = 0, m = 0;
  bool have_header = false, undirected = false, weighted = false;
  std::vector<Edge> edges;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_comment(line);
    if (blank(line)) continue;
    std::istringstream ls(line);
    auto fail = [&](const std::string& what) {
      throw InputError("graph line " + std::to_string(lineno) + ": " + what);
    };
    if (!have_header) {
      std::string p, dir, wt;
      if (!(ls >> p >> n >> m >> dir >> wt) || p != "p") fail("expected 'p <n> <m> <D|U> <W|1>'");
      if (dir != "D" && dir != "U") fail("direction must be D or U");
      if (wt != "W" && wt != "1") fail("weight flag must be W or 1");
      undirected = dir == "U";
      weighted = wt == "W";
      have_header = true;
      continue;
    }
    long long u = -1, v = -1, w = 1;
    if (!(ls >> u >> v)) fail("expected 'u v" + std::string(weighted ? " w'" : "'"));
    if (weighted && !(ls >> w)) fail("missing weight");
    std::string extra;
    if (ls >> extra) fail("trailing token '" + extra + "'");
    if (u < 0 || v < 0 || w < 0 || w > 0xffffffffLL) fail("negative or oversized value");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<Weight>(w)});
  }
  if (!have_header) throw InputError("graph file has no header");
  if (edges.size() != m) {
    throw InputError("header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return Graph(n, std::move(edges), undirected);
}

void write_graph(std::ostream& out, const Graph& g) {
  bool weighted = !g.has_unit_weights();
  out << "p " << g.num_vertices() << ' ' << g.num_edges() << ' '
      << (g.is_undirected() ? 'U' : 'D') << ' ' << (weighted ? 'W' : '1') << '\n';
  for (const Edge& e : g.edges()) {
    out << e.from << ' ' << e.to;
    if (weighted) out << ' ' << e.weight;
    out << '\n';
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
  if (!out) throw InputError("write failed for '" + path + "'");
}

Graph read_graph_file(const std::string& path) {
  std::istringstream in(read_text_file(path));
  return read_graph(in);
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  write_text_file(path, out.str());
}

}  // namespace ecclab
