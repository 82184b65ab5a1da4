// Copyright 2026 The edgeguess Authors
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

#pragma once

// Edge-list text format:
//
//   # comment
//   u v        undirected edge
//   u > v      directed edge u -> v
//
// Blank lines and '#' comments are ignored. A file must not mix the two
// edge forms.

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "edgeguess/error.hpp"
#include "edgeguess/graph.hpp"

namespace edgeguess {

inline GameGraph parse_edge_list(std::istream& in) {
  struct Line {
    int number;
    std::string u, v;
    bool arrow;
  };
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream tokens(raw);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty()) continue;
    if (words.size() == 2 && words[0] != ">" && words[1] != ">") {
      lines.push_back({number, words[0], words[1], false});
    } else if (words.size() == 3 && words[1] == ">" && words[0] != ">" && words[2] != ">") {
      lines.push_back({number, words[0], words[2], true});
    } else {
      throw ParseError("line " + std::to_string(number) + ": expected 'u v' or 'u > v', got '" +
                       raw + "'");
    }
  }
  const bool directed = !lines.empty() && lines.front().arrow;
  GameGraph g(directed);
  for (const Line& l : lines) {
    if (l.arrow != directed) {
      throw ParseError("line " + std::to_string(l.number) +
                       ": mixed directed and undirected edges are not supported");
    }
    try {
      g.add_edge(l.u, l.v);
    } catch (const GraphError& e) {
      throw GraphError("line " + std::to_string(l.number) + ": " + e.what());
    }
  }
  return g;
}

inline GameGraph parse_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

inline GameGraph read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_edge_list(in);
}

inline std::string format_edge_list(const GameGraph& g) {
  std::string out;
  for (const Edge& e : g.edges()) {
    out += g.name(e.first);
    out += g.directed() ? " > " : " ";
    out += g.name(e.second);
    out += '\n';
  }
  return out;
}

}  // namespace edgeguess
