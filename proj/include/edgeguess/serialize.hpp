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

// JSON and DOT forms of labelings, predictions, traces, playbooks and split
// graphs. Arrays are sorted by vertex name and objects by key so equal
// inputs give byte-identical output.

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "edgeguess/directed.hpp"
#include "edgeguess/error.hpp"
#include "edgeguess/graph.hpp"
#include "edgeguess/labeling.hpp"
#include "edgeguess/oracle.hpp"
#include "edgeguess/predictor.hpp"

namespace edgeguess {

using Json = nlohmann::json;

/// [{"edge": [u, v], "direction": "u"|"v"|"both", "label": n}, ...] with
/// u < v by name and entries sorted by (u, v).
inline Json labeling_to_json(const GameGraph& g, const Labeling& lab) {
  struct Row {
    std::string u, v, dir;
    int label;
  };
  std::vector<Row> rows;
  for (std::size_t i = 0; i < lab.edges.size(); ++i) {
    const Edge& e = g.edge(static_cast<EdgeIndex>(i));
    const EdgeLabel& el = lab.edges[i];
    std::string u = g.name(e.first), v = g.name(e.second);
    Direction d = el.direction;
    if (v < u) {
      std::swap(u, v);
      if (d != Direction::Both) d = d == Direction::IntoFirst ? Direction::IntoSecond : Direction::IntoFirst;
    }
    const char* dir = d == Direction::Both ? "both" : (d == Direction::IntoFirst ? "u" : "v");
    rows.push_back({u, v, dir, el.label});
  }
  std::sort(rows.begin(), rows.end(),
            [](const Row& x, const Row& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
  Json out = Json::array();
  for (const Row& r : rows) {
    out.push_back({{"edge", {r.u, r.v}}, {"direction", r.dir}, {"label", r.label}});
  }
  return out;
}

inline Labeling labeling_from_json(const GameGraph& g, const Json& j) {
  if (!j.is_array()) throw ParseError("labeling: expected a JSON array");
  Labeling lab{std::vector<EdgeLabel>(g.edge_count())};
  std::vector<char> seen(g.edge_count(), 0);
  for (const Json& row : j) {
    try {
      const auto& edge = row.at("edge");
      if (!edge.is_array() || edge.size() != 2) throw ParseError("labeling: 'edge' must be [u, v]");
      const std::string u = edge[0].get<std::string>();
      const std::string v = edge[1].get<std::string>();
      const auto uu = g.find(u), vv = g.find(v);
      if (!uu || !vv) throw ParseError("labeling: unknown vertex in edge [" + u + ", " + v + "]");
      auto e = g.edge_between(*uu, *vv);
      if (!e && !g.directed()) e = g.edge_between(*vv, *uu);
      if (!e) throw ParseError("labeling: [" + u + ", " + v + "] is not an edge");
      if (seen[*e]) throw ParseError("labeling: edge [" + u + ", " + v + "] listed twice");
      seen[*e] = 1;
      const std::string dir = row.at("direction").get<std::string>();
      EdgeLabel el;
      el.label = row.at("label").get<int>();
      if (dir == "both") {
        el.direction = Direction::Both;
      } else if (dir == "u" || dir == "v") {
        el.direction = direction_into(g, *e, dir == "u" ? *uu : *vv);
      } else {
        throw ParseError("labeling: direction must be \"u\", \"v\" or \"both\", got \"" + dir + "\"");
      }
      lab.edges[*e] = el;
    } catch (const Json::exception& ex) {
      throw ParseError(std::string("labeling: ") + ex.what());
    }
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) {
      const Edge& e = g.edge(static_cast<EdgeIndex>(i));
      throw ParseError("labeling: edge [" + g.name(e.first) + ", " + g.name(e.second) +
                       "] has no entry");
    }
  }
  return lab;
}

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

/// Arrowheads point at the guessing endpoint(s); edge attribute label=t.
inline std::string labeling_to_dot(const GameGraph& g, const Labeling& lab) {
  std::ostringstream out;
  out << "digraph labeling {\n";
  std::vector<std::string> names;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) names.push_back(g.name(static_cast<Vertex>(v)));
  std::sort(names.begin(), names.end());
  for (const auto& n : names) out << "  " << dot_quote(n) << ";\n";
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < lab.edges.size(); ++i) {
    const Edge& e = g.edge(static_cast<EdgeIndex>(i));
    const EdgeLabel& el = lab.edges[i];
    std::string tail = g.name(e.first), head = g.name(e.second);
    std::string attrs = "label=" + std::to_string(el.label);
    if (el.direction == Direction::IntoFirst) std::swap(tail, head);
    if (el.direction == Direction::Both) {
      if (head < tail) std::swap(tail, head);
      attrs += ", dir=both";
    }
    lines.push_back("  " + dot_quote(tail) + " -> " + dot_quote(head) + " [" + attrs + "];\n");
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) out << l;
  out << "}\n";
  return out.str();
}

inline std::string labeling_to_text(const GameGraph& g, const Labeling& lab) {
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < lab.edges.size(); ++i) {
    const Edge& e = g.edge(static_cast<EdgeIndex>(i));
    const EdgeLabel& el = lab.edges[i];
    std::string x = g.name(e.first), y = g.name(e.second);
    if (el.direction == Direction::IntoFirst) std::swap(x, y);
    if (el.direction == Direction::Both && y < x) std::swap(x, y);
    lines.push_back(x + (el.direction == Direction::Both ? " <-> " : " -> ") + y + "  " +
                    std::to_string(el.label) + "\n");
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out += l;
  return out;
}

/// {"first": "A"|"B"|"both", "time": n, "second": {"learns_at": m} | "never" | null}
inline Json prediction_to_json(const Prediction& p) {
  Json j;
  j["first"] = to_string(p.first);
  j["time"] = p.time;
  switch (p.second.kind) {
    case SecondOutcome::Kind::LearnsAt: j["second"] = {{"learns_at", p.second.time}}; break;
    case SecondOutcome::Kind::Never: j["second"] = "never"; break;
    case SecondOutcome::Kind::NotApplicable: j["second"] = nullptr; break;
  }
  return j;
}

inline Json outcome_to_json(const Outcome& o) {
  Json j;
  switch (o.kind) {
    case Outcome::Kind::FirstAt:
      j = {{"outcome", "first"}, {"player", to_string(o.player)}, {"time", o.time}};
      break;
    case Outcome::Kind::BothAt: j = {{"outcome", "both"}, {"time", o.time}}; break;
    case Outcome::Kind::SecondAt:
      j = {{"outcome", "second"}, {"player", to_string(o.player)}, {"time", o.time}};
      break;
    case Outcome::Kind::Never: j = {{"outcome", "never"}, {"time", o.time}}; break;
  }
  return j;
}

namespace detail {

inline Json worlds_to_json(const GameGraph& g, const std::vector<World>& ws) {
  std::vector<std::pair<std::string, std::string>> named;
  for (const World& w : ws) named.emplace_back(g.name(w.a), g.name(w.b));
  std::sort(named.begin(), named.end());
  Json out = Json::array();
  for (const auto& [a, b] : named) out.push_back({a, b});
  return out;
}

}  // namespace detail

/// One JSON object per step, then the outcome record.
inline std::string trace_to_jsonl(const GameGraph& g, const OracleTrace& t) {
  std::string out;
  for (const OracleStep& s : t.steps) {
    Json j;
    j["time"] = s.time;
    j["speakers"] = Json::array();
    for (Player p : s.speakers) j["speakers"].push_back(to_string(p));
    j["announcements"] = Json::array();
    for (const Spoken& a : s.announcements) {
      j["announcements"].push_back(
          {{"player", to_string(a.player)}, {"vertex", g.name(a.vertex)}, {"correct", a.correct}});
    }
    j["eliminated"] = detail::worlds_to_json(g, s.eliminated);
    j["surviving"] = detail::worlds_to_json(g, s.surviving);
    out += j.dump() + "\n";
  }
  out += outcome_to_json(t.outcome).dump() + "\n";
  return out;
}

inline Json playbook_to_json(const GameGraph& g, const Playbook& pb) {
  Json j = Json::object();
  for (Player p : {Player::A, Player::B}) {
    Json entries = Json::object();
    const auto& book = pb.of(p);
    for (std::size_t w = 0; w < book.size(); ++w) {
      const std::string& seen = g.name(static_cast<Vertex>(w));
      if (book[w]) {
        entries[seen] = {{"time", book[w]->time}, {"announce", g.name(book[w]->vertex)}};
      } else {
        entries[seen] = "silent";
      }
    }
    j[to_string(p)] = std::move(entries);
  }
  return j;
}

/// {"split-vertex": "input-vertex", ...}
inline Json origin_map_to_json(const SplitGraph& s, const GameGraph& input) {
  Json j = Json::object();
  for (std::size_t v = 0; v < s.origin.size(); ++v) {
    j[s.graph.name(static_cast<Vertex>(v))] = input.name(s.origin[v]);
  }
  return j;
}

inline Json vertex_names(const GameGraph& g, std::vector<Vertex> vs) {
  std::vector<std::string> names;
  for (Vertex v : vs) names.push_back(g.name(v));
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace edgeguess
