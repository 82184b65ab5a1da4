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

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "edgeguess/error.hpp"

namespace edgeguess {

/// Dense vertex index into a GameGraph. Names are carried separately.
using Vertex = int;
using EdgeIndex = int;

inline constexpr Vertex kNoVertex = -1;

struct Edge {
  Vertex first;
  Vertex second;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite simple graph with named vertices, undirected or directed.
///
/// Undirected edges are stored once, in insertion order; `first`/`second`
/// keep the endpoint order they were added with. Directed edges are stored
/// tail-first. A directed graph may hold both (u,v) and (v,u).
///
/// Graphs are built with add_vertex/add_edge and then treated as immutable
/// values by every algorithm in this library.
class GameGraph {
 public:
  struct Arc {
    Vertex to;
    EdgeIndex edge;
  };

  explicit GameGraph(bool directed = false) : directed_(directed) {}

  bool directed() const { return directed_; }
  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  Vertex add_vertex(std::string_view name) {
    if (auto found = find(name)) return *found;
    const Vertex v = static_cast<Vertex>(names_.size());
    names_.emplace_back(name);
    if (names_.size() == kIndexFrom) {
      for (std::size_t i = 0; i < names_.size(); ++i) index_.emplace(names_[i], static_cast<Vertex>(i));
    } else if (names_.size() > kIndexFrom) {
      index_.emplace(names_.back(), v);
    }
    out_.emplace_back();
    in_.emplace_back();
    return v;
  }

  EdgeIndex add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw GraphError("self-loop at vertex '" + names_[u] + "'");
    if (edge_between(u, v)) {
      throw GraphError("duplicate edge '" + names_[u] + (directed_ ? " > " : " ") +
                       names_[v] + "'");
    }
    const EdgeIndex e = static_cast<EdgeIndex>(edges_.size());
    edges_.push_back({u, v});
    out_[u].push_back({v, e});
    in_[v].push_back({u, e});
    if (!directed_) {
      out_[v].push_back({u, e});
      in_[u].push_back({v, e});
    }
    return e;
  }

  EdgeIndex add_edge(std::string_view u, std::string_view v) {
    const Vertex a = add_vertex(u);
    const Vertex b = add_vertex(v);
    return add_edge(a, b);
  }

  const std::string& name(Vertex v) const {
    check_vertex(v);
    return names_[v];
  }

  std::optional<Vertex> find(std::string_view name) const {
    if (names_.size() < kIndexFrom) {
      for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return static_cast<Vertex>(i);
      }
      return std::nullopt;
    }
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Vertex at(std::string_view name) const {
    if (auto v = find(name)) return *v;
    throw GraphError("unknown vertex '" + std::string(name) + "'");
  }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(static_cast<std::size_t>(e)); }

  /// Undirected: all incident arcs. Directed: arcs leaving v.
  std::span<const Arc> out_arcs(Vertex v) const { return out_[v]; }
  /// Undirected: all incident arcs. Directed: arcs entering v.
  std::span<const Arc> in_arcs(Vertex v) const { return in_[v]; }
  std::span<const Arc> neighbors(Vertex v) const { return out_[v]; }

  std::size_t degree(Vertex v) const {
    return directed_ ? out_[v].size() + in_[v].size() : out_[v].size();
  }

  /// Edge joining u and v; for directed graphs only the arc u -> v counts.
  std::optional<EdgeIndex> edge_between(Vertex u, Vertex v) const {
    for (const Arc& a : out_[u]) {
      if (a.to == v) return a.edge;
    }
    return std::nullopt;
  }

  bool adjacent(Vertex u, Vertex v) const { return edge_between(u, v).has_value(); }

  /// Endpoint of edge e other than v.
  Vertex other(EdgeIndex e, Vertex v) const {
    const Edge& ed = edge(e);
    return ed.first == v ? ed.second : ed.first;
  }

 private:
  void check_vertex(Vertex v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= names_.size()) {
      throw GraphError("vertex index " + std::to_string(v) + " out of range");
    }
  }

  // small graphs (the enumerations) look names up by scanning
  static constexpr std::size_t kIndexFrom = 32;

  bool directed_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Arc>> out_;
  std::vector<std::vector<Arc>> in_;
};

/// The two players. PlayerA is the one whose vertex is the placement's `a`.
enum class Player { A, B };

inline constexpr Player other(Player p) { return p == Player::A ? Player::B : Player::A; }
inline constexpr const char* to_string(Player p) { return p == Player::A ? "A" : "B"; }

/// Which vertex each player occupies.
struct Placement {
  Vertex a = kNoVertex;
  Vertex b = kNoVertex;
  Vertex of(Player p) const { return p == Player::A ? a : b; }
  friend bool operator==(const Placement&, const Placement&) = default;
};

/// A graph together with the map from its vertices to those of a parent graph.
struct Subgraph {
  GameGraph graph;
  std::vector<Vertex> origin;  // subgraph vertex -> parent vertex

  Vertex to_sub(Vertex parent) const {
    auto it = std::find(origin.begin(), origin.end(), parent);
    return it == origin.end() ? kNoVertex : static_cast<Vertex>(it - origin.begin());
  }
};

/// Vertices reachable from `start` ignoring edge orientation, in BFS order.
inline std::vector<Vertex> component_of(const GameGraph& g, Vertex start) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> order{start};
  seen[start] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    for (auto arcs : {g.out_arcs(v), g.in_arcs(v)}) {
      for (const auto& a : arcs) {
        if (!seen[a.to]) {
          seen[a.to] = 1;
          order.push_back(a.to);
        }
      }
    }
  }
  return order;
}

inline bool is_connected(const GameGraph& g) {
  return g.vertex_count() == 0 || component_of(g, 0).size() == g.vertex_count();
}

/// Induced subgraph on `keep` (order preserved). Vertex names carry over.
inline Subgraph induced_subgraph(const GameGraph& g, std::span<const Vertex> keep) {
  Subgraph sub{GameGraph(g.directed()), {}};
  std::vector<Vertex> local(g.vertex_count(), kNoVertex);
  for (Vertex v : keep) {
    local[v] = sub.graph.add_vertex(g.name(v));
    sub.origin.push_back(v);
  }
  for (const Edge& e : g.edges()) {
    if (local[e.first] != kNoVertex && local[e.second] != kNoVertex) {
      sub.graph.add_edge(local[e.first], local[e.second]);
    }
  }
  return sub;
}

/// Component containing v, with vertices in ascending parent order.
inline Subgraph component_subgraph(const GameGraph& g, Vertex v) {
  auto comp = component_of(g, v);
  std::sort(comp.begin(), comp.end());
  return induced_subgraph(g, comp);
}

/// Connected and acyclic. Only meaningful for undirected graphs.
inline bool is_tree(const GameGraph& g) {
  if (g.directed()) return false;
  if (g.vertex_count() == 0) return false;
  return g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

/// No cycle in the underlying undirected graph.
inline bool is_forest(const GameGraph& g) {
  std::vector<Vertex> parent(g.vertex_count());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<Vertex>(i);
  auto root = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : g.edges()) {
    const Vertex x = root(e.first);
    const Vertex y = root(e.second);
    if (x == y) return false;
    parent[x] = y;
  }
  return true;
}

inline void require_tree(const GameGraph& g, std::string_view what) {
  if (g.directed()) throw PreconditionError(std::string(what) + ": graph must be undirected");
  if (!is_tree(g)) throw PreconditionError(std::string(what) + ": graph is not a tree");
}

/// Two-colouring of a tree. `side[v] == 0` means v is on the anchor's side.
struct Bipartition {
  std::vector<int> side;

  bool on_side_a(Vertex v) const { return side[v] == 0; }
  std::vector<Vertex> side_a() const { return collect(0); }
  std::vector<Vertex> side_b() const { return collect(1); }

 private:
  std::vector<Vertex> collect(int s) const {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < side.size(); ++v) {
      if (side[v] == s) out.push_back(static_cast<Vertex>(v));
    }
    return out;
  }
};

inline Bipartition bipartition(const GameGraph& g, Vertex anchor) {
  require_tree(g, "bipartition");
  if (anchor < 0 || static_cast<std::size_t>(anchor) >= g.vertex_count()) {
    throw PlacementError("bipartition: anchor vertex out of range");
  }
  Bipartition bp{std::vector<int>(g.vertex_count(), -1)};
  std::vector<Vertex> stack{anchor};
  bp.side[anchor] = 0;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (const auto& a : g.neighbors(v)) {
      if (bp.side[a.to] < 0) {
        bp.side[a.to] = 1 - bp.side[v];
        stack.push_back(a.to);
      }
    }
  }
  return bp;
}

/// h(u,v) for every ordered adjacent pair of a tree: the number of vertices
/// on the longest downward path from v when the tree is rooted at u.
/// Leaves give h = 1.
class HeightTable {
 public:
  HeightTable() = default;
  HeightTable(const GameGraph* g, std::vector<int> toward_second, std::vector<int> toward_first)
      : graph_(g), toward_second_(std::move(toward_second)), toward_first_(std::move(toward_first)) {}

  /// h(u,v); u and v must be adjacent.
  int operator()(Vertex u, Vertex v) const {
    const auto e = graph_->edge_between(u, v);
    if (!e) throw PlacementError("heights: '" + graph_->name(u) + "' and '" + graph_->name(v) +
                                 "' are not adjacent");
    return graph_->edge(*e).first == u ? toward_second_[*e] : toward_first_[*e];
  }

 private:
  const GameGraph* graph_ = nullptr;
  std::vector<int> toward_second_;  // h(first, second)
  std::vector<int> toward_first_;   // h(second, first)
};

/// Two-pass rerooting: subtree heights from an arbitrary root, then the
/// heights of the "upward" side pushed down from each parent.
/// The returned table refers to `g`, which must outlive it.
inline HeightTable heights(const GameGraph& g) {
  require_tree(g, "heights");
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> parent(n, kNoVertex), order;
  order.reserve(n);
  order.push_back(0);
  parent[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& a : g.neighbors(order[i])) {
      if (parent[a.to] == kNoVertex) {
        parent[a.to] = order[i];
        order.push_back(a.to);
      }
    }
  }
  // down[v] = h(parent(v), v)
  std::vector<int> down(n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    if (v != 0) down[parent[v]] = std::max(down[parent[v]], down[v] + 1);
  }
  // down[] above holds the subtree height of every vertex; for v != root it
  // equals h(parent(v), v).
  // up[v] = h(v, parent(v)) for v != root.
  std::vector<int> up(n, 0);
  for (const Vertex v : order) {
    // best and second best among: children subtree heights and up[v]
    int best = (v == 0) ? 0 : up[v];
    int second = 0;
    Vertex best_child = kNoVertex;
    for (const auto& a : g.neighbors(v)) {
      if (a.to == parent[v] && v != 0) continue;
      const int h = down[a.to];
      if (h > best) {
        second = best;
        best = h;
        best_child = a.to;
      } else if (h > second) {
        second = h;
      }
    }
    for (const auto& a : g.neighbors(v)) {
      if (a.to == parent[v] && v != 0) continue;
      up[a.to] = 1 + (a.to == best_child ? second : best);
    }
  }
  std::vector<int> toward_second(g.edge_count()), toward_first(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edges()[e];
    // h(first, second)
    if (parent[ed.second] == ed.first) {
      toward_second[e] = down[ed.second];
      toward_first[e] = up[ed.second];
    } else {
      toward_first[e] = down[ed.first];
      toward_second[e] = up[ed.first];
    }
  }
  return HeightTable(&g, std::move(toward_second), std::move(toward_first));
}

}  // namespace edgeguess
