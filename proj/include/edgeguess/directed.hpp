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

// Directed graphs. Players know the orientation of their edge, so A's
// possible positions are reached from A by zig-zag paths (every interior
// vertex a local source or sink). Splitting each vertex that has both
// ingoing and outgoing edges into an in-copy and an out-copy turns the
// reachable part into an ordinary bipartite graph, and the undirected
// machinery applies to its underlying graph.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "edgeguess/error.hpp"
#include "edgeguess/graph.hpp"
#include "edgeguess/oracle.hpp"
#include "edgeguess/predictor.hpp"
#include "edgeguess/speech_mode.hpp"

namespace edgeguess {

struct CandidateSets {
  std::vector<Vertex> va;       // possible positions of A, ascending
  std::vector<Vertex> vb;       // possible positions of B, ascending
  std::vector<Vertex> dropped;  // in neither set
  Subgraph restricted;          // induced on va ∪ vb

  bool in_va(Vertex v) const { return std::binary_search(va.begin(), va.end(), v); }
  bool in_vb(Vertex v) const { return std::binary_search(vb.begin(), vb.end(), v); }
};

namespace detail {

inline void require_directed(const GameGraph& g, const char* what) {
  if (!g.directed()) throw PreconditionError(std::string(what) + ": graph must be directed");
}

// Admissible partners of v: B-candidates when v hosts A, A-candidates when v hosts B.
inline std::span<const GameGraph::Arc> partners(const GameGraph& g, Vertex v, bool v_hosts_a,
                                                Convention c) {
  const bool use_out = v_hosts_a == (c == Convention::Tail);
  return use_out ? g.out_arcs(v) : g.in_arcs(v);
}

}  // namespace detail

/// Alternating closure from `a`: B-candidates of every A-candidate and
/// A-candidates of every B-candidate, to a fixpoint. A vertex may land in both
/// sets.
inline CandidateSets candidate_sets(const GameGraph& g, Vertex a, Convention c) {
  detail::require_directed(g, "candidate_sets");
  if (a < 0 || static_cast<std::size_t>(a) >= g.vertex_count()) {
    throw PlacementError("candidate_sets: vertex out of range");
  }
  const std::size_t n = g.vertex_count();
  std::vector<char> in_a(n, 0), in_b(n, 0);
  struct Item {
    Vertex v;
    bool hosts_a;
  };
  std::vector<Item> queue{{a, true}};
  in_a[a] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Item it = queue[i];
    auto& target = it.hosts_a ? in_b : in_a;
    for (const auto& arc : detail::partners(g, it.v, it.hosts_a, c)) {
      if (!target[arc.to]) {
        target[arc.to] = 1;
        queue.push_back({arc.to, !it.hosts_a});
      }
    }
  }
  CandidateSets out;
  std::vector<Vertex> keep;
  for (std::size_t vi = 0; vi < n; ++vi) {
    const auto v = static_cast<Vertex>(vi);
    if (in_a[v]) out.va.push_back(v);
    if (in_b[v]) out.vb.push_back(v);
    if (in_a[v] || in_b[v]) {
      keep.push_back(v);
    } else {
      out.dropped.push_back(v);
    }
  }
  out.restricted = induced_subgraph(g, keep);
  return out;
}

/// Directed graph in which no vertex has both ingoing and outgoing edges.
struct SplitGraph {
  GameGraph graph{true};
  std::vector<Vertex> origin;    // split vertex -> input vertex
  std::vector<Vertex> in_copy;   // input vertex -> split vertex holding its ingoing edges
  std::vector<Vertex> out_copy;  // input vertex -> split vertex holding its outgoing edges
};

/// Splits every vertex with nonzero in- and out-degree into `v:in` and
/// `v:out` (extra ':' appended if those names are taken). Other vertices keep
/// their name. Edge i of the result is edge i of the input.
inline SplitGraph split(const GameGraph& g) {
  detail::require_directed(g, "split");
  const std::size_t n = g.vertex_count();
  SplitGraph s;
  s.in_copy.assign(n, kNoVertex);
  s.out_copy.assign(n, kNoVertex);
  auto fresh = [&](const std::string& base) {
    std::string name = base;
    while (g.find(name) || s.graph.find(name)) name += ':';
    return name;
  };
  for (std::size_t vi = 0; vi < n; ++vi) {
    const auto v = static_cast<Vertex>(vi);
    const bool mixed = !g.in_arcs(v).empty() && !g.out_arcs(v).empty();
    if (!mixed) {
      const Vertex c = s.graph.add_vertex(g.name(v));
      s.origin.push_back(v);
      s.in_copy[v] = s.out_copy[v] = c;
      continue;
    }
    s.in_copy[v] = s.graph.add_vertex(fresh(g.name(v) + ":in"));
    s.origin.push_back(v);
    s.out_copy[v] = s.graph.add_vertex(fresh(g.name(v) + ":out"));
    s.origin.push_back(v);
  }
  for (const Edge& e : g.edges()) s.graph.add_edge(s.out_copy[e.first], s.in_copy[e.second]);
  return s;
}

/// Same vertices, every edge made undirected. Both orientations of a pair
/// collapse into one edge.
inline GameGraph underlying_undirected(const GameGraph& g) {
  GameGraph u(false);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) u.add_vertex(g.name(static_cast<Vertex>(v)));
  for (const Edge& e : g.edges()) {
    if (!u.adjacent(e.first, e.second)) u.add_edge(e.first, e.second);
  }
  return u;
}

/// Directed form of an undirected graph: each edge becomes two opposite arcs.
inline GameGraph as_bidirected(const GameGraph& g) {
  if (g.directed()) return g;
  GameGraph d(true);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) d.add_vertex(g.name(static_cast<Vertex>(v)));
  for (const Edge& e : g.edges()) {
    d.add_edge(e.first, e.second);
    d.add_edge(e.second, e.first);
  }
  return d;
}

/// No zig-zag cycles: the split graph's underlying graph is a forest.
/// Undirected input is read as its bidirected form.
inline bool is_zigzag_forest(const GameGraph& g) {
  const SplitGraph s = split(as_bidirected(g));
  return is_forest(s.graph);
}

/// Mode-independent part of the directed analysis.
struct DirectedReduction {
  CandidateSets sets;
  SplitGraph split;
  Placement split_placement;  // players' vertices in `split.graph`
  std::optional<Subgraph> tree;  // undirected split component of the placement, if a tree
};

/// Restrict to the candidate sets, split, and take the placement's split
/// component.
inline DirectedReduction reduce_directed(const GameGraph& g, Placement p, Convention c) {
  detail::require_directed(g, "reduce_directed");
  if (!is_world(g, {p.a, p.b}, c)) {
    throw PlacementError(std::string("placement A='") + g.name(p.a) + "', B='" + g.name(p.b) +
                         "' is not an admissible edge (A at " + to_string(c) + ")");
  }
  DirectedReduction out;
  out.sets = candidate_sets(g, p.a, c);
  out.split = split(out.sets.restricted.graph);
  const Vertex a = out.sets.restricted.to_sub(p.a);
  const Vertex b = out.sets.restricted.to_sub(p.b);
  out.split_placement = c == Convention::Tail
                            ? Placement{out.split.out_copy[a], out.split.in_copy[b]}
                            : Placement{out.split.in_copy[a], out.split.out_copy[b]};
  // split arcs never come in opposite pairs, so this is the underlying graph
  std::vector<Vertex> comp = component_of(out.split.graph, out.split_placement.a);
  std::size_t degree_sum = 0;
  for (Vertex v : comp) degree_sum += out.split.graph.degree(v);
  if (degree_sum / 2 + 1 == comp.size()) {
    std::sort(comp.begin(), comp.end());
    Subgraph sub = induced_subgraph(out.split.graph, comp);
    GameGraph und(false);
    for (std::size_t v = 0; v < sub.graph.vertex_count(); ++v) {
      und.add_vertex(sub.graph.name(static_cast<Vertex>(v)));
    }
    for (const Edge& e : sub.graph.edges()) und.add_edge(e.first, e.second);
    out.tree = Subgraph{std::move(und), std::move(sub.origin)};
  }
  return out;
}

/// Prediction for a reduced placement: the undirected predictor on the split
/// tree, or the directed simulation when the split component has a cycle.
inline std::optional<Prediction> predict_reduced(const GameGraph& g, Placement p, Convention c,
                                                 const DirectedReduction& r, const SpeechMode& mode) {
  if (r.tree) {
    const Placement local{r.tree->to_sub(r.split_placement.a), r.tree->to_sub(r.split_placement.b)};
    return predict(r.tree->graph, local, mode);
  }
  return to_prediction(simulate(g, p, mode, {c, false}).outcome);
}

struct DirectedAnalysis {
  CandidateSets sets;
  SplitGraph split;
  Placement split_placement;     // players' vertices in `split.graph`
  bool component_is_tree = false;
  std::optional<Prediction> prediction;  // nullopt: never guessed
};

/// Reduce to the undirected game: restrict to the candidate sets, split,
/// and predict on the placement's split component if it is a tree. Otherwise
/// fall back to simulating the directed game.
inline DirectedAnalysis analyze_directed(const GameGraph& g, Placement p, Convention c,
                                         const SpeechMode& mode) {
  DirectedReduction r = reduce_directed(g, p, c);
  DirectedAnalysis out;
  out.prediction = predict_reduced(g, p, c, r, mode);
  out.component_is_tree = r.tree.has_value();
  out.sets = std::move(r.sets);
  out.split = std::move(r.split);
  out.split_placement = r.split_placement;
  return out;
}

}  // namespace edgeguess
