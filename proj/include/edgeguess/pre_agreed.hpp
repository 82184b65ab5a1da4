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

// Strategies agreed on before the game in which both players always learn
// their vertex: spread the cut-leaves labels so that no two edges share one.

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "edgeguess/error.hpp"
#include "edgeguess/graph.hpp"
#include "edgeguess/labeling.hpp"
#include "edgeguess/oracle.hpp"
#include "edgeguess/speech_mode.hpp"

namespace edgeguess {

/// phi[e] in {0, ..., |E|-1}, a permutation indexed by edge.
struct EdgeBijection {
  std::vector<int> phi;
};

inline bool is_valid(const EdgeBijection& b, const GameGraph& g) {
  if (b.phi.size() != g.edge_count()) return false;
  std::vector<char> hit(b.phi.size(), 0);
  for (int x : b.phi) {
    if (x < 0 || static_cast<std::size_t>(x) >= hit.size() || hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

/// Edges ranked by their endpoint names, smaller name first.
inline EdgeBijection lexicographic_bijection(const GameGraph& g) {
  std::vector<int> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](int e) {
    std::pair<std::string, std::string> k{g.name(g.edge(e).first), g.name(g.edge(e).second)};
    if (!g.directed() && k.second < k.first) std::swap(k.first, k.second);
    return k;
  };
  std::sort(order.begin(), order.end(), [&](int l, int r) { return key(l) < key(r); });
  EdgeBijection b{std::vector<int>(g.edge_count())};
  for (std::size_t rank = 0; rank < order.size(); ++rank) b.phi[order[rank]] = static_cast<int>(rank);
  return b;
}

/// Bijection from an explicit edge order: the i-th listed edge gets phi = i.
inline EdgeBijection bijection_from_order(const GameGraph& g,
                                          const std::vector<std::pair<Vertex, Vertex>>& order) {
  EdgeBijection b{std::vector<int>(g.edge_count(), -1)};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto e = g.edge_between(order[i].first, order[i].second);
    if (!e) {
      throw PreconditionError("bijection: '" + g.name(order[i].first) + " " +
                              g.name(order[i].second) + "' is not an edge");
    }
    if (b.phi[*e] != -1) {
      throw PreconditionError("bijection: edge '" + g.name(order[i].first) + " " +
                              g.name(order[i].second) + "' listed twice");
    }
    b.phi[*e] = static_cast<int>(i);
  }
  if (!is_valid(b, g)) throw PreconditionError("bijection: not every edge is listed");
  return b;
}

/// Cut-leaves directions with labels |E| * t + phi(e). Alternating mode then
/// doubles each label and subtracts one on edges into the starter's class,
/// so parities stay correct. All labels are pairwise distinct.
inline Labeling both_players_labeling(const GameGraph& g, const SpeechMode& mode, Vertex anchor_a,
                                      const EdgeBijection& phi) {
  require_tree(g, "both_players_labeling");
  if (!is_valid(phi, g)) throw PreconditionError("both_players_labeling: invalid edge bijection");
  Labeling lab = cut_leaves_labeling(g, mode, anchor_a);
  const int m = static_cast<int>(g.edge_count());
  std::vector<char> starter;
  if (mode.is_alternating()) starter = starter_class(g, mode, anchor_a);
  for (std::size_t i = 0; i < lab.edges.size(); ++i) {
    EdgeLabel& el = lab.edges[i];
    el.label = m * el.label + phi.phi[i];
    if (mode.is_alternating()) {
      const Edge& ed = g.edge(static_cast<EdgeIndex>(i));
      const Vertex head = el.direction == Direction::IntoFirst ? ed.first : ed.second;
      el.label = 2 * el.label - (starter[head] ? 1 : 0);
    }
  }
  return lab;
}

/// Every placement compatible with the labeling ends with both players
/// knowing their vertex when the labeling is played as a script. In
/// alternating mode A is placed on the anchor's class.
inline bool verify_both_learn(const GameGraph& g, const SpeechMode& mode, const Labeling& lab,
                              Vertex anchor_a) {
  const Playbook book = playbook_from_labeling(g, mode, lab);
  std::vector<char> a_side;
  if (mode.is_alternating()) {
    const Bipartition bp = bipartition(g, anchor_a);
    a_side.resize(g.vertex_count());
    for (std::size_t v = 0; v < a_side.size(); ++v) a_side[v] = bp.side[v] == 0;
  }
  for (const Edge& e : g.edges()) {
    for (const Placement p : {Placement{e.first, e.second}, Placement{e.second, e.first}}) {
      if (mode.is_alternating() && !a_side[p.a]) continue;
      const OracleTrace t = simulate_with_playbook(g, p, mode, book, {Convention::Tail, false});
      if (!t.announcements_correct) return false;
      const auto k = t.outcome.kind;
      if (k != Outcome::Kind::BothAt && k != Outcome::Kind::SecondAt) return false;
    }
  }
  return true;
}

}  // namespace edgeguess
