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

// Edge labelings of trees: each edge points at the player who names their
// own vertex first and carries the time step at which that happens.

#include <optional>
#include <string>
#include <vector>

#include "edgeguess/error.hpp"
#include "edgeguess/graph.hpp"
#include "edgeguess/speech_mode.hpp"

namespace edgeguess {

/// Which endpoint(s) the edge points into, relative to the graph's stored
/// (first, second) order.
enum class Direction { IntoFirst, IntoSecond, Both };

struct EdgeLabel {
  Direction direction = Direction::Both;
  int label = 0;
  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

/// One EdgeLabel per edge, aligned with GameGraph::edges().
struct Labeling {
  std::vector<EdgeLabel> edges;
  friend bool operator==(const Labeling&, const Labeling&) = default;
};

/// True if edge e points into v (v guesses on this edge).
inline bool points_into(const GameGraph& g, EdgeIndex e, const EdgeLabel& l, Vertex v) {
  const Edge& ed = g.edge(e);
  switch (l.direction) {
    case Direction::Both: return ed.first == v || ed.second == v;
    case Direction::IntoFirst: return ed.first == v;
    case Direction::IntoSecond: return ed.second == v;
  }
  return false;
}

/// True if edge e leaves v. A bidirected edge leaves both endpoints.
inline bool points_away(const GameGraph& g, EdgeIndex e, const EdgeLabel& l, Vertex v) {
  return points_into(g, e, l, g.other(e, v));
}

inline Direction direction_into(const GameGraph& g, EdgeIndex e, Vertex head) {
  return g.edge(e).first == head ? Direction::IntoFirst : Direction::IntoSecond;
}

/// side[v] == 1 for vertices in the starter's bipartition class. The class of
/// player A is the class of `anchor_a`; the starter is taken from `mode`.
inline std::vector<char> starter_class(const GameGraph& g, const SpeechMode& mode, Vertex anchor_a) {
  const Bipartition bp = bipartition(g, anchor_a);
  std::vector<char> out(g.vertex_count());
  for (std::size_t v = 0; v < out.size(); ++v) {
    const bool same_as_a = bp.side[v] == 0;
    out[v] = (mode.starter == Player::A) == same_as_a;
  }
  return out;
}

/// Cutting off leaves.
///
/// Simultaneous: every step removes all current leaves. An edge lost because
/// one endpoint was a leaf points into the surviving endpoint; when the
/// residual is a single edge it becomes bidirected.
///
/// Alternating: the speaker of step t removes the current leaves on the
/// opposite side of the bipartition, so edges into starter-class vertices
/// get odd labels and the others even labels.
inline Labeling cut_leaves_labeling(const GameGraph& g, const SpeechMode& mode, Vertex anchor_a) {
  require_tree(g, "cut_leaves_labeling");
  if (g.edge_count() == 0) throw PreconditionError("cut_leaves_labeling: graph has no edges");
  const std::size_t n = g.vertex_count();
  std::vector<char> starter;
  if (mode.is_alternating()) starter = starter_class(g, mode, anchor_a);

  Labeling lab{std::vector<EdgeLabel>(g.edge_count())};
  std::vector<int> deg(n);
  std::vector<char> alive(n, 1);
  for (std::size_t v = 0; v < n; ++v) deg[v] = static_cast<int>(g.degree(static_cast<Vertex>(v)));
  std::size_t remaining = g.edge_count();

  std::vector<Vertex> removable;
  std::vector<EdgeIndex> cut;
  for (int t = 1; remaining > 0; ++t) {
    removable.clear();
    cut.clear();
    for (std::size_t v = 0; v < n; ++v) {
      if (!alive[v] || deg[v] != 1) continue;
      if (mode.is_alternating()) {
        const bool speaker_is_starter = (t % 2) == 1;
        // The speaker guesses when the partner sits on a leaf of the other class.
        if (static_cast<bool>(starter[v]) == speaker_is_starter) continue;
      }
      removable.push_back(static_cast<Vertex>(v));
    }
    for (const Vertex leaf : removable) {
      for (const auto& a : g.neighbors(leaf)) {
        if (!alive[a.to]) continue;
        EdgeLabel& el = lab.edges[a.edge];
        if (el.label == 0) {
          el.label = t;
          el.direction = direction_into(g, a.edge, a.to);
          cut.push_back(a.edge);
        } else {
          // both endpoints are leaves this step: the residual is this edge
          el.direction = Direction::Both;
        }
        break;
      }
    }
    for (const Vertex leaf : removable) alive[leaf] = 0;
    for (const EdgeIndex e : cut) {
      --deg[g.edge(e).first];
      --deg[g.edge(e).second];
      --remaining;
    }
  }
  return lab;
}

struct Violation {
  enum class Kind {
    WrongEdgeCount,
    NonPositiveLabel,
    NotMonotone,
    MultipleOutgoing,
    MultipleBidirected,
    BidirectedInAlternating,
    ParityMismatch,
    SinkStructure,
  };
  Kind kind;
  EdgeIndex edge = -1;
  Vertex vertex = kNoVertex;
  std::string message;
};

inline const char* to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::WrongEdgeCount: return "wrong-edge-count";
    case Violation::Kind::NonPositiveLabel: return "non-positive-label";
    case Violation::Kind::NotMonotone: return "not-monotone";
    case Violation::Kind::MultipleOutgoing: return "multiple-outgoing";
    case Violation::Kind::MultipleBidirected: return "multiple-bidirected";
    case Violation::Kind::BidirectedInAlternating: return "bidirected-in-alternating";
    case Violation::Kind::ParityMismatch: return "parity-mismatch";
    case Violation::Kind::SinkStructure: return "sink-structure";
  }
  return "?";
}

/// Every structural rule a labeling of a tree must satisfy in `mode`.
/// Violations are returned, never thrown.
inline std::vector<Violation> validate_labeling(const GameGraph& g, const SpeechMode& mode,
                                                const Labeling& lab, Vertex anchor_a) {
  using K = Violation::Kind;
  std::vector<Violation> out;
  auto edge_name = [&](EdgeIndex e) {
    return "{" + g.name(g.edge(e).first) + ", " + g.name(g.edge(e).second) + "}";
  };
  if (lab.edges.size() != g.edge_count()) {
    out.push_back({K::WrongEdgeCount, -1, kNoVertex,
                   "labeling has " + std::to_string(lab.edges.size()) + " entries for " +
                       std::to_string(g.edge_count()) + " edges"});
    return out;
  }
  int bidirected = 0;
  for (std::size_t i = 0; i < lab.edges.size(); ++i) {
    const auto e = static_cast<EdgeIndex>(i);
    if (lab.edges[i].label <= 0) {
      out.push_back({K::NonPositiveLabel, e, kNoVertex, "edge " + edge_name(e) + " has label " +
                                                            std::to_string(lab.edges[i].label)});
    }
    if (lab.edges[i].direction == Direction::Both) {
      ++bidirected;
      if (mode.is_alternating()) {
        out.push_back({K::BidirectedInAlternating, e, kNoVertex,
                       "edge " + edge_name(e) + " is bidirected in alternating mode"});
      }
    }
  }
  if (bidirected > 1) {
    out.push_back({K::MultipleBidirected, -1, kNoVertex,
                   std::to_string(bidirected) + " bidirected edges"});
  }

  std::vector<Vertex> sinks;
  for (std::size_t vi = 0; vi < g.vertex_count(); ++vi) {
    const auto v = static_cast<Vertex>(vi);
    int outgoing = 0;
    bool strictly_outgoing = false;
    for (const auto& a : g.neighbors(v)) {
      const EdgeLabel& el = lab.edges[a.edge];
      if (points_away(g, a.edge, el, v)) {
        ++outgoing;
        if (el.direction != Direction::Both) strictly_outgoing = true;
      }
    }
    if (outgoing > 1) {
      out.push_back({K::MultipleOutgoing, -1, v,
                     "vertex '" + g.name(v) + "' has " + std::to_string(outgoing) +
                         " outgoing edges"});
    }
    if (!strictly_outgoing && g.degree(v) > 0) sinks.push_back(v);

    // labels strictly increase from every ingoing edge to every outgoing one
    for (const auto& in : g.neighbors(v)) {
      const EdgeLabel& li = lab.edges[in.edge];
      if (!points_into(g, in.edge, li, v)) continue;
      for (const auto& outa : g.neighbors(v)) {
        if (outa.edge == in.edge) continue;
        const EdgeLabel& lo = lab.edges[outa.edge];
        if (!points_away(g, outa.edge, lo, v)) continue;
        if (li.label >= lo.label) {
          out.push_back({K::NotMonotone, outa.edge, v,
                         "at '" + g.name(v) + "': ingoing " + edge_name(in.edge) + " label " +
                             std::to_string(li.label) + " >= outgoing " + edge_name(outa.edge) +
                             " label " + std::to_string(lo.label)});
        }
      }
    }
  }

  if (g.edge_count() > 0) {
    const std::size_t expected = bidirected > 0 ? 2 : 1;
    if (sinks.size() != expected) {
      out.push_back({K::SinkStructure, -1, kNoVertex,
                     std::to_string(sinks.size()) + " vertices with all edges ingoing, expected " +
                         std::to_string(expected)});
    }
  }

  if (mode.is_alternating() && g.edge_count() > 0) {
    const auto starter = starter_class(g, mode, anchor_a);
    for (std::size_t i = 0; i < lab.edges.size(); ++i) {
      const auto e = static_cast<EdgeIndex>(i);
      const EdgeLabel& el = lab.edges[i];
      if (el.label <= 0) continue;
      for (const Vertex head : {g.edge(e).first, g.edge(e).second}) {
        if (!points_into(g, e, el, head)) continue;
        const bool odd = (el.label % 2) == 1;
        if (odd != static_cast<bool>(starter[head])) {
          out.push_back({K::ParityMismatch, e, head,
                         "edge " + edge_name(e) + " into '" + g.name(head) + "' has label " +
                             std::to_string(el.label) + ", expected " +
                             (starter[head] ? "odd" : "even")});
        }
      }
    }
  }
  return out;
}

/// Valid for one of the two class assignments of player A. Used where the
/// anchor is not known, e.g. when turning a labeling into a playbook.
inline bool valid_for_some_anchor(const GameGraph& g, const SpeechMode& mode, const Labeling& lab) {
  if (g.edge_count() == 0) return lab.edges.empty();
  const Edge& e = g.edge(0);
  return validate_labeling(g, mode, lab, e.first).empty() ||
         validate_labeling(g, mode, lab, e.second).empty();
}

struct Announce {
  int time = 0;
  Vertex vertex = kNoVertex;
  friend bool operator==(const Announce&, const Announce&) = default;
};

/// What each player says, keyed by the vertex they see their partner on.
/// An empty entry means the player stays silent forever.
struct Playbook {
  std::vector<std::optional<Announce>> a;
  std::vector<std::optional<Announce>> b;

  const std::vector<std::optional<Announce>>& of(Player p) const { return p == Player::A ? a : b; }
  std::vector<std::optional<Announce>>& of(Player p) { return p == Player::A ? a : b; }
};

/// Observing the partner on w: if an edge w -> x labeled n leaves w, announce
/// x at time n. In alternating mode an entry belongs to whichever player may
/// speak at its time.
inline Playbook playbook_from_labeling(const GameGraph& g, const SpeechMode& mode,
                                       const Labeling& lab) {
  require_tree(g, "playbook_from_labeling");
  if (!valid_for_some_anchor(g, mode, lab)) {
    throw PreconditionError("playbook_from_labeling: labeling is not valid for " +
                            to_string(mode));
  }
  Playbook pb;
  pb.a.resize(g.vertex_count());
  pb.b.resize(g.vertex_count());
  for (std::size_t wi = 0; wi < g.vertex_count(); ++wi) {
    const auto w = static_cast<Vertex>(wi);
    for (const auto& arc : g.neighbors(w)) {
      const EdgeLabel& el = lab.edges[arc.edge];
      if (!points_away(g, arc.edge, el, w)) continue;
      const Announce entry{el.label, arc.to};
      for (const Player p : {Player::A, Player::B}) {
        if (mode.permitted(p, el.label)) pb.of(p)[w] = entry;
      }
    }
  }
  return pb;
}

/// Re-time a labeling for another speech mode without changing which edges
/// get guessed. Simultaneous round t becomes alternating rounds 2t-1 (starter)
/// and 2t (other player); a bidirected edge resolves toward the starter's
/// endpoint first. Alternating to simultaneous keeps every label.
inline Labeling adapt_mode(const GameGraph& g, const Labeling& lab, const SpeechMode& from,
                           const SpeechMode& to, Vertex anchor_a) {
  if (auto bad = validate_labeling(g, from, lab, anchor_a); !bad.empty()) {
    throw PreconditionError("adapt_mode: input labeling invalid for " + to_string(from) + ": " +
                            bad.front().message);
  }
  if (from == to) return lab;
  if (!to.is_alternating()) return lab;
  if (from.is_alternating()) {
    return adapt_mode(g, adapt_mode(g, lab, from, SpeechMode::simultaneous(), anchor_a),
                      SpeechMode::simultaneous(), to, anchor_a);
  }
  const auto starter = starter_class(g, to, anchor_a);
  Labeling out = lab;
  for (std::size_t i = 0; i < out.edges.size(); ++i) {
    const auto e = static_cast<EdgeIndex>(i);
    EdgeLabel& el = out.edges[i];
    const Edge& ed = g.edge(e);
    if (el.direction == Direction::Both) {
      el.direction = direction_into(g, e, starter[ed.first] ? ed.first : ed.second);
    }
    const Vertex head = el.direction == Direction::IntoFirst ? ed.first : ed.second;
    const Player guesser = starter[head] ? to.starter : other(to.starter);
    el.label = to.next_permitted(guesser, 2 * el.label - 1);
  }
  return out;
}

}  // namespace edgeguess
