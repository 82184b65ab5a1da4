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

// Closed-form answers for trees: who names their vertex first, when, and
// whether the partner learns theirs one step later. Everything here is
// computed from the height table; nothing is simulated.

#include <optional>
#include <string>

#include "edgeguess/error.hpp"
#include "edgeguess/graph.hpp"
#include "edgeguess/labeling.hpp"
#include "edgeguess/speech_mode.hpp"

namespace edgeguess {

enum class Guesser { A, B, Both };

inline constexpr const char* to_string(Guesser g) {
  switch (g) {
    case Guesser::A: return "A";
    case Guesser::B: return "B";
    case Guesser::Both: return "both";
  }
  return "?";
}

inline constexpr Guesser guesser_of(Player p) { return p == Player::A ? Guesser::A : Guesser::B; }

struct SecondOutcome {
  enum class Kind { LearnsAt, Never, NotApplicable };
  Kind kind = Kind::NotApplicable;
  int time = 0;  // set for LearnsAt

  static SecondOutcome learns_at(int t) { return {Kind::LearnsAt, t}; }
  static SecondOutcome never() { return {Kind::Never, 0}; }
  static SecondOutcome not_applicable() { return {Kind::NotApplicable, 0}; }
  friend bool operator==(const SecondOutcome&, const SecondOutcome&) = default;
};

struct Prediction {
  Guesser first = Guesser::Both;
  int time = 0;
  SecondOutcome second;
  friend bool operator==(const Prediction&, const Prediction&) = default;
};

inline std::string to_string(const Prediction& p) {
  std::string s = std::string("first=") + to_string(p.first) + " t=" + std::to_string(p.time);
  switch (p.second.kind) {
    case SecondOutcome::Kind::LearnsAt: s += " second=learns@" + std::to_string(p.second.time); break;
    case SecondOutcome::Kind::Never: s += " second=never"; break;
    case SecondOutcome::Kind::NotApplicable: break;
  }
  return s;
}

/// Heights rounded up to the times at which each player may speak
/// (alternating mode). `ab` is when A could first guess, `ba` when B could.
struct ParityHeights {
  int ab = 0;  // from h(a, b)
  int ba = 0;  // from h(b, a)
};

namespace detail {

// The placement's component as a tree. Holds a copy only when `g` is
// disconnected.
struct TreeView {
  std::optional<Subgraph> restricted;
  const GameGraph* parent = nullptr;
  Placement placement;  // in graph() coordinates

  const GameGraph& graph() const { return restricted ? restricted->graph : *parent; }
};

inline TreeView placement_component(const GameGraph& g, Placement p, const char* what) {
  if (g.directed()) throw PreconditionError(std::string(what) + ": graph must be undirected");
  if (p.a < 0 || p.b < 0 || static_cast<std::size_t>(p.a) >= g.vertex_count() ||
      static_cast<std::size_t>(p.b) >= g.vertex_count() || !g.adjacent(p.a, p.b)) {
    throw PlacementError(std::string(what) + ": players are not on an edge");
  }
  TreeView view;
  if (component_of(g, p.a).size() == g.vertex_count()) {
    view.parent = &g;
    view.placement = p;
  } else {
    view.restricted = component_subgraph(g, p.a);
    view.placement = {view.restricted->to_sub(p.a), view.restricted->to_sub(p.b)};
  }
  if (!is_tree(view.graph())) {
    throw PreconditionError(std::string(what) + ": the component of '" + g.name(p.a) +
                            "' is not a tree");
  }
  return view;
}

// Label and head of edge {u, w} under cut-leaves, from heights alone.
// `speaks_odd[v]` says whether the player on v's class speaks at odd times.
struct EdgeTiming {
  int label;
  Vertex head;  // kNoVertex if bidirected
};

inline int round_up_to_parity(int h, bool odd) {
  return ((h % 2) == 1) == odd ? h : h + 1;
}

}  // namespace detail

/// Parity-adjusted heights for an alternating game. With A starting,
/// `ab` is odd and `ba` even.
inline ParityHeights parity_heights(const GameGraph& g, Placement p, const SpeechMode& mode) {
  if (!mode.is_alternating()) throw PreconditionError("parity_heights: mode is not alternating");
  auto view = detail::placement_component(g, p, "parity_heights");
  const HeightTable h = heights(view.graph());
  const Placement q = view.placement;
  const bool a_odd = mode.starter == Player::A;
  return {detail::round_up_to_parity(h(q.a, q.b), a_odd),
          detail::round_up_to_parity(h(q.b, q.a), !a_odd)};
}

namespace detail {

// Cut-leaves timing of edge {u, w}.
inline EdgeTiming edge_timing(const HeightTable& h, const SpeechMode& mode,
                              const std::vector<char>& speaks_odd, Vertex u, Vertex w) {
  int tu = h(u, w);  // u learns once w's side is exhausted
  int tw = h(w, u);
  if (mode.is_alternating()) {
    tu = round_up_to_parity(tu, speaks_odd[u]);
    tw = round_up_to_parity(tw, speaks_odd[w]);
  }
  if (tu < tw) return {tu, u};
  if (tw < tu) return {tw, w};
  return {tu, kNoVertex};
}

}  // namespace detail

/// Who guesses first and when, plus whether the partner learns too.
///
/// Simultaneous: the first time is min(h(a,b), h(b,a)); the player whose
/// partner's side is shallower guesses, both on a tie. Alternating: the same
/// with heights rounded up to each player's speaking parity; never tied.
///
/// The partner learns one step later iff the placement edge is the only edge
/// at the first guesser's vertex with that label.
inline Prediction predict(const GameGraph& g, Placement p, const SpeechMode& mode) {
  auto view = detail::placement_component(g, p, "predict");
  const GameGraph& t = view.graph();
  const Placement q = view.placement;
  const HeightTable h = heights(t);

  std::vector<char> speaks_odd;
  if (mode.is_alternating()) {
    const Bipartition bp = bipartition(t, q.a);
    speaks_odd.resize(t.vertex_count());
    for (std::size_t v = 0; v < speaks_odd.size(); ++v) {
      const Player owner = bp.side[v] == 0 ? Player::A : Player::B;
      speaks_odd[v] = owner == mode.starter;
    }
  }

  const auto timing = detail::edge_timing(h, mode, speaks_odd, q.a, q.b);
  Prediction out;
  out.time = timing.label;
  if (timing.head == kNoVertex) {
    out.first = Guesser::Both;
    out.second = SecondOutcome::not_applicable();
    return out;
  }
  out.first = timing.head == q.a ? Guesser::A : Guesser::B;
  int same_label = 0;
  for (const auto& arc : t.neighbors(timing.head)) {
    if (detail::edge_timing(h, mode, speaks_odd, timing.head, arc.to).label == timing.label) {
      ++same_label;
    }
  }
  out.second = same_label == 1 ? SecondOutcome::learns_at(timing.label + 1) : SecondOutcome::never();
  return out;
}

/// Partner outcome read off a labeling: with u the first guesser's vertex
/// and n the placement edge's label, the partner learns at n + 1 iff no other
/// edge at u carries label n.
inline SecondOutcome second_guesser(const GameGraph& g, Placement p, const SpeechMode& /*mode*/,
                                    const Labeling& lab) {
  if (g.directed()) throw PreconditionError("second_guesser: graph must be undirected");
  if (lab.edges.size() != g.edge_count()) {
    throw PreconditionError("second_guesser: labeling does not match the graph");
  }
  const auto e = g.edge_between(p.a, p.b);
  if (!e) throw PlacementError("second_guesser: players are not on an edge");
  const EdgeLabel& el = lab.edges[*e];
  if (el.direction == Direction::Both) {
    throw PreconditionError("second_guesser: placement edge is bidirected, both players learn");
  }
  const Vertex u = points_into(g, *e, el, p.a) ? p.a : p.b;
  int same_label = 0;
  for (const auto& arc : g.neighbors(u)) {
    if (lab.edges[arc.edge].label == el.label) ++same_label;
  }
  return same_label == 1 ? SecondOutcome::learns_at(el.label + 1) : SecondOutcome::never();
}

}  // namespace edgeguess
