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

// Cross-validation of the three views of a game: the possible-worlds
// simulation, the height-based predictor and the cut-leaves labeling.

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "edgeguess/directed.hpp"
#include "edgeguess/edge_list.hpp"
#include "edgeguess/enumerate.hpp"
#include "edgeguess/graph.hpp"
#include "edgeguess/labeling.hpp"
#include "edgeguess/oracle.hpp"
#include "edgeguess/predictor.hpp"
#include "edgeguess/speech_mode.hpp"

namespace edgeguess {

struct Mismatch {
  std::string graph;  // edge list, one edge per ';'
  std::string mode;
  std::string a, b;
  std::string oracle, predictor, labeling;

  friend auto operator<=>(const Mismatch&, const Mismatch&) = default;
};

struct CheckReport {
  std::size_t graphs = 0;
  std::size_t placements = 0;  // (graph, mode, placement) triples
  std::vector<Mismatch> mismatches;

  void merge(CheckReport other) {
    graphs += other.graphs;
    placements += other.placements;
    for (auto& m : other.mismatches) mismatches.push_back(std::move(m));
  }
  void finish() { std::sort(mismatches.begin(), mismatches.end()); }
};

inline std::vector<SpeechMode> all_modes() {
  return {SpeechMode::simultaneous(), SpeechMode::alternating(Player::A),
          SpeechMode::alternating(Player::B)};
}

/// Prediction read off a labeling: the placement edge's direction and label,
/// and the second guesser from the labels around the first guesser.
inline Prediction prediction_from_labeling(const GameGraph& g, Placement p, const SpeechMode& mode,
                                           const Labeling& lab) {
  const auto e = g.edge_between(p.a, p.b);
  if (!e) throw PlacementError("prediction_from_labeling: players are not on an edge");
  const EdgeLabel& el = lab.edges[*e];
  if (el.direction == Direction::Both) {
    return {Guesser::Both, el.label, SecondOutcome::not_applicable()};
  }
  const Guesser first = points_into(g, *e, el, p.a) ? Guesser::A : Guesser::B;
  return {first, el.label, second_guesser(g, p, mode, lab)};
}

namespace detail {

inline std::string one_line(const GameGraph& g) {
  std::string s = format_edge_list(g);
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

inline std::string show(const std::optional<Prediction>& p) {
  return p ? to_string(*p) : std::string("never");
}

}  // namespace detail

/// Every ordered placement of a tree under every mode.
inline CheckReport check_tree(const GameGraph& g, const std::vector<SpeechMode>& modes = all_modes()) {
  require_tree(g, "check_tree");
  CheckReport r;
  r.graphs = 1;
  for (const SpeechMode& mode : modes) {
    // The labeling depends on A's class only; one per class.
    std::optional<Labeling> by_class[2];
    const Bipartition bp = bipartition(g, 0);
    for (const Edge& e : g.edges()) {
      for (const Placement p : {Placement{e.first, e.second}, Placement{e.second, e.first}}) {
        ++r.placements;
        const int cls = bp.side[p.a];
        if (!by_class[cls]) by_class[cls] = cut_leaves_labeling(g, mode, p.a);
        const auto oracle = to_prediction(simulate(g, p, mode, {Convention::Tail, false}).outcome);
        const Prediction pred = predict(g, p, mode);
        const Prediction lab = prediction_from_labeling(g, p, mode, *by_class[cls]);
        if (oracle && *oracle == pred && pred == lab) continue;
        r.mismatches.push_back({detail::one_line(g), to_string(mode), g.name(p.a), g.name(p.b),
                                detail::show(oracle), to_string(pred), to_string(lab)});
      }
    }
  }
  return r;
}

/// All labeled trees with 2..max_n vertices.
inline CheckReport check_trees(int max_n, const std::vector<SpeechMode>& modes = all_modes()) {
  CheckReport r;
  for (int n = 2; n <= max_n; ++n) {
    for_each_labeled_tree(n, [&](const GameGraph& g) { r.merge(check_tree(g, modes)); });
  }
  r.finish();
  return r;
}

/// Directed graph: the reduction against the directed simulation for every
/// admissible placement, plus the zig-zag verdict against "no placement is
/// never guessed".
inline CheckReport check_directed(const GameGraph& g, Convention c,
                                  const std::vector<SpeechMode>& modes = all_modes()) {
  CheckReport r;
  r.graphs = 1;
  const bool forest = is_zigzag_forest(g);
  bool all_guessable = true;
  for (const Edge& e : g.edges()) {
    const Placement p = c == Convention::Tail ? Placement{e.first, e.second}
                                              : Placement{e.second, e.first};
    const DirectedReduction red = reduce_directed(g, p, c);
    for (const SpeechMode& mode : modes) {
      ++r.placements;
      const auto oracle = to_prediction(simulate(g, p, mode, {c, false}).outcome);
      const auto reduced = predict_reduced(g, p, c, red, mode);
      if (!oracle) all_guessable = false;
      if (oracle == reduced) continue;
      r.mismatches.push_back({detail::one_line(g), to_string(mode) + " " + to_string(c),
                              g.name(p.a), g.name(p.b), detail::show(oracle),
                              detail::show(reduced), ""});
    }
  }
  if (g.edge_count() > 0 && forest != all_guessable) {
    r.mismatches.push_back({detail::one_line(g), "zig-zag", "", "",
                            all_guessable ? "all guessable" : "some never",
                            forest ? "zig-zag forest" : "zig-zag cycle", ""});
  }
  return r;
}

}  // namespace edgeguess
