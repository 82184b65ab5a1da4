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

// Possible-worlds simulator for the edge-guessing game.
//
// A world is an ordered pair (position of A, position of B). The set W of
// worlds still consistent with everything said so far is common knowledge.
// Player A, seeing B on y, considers {x : (x, y) in W}; B, seeing A on x,
// considers {y : (x, y) in W}. A permitted speaker announces exactly when
// that set is a singleton. After each step every world whose predicted
// announcements differ from the observed ones is removed. The game stops at
// the first announcement; the silent partner then gets one inference step.
//
// The same engine replays scripted play from a Playbook.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "edgeguess/error.hpp"
#include "edgeguess/graph.hpp"
#include "edgeguess/labeling.hpp"
#include "edgeguess/predictor.hpp"
#include "edgeguess/speech_mode.hpp"

namespace edgeguess {

/// Which end of a directed edge player A occupies. B is on the other end.
enum class Convention { Tail, Head };

inline constexpr const char* to_string(Convention c) { return c == Convention::Tail ? "tail" : "head"; }

struct World {
  Vertex a = kNoVertex;
  Vertex b = kNoVertex;
  friend bool operator==(const World&, const World&) = default;
  friend auto operator<=>(const World&, const World&) = default;
};

struct Spoken {
  Player player;
  Vertex vertex;
  bool correct;
};

struct OracleStep {
  int time = 0;
  std::vector<Player> speakers;
  std::vector<Spoken> announcements;
  std::vector<World> eliminated;
  std::vector<World> surviving;
};

struct Outcome {
  enum class Kind { FirstAt, BothAt, SecondAt, Never };
  Kind kind = Kind::Never;
  Player player = Player::A;  // FirstAt: the guesser; SecondAt: the partner
  int time = 0;
  friend bool operator==(const Outcome&, const Outcome&) = default;
};

struct OracleTrace {
  std::size_t initial_worlds = 0;
  std::vector<OracleStep> steps;  // empty unless recording
  int steps_run = 0;
  bool announcements_correct = true;  // every announcement named the speaker's true vertex
  Outcome outcome;
};

struct SimulateOptions {
  Convention convention = Convention::Tail;  // directed graphs only
  bool record = true;                        // keep per-step world sets
};

/// Who guessed first and whether the partner followed, in Prediction form.
/// nullopt for Never.
inline std::optional<Prediction> to_prediction(const Outcome& o) {
  switch (o.kind) {
    case Outcome::Kind::FirstAt:
      return Prediction{guesser_of(o.player), o.time, SecondOutcome::never()};
    case Outcome::Kind::BothAt:
      return Prediction{Guesser::Both, o.time, SecondOutcome::not_applicable()};
    case Outcome::Kind::SecondAt:
      return Prediction{guesser_of(other(o.player)), o.time - 1, SecondOutcome::learns_at(o.time)};
    case Outcome::Kind::Never:
      return std::nullopt;
  }
  return std::nullopt;
}

inline std::string to_string(const Outcome& o) {
  switch (o.kind) {
    case Outcome::Kind::FirstAt:
      return std::string("first(") + to_string(o.player) + ", " + std::to_string(o.time) + ")";
    case Outcome::Kind::BothAt: return "both(" + std::to_string(o.time) + ")";
    case Outcome::Kind::SecondAt:
      return std::string("second(") + to_string(o.player) + ", " + std::to_string(o.time) + ")";
    case Outcome::Kind::Never: return "never";
  }
  return "?";
}

/// True if A on `a` and B on `b` is a legal placement.
inline bool is_world(const GameGraph& g, World w, Convention c) {
  if (w.a < 0 || w.b < 0) return false;
  const auto n = static_cast<Vertex>(g.vertex_count());
  if (w.a >= n || w.b >= n) return false;
  if (!g.directed()) return g.adjacent(w.a, w.b);
  return c == Convention::Tail ? g.adjacent(w.a, w.b) : g.adjacent(w.b, w.a);
}

namespace detail {

class WorldSpace {
 public:
  WorldSpace(const GameGraph& g, Placement p, Convention c) {
    if (!is_world(g, {p.a, p.b}, c)) {
      auto nm = [&](Vertex v) {
        return (v >= 0 && static_cast<std::size_t>(v) < g.vertex_count()) ? g.name(v)
                                                                           : std::to_string(v);
      };
      throw PlacementError("placement A='" + nm(p.a) + "', B='" + nm(p.b) + "' is not " +
                           (g.directed() ? std::string("an admissible edge (A at ") +
                                               to_string(c) + ")"
                                         : std::string("an edge")));
    }
    std::vector<char> in_comp(g.vertex_count(), 0);
    for (Vertex v : component_of(g, p.a)) in_comp[v] = 1;
    for (const Edge& e : g.edges()) {
      if (!in_comp[e.first]) continue;
      if (!g.directed()) {
        worlds_.push_back({e.first, e.second});
        worlds_.push_back({e.second, e.first});
      } else if (c == Convention::Tail) {
        worlds_.push_back({e.first, e.second});
      } else {
        worlds_.push_back({e.second, e.first});
      }
    }
    std::sort(worlds_.begin(), worlds_.end());
    actual_ = static_cast<int>(std::lower_bound(worlds_.begin(), worlds_.end(), World{p.a, p.b}) -
                               worlds_.begin());
  }

  const std::vector<World>& worlds() const { return worlds_; }
  int actual() const { return actual_; }

 private:
  std::vector<World> worlds_;
  int actual_ = 0;
};

// Announcement made by each player in a world, or kNoVertex for silence.
struct Signature {
  Vertex a = kNoVertex;
  Vertex b = kNoVertex;
  bool any() const { return a != kNoVertex || b != kNoVertex; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Policy interface:
//   Signature speak(World w, int t, counts) const
//   bool gives_up(int t, int quiet_steps) const
template <class Policy>
OracleTrace run_worlds(const GameGraph& g, Placement p, const SpeechMode& mode,
                       const SimulateOptions& opt, const Policy& policy) {
  const WorldSpace space(g, p, opt.convention);
  const auto& worlds = space.worlds();
  const World actual = worlds[space.actual()];
  const std::size_t n = g.vertex_count();

  OracleTrace trace;
  trace.initial_worlds = worlds.size();
  std::vector<char> alive(worlds.size(), 1);
  // with_b[y] = live worlds with B on y, i.e. |A's candidates| when seeing y
  std::vector<int> with_b(n, 0), with_a(n, 0);
  for (const World& w : worlds) {
    ++with_b[w.b];
    ++with_a[w.a];
  }
  std::vector<Signature> sig(worlds.size());
  int quiet = 0;

  for (int t = 1;; ++t) {
    for (std::size_t i = 0; i < worlds.size(); ++i) {
      if (alive[i]) sig[i] = policy.speak(worlds[i], t, with_a, with_b);
    }
    const Signature seen = sig[space.actual()];
    if ((seen.a != kNoVertex && seen.a != actual.a) || (seen.b != kNoVertex && seen.b != actual.b)) {
      trace.announcements_correct = false;
    }

    OracleStep step;
    step.time = t;
    if (opt.record) {
      for (Player pl : {Player::A, Player::B}) {
        if (mode.permitted(pl, t)) step.speakers.push_back(pl);
      }
      if (seen.a != kNoVertex) step.announcements.push_back({Player::A, seen.a, seen.a == actual.a});
      if (seen.b != kNoVertex) step.announcements.push_back({Player::B, seen.b, seen.b == actual.b});
    }
    int eliminated = 0;
    for (std::size_t i = 0; i < worlds.size(); ++i) {
      if (!alive[i]) continue;
      if (sig[i] == seen) {
        if (opt.record) step.surviving.push_back(worlds[i]);
        continue;
      }
      alive[i] = 0;
      --with_b[worlds[i].b];
      --with_a[worlds[i].a];
      ++eliminated;
      if (opt.record) step.eliminated.push_back(worlds[i]);
    }
    trace.steps_run = t;
    if (opt.record) trace.steps.push_back(std::move(step));

    if (seen.a != kNoVertex && seen.b != kNoVertex) {
      trace.outcome = {Outcome::Kind::BothAt, Player::A, t};
      return trace;
    }
    if (seen.any()) {
      const Player first = seen.a != kNoVertex ? Player::A : Player::B;
      // The partner's candidates among the surviving worlds.
      const int candidates = first == Player::A ? with_a[actual.a] : with_b[actual.b];
      if (candidates == 1) {
        trace.outcome = {Outcome::Kind::SecondAt, other(first), t + 1};
      } else {
        trace.outcome = {Outcome::Kind::FirstAt, first, t};
      }
      return trace;
    }
    quiet = eliminated == 0 ? quiet + 1 : 0;
    if (policy.gives_up(t, quiet)) {
      trace.outcome = {Outcome::Kind::Never, Player::A, t};
      return trace;
    }
  }
}

struct RationalPolicy {
  SpeechMode mode;

  Signature speak(World w, int t, const std::vector<int>& with_a,
                  const std::vector<int>& with_b) const {
    Signature s;
    if (mode.permitted(Player::A, t) && with_b[w.b] == 1) s.a = w.a;
    if (mode.permitted(Player::B, t) && with_a[w.a] == 1) s.b = w.b;
    return s;
  }
  bool gives_up(int /*t*/, int quiet) const { return quiet >= mode.period(); }
};

struct ScriptedPolicy {
  SpeechMode mode;
  const Playbook* book;
  int horizon;

  Signature speak(World w, int t, const std::vector<int>&, const std::vector<int>&) const {
    Signature s;
    const auto& ea = book->a[w.b];
    const auto& eb = book->b[w.a];
    if (mode.permitted(Player::A, t) && ea && ea->time == t) s.a = ea->vertex;
    if (mode.permitted(Player::B, t) && eb && eb->time == t) s.b = eb->vertex;
    return s;
  }
  bool gives_up(int t, int /*quiet*/) const { return t >= horizon; }
};

}  // namespace detail

/// Rational play with no prior agreement. Works on any graph; on a directed
/// graph the convention says which end A sits on. Disconnected graphs are
/// restricted to the placement's component.
inline OracleTrace simulate(const GameGraph& g, Placement p, const SpeechMode& mode,
                            const SimulateOptions& opt = {}) {
  return detail::run_worlds(g, p, mode, opt, detail::RationalPolicy{mode});
}

/// Scripted play: each player follows their playbook entry for the partner
/// vertex they see. The silent partner inverts the partner's playbook.
inline OracleTrace simulate_with_playbook(const GameGraph& g, Placement p, const SpeechMode& mode,
                                          const Playbook& book, const SimulateOptions& opt = {}) {
  int horizon = 1;
  for (Player pl : {Player::A, Player::B}) {
    const auto& entries = book.of(pl);
    if (entries.size() != g.vertex_count()) {
      throw PreconditionError(std::string("playbook for player ") + to_string(pl) +
                              " does not cover every vertex");
    }
    for (std::size_t w = 0; w < entries.size(); ++w) {
      if (!entries[w]) continue;
      const Announce& e = *entries[w];
      const World claimed = pl == Player::A ? World{e.vertex, static_cast<Vertex>(w)}
                                            : World{static_cast<Vertex>(w), e.vertex};
      if (!is_world(g, claimed, opt.convention)) {
        throw PreconditionError(std::string("playbook for player ") + to_string(pl) +
                                ": observing '" + g.name(static_cast<Vertex>(w)) +
                                "' announces a vertex that is not adjacent");
      }
      if (e.time < 1) throw PreconditionError("playbook entry with non-positive time");
      horizon = std::max(horizon, e.time);
    }
  }
  return detail::run_worlds(g, p, mode, opt, detail::ScriptedPolicy{mode, &book, horizon});
}

}  // namespace edgeguess
