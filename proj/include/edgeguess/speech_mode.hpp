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

#include <string>

#include "edgeguess/graph.hpp"

namespace edgeguess {

/// Who may speak when. Time steps start at 1. In alternating mode the
/// starter speaks at odd steps and the other player at even steps.
struct SpeechMode {
  enum class Kind { Simultaneous, Alternating };

  Kind kind = Kind::Simultaneous;
  Player starter = Player::A;  // meaningful only when alternating

  static constexpr SpeechMode simultaneous() { return {}; }
  static constexpr SpeechMode alternating(Player starter) { return {Kind::Alternating, starter}; }

  constexpr bool is_alternating() const { return kind == Kind::Alternating; }

  constexpr bool permitted(Player p, int time) const {
    if (!is_alternating()) return true;
    return ((time % 2) == 1) == (p == starter);
  }

  /// Steps after which every player has had one turn.
  constexpr int period() const { return is_alternating() ? 2 : 1; }

  /// Smallest time >= t at which p may speak.
  constexpr int next_permitted(Player p, int t) const {
    while (!permitted(p, t)) ++t;
    return t;
  }

  friend constexpr bool operator==(const SpeechMode& x, const SpeechMode& y) {
    return x.kind == y.kind && (x.kind == Kind::Simultaneous || x.starter == y.starter);
  }
};

inline std::string to_string(const SpeechMode& m) {
  if (!m.is_alternating()) return "simultaneous";
  return std::string("alternating(starter ") + to_string(m.starter) + ")";
}

}  // namespace edgeguess
