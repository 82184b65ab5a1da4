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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// fails. Runs for several minutes; the directed sweep dominates.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>

#include "edgeguess/serialize.hpp"
#include "oracles.hpp"

namespace edgeguess {
namespace {

using testing::data_path;
using testing::slurp;

const SpeechMode kSim = SpeechMode::simultaneous();
const SpeechMode kAltA = SpeechMode::alternating(Player::A);
const SpeechMode kAltB = SpeechMode::alternating(Player::B);

struct Verdict {
  bool ok = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Run {
  int status;
  std::string out;
  double secs;
};

Run run_cli(const std::string& args) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string cmd = std::string(EDGEGUESS_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, "", 0};
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {status, out, seconds_since(t0)};
}

std::vector<Placement> placements(const GameGraph& g) {
  std::vector<Placement> out;
  for (const Edge& e : g.edges()) {
    out.push_back({e.first, e.second});
    if (!g.directed()) out.push_back({e.second, e.first});
  }
  return out;
}

bool never(const GameGraph& g, Placement p, const SpeechMode& m) {
  return simulate(g, p, m, {Convention::Tail, false}).outcome.kind == Outcome::Kind::Never;
}

std::string first_mismatch(const CheckReport& r) {
  if (r.mismatches.empty()) return "";
  const Mismatch& m = r.mismatches.front();
  return "; first: " + m.graph + " " + m.mode + " A=" + m.a + " B=" + m.b + " oracle=" + m.oracle +
         " predictor=" + m.predictor;
}

Verdict labels_match(const std::string& args, const std::string& expected_file) {
  const Run r = run_cli(args);
  Verdict v;
  Json got;
  try {
    got = Json::parse(r.out);
  } catch (const Json::exception&) {
    return {false, "cli output is not JSON (status " + std::to_string(r.status) + ")"};
  }
  const Json want = Json::parse(slurp(data_path(expected_file)));
  v.ok = r.status == 0 && got == want && r.secs < 1.0;
  v.detail = std::to_string(want.size()) + " edges, exact=" + (got == want ? "yes" : "no") +
             ", cli " + std::to_string(r.secs) + " s";
  return v;
}

Verdict reference_simultaneous() {
  return labels_match("analyze " + data_path("tree21.edges") + " --mode simultaneous",
                      "tree21_simultaneous.json");
}

Verdict reference_alternating() {
  return labels_match("analyze " + data_path("tree21.edges") + " --mode alternating --starter A --anchor w1",
                      "tree21_alternating.json");
}

Verdict trees_agree() {
  const CheckReport r = check_trees(8);
  const Run smoke = run_cli("check --max-n 5");
  Verdict v;
  v.ok = r.mismatches.empty() && smoke.status == 0 && smoke.secs < 5.0 &&
         smoke.out.find(": 0 mismatches") != std::string::npos;
  v.detail = std::to_string(r.graphs) + " trees, " + std::to_string(r.placements) + " placements x modes, " +
             std::to_string(r.mismatches.size()) + " mismatches" + first_mismatch(r) + "; cli --max-n 5 " +
             std::to_string(smoke.secs) + " s";
  return v;
}

Verdict dichotomy() {
  std::size_t trees = 0, tree_never = 0, others = 0, others_ok = 0, cycle_bad = 0;
  for (int n = 2; n <= 8; ++n) {
    for_each_labeled_tree(n, [&](const GameGraph& g) {
      ++trees;
      for (const SpeechMode& m : {kSim, kAltA, kAltB}) {
        for (const Placement p : placements(g)) tree_never += never(g, p, m);
      }
    });
  }
  for (int n = 3; n <= 7; ++n) {
    for_each_connected_graph(n, [&](const GameGraph& g) {
      if (is_tree(g)) return;
      ++others;
      bool sim = false, alt = false;
      for (const Placement p : placements(g)) {
        if (!sim) sim = never(g, p, kSim);
        if (!alt) alt = never(g, p, kAltA);
        if (sim && alt) break;
      }
      others_ok += sim && alt;
    });
  }
  for (int n = 3; n <= 8; ++n) {
    const GameGraph c = testing::cycle_graph(n);
    for (const SpeechMode& m : {kSim, kAltA, kAltB}) {
      for (const Placement p : placements(c)) cycle_bad += !never(c, p, m);
    }
  }
  Verdict v;
  v.ok = tree_never == 0 && others_ok == others && cycle_bad == 0;
  v.detail = std::to_string(trees) + " trees with " + std::to_string(tree_never) + " stuck placements; " +
             std::to_string(others_ok) + "/" + std::to_string(others) +
             " connected non-trees stuck somewhere (both modes); cycles 3..8 resolved placements: " +
             std::to_string(cycle_bad);
  return v;
}

Verdict both_learn() {
  std::size_t trees = 0, failures = 0;
  std::string first;
  for (int n = 2; n <= 8; ++n) {
    for_each_labeled_tree(n, [&](const GameGraph& g) {
      ++trees;
      for (const SpeechMode& m : {kSim, kAltA, kAltB}) {
        for (const Vertex anchor : {Vertex{0}, Vertex{1}}) {
          if (!m.is_alternating() && anchor != 0) continue;
          const Labeling lab = both_players_labeling(g, m, anchor, lexicographic_bijection(g));
          std::set<int> labels;
          for (const EdgeLabel& el : lab.edges) labels.insert(el.label);
          const bool ok = labels.size() == lab.edges.size() && validate_labeling(g, m, lab, anchor).empty() &&
                          verify_both_learn(g, m, lab, anchor);
          if (!ok && failures++ == 0) first = format_edge_list(g) + " " + to_string(m);
        }
      }
    });
  }
  return {failures == 0, std::to_string(trees) + " trees, " + std::to_string(failures) + " failures" +
                             (first.empty() ? "" : "; first: " + first)};
}

// Players whose first announcement is correct in scripted play, per placement.
std::vector<std::set<Player>> first_guessers(const GameGraph& g, const SpeechMode& m, const Labeling& lab,
                                             const std::vector<Placement>& ps, bool& broken) {
  const Playbook pb = playbook_from_labeling(g, m, lab);
  std::vector<std::set<Player>> out;
  for (const Placement p : ps) {
    const OracleTrace t = simulate_with_playbook(g, p, m, pb);
    if (!t.announcements_correct || t.outcome.kind == Outcome::Kind::Never) broken = true;
    std::set<Player> who;
    for (const OracleStep& s : t.steps) {
      if (s.announcements.empty()) continue;
      for (const Spoken& sp : s.announcements) who.insert(sp.player);
      break;
    }
    out.push_back(who);
  }
  return out;
}

Verdict adapt_round_trip() {
  std::size_t cases = 0, failures = 0;
  std::string first;
  for (int n = 2; n <= 7; ++n) {
    for_each_labeled_tree(n, [&](const GameGraph& g) {
      for (const Vertex anchor : {Vertex{0}, Vertex{1}}) {
        const Labeling sim = cut_leaves_labeling(g, kSim, anchor);
        const Bipartition bp = bipartition(g, anchor);
        std::vector<Placement> alt_ps;
        for (const Placement p : placements(g)) {
          if (bp.side[p.a] == 0) alt_ps.push_back(p);
        }
        for (const SpeechMode& to : {kAltA, kAltB}) {
          ++cases;
          bool broken = false;
          const Labeling alt = adapt_mode(g, sim, kSim, to, anchor);
          const Labeling back = adapt_mode(g, alt, to, kSim, anchor);
          broken |= !validate_labeling(g, to, alt, anchor).empty();
          broken |= !validate_labeling(g, kSim, back, anchor).empty();
          const auto g_sim = first_guessers(g, kSim, sim, alt_ps, broken);
          const auto g_alt = first_guessers(g, to, alt, alt_ps, broken);
          const auto g_back = first_guessers(g, kSim, back, alt_ps, broken);
          for (std::size_t i = 0; i < alt_ps.size() && !broken; ++i) {
            // one-directional edges keep their guesser; a shared edge keeps one of the two
            broken = g_alt[i].size() != 1 || !g_sim[i].count(*g_alt[i].begin()) || g_back[i] != g_alt[i];
          }
          if (broken && failures++ == 0) first = format_edge_list(g) + " " + to_string(to);
        }
      }
    });
  }
  return {failures == 0, std::to_string(cases) + " (tree, anchor, mode) cases, " + std::to_string(failures) +
                             " failures" + (first.empty() ? "" : "; first: " + first)};
}

DigraphCode random_digraph(int n, std::mt19937_64& rng) {
  DigraphCode c = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && rng() % 4 == 0) c = with_arc(c, u, v);
    }
  }
  return c;
}

// Up to 5 vertices: both conventions, all modes. At 6 vertices: the tail
// convention with simultaneous and A-first play. Head convention is tail
// play on the reversed graph and B-first play is A-first play with the
// players renamed, and the class list is closed under reversal, so those
// cases repeat ones already checked.
Verdict directed() {
  CheckReport r;
  std::size_t classes = 0;
  for (int n = 1; n <= 6; ++n) {
    const auto cls = digraph_classes(n);
    classes += cls.size();
    const std::vector<SpeechMode> modes = n <= 5 ? all_modes() : std::vector<SpeechMode>{kSim, kAltA};
    for (DigraphCode c : cls) {
      const GameGraph g = digraph_from_code(c, n);
      r.merge(check_directed(g, Convention::Tail, modes));
      if (n <= 5) r.merge(check_directed(g, Convention::Head, modes));
    }
  }
  std::mt19937_64 rng(20261018);
  CheckReport sample;
  for (int i = 0; i < 10000; ++i) {
    const GameGraph g = digraph_from_code(random_digraph(7, rng), 7);
    sample.merge(check_directed(g, Convention::Tail));
    sample.merge(check_directed(g, Convention::Head));
  }
  r.finish();
  sample.finish();
  return {r.mismatches.empty() && sample.mismatches.empty(),
          std::to_string(classes) + " classes <= 6 vertices, " + std::to_string(r.placements) +
              " checks, " + std::to_string(r.mismatches.size()) + " mismatches" + first_mismatch(r) +
              "; 10000 random 7-vertex digraphs, " + std::to_string(sample.placements) + " checks, " +
              std::to_string(sample.mismatches.size()) + " mismatches" + first_mismatch(sample)};
}

Verdict paths() {
  std::size_t checked = 0, wrong = 0;
  for (int n = 2; n <= 9; ++n) {
    const GameGraph g = testing::path_graph(n);
    for (int k = 1; k < n; ++k) {
      const Placement p{k - 1, k};
      const auto o = to_prediction(simulate(g, p, kSim).outcome);
      ++checked;
      if (!o || o->time != std::min(k, n - k) || predict(g, p, kSim).time != o->time) ++wrong;
    }
  }
  return {wrong == 0, std::to_string(checked) + " placements, " + std::to_string(wrong) + " off the closed form"};
}

Verdict spider() {
  const GameGraph g = read_edge_list(data_path("spider6.edges"));
  const Placement p{g.at("c"), g.at("x1")};
  const bool literal = testing::node_height_rule(g, p.a, p.b);
  const Prediction pred = predict(g, p, kSim);
  const OracleTrace t = simulate(g, p, kSim, {Convention::Tail, true});
  std::cout << "      spider: A on c, B on x1; node-height reading says B "
            << (literal ? "learns" : "never learns") << ", edge-label rule says " << to_string(pred) << "\n";
  for (const OracleStep& s : t.steps) {
    std::cout << "      t=" << s.time << " eliminated=" << s.eliminated.size() << " surviving=" << s.surviving.size();
    for (const Spoken& sp : s.announcements) std::cout << " " << to_string(sp.player) << " says " << g.name(sp.vertex);
    std::cout << "\n";
  }
  const bool ok = !literal && pred == Prediction{Guesser::A, 2, SecondOutcome::learns_at(3)} &&
                  t.outcome == Outcome{Outcome::Kind::SecondAt, Player::B, 3};
  return {ok, "oracle outcome: " + to_string(t.outcome)};
}

}  // namespace
}  // namespace edgeguess

int main() {
  using namespace edgeguess;
  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
  };
  const Criterion criteria[] = {
      {"reference tree, simultaneous labels", reference_simultaneous},
      {"reference tree, alternating labels", reference_alternating},
      {"simulation = predictor = labeling on trees <= 8", trees_agree},
      {"trees never stuck, non-trees and cycles stuck", dichotomy},
      {"pre-agreed labels: both players learn", both_learn},
      {"mode adaptation keeps the guessed edges", adapt_round_trip},
      {"directed reduction = directed simulation", directed},
      {"paths: first time min(k, n-k)", paths},
      {"spider counterexample to the node-height reading", spider},
  };
  int failed = 0, index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = seconds_since(t0);
    failed += !v.ok;
    std::printf("%s %d %s (%.2f s): %s\n", v.ok ? "PASS" : "FAIL", index, c.name, secs, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
