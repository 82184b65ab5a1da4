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

// The edgeguess command line. Kept in the library so tests can drive it
// without spawning processes.
//
// Exit codes: 0 ok, 1 check/validate found problems, 2 parse error (input
// file or command line), 3 invalid placement, 4 precondition violation.

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "edgeguess/check.hpp"
#include "edgeguess/directed.hpp"
#include "edgeguess/edge_list.hpp"
#include "edgeguess/error.hpp"
#include "edgeguess/graph.hpp"
#include "edgeguess/labeling.hpp"
#include "edgeguess/oracle.hpp"
#include "edgeguess/pre_agreed.hpp"
#include "edgeguess/predictor.hpp"
#include "edgeguess/serialize.hpp"
#include "edgeguess/speech_mode.hpp"

namespace edgeguess::cli {

enum class Command { Analyze, Predict, Simulate, Reduce, Strategy, Check, Validate };
enum class Format { Json, Dot, Text };

enum ExitCode : int {
  kOk = 0,
  kFailed = 1,
  kParse = 2,
  kPlacement = 3,
  kPrecondition = 4,
};

struct RunConfig {
  Command command = Command::Analyze;
  std::string graph_path;  // empty: check enumerates trees
  std::optional<std::string> a, b;
  SpeechMode mode;
  std::optional<std::string> anchor;  // a vertex of A's class, alternating mode
  std::optional<Format> format;       // per-command default when unset
  bool trace = false;
  int max_n = 7;
  std::string phi_path;
  std::string labeling_path;  // validate
  Convention convention = Convention::Tail;
};

namespace detail {

inline Vertex vertex_arg(const GameGraph& g, const std::string& name, const char* flag) {
  if (auto v = g.find(name)) return *v;
  throw PlacementError(std::string(flag) + ": no vertex named '" + name + "'");
}

inline Placement placement_arg(const GameGraph& g, const RunConfig& cfg) {
  if (!cfg.a || !cfg.b) throw PlacementError("this command needs --a and --b");
  return {vertex_arg(g, *cfg.a, "--a"), vertex_arg(g, *cfg.b, "--b")};
}

// A's class for alternating mode: --anchor, else --a.
inline Vertex anchor_arg(const GameGraph& g, const RunConfig& cfg) {
  if (!cfg.mode.is_alternating()) return 0;
  const auto& name = cfg.anchor ? cfg.anchor : cfg.a;
  if (!name) throw PreconditionError("alternating mode needs --anchor (a vertex of A's class)");
  if (auto v = g.find(*name)) return *v;
  throw PreconditionError("--anchor: no vertex named '" + *name + "'");
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline Json read_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

// One edge per line, "u v", in phi order; '#' comments allowed.
inline EdgeBijection read_phi(const GameGraph& g, const std::string& path) {
  const GameGraph listed = parse_edge_list_text(read_file(path));
  std::vector<std::pair<Vertex, Vertex>> order;
  for (const Edge& e : listed.edges()) {
    const std::string& u = listed.name(e.first);
    const std::string& v = listed.name(e.second);
    const auto gu = g.find(u), gv = g.find(v);
    if (!gu || !gv) throw ParseError(path + ": '" + u + " " + v + "' names an unknown vertex");
    if (g.adjacent(*gu, *gv)) {
      order.emplace_back(*gu, *gv);
    } else {
      order.emplace_back(*gv, *gu);
    }
  }
  return bijection_from_order(g, order);
}

inline Format format_or(const RunConfig& cfg, Format fallback) { return cfg.format.value_or(fallback); }

inline void no_dot(const RunConfig& cfg, const char* command) {
  if (cfg.format == Format::Dot) {
    throw PreconditionError(std::string(command) + ": --format dot is not available");
  }
}

inline std::string dot_of_graph(const GameGraph& g) {
  std::string out = g.directed() ? "digraph g {\n" : "graph g {\n";
  std::vector<std::string> lines;
  for (const Edge& e : g.edges()) {
    lines.push_back("  " + dot_quote(g.name(e.first)) + (g.directed() ? " -> " : " -- ") +
                    dot_quote(g.name(e.second)) + ";\n");
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) out += l;
  return out + "}\n";
}

inline Json mismatch_json(const Mismatch& m) {
  return {{"graph", m.graph},   {"mode", m.mode},           {"a", m.a},
          {"b", m.b},           {"oracle", m.oracle},       {"predictor", m.predictor},
          {"labeling", m.labeling}};
}

inline int analyze(const GameGraph& g, const RunConfig& cfg, std::ostream& out) {
  const Labeling lab = cut_leaves_labeling(g, cfg.mode, anchor_arg(g, cfg));
  switch (format_or(cfg, Format::Json)) {
    case Format::Json: out << labeling_to_json(g, lab).dump(2) << "\n"; break;
    case Format::Dot: out << labeling_to_dot(g, lab); break;
    case Format::Text: out << labeling_to_text(g, lab); break;
  }
  return kOk;
}

inline int predict_cmd(const GameGraph& g, const RunConfig& cfg, std::ostream& out) {
  no_dot(cfg, "predict");
  const Placement p = placement_arg(g, cfg);
  std::optional<Prediction> pred;
  if (g.directed()) {
    pred = analyze_directed(g, p, cfg.convention, cfg.mode).prediction;
  } else {
    pred = predict(g, p, cfg.mode);
  }
  if (format_or(cfg, Format::Json) == Format::Text) {
    out << (pred ? to_string(*pred) : std::string("never")) << "\n";
  } else {
    out << (pred ? prediction_to_json(*pred) : Json("never")).dump() << "\n";
  }
  return kOk;
}

inline int simulate_cmd(const GameGraph& g, const RunConfig& cfg, std::ostream& out) {
  no_dot(cfg, "simulate");
  const Placement p = placement_arg(g, cfg);
  const bool text = format_or(cfg, Format::Json) == Format::Text;
  const OracleTrace t = simulate(g, p, cfg.mode, {cfg.convention, cfg.trace || text});
  if (!text) {
    out << (cfg.trace ? trace_to_jsonl(g, t) : outcome_to_json(t.outcome).dump() + "\n");
    return kOk;
  }
  for (const OracleStep& s : t.steps) {
    out << "t=" << s.time << " speakers=";
    for (std::size_t i = 0; i < s.speakers.size(); ++i) out << (i ? "," : "") << to_string(s.speakers[i]);
    out << " eliminated=" << s.eliminated.size() << " surviving=" << s.surviving.size();
    for (const Spoken& sp : s.announcements) {
      out << " " << to_string(sp.player) << " says " << g.name(sp.vertex)
          << (sp.correct ? "" : " (wrong)");
    }
    out << "\n";
  }
  out << "outcome: " << to_string(t.outcome) << "\n";
  return kOk;
}

inline int reduce_cmd(const GameGraph& g, const RunConfig& cfg, std::ostream& out) {
  if (!g.directed()) throw PreconditionError("reduce: graph must be directed (use 'u > v' edges)");
  const Format f = format_or(cfg, Format::Json);
  const GameGraph* target = &g;
  std::optional<CandidateSets> sets;
  if (cfg.a) {
    sets = candidate_sets(g, vertex_arg(g, *cfg.a, "--a"), cfg.convention);
    target = &sets->restricted.graph;
  }
  const SplitGraph s = split(*target);
  const bool forest = is_zigzag_forest(*target);
  if (f == Format::Dot) {
    out << dot_of_graph(s.graph);
    return kOk;
  }
  if (f == Format::Text) {
    out << format_edge_list(s.graph);
    out << "# zig-zag forest: " << (forest ? "yes" : "no") << "\n";
    if (sets) {
      auto names = [&](const std::vector<Vertex>& vs) {
        std::string r;
        for (const auto& n : vertex_names(g, vs)) r += " " + n.get<std::string>();
        return r;
      };
      out << "# VA:" << names(sets->va) << "\n# VB:" << names(sets->vb) << "\n# dropped:"
          << names(sets->dropped) << "\n";
    }
    return kOk;
  }
  Json j;
  j["edges"] = Json::array();
  for (const Edge& e : s.graph.edges()) j["edges"].push_back({s.graph.name(e.first), s.graph.name(e.second)});
  j["origin"] = origin_map_to_json(s, *target);
  j["zigzag_forest"] = forest;
  if (sets) {
    j["va"] = vertex_names(g, sets->va);
    j["vb"] = vertex_names(g, sets->vb);
    j["dropped"] = vertex_names(g, sets->dropped);
  }
  out << j.dump(2) << "\n";
  return kOk;
}

inline int strategy_cmd(const GameGraph& g, const RunConfig& cfg, std::ostream& out) {
  require_tree(g, "strategy");
  const Vertex anchor = anchor_arg(g, cfg);
  const EdgeBijection phi = cfg.phi_path.empty() ? lexicographic_bijection(g) : read_phi(g, cfg.phi_path);
  const Labeling lab = both_players_labeling(g, cfg.mode, anchor, phi);
  const Format f = format_or(cfg, Format::Json);
  if (f == Format::Dot) {
    out << labeling_to_dot(g, lab);
    return kOk;
  }
  if (f == Format::Text) {
    out << labeling_to_text(g, lab);
    return kOk;
  }
  Json j;
  j["labeling"] = labeling_to_json(g, lab);
  j["playbook"] = playbook_to_json(g, playbook_from_labeling(g, cfg.mode, lab));
  j["both_learn"] = verify_both_learn(g, cfg.mode, lab, anchor);
  out << j.dump(2) << "\n";
  return kOk;
}

inline int check_cmd(const GameGraph* g, const RunConfig& cfg, std::ostream& out) {
  no_dot(cfg, "check");
  CheckReport r;
  if (!g) {
    if (cfg.max_n < 2) throw PreconditionError("check: --max-n must be at least 2");
    r = check_trees(cfg.max_n);
  } else if (g->directed()) {
    r = check_directed(*g, cfg.convention);
  } else {
    require_tree(*g, "check");
    r = check_tree(*g);
  }
  r.finish();
  if (format_or(cfg, Format::Text) == Format::Json) {
    Json j;
    j["graphs"] = r.graphs;
    j["placements"] = r.placements;
    j["mismatches"] = Json::array();
    for (const auto& m : r.mismatches) j["mismatches"].push_back(mismatch_json(m));
    out << j.dump(2) << "\n";
  } else {
    out << "checked " << r.graphs << " graphs, " << r.placements << " placements: "
        << r.mismatches.size() << " mismatches\n";
    for (const auto& m : r.mismatches) out << mismatch_json(m).dump() << "\n";
  }
  return r.mismatches.empty() ? kOk : kFailed;
}

inline int validate_cmd(const GameGraph& g, const RunConfig& cfg, std::ostream& out) {
  no_dot(cfg, "validate");
  require_tree(g, "validate");
  if (cfg.labeling_path.empty()) throw PreconditionError("validate: --labeling <file> is required");
  const Labeling lab = labeling_from_json(g, read_json(cfg.labeling_path));
  const auto bad = validate_labeling(g, cfg.mode, lab, anchor_arg(g, cfg));
  if (format_or(cfg, Format::Text) == Format::Json) {
    Json j = Json::array();
    for (const auto& v : bad) j.push_back({{"kind", to_string(v.kind)}, {"message", v.message}});
    out << Json{{"violations", j}}.dump(2) << "\n";
  } else {
    out << bad.size() << " violations\n";
    for (const auto& v : bad) out << to_string(v.kind) << ": " << v.message << "\n";
  }
  return bad.empty() ? kOk : kFailed;
}

}  // namespace detail

/// Runs one command. Results go to `out`, diagnostics to `err`.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    std::optional<GameGraph> g;
    if (!cfg.graph_path.empty()) {
      try {
        g = read_edge_list(cfg.graph_path);
      } catch (const ParseError& e) {
        throw ParseError(cfg.graph_path + ": " + e.what());
      }
    } else if (cfg.command != Command::Check) {
      throw ParseError("missing graph file");
    }
    switch (cfg.command) {
      case Command::Analyze: return detail::analyze(*g, cfg, out);
      case Command::Predict: return detail::predict_cmd(*g, cfg, out);
      case Command::Simulate: return detail::simulate_cmd(*g, cfg, out);
      case Command::Reduce: return detail::reduce_cmd(*g, cfg, out);
      case Command::Strategy: return detail::strategy_cmd(*g, cfg, out);
      case Command::Check: return detail::check_cmd(g ? &*g : nullptr, cfg, out);
      case Command::Validate: return detail::validate_cmd(*g, cfg, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const PlacementError& e) {
    err << "error: " << e.what() << "\n";
    return kPlacement;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  }
  return kOk;
}

/// Parses argv into `cfg`. Returns an exit code if the program should stop
/// (help, or a command-line error), nullopt to go on and run.
inline std::optional<int> parse_args(int argc, const char* const* argv, RunConfig& cfg,
                                     std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge-guessing game analysis"};
  app.require_subcommand(1);

  std::string mode = "simultaneous", starter = "A", format, convention = "tail";
  std::string a, b, anchor;
  auto common = [&](CLI::App* sub, bool graph_required) {
    auto* gopt = sub->add_option("graph", cfg.graph_path, "edge-list file");
    if (graph_required) gopt->required();
    sub->add_option("--mode", mode, "simultaneous|alternating")
        ->check(CLI::IsMember({"simultaneous", "alternating"}));
    sub->add_option("--starter", starter, "A|B")->check(CLI::IsMember({"A", "B"}));
    sub->add_option("--a", a, "vertex of player A");
    sub->add_option("--b", b, "vertex of player B");
    sub->add_option("--anchor", anchor, "a vertex in A's class (alternating)");
    sub->add_option("--format", format, "json|dot|text")->check(CLI::IsMember({"json", "dot", "text"}));
    sub->add_option("--convention", convention, "tail|head")->check(CLI::IsMember({"tail", "head"}));
  };

  struct Sub {
    const char* name;
    const char* help;
    Command command;
    bool graph_required;
  };
  const Sub subs[] = {
      {"analyze", "cut-leaves labeling of a tree", Command::Analyze, true},
      {"predict", "who guesses first, when, and whether the partner follows", Command::Predict, true},
      {"simulate", "possible-worlds simulation of one placement", Command::Simulate, true},
      {"reduce", "vertex-split form of a directed graph", Command::Reduce, true},
      {"strategy", "pre-agreed labeling in which both players learn", Command::Strategy, true},
      {"check", "cross-validate simulation, predictor and labeling", Command::Check, false},
      {"validate", "check a labeling JSON file against a tree", Command::Validate, true},
  };
  std::vector<std::pair<CLI::App*, Command>> apps;
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    common(sub, s.graph_required);
    if (s.command == Command::Simulate) sub->add_flag("--trace", cfg.trace, "emit every step (JSON lines)");
    if (s.command == Command::Check) {
      sub->add_option("--max-n", cfg.max_n, "largest tree size to enumerate")->check(CLI::Range(2, 10));
    }
    if (s.command == Command::Strategy) sub->add_option("--phi", cfg.phi_path, "edge order file");
    if (s.command == Command::Validate) {
      sub->add_option("--labeling", cfg.labeling_path, "labeling JSON")->required();
    }
    apps.emplace_back(sub, s.command);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }
  for (const auto& [sub, command] : apps) {
    if (sub->parsed()) cfg.command = command;
  }
  const Player st = starter == "B" ? Player::B : Player::A;
  cfg.mode = mode == "alternating" ? SpeechMode::alternating(st) : SpeechMode::simultaneous();
  if (!a.empty()) cfg.a = a;
  if (!b.empty()) cfg.b = b;
  if (!anchor.empty()) cfg.anchor = anchor;
  if (format == "json") cfg.format = Format::Json;
  if (format == "dot") cfg.format = Format::Dot;
  if (format == "text") cfg.format = Format::Text;
  cfg.convention = convention == "head" ? Convention::Head : Convention::Tail;
  return std::nullopt;
}

inline int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (auto stop = parse_args(argc, argv, cfg, out, err)) return *stop;
  return run(cfg, out, err);
}

}  // namespace edgeguess::cli
