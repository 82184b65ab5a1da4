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

// Exhaustive graph families for cross-validation: labeled trees via Pruefer
// sequences, labeled connected graphs, and directed graphs up to isomorphism.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "edgeguess/error.hpp"
#include "edgeguess/graph.hpp"

namespace edgeguess {

inline std::string vertex_label(int i) { return "v" + std::to_string(i + 1); }

/// Tree on v1..vn with the given Pruefer sequence (entries 0-based).
inline GameGraph tree_from_pruefer(std::span<const int> seq, int n) {
  if (n < 2 || seq.size() != static_cast<std::size_t>(n - 2)) {
    throw PreconditionError("tree_from_pruefer: sequence length must be n - 2");
  }
  GameGraph g(false);
  for (int i = 0; i < n; ++i) g.add_vertex(vertex_label(i));
  std::vector<int> degree(n, 1);
  for (int x : seq) {
    if (x < 0 || x >= n) throw PreconditionError("tree_from_pruefer: entry out of range");
    ++degree[x];
  }
  for (int x : seq) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    g.add_edge(leaf, x);
    --degree[leaf];
    --degree[x];
  }
  int u = -1, v = -1;
  for (int i = 0; i < n; ++i) {
    if (degree[i] == 1) (u < 0 ? u : v) = i;
  }
  g.add_edge(u, v);
  return g;
}

/// Calls f(tree) for each of the n^(n-2) labeled trees on n >= 2 vertices.
template <class F>
void for_each_labeled_tree(int n, F&& f) {
  if (n < 2) return;
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  for (;;) {
    f(tree_from_pruefer(seq, n));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) return;
  }
}

/// Calls f(graph) for every connected labeled simple graph on n vertices
/// (n <= 8).
template <class F>
void for_each_connected_graph(int n, F&& f) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<std::uint32_t> adj(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::fill(adj.begin(), adj.end(), 0u);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1) {
        adj[pairs[i].first] |= 1u << pairs[i].second;
        adj[pairs[i].second] |= 1u << pairs[i].first;
      }
    }
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      for (int v = 0; v < n; ++v) {
        if (frontier >> v & 1) next |= adj[v];
      }
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen != (n == 32 ? ~0u : (1u << n) - 1)) continue;
    GameGraph g(false);
    for (int i = 0; i < n; ++i) g.add_vertex(vertex_label(i));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
    }
    f(g);
  }
}

/// Directed graph on at most 8 vertices as a bit matrix: bit 8*u + v is the
/// arc u -> v.
using DigraphCode = std::uint64_t;

inline bool has_arc(DigraphCode c, int u, int v) { return (c >> (8 * u + v)) & 1; }
inline DigraphCode with_arc(DigraphCode c, int u, int v) {
  return c | (DigraphCode{1} << (8 * u + v));
}

inline GameGraph digraph_from_code(DigraphCode c, int n) {
  GameGraph g(true);
  for (int i = 0; i < n; ++i) g.add_vertex(vertex_label(i));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (has_arc(c, u, v)) g.add_edge(u, v);
    }
  }
  return g;
}

namespace detail {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace detail

/// Canonical form: the smallest code over all vertex orders that sort the
/// vertices by a refined degree invariant. Isomorphic digraphs get equal codes.
inline DigraphCode canonical_digraph(DigraphCode c, int n) {
  std::vector<std::uint64_t> inv(n), refined(n);
  for (int v = 0; v < n; ++v) {
    int out = 0, in = 0, mutual = 0;
    for (int w = 0; w < n; ++w) {
      out += has_arc(c, v, w);
      in += has_arc(c, w, v);
      mutual += has_arc(c, v, w) && has_arc(c, w, v);
    }
    inv[v] = static_cast<std::uint64_t>(out * 64 + in * 8 + mutual);
  }
  for (int v = 0; v < n; ++v) {
    std::vector<std::uint64_t> outs, ins;
    for (int w = 0; w < n; ++w) {
      if (has_arc(c, v, w)) outs.push_back(inv[w]);
      if (has_arc(c, w, v)) ins.push_back(inv[w]);
    }
    std::sort(outs.begin(), outs.end());
    std::sort(ins.begin(), ins.end());
    std::uint64_t h = inv[v];
    for (auto x : outs) h = detail::mix(h, x);
    h = detail::mix(h, 0xffff);
    for (auto x : ins) h = detail::mix(h, x);
    refined[v] = h;
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return refined[x] < refined[y]; });
  // cells of equal invariant; permute within each cell
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && refined[order[j]] == refined[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  DigraphCode best = ~DigraphCode{0};
  auto encode = [&]() {
    DigraphCode code = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (has_arc(c, order[i], order[j])) code = with_arc(code, i, j);
      }
    }
    best = std::min(best, code);
  };
  auto recurse = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells.size()) {
      encode();
      return;
    }
    auto first = order.begin() + cells[cell].first;
    auto last = order.begin() + cells[cell].second;
    std::sort(first, last);
    do {
      self(self, cell + 1);
    } while (std::next_permutation(first, last));
  };
  recurse(recurse, 0);
  return best;
}

/// One representative per isomorphism class of simple directed graphs on
/// exactly n vertices (loops excluded, opposite arcs allowed), n <= 6.
/// Counts: 1, 3, 16, 218, 9608, 1540944.
inline std::vector<DigraphCode> digraph_classes(int n) {
  if (n < 1 || n > 6) throw PreconditionError("digraph_classes: n must be in 1..6");
  std::vector<DigraphCode> reps{0};
  for (int k = 2; k <= n; ++k) {
    std::vector<DigraphCode> next;
    const int fresh = k - 1;
    const std::uint32_t patterns = 1u << (2 * fresh);
    next.reserve(reps.size() * patterns);
    for (DigraphCode base : reps) {
      for (std::uint32_t m = 0; m < patterns; ++m) {
        DigraphCode c = base;
        for (int v = 0; v < fresh; ++v) {
          if (m >> v & 1) c = with_arc(c, fresh, v);
          if (m >> (fresh + v) & 1) c = with_arc(c, v, fresh);
        }
        next.push_back(canonical_digraph(c, k));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    reps = std::move(next);
  }
  return reps;
}

}  // namespace edgeguess
