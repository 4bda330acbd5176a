// Copyright 2026 The Authors.
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

// Brute-force references shared by the graph tests. Deliberately naive:
// nothing here goes through the library's own face or planarity code.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "duality/generators.hpp"
#include "duality/graph.hpp"

namespace oracle {

using duality::Edge;
using duality::Multigraph;

// Face count straight from the rotation lists; an isolated vertex is a
// sphere with one face.
inline int FaceCount(const Multigraph& g, const std::vector<std::vector<int>>& rot) {
  std::vector<int> succ(2 * g.edge_count(), -1);
  for (const auto& r : rot) {
    for (std::size_t i = 0; i < r.size(); ++i) succ[r[i]] = r[(i + 1) % r.size()];
  }
  std::vector<bool> seen(succ.size(), false);
  int faces = static_cast<int>(
      std::count_if(rot.begin(), rot.end(), [](const auto& r) { return r.empty(); }));
  for (std::size_t d = 0; d < succ.size(); ++d) {
    if (seen[d]) continue;
    ++faces;
    for (int x = static_cast<int>(d); !seen[x]; x = succ[x ^ 1]) seen[x] = true;
  }
  return faces;
}

// Some rotation system of a connected graph has genus 0: exhaustive.
inline bool Planar(const Multigraph& g) {
  std::vector<std::vector<int>> rot(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    rot[g.edge(e).u].push_back(2 * e);
    rot[g.edge(e).v].push_back(2 * e + 1);
  }
  for (auto& r : rot) std::sort(r.begin(), r.end());
  const int target = 2 - g.vertex_count() + g.edge_count();
  // odometer over permutations that keep each list's first entry fixed
  while (true) {
    if (FaceCount(g, rot) == target) return true;
    std::size_t v = 0;
    for (; v < rot.size(); ++v) {
      if (rot[v].size() > 2 && std::next_permutation(rot[v].begin() + 1, rot[v].end())) break;
    }
    if (v == rot.size()) return false;
  }
}

inline bool LooksLikeK5(const Multigraph& g) {
  if (g.vertex_count() != 5 || g.edge_count() != 10) return false;
  std::set<std::pair<int, int>> pairs;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) return false;
    pairs.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  return pairs.size() == 10;
}

inline bool LooksLikeK33(const Multigraph& g) {
  if (g.vertex_count() != 6 || g.edge_count() != 9) return false;
  std::vector<int> side(6, -1);
  side[0] = 0;
  for (int round = 0; round < 6; ++round) {
    for (const Edge& e : g.edges()) {
      if (side[e.u] >= 0 && side[e.v] < 0) side[e.v] = 1 - side[e.u];
      if (side[e.v] >= 0 && side[e.u] < 0) side[e.u] = 1 - side[e.v];
    }
  }
  std::set<std::pair<int, int>> pairs;
  for (const Edge& e : g.edges()) {
    if (side[e.u] < 0 || side[e.u] == side[e.v]) return false;
    pairs.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  return pairs.size() == 9 && std::count(side.begin(), side.end(), 0) == 3;
}

inline Multigraph RandomSimpleConnected(duality::Rng& rng, int max_v, int max_e) {
  const int n = duality::random_int(rng, 2, max_v);
  std::set<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.insert({duality::random_int(rng, 0, v - 1), v});
  const int want = duality::random_int(rng, n - 1, std::min(max_e, n * (n - 1) / 2));
  while (static_cast<int>(edges.size()) < want) {
    int a = duality::random_int(rng, 0, n - 1), b = duality::random_int(rng, 0, n - 1);
    if (a != b) edges.insert({std::min(a, b), std::max(a, b)});
  }
  return duality::make_graph(n, std::vector<std::pair<int, int>>(edges.begin(), edges.end()));
}

}  // namespace oracle
