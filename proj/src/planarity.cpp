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

// Planarity by the Demoucron-Malgrange-Pertuiset face-insertion method on
// each biconnected block. Planar graphs come back with a genus-0 rotation
// system; nonplanar ones are shrunk to a minimal nonplanar subgraph whose
// degree-2 vertices are then contracted away, leaving K5 or K3,3.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "duality/error.hpp"
#include "duality/graph.hpp"

namespace duality {
namespace {

// Facial cycles of a simple biconnected graph on vertices 0..n-1 (n >= 3),
// or nullopt when some fragment fits no face.
std::optional<std::vector<std::vector<int>>> FacesOfBiconnected(
    int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  // Initial cycle from the first back edge of a DFS.
  std::vector<int> parent(n, -1), depth(n, -1);
  std::vector<int> cycle;
  {
    std::vector<int> stack = {0};
    depth[0] = 0;
    std::vector<std::size_t> cursor(n, 0);
    while (!stack.empty() && cycle.empty()) {
      int u = stack.back();
      if (cursor[u] == adj[u].size()) {
        stack.pop_back();
        continue;
      }
      int w = adj[u][cursor[u]++];
      if (depth[w] < 0) {
        depth[w] = depth[u] + 1;
        parent[w] = u;
        stack.push_back(w);
      } else if (w != parent[u] && depth[w] < depth[u]) {
        for (int x = u; x != w; x = parent[x]) cycle.push_back(x);
        cycle.push_back(w);
      }
    }
  }
  std::vector<bool> placed_vertex(n, false);
  std::set<std::pair<int, int>> placed_edges;
  auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    placed_vertex[cycle[i]] = true;
    placed_edges.insert(key(cycle[i], cycle[(i + 1) % cycle.size()]));
  }
  std::vector<std::vector<int>> faces = {cycle,
                                         std::vector<int>(cycle.rbegin(), cycle.rend())};

  struct Fragment {
    std::vector<int> attachments;  // sorted
    std::vector<int> interior;     // unplaced vertices (empty for a chord)
  };

  while (placed_edges.size() < edges.size()) {
    std::vector<Fragment> fragments;
    for (const Edge& e : edges) {
      if (placed_vertex[e.u] && placed_vertex[e.v] && !placed_edges.count(key(e.u, e.v))) {
        fragments.push_back({{std::min(e.u, e.v), std::max(e.u, e.v)}, {}});
      }
    }
    std::vector<int> comp(n, -1);
    for (int s = 0; s < n; ++s) {
      if (placed_vertex[s] || comp[s] >= 0) continue;
      Fragment f;
      std::set<int> attach;
      std::vector<int> stack = {s};
      comp[s] = s;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        f.interior.push_back(u);
        for (int w : adj[u]) {
          if (placed_vertex[w]) {
            attach.insert(w);
          } else if (comp[w] < 0) {
            comp[w] = s;
            stack.push_back(w);
          }
        }
      }
      f.attachments.assign(attach.begin(), attach.end());
      fragments.push_back(std::move(f));
    }

    int chosen = -1, chosen_face = -1;
    for (std::size_t i = 0; i < fragments.size(); ++i) {
      int count = 0, first = -1;
      for (std::size_t fi = 0; fi < faces.size(); ++fi) {
        const auto& face = faces[fi];
        bool all = std::all_of(
            fragments[i].attachments.begin(), fragments[i].attachments.end(),
            [&](int a) { return std::find(face.begin(), face.end(), a) != face.end(); });
        if (all) {
          ++count;
          if (first < 0) first = static_cast<int>(fi);
        }
      }
      if (count == 0) return std::nullopt;
      if (count == 1) {
        chosen = static_cast<int>(i);
        chosen_face = first;
        break;
      }
      if (chosen < 0) {
        chosen = static_cast<int>(i);
        chosen_face = first;
      }
    }

    // Path between two attachments through the chosen fragment.
    const Fragment& frag = fragments[chosen];
    std::vector<int> path;  // a, interior..., b
    if (frag.interior.empty()) {
      path = frag.attachments;
    } else {
      const int a = frag.attachments.front();
      std::set<int> inside(frag.interior.begin(), frag.interior.end());
      std::map<int, int> from;
      std::vector<int> queue;
      for (int w : adj[a]) {
        if (inside.count(w) && !from.count(w)) {
          from[w] = a;
          queue.push_back(w);
        }
      }
      int end_inner = -1, b = -1;
      for (std::size_t qi = 0; qi < queue.size() && b < 0; ++qi) {
        int u = queue[qi];
        for (int w : adj[u]) {
          if (placed_vertex[w] && w != a) {
            end_inner = u;
            b = w;
            break;
          }
          if (inside.count(w) && !from.count(w)) {
            from[w] = u;
            queue.push_back(w);
          }
        }
      }
      std::vector<int> rev = {b};
      for (int x = end_inner; x != a; x = from[x]) rev.push_back(x);
      rev.push_back(a);
      path.assign(rev.rbegin(), rev.rend());
    }

    const std::vector<int> face = faces[chosen_face];
    const int a = path.front(), b = path.back();
    const std::size_t k = face.size();
    const std::size_t i = std::find(face.begin(), face.end(), a) - face.begin();
    const std::size_t j = std::find(face.begin(), face.end(), b) - face.begin();
    std::vector<int> f1, f2;
    for (std::size_t x = i;; x = (x + 1) % k) {
      f1.push_back(face[x]);
      if (x == j) break;
    }
    for (std::size_t x = path.size() - 2; x >= 1; --x) f1.push_back(path[x]);
    for (std::size_t x = j;; x = (x + 1) % k) {
      f2.push_back(face[x]);
      if (x == i) break;
    }
    for (std::size_t x = 1; x + 1 < path.size(); ++x) f2.push_back(path[x]);
    faces[chosen_face] = std::move(f1);
    faces.push_back(std::move(f2));
    for (std::size_t x = 0; x + 1 < path.size(); ++x) {
      placed_vertex[path[x]] = true;
      placed_edges.insert(key(path[x], path[x + 1]));
    }
    placed_vertex[b] = true;
  }
  return faces;
}

struct Simplified {
  Multigraph graph;               // simple, no loops
  std::vector<int> original;      // simple edge -> original edge
  std::vector<int> extra;         // loops and parallel copies, original ids
};

Simplified Simplify(const Multigraph& g) {
  Simplified s;
  std::map<std::pair<int, int>, int> seen;
  std::vector<Edge> edges;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (edge.is_loop()) {
      s.extra.push_back(e);
      continue;
    }
    auto k = std::make_pair(std::min(edge.u, edge.v), std::max(edge.u, edge.v));
    if (seen.count(k)) {
      s.extra.push_back(e);
      continue;
    }
    seen[k] = static_cast<int>(edges.size());
    edges.push_back(edge);
    s.original.push_back(e);
  }
  s.graph = Multigraph(g.vertex_count(), std::move(edges));
  return s;
}

// Genus-0 rotation of a simple graph, darts in its own edge numbering.
std::optional<std::vector<std::vector<int>>> SimpleRotation(const Multigraph& g) {
  std::vector<std::vector<int>> rotation(g.vertex_count());
  for (const Block& block : blocks(g)) {
    std::vector<std::vector<int>> local(block.graph.vertex_count());
    if (block.graph.vertex_count() == 2) {
      local[0] = {make_dart(0, true)};
      local[1] = {make_dart(0, false)};
    } else {
      auto faces = FacesOfBiconnected(block.graph.vertex_count(), block.graph.edges());
      if (!faces) return std::nullopt;
      local = embedding_from_faces(block.graph, *faces).rotation();
    }
    for (std::size_t v = 0; v < local.size(); ++v) {
      auto& target = rotation[block.vertex_ids[v]];
      for (int d : local[v]) {
        target.push_back(make_dart(block.edge_ids[dart_edge(d)], (d & 1) == 0));
      }
    }
  }
  return rotation;
}

}  // namespace

std::optional<Embedding> planar_embedding(const Multigraph& g) {
  Simplified s = Simplify(g);
  auto simple = SimpleRotation(s.graph);
  if (!simple) return std::nullopt;

  // Lift to original edge ids. Simple edges keep the original orientation.
  std::vector<std::vector<int>> rotation(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int d : (*simple)[v]) {
      rotation[v].push_back(make_dart(s.original[dart_edge(d)], (d & 1) == 0));
    }
  }
  std::map<std::pair<int, int>, int> representative;
  for (std::size_t i = 0; i < s.original.size(); ++i) {
    const Edge& e = g.edge(s.original[i]);
    representative[{std::min(e.u, e.v), std::max(e.u, e.v)}] = s.original[i];
  }
  for (int x : s.extra) {
    const Edge& e = g.edge(x);
    if (e.is_loop()) {
      rotation[e.u].push_back(make_dart(x, true));
      rotation[e.u].push_back(make_dart(x, false));
      continue;
    }
    // A parallel copy goes right after its representative at one end and
    // right before it at the other, bounding a new digon face.
    int rep = representative[{std::min(e.u, e.v), std::max(e.u, e.v)}];
    const Edge& r = g.edge(rep);
    int rep_at_u = make_dart(rep, true);
    int rep_at_v = make_dart(rep, false);
    int copy_at_u = make_dart(x, e.u == r.u);
    int copy_at_v = make_dart(x, e.u != r.u);
    auto& ru = rotation[r.u];
    ru.insert(std::find(ru.begin(), ru.end(), rep_at_u) + 1, copy_at_u);
    auto& rv = rotation[r.v];
    rv.insert(std::find(rv.begin(), rv.end(), rep_at_v), copy_at_v);
  }
  return Embedding(g, std::move(rotation));
}

Multigraph apply_graph_minor(const Multigraph& g, const std::vector<int>& deletions,
                             const std::vector<int>& contractions) {
  std::vector<bool> removed(g.edge_count(), false);
  for (int e : deletions) {
    if (e < 0 || e >= g.edge_count()) {
      throw Error(ErrorKind::EndpointOutOfRange, "no edge " + std::to_string(e));
    }
    removed[e] = true;
  }
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e : contractions) {
    if (e < 0 || e >= g.edge_count() || removed[e]) {
      throw Error(ErrorKind::OverlappingSets,
                  "edge " + std::to_string(e) + " cannot be contracted");
    }
    removed[e] = true;
    int a = find(g.edge(e).u), b = find(g.edge(e).v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::pair<int, int>> kept;
  std::vector<int> used;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (removed[e]) continue;
    int a = find(g.edge(e).u), b = find(g.edge(e).v);
    kept.emplace_back(a, b);
    used.push_back(a);
    used.push_back(b);
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  auto index = [&](int v) {
    return static_cast<int>(std::lower_bound(used.begin(), used.end(), v) - used.begin());
  };
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : kept) edges.emplace_back(index(a), index(b));
  return make_graph(std::max<int>(1, static_cast<int>(used.size())), edges);
}

bool is_k5(const Multigraph& g) {
  if (g.vertex_count() != 5 || g.edge_count() != 10) return false;
  std::set<std::pair<int, int>> pairs;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) return false;
    pairs.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  return pairs.size() == 10;
}

bool is_k33(const Multigraph& g) {
  if (g.vertex_count() != 6 || g.edge_count() != 9) return false;
  std::set<std::pair<int, int>> pairs;
  std::vector<int> side(6, -1);
  auto inc = g.incidence();
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) return false;
    pairs.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  if (pairs.size() != 9) return false;
  side[0] = 0;
  std::vector<int> queue = {0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int u = queue[i];
    for (int e : inc[u]) {
      int w = g.edge(e).u == u ? g.edge(e).v : g.edge(e).u;
      if (side[w] < 0) {
        side[w] = 1 - side[u];
        queue.push_back(w);
      } else if (side[w] == side[u]) {
        return false;
      }
    }
  }
  return std::count(side.begin(), side.end(), 0) == 3 &&
         std::count(side.begin(), side.end(), 1) == 3;
}

PlanarityResult is_planar(const Multigraph& g, int edge_bound) {
  if (g.edge_count() > edge_bound) {
    throw Error(ErrorKind::TooLarge, std::to_string(g.edge_count()) +
                                         " edges exceed the planarity bound " +
                                         std::to_string(edge_bound));
  }
  PlanarityResult result;
  result.embedding = planar_embedding(g);
  result.planar = result.embedding.has_value();
  if (result.planar) return result;

  // Shrink to a minimal nonplanar subgraph of the simplified graph.
  Simplified s = Simplify(g);
  std::vector<bool> keep(s.graph.edge_count(), true);
  auto subgraph = [&](const std::vector<bool>& mask) {
    std::vector<Edge> edges;
    for (int e = 0; e < s.graph.edge_count(); ++e) {
      if (mask[e]) edges.push_back(s.graph.edge(e));
    }
    return Multigraph(s.graph.vertex_count(), std::move(edges));
  };
  for (int e = 0; e < s.graph.edge_count(); ++e) {
    keep[e] = false;
    if (SimpleRotation(subgraph(keep))) keep[e] = true;
  }

  KuratowskiWitness w;
  w.deletions = s.extra;
  for (int e = 0; e < s.graph.edge_count(); ++e) {
    if (!keep[e]) w.deletions.push_back(s.original[e]);
  }
  // Contract subdivision vertices: any vertex of degree 2 in what remains.
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> alive = keep;
  for (bool changed = true; changed;) {
    changed = false;
    std::map<int, std::vector<int>> incident;
    for (int e = 0; e < s.graph.edge_count(); ++e) {
      if (!alive[e]) continue;
      incident[find(s.graph.edge(e).u)].push_back(e);
      incident[find(s.graph.edge(e).v)].push_back(e);
    }
    for (const auto& [v, list] : incident) {
      if (list.size() != 2) continue;
      int e = std::min(list[0], list[1]);
      alive[e] = false;
      w.contractions.push_back(s.original[e]);
      int a = find(s.graph.edge(e).u), b = find(s.graph.edge(e).v);
      parent[std::max(a, b)] = std::min(a, b);
      changed = true;
      break;
    }
  }
  std::sort(w.deletions.begin(), w.deletions.end());
  std::sort(w.contractions.begin(), w.contractions.end());
  Multigraph reduced = apply_graph_minor(g, w.deletions, w.contractions);
  if (is_k5(reduced)) {
    w.target = "K5";
  } else if (is_k33(reduced)) {
    w.target = "K3,3";
  } else {
    throw Error(ErrorKind::NonPlanarEmbedding,
                "internal: minimal nonplanar subgraph did not reduce to K5 or K3,3");
  }
  result.witness = std::move(w);
  return result;
}

}  // namespace duality
