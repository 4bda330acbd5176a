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

#include "duality/generators.hpp"

#include <algorithm>

#include "duality/algebra.hpp"

namespace duality {
namespace {

using Rotation = std::vector<std::vector<int>>;

void InsertBefore(std::vector<int>& rot, int anchor, int dart) {
  rot.insert(std::find(rot.begin(), rot.end(), anchor), dart);
}

// Darts of the face containing `dart`, from a fresh face walk.
std::vector<int> FaceOf(const Embedding& emb, int dart) {
  std::vector<int> face{dart};
  for (int d = emb.next_along_face(dart); d != dart; d = emb.next_along_face(d)) {
    face.push_back(d);
  }
  return face;
}

}  // namespace

int random_int(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Embedding random_planar_embedding(Rng& rng, int max_vertices, int max_edges) {
  const int vertices = random_int(rng, 1, max_vertices);
  const int chords = random_int(rng, 0, std::max(0, max_edges - (vertices - 1)));
  std::vector<Edge> edges;
  Rotation rot(1);
  Embedding emb(Multigraph(1, {}), rot);

  for (int v = 1; v < vertices; ++v) {
    const int e = static_cast<int>(edges.size());
    const int u = random_int(rng, 0, v - 1);
    edges.push_back({u, v});
    if (rot[u].empty()) {
      rot[u].push_back(make_dart(e, true));
    } else {
      const int anchor = rot[u][random_int(rng, 0, static_cast<int>(rot[u].size()) - 1)];
      InsertBefore(rot[u], anchor, make_dart(e, true));
    }
    rot.push_back({make_dart(e, false)});
    emb = Embedding(Multigraph(v + 1, edges), rot);
  }
  for (int c = 0; c < chords; ++c) {
    const int e = static_cast<int>(edges.size());
    const int x = make_dart(e, true), y = make_dart(e, false);
    if (edges.empty()) {
      edges.push_back({0, 0});
      rot[0] = {x, y};
    } else {
      const int d1 = random_int(rng, 0, 2 * e - 1);
      const auto face = FaceOf(emb, d1);
      const int d2 = face[random_int(rng, 0, static_cast<int>(face.size()) - 1)];
      const int u = dart_origin(emb.graph(), d1), w = dart_origin(emb.graph(), d2);
      edges.push_back({u, w});
      if (d1 == d2) {
        // loop inside a single corner: x, y, d1
        InsertBefore(rot[u], d1, x);
        InsertBefore(rot[u], d1, y);
      } else {
        InsertBefore(rot[u], d1, x);
        InsertBefore(rot[w], d2, y);
      }
    }
    emb = Embedding(Multigraph(vertices, edges), rot);
  }
  return emb;
}

Embedding disjoint_union(const std::vector<Embedding>& parts) {
  std::vector<Edge> edges;
  Rotation rot;
  int vertex_offset = 0;
  for (const Embedding& p : parts) {
    const int dart_offset = 2 * static_cast<int>(edges.size());
    for (const Edge& e : p.graph().edges()) {
      edges.push_back({e.u + vertex_offset, e.v + vertex_offset});
    }
    for (const auto& r : p.rotation()) {
      std::vector<int> shifted;
      for (int d : r) shifted.push_back(d + dart_offset);
      rot.push_back(std::move(shifted));
    }
    vertex_offset += p.graph().vertex_count();
  }
  return Embedding(Multigraph(vertex_offset, std::move(edges)), std::move(rot));
}

Embedding random_cellular_embedding(Rng& rng, int max_vertices, int max_genus) {
  const int vertices = random_int(rng, 1, max_vertices);
  // genus <= (E - V + 1) / 2
  const int extra = random_int(rng, 0, 2 * max_genus + 1);
  std::vector<Edge> edges;
  for (int v = 1; v < vertices; ++v) edges.push_back({random_int(rng, 0, v - 1), v});
  for (int i = 0; i < extra; ++i) {
    edges.push_back({random_int(rng, 0, vertices - 1), random_int(rng, 0, vertices - 1)});
  }
  Multigraph g(vertices, edges);
  Rotation rot(vertices);
  for (int e = 0; e < g.edge_count(); ++e) {
    rot[edges[e].u].push_back(make_dart(e, true));
    rot[edges[e].v].push_back(make_dart(e, false));
  }
  for (auto& r : rot) std::shuffle(r.begin(), r.end(), rng);
  return Embedding(std::move(g), std::move(rot));
}

Multigraph random_multigraph(Rng& rng, int max_vertices, int max_edges) {
  const int vertices = random_int(rng, 1, max_vertices);
  const int count = random_int(rng, 1, max_edges);
  std::vector<Edge> edges;
  for (int i = 0; i < count; ++i) {
    edges.push_back({random_int(rng, 0, vertices - 1), random_int(rng, 0, vertices - 1)});
  }
  return Multigraph(vertices, std::move(edges));
}

SimplicialComplex random_complex(Rng& rng, int max_vertices) {
  const int vertices = random_int(rng, 1, max_vertices);
  const int count = random_int(rng, 1, 6);
  std::vector<Simplex> maximal;
  for (int i = 0; i < count; ++i) {
    const int size = random_int(rng, 1, std::min(4, vertices));
    std::vector<int> pool(vertices);
    for (int v = 0; v < vertices; ++v) pool[v] = v;
    std::shuffle(pool.begin(), pool.end(), rng);
    Simplex s(pool.begin(), pool.begin() + size);
    std::sort(s.begin(), s.end());
    maximal.push_back(std::move(s));
  }
  return SimplicialComplex::make(maximal);
}

std::vector<Vector> random_configuration(Rng& rng, int max_points, int max_rank) {
  while (true) {
    const int r = random_int(rng, 1, max_rank);
    const int n = random_int(rng, r, max_points);
    std::vector<Vector> points(n, Vector(r));
    for (auto& p : points) {
      for (auto& c : p) c = Rational(random_int(rng, -3, 3), random_int(rng, 1, 3));
    }
    bool nonzero = false;
    for (const auto& subset : k_subsets(n, r)) {
      RationalMatrix m(r, Vector(r));
      for (int col = 0; col < r; ++col) {
        for (int row = 0; row < r; ++row) m[row][col] = points[subset[col] - 1][row];
      }
      if (determinant(std::move(m)) != 0) {
        nonzero = true;
        break;
      }
    }
    if (nonzero) return points;
  }
}

}  // namespace duality
