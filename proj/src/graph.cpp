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

#include "duality/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>

#include "duality/error.hpp"

namespace duality {
namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int Find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool Unite(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count < 1) {
    throw Error(ErrorKind::BadParams, "a graph needs at least one vertex");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count) {
      throw Error(ErrorKind::EndpointOutOfRange,
                  "edge " + std::to_string(i) + " = (" + std::to_string(e.u) +
                      "," + std::to_string(e.v) + ") with " +
                      std::to_string(vertex_count) + " vertices");
    }
  }
}

std::vector<std::vector<int>> Multigraph::incidence() const {
  std::vector<std::vector<int>> inc(vertex_count_);
  for (int i = 0; i < edge_count(); ++i) {
    inc[edges_[i].u].push_back(i);
    inc[edges_[i].v].push_back(i);
  }
  return inc;
}

Multigraph make_graph(int vertex_count,
                      const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [u, v] : edges) list.push_back({u, v});
  return Multigraph(vertex_count, std::move(list));
}

int dart_origin(const Multigraph& g, int dart) {
  const Edge& e = g.edge(dart_edge(dart));
  return (dart & 1) ? e.v : e.u;
}

int dart_head(const Multigraph& g, int dart) {
  return dart_origin(g, dart_reverse(dart));
}

Embedding::Embedding(Multigraph graph, std::vector<std::vector<int>> rotation)
    : graph_(std::move(graph)), rotation_(std::move(rotation)) {
  const int darts = 2 * graph_.edge_count();
  if (static_cast<int>(rotation_.size()) != graph_.vertex_count()) {
    throw Error(ErrorKind::InvalidEmbedding,
                "rotation must list every vertex (" +
                    std::to_string(graph_.vertex_count()) + ")");
  }
  next_.assign(darts, -1);
  std::vector<bool> seen(darts, false);
  for (int v = 0; v < graph_.vertex_count(); ++v) {
    const auto& cycle = rotation_[v];
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int d = cycle[i];
      if (d < 0 || d >= darts) {
        throw Error(ErrorKind::InvalidEmbedding,
                    "dart " + std::to_string(d) + " out of range at vertex " +
                        std::to_string(v));
      }
      if (seen[d]) {
        throw Error(ErrorKind::InvalidEmbedding,
                    "edge-end of edge " + std::to_string(dart_edge(d)) +
                        " listed twice");
      }
      if (dart_origin(graph_, d) != v) {
        throw Error(ErrorKind::InvalidEmbedding,
                    "edge-end of edge " + std::to_string(dart_edge(d)) +
                        " does not sit at vertex " + std::to_string(v));
      }
      seen[d] = true;
      next_[d] = cycle[(i + 1) % cycle.size()];
    }
  }
  for (int d = 0; d < darts; ++d) {
    if (!seen[d]) {
      throw Error(ErrorKind::InvalidEmbedding,
                  "edge-end of edge " + std::to_string(dart_edge(d)) +
                      " missing from the rotation");
    }
  }
}

std::vector<int> component_ids(const Multigraph& g, int* count) {
  UnionFind uf(g.vertex_count());
  for (const Edge& e : g.edges()) uf.Unite(e.u, e.v);
  std::vector<int> id(g.vertex_count(), -1);
  std::vector<int> root_id(g.vertex_count(), -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int r = uf.Find(v);
    if (root_id[r] < 0) root_id[r] = next++;
    id[v] = root_id[r];
  }
  if (count) *count = next;
  return id;
}

GraphInvariants graph_invariants(const Multigraph& g) {
  GraphInvariants inv;
  component_ids(g, &inv.components);
  inv.rank = g.vertex_count() - inv.components;
  inv.nullity = g.edge_count() - inv.rank;
  return inv;
}

FaceTrace trace_faces(const Embedding& emb) {
  const Multigraph& g = emb.graph();
  FaceTrace t;
  t.vertices = g.vertex_count();
  t.edges = g.edge_count();
  const std::vector<int> comp = component_ids(g, &t.components);
  t.per_component.assign(t.components, {});
  for (int v = 0; v < g.vertex_count(); ++v) ++t.per_component[comp[v]].vertices;
  for (const Edge& e : g.edges()) ++t.per_component[comp[e.u]].edges;

  const int darts = 2 * g.edge_count();
  t.face_of_dart.assign(darts, -1);
  for (int start = 0; start < darts; ++start) {
    if (t.face_of_dart[start] >= 0) continue;
    const int id = static_cast<int>(t.faces.size());
    std::vector<int> face;
    int d = start;
    do {
      if (t.face_of_dart[d] >= 0) {
        throw Error(ErrorKind::NonCellular, "face tracing revisited a dart");
      }
      t.face_of_dart[d] = id;
      face.push_back(d);
      d = emb.next_along_face(d);
    } while (d != start);
    ++t.per_component[comp[dart_origin(g, start)]].faces;
    t.faces.push_back(std::move(face));
  }
  for (int c = 0; c < t.components; ++c) {
    if (t.per_component[c].edges == 0) {
      ++t.per_component[c].faces;
      t.faces.emplace_back();
    }
  }
  int face_sum = 0;
  for (auto& c : t.per_component) {
    c.euler_char = c.vertices - c.edges + c.faces;
    if ((2 - c.euler_char) % 2 != 0 || c.euler_char > 2) {
      throw Error(ErrorKind::NonCellular, "odd Euler characteristic in a component");
    }
    c.genus = (2 - c.euler_char) / 2;
    face_sum += c.faces;
  }
  t.face_count = face_sum - (t.components - 1);
  t.euler_char = t.vertices - t.edges + t.face_count;
  if (t.components == 1) t.genus = t.per_component[0].genus;
  return t;
}

Embedding dual_embedding(const Embedding& emb) {
  const FaceTrace t = trace_faces(emb);
  if (t.components != 1) {
    throw Error(ErrorKind::NonCellular,
                "dual needs a connected embedding, got " +
                    std::to_string(t.components) + " components");
  }
  const Multigraph& g = emb.graph();
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    edges.push_back({t.face_of_dart[make_dart(e, true)],
                     t.face_of_dart[make_dart(e, false)]});
  }
  Multigraph dual_graph(static_cast<int>(t.faces.size()), std::move(edges));
  return Embedding(std::move(dual_graph), t.faces);
}

DualityReport rank_nullity_duality_report(const Embedding& emb) {
  const FaceTrace t = trace_faces(emb);
  if (t.components != 1) {
    throw Error(ErrorKind::NonCellular, "embedding is not connected");
  }
  if (*t.genus != 0) {
    throw Error(ErrorKind::NonPlanarEmbedding,
                "embedding has genus " + std::to_string(*t.genus));
  }
  const Embedding d = dual_embedding(emb);
  const GraphInvariants primal = graph_invariants(emb.graph());
  const GraphInvariants star = graph_invariants(d.graph());
  DualityReport r;
  r.rank = primal.rank;
  r.nullity = primal.nullity;
  r.dual_rank = star.rank;
  r.dual_nullity = star.nullity;
  r.euler_char = t.euler_char;
  r.reconstructed_char = r.rank - r.dual_nullity + 2;
  r.dual_rank_is_nullity = r.dual_rank == r.nullity;
  r.dual_nullity_is_rank = r.dual_nullity == r.rank;
  return r;
}

namespace {

bool TryMapFrom(const Embedding& a, const Embedding& b, int target,
                bool reverse) {
  const int darts = 2 * a.graph().edge_count();
  std::vector<int> image(darts, -1);
  std::vector<int> preimage(darts, -1);
  std::vector<int> stack = {0};
  image[0] = target;
  preimage[target] = 0;
  std::vector<int> prev_b(darts);
  for (int d = 0; d < darts; ++d) prev_b[b.next_around_vertex(d)] = d;
  auto assign = [&](int x, int y) {
    if (image[x] >= 0) return image[x] == y;
    if (preimage[y] >= 0) return false;
    image[x] = y;
    preimage[y] = x;
    stack.push_back(x);
    return true;
  };
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    int y = image[x];
    if (!assign(dart_reverse(x), dart_reverse(y))) return false;
    int sy = reverse ? prev_b[y] : b.next_around_vertex(y);
    if (!assign(a.next_around_vertex(x), sy)) return false;
  }
  return std::find(image.begin(), image.end(), -1) == image.end();
}

}  // namespace

bool embeddings_isomorphic(const Embedding& a, const Embedding& b) {
  const Multigraph& ga = a.graph();
  const Multigraph& gb = b.graph();
  if (ga.vertex_count() != gb.vertex_count() ||
      ga.edge_count() != gb.edge_count()) {
    return false;
  }
  int ka = 0, kb = 0;
  component_ids(ga, &ka);
  component_ids(gb, &kb);
  if (ka != 1 || kb != 1) {
    throw Error(ErrorKind::NonCellular, "isomorphism test needs connected maps");
  }
  const int darts = 2 * ga.edge_count();
  if (darts == 0) return true;
  for (bool reverse : {false, true}) {
    for (int t = 0; t < darts; ++t) {
      if (TryMapFrom(a, b, t, reverse)) return true;
    }
  }
  return false;
}

std::vector<PlatonicRow> platonic_solids() {
  std::vector<PlatonicRow> rows;
  // (p-2)(q-2) < 4 with q >= 3 forces p - 2 < 4, and symmetrically.
  for (int p = 3; p - 2 < 4; ++p) {
    for (int q = 3; (p - 2) * (q - 2) < 4; ++q) {
      const int denom = 2 * p + 2 * q - p * q;
      const int e = 2 * p * q / denom;
      PlatonicRow row;
      row.p = p;
      row.q = q;
      row.edges = e;
      row.vertices = 2 * e / q;
      row.faces = 2 * e / p;
      rows.push_back(row);
    }
  }
  std::sort(rows.begin(), rows.end(), [](const PlatonicRow& a, const PlatonicRow& b) {
    int ka = (a.p - 2) * (a.q - 2);
    int kb = (b.p - 2) * (b.q - 2);
    if (ka != kb) return ka < kb;
    return a.p > b.p;
  });
  for (auto& row : rows) {
    if (row.faces == 4) row.name = "tetrahedron";
    else if (row.faces == 6) row.name = "cube";
    else if (row.faces == 8) row.name = "octahedron";
    else if (row.faces == 12) row.name = "dodecahedron";
    else if (row.faces == 20) row.name = "icosahedron";
  }
  return rows;
}

std::vector<Block> blocks(const Multigraph& g) {
  const int n = g.vertex_count();
  const auto inc = g.incidence();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> edge_stack;
  std::vector<std::vector<int>> groups;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int u, int parent_edge) {
    disc[u] = low[u] = timer++;
    for (int e : inc[u]) {
      const Edge& edge = g.edge(e);
      if (edge.is_loop() || e == parent_edge) continue;
      int w = edge.u == u ? edge.v : edge.u;
      if (disc[w] < 0) {
        edge_stack.push_back(e);
        dfs(w, e);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          std::vector<int> group;
          int top;
          do {
            top = edge_stack.back();
            edge_stack.pop_back();
            group.push_back(top);
          } while (top != e);
          groups.push_back(std::move(group));
        }
      } else if (disc[w] < disc[u]) {
        edge_stack.push_back(e);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  for (int v = 0; v < n; ++v) {
    if (disc[v] < 0) dfs(v, -1);
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).is_loop()) groups.push_back({e});
  }
  for (auto& group : groups) std::sort(group.begin(), group.end());
  std::sort(groups.begin(), groups.end());

  std::vector<Block> out;
  for (const auto& group : groups) {
    Block b;
    b.edge_ids = group;
    for (int e : group) {
      b.vertex_ids.push_back(g.edge(e).u);
      b.vertex_ids.push_back(g.edge(e).v);
    }
    std::sort(b.vertex_ids.begin(), b.vertex_ids.end());
    b.vertex_ids.erase(std::unique(b.vertex_ids.begin(), b.vertex_ids.end()),
                       b.vertex_ids.end());
    auto local = [&](int v) {
      return static_cast<int>(
          std::lower_bound(b.vertex_ids.begin(), b.vertex_ids.end(), v) -
          b.vertex_ids.begin());
    };
    std::vector<Edge> edges;
    for (int e : group) edges.push_back({local(g.edge(e).u), local(g.edge(e).v)});
    b.graph = Multigraph(static_cast<int>(b.vertex_ids.size()), std::move(edges));
    out.push_back(std::move(b));
  }
  return out;
}

Matroid cycle_matroid(const Multigraph& g, std::size_t bound,
                      std::size_t max_bases) {
  const int m = g.edge_count();
  if (static_cast<std::size_t>(m) > std::min(bound, Matroid::kMaxBound)) {
    throw Error(ErrorKind::TooManyBases,
                std::to_string(m) + " edges exceed the ground bound " +
                    std::to_string(std::min(bound, Matroid::kMaxBound)));
  }
  const int r = graph_invariants(g).rank;
  std::vector<int> ground(m);
  std::iota(ground.begin(), ground.end(), 0);
  std::vector<Mask> bases;
  auto acyclic = [&](Mask s) {
    UnionFind uf(g.vertex_count());
    for (; s; s &= s - 1) {
      const Edge& e = g.edge(std::countr_zero(s));
      if (!uf.Unite(e.u, e.v)) return false;
    }
    return true;
  };
  if (r == 0) {
    bases.push_back(0);
  } else {
    const std::uint64_t limit = std::uint64_t{1} << m;
    for (std::uint64_t s = (std::uint64_t{1} << r) - 1; s < limit;) {
      Mask set = static_cast<Mask>(s);
      if (acyclic(set)) {
        bases.push_back(set);
        if (bases.size() > max_bases) {
          throw Error(ErrorKind::TooManyBases,
                      "more than " + std::to_string(max_bases) + " spanning forests");
        }
      }
      if (r == m) break;
      Mask c = set & -set;
      Mask next = set + c;
      s = (((next ^ set) >> 2) / c) | next;
    }
  }
  return Matroid::from_masks(std::move(ground), std::move(bases));
}

// ---------------------------------------------------------------------------
// Named graphs and embeddings

Multigraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Multigraph(n, std::move(edges));
}

Multigraph complete_bipartite_graph(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
  }
  return Multigraph(a + b, std::move(edges));
}

Multigraph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Multigraph(n, std::move(edges));
}

Multigraph path_graph(int vertices) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < vertices; ++i) edges.push_back({i, i + 1});
  return Multigraph(vertices, std::move(edges));
}

Multigraph cube_graph() {
  std::vector<Edge> edges;
  for (int v = 0; v < 8; ++v) {
    for (int bit = 1; bit < 8; bit <<= 1) {
      if (!(v & bit)) edges.push_back({v, v | bit});
    }
  }
  return Multigraph(8, std::move(edges));
}

Multigraph octahedron_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      if (j != (i ^ 1)) edges.push_back({i, j});
    }
  }
  return Multigraph(6, std::move(edges));
}

namespace {

Multigraph GeneralizedPetersen(int n, int k) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  for (int i = 0; i < n; ++i) edges.push_back({i, n + i});
  for (int i = 0; i < n; ++i) {
    int j = (i + k) % n;
    if (i < j || k * 2 != n) edges.push_back({n + i, n + j});
  }
  return Multigraph(2 * n, std::move(edges));
}

int ParseCount(std::string_view text, std::string_view name) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0) {
    throw Error(ErrorKind::BadParams, "bad parameter in '" + std::string(name) + "'");
  }
  return value;
}

}  // namespace

Multigraph dodecahedron_graph() { return GeneralizedPetersen(10, 2); }

Multigraph named_graph(std::string_view name) {
  if (name == "tetrahedron") return complete_graph(4);
  if (name == "cube") return cube_graph();
  if (name == "octahedron") return octahedron_graph();
  if (name == "dodecahedron") return dodecahedron_graph();
  if (name == "icosahedron") return named_embedding("icosahedron").graph();
  if (name == "petersen") return GeneralizedPetersen(5, 2);
  if (name.size() >= 2 && (name[0] == 'k' || name[0] == 'K')) {
    std::string_view rest = name.substr(1);
    if (rest == "33" || rest == "3,3") return complete_bipartite_graph(3, 3);
    if (auto comma = rest.find(','); comma != std::string_view::npos) {
      return complete_bipartite_graph(ParseCount(rest.substr(0, comma), name),
                                      ParseCount(rest.substr(comma + 1), name));
    }
    return complete_graph(ParseCount(rest, name));
  }
  if (name.size() >= 2 && (name[0] == 'c' || name[0] == 'C')) {
    return cycle_graph(ParseCount(name.substr(1), name));
  }
  if (name.size() >= 2 && (name[0] == 'p' || name[0] == 'P')) {
    return path_graph(ParseCount(name.substr(1), name));
  }
  throw Error(ErrorKind::UnknownName, "unknown graph '" + std::string(name) + "'");
}

Embedding bouquet_embedding(int genus) {
  if (genus < 0) throw Error(ErrorKind::BadParams, "genus must be >= 0");
  std::vector<Edge> edges(2 * genus, Edge{0, 0});
  std::vector<int> rotation;
  for (int h = 0; h < genus; ++h) {
    int a = 2 * h, b = 2 * h + 1;
    rotation.insert(rotation.end(), {make_dart(a, true), make_dart(b, true),
                                     make_dart(a, false), make_dart(b, false)});
  }
  return Embedding(Multigraph(1, std::move(edges)), {rotation});
}

Embedding named_embedding(std::string_view name) {
  if (name == "torus") return bouquet_embedding(1);
  if (name.starts_with("genus:")) {
    return bouquet_embedding(ParseCount(name.substr(6), name));
  }
  if (name == "icosahedron") return dual_embedding(named_embedding("dodecahedron"));
  if (name == "tetrahedron" || name == "cube" || name == "octahedron" ||
      name == "dodecahedron") {
    // 3-connected planar graphs embed uniquely up to reflection.
    auto emb = planar_embedding(named_graph(name));
    return *emb;
  }
  Multigraph g = named_graph(name);
  auto emb = planar_embedding(g);
  if (!emb) {
    throw Error(ErrorKind::NonPlanarEmbedding,
                "'" + std::string(name) + "' has no planar embedding");
  }
  return *emb;
}

Embedding embedding_from_faces(const Multigraph& g,
                               const std::vector<std::vector<int>>& faces) {
  std::map<std::pair<int, int>, int> dart_of;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    dart_of[{edge.u, edge.v}] = make_dart(e, true);
    dart_of[{edge.v, edge.u}] = make_dart(e, false);
  }
  auto lookup = [&](int a, int b) {
    auto it = dart_of.find({a, b});
    if (it == dart_of.end()) {
      throw Error(ErrorKind::InvalidEmbedding,
                  "face walks a non-edge " + std::to_string(a) + "-" + std::to_string(b));
    }
    return it->second;
  };
  const int darts = 2 * g.edge_count();
  std::vector<int> next(darts, -1);
  for (const auto& face : faces) {
    const std::size_t k = face.size();
    for (std::size_t i = 0; i < k; ++i) {
      int x = face[(i + k - 1) % k], y = face[i], z = face[(i + 1) % k];
      int from = lookup(y, x);
      if (next[from] >= 0) {
        throw Error(ErrorKind::InvalidEmbedding, "faces traverse a dart twice");
      }
      next[from] = lookup(y, z);
    }
  }
  std::vector<std::vector<int>> rotation(g.vertex_count());
  std::vector<bool> placed(darts, false);
  for (int d = 0; d < darts; ++d) {
    if (next[d] < 0) {
      throw Error(ErrorKind::InvalidEmbedding, "faces miss an edge side");
    }
    if (placed[d]) continue;
    int v = dart_origin(g, d);
    if (!rotation[v].empty()) {
      throw Error(ErrorKind::InvalidEmbedding,
                  "vertex " + std::to_string(v) + " has a non-cyclic rotation");
    }
    for (int x = d; !placed[x]; x = next[x]) {
      placed[x] = true;
      rotation[v].push_back(x);
    }
  }
  return Embedding(g, std::move(rotation));
}

}  // namespace duality
