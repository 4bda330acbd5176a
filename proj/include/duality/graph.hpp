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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "duality/matroid.hpp"

namespace duality {

struct Edge {
  int u = 0;
  int v = 0;
  bool is_loop() const { return u == v; }
  bool operator==(const Edge&) const = default;
};

/// Finite multigraph; loops and parallel edges allowed. Edge i is the i-th
/// entry of edges().
class Multigraph {
 public:
  Multigraph() = default;
  /// Throws EndpointOutOfRange.
  Multigraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[i]; }

  /// Edge indices incident to each vertex (a loop is listed twice).
  std::vector<std::vector<int>> incidence() const;

  bool operator==(const Multigraph&) const = default;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

Multigraph make_graph(int vertex_count,
                      const std::vector<std::pair<int, int>>& edges);

// Darts (edge-ends): dart 2e sits at edges()[e].u and points to v, dart 2e+1
// sits at v and points to u. In text form they are written +e and -e.
inline int dart_edge(int dart) { return dart >> 1; }
inline int dart_reverse(int dart) { return dart ^ 1; }
inline int make_dart(int edge, bool tail) { return 2 * edge + (tail ? 0 : 1); }
int dart_origin(const Multigraph& g, int dart);
int dart_head(const Multigraph& g, int dart);

/// A multigraph plus a rotation system: for each vertex, the cyclic order of
/// the darts sitting at it.
class Embedding {
 public:
  Embedding() = default;
  /// Throws InvalidEmbedding unless every dart appears exactly once, at its
  /// own vertex.
  Embedding(Multigraph graph, std::vector<std::vector<int>> rotation);

  const Multigraph& graph() const { return graph_; }
  const std::vector<std::vector<int>>& rotation() const { return rotation_; }

  /// Successor of `dart` in the rotation at its vertex.
  int next_around_vertex(int dart) const { return next_[dart]; }
  /// Face permutation: the dart following `dart` along its face.
  int next_along_face(int dart) const { return next_[dart_reverse(dart)]; }

 private:
  Multigraph graph_;
  std::vector<std::vector<int>> rotation_;
  std::vector<int> next_;
};

struct GraphInvariants {
  int components = 0;  // k
  int rank = 0;        // R = V - k
  int nullity = 0;     // N = E - R
};

GraphInvariants graph_invariants(const Multigraph& g);

/// Connected component id of each vertex, numbered by smallest vertex.
std::vector<int> component_ids(const Multigraph& g, int* count = nullptr);

struct ComponentFaces {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int euler_char = 0;
  int genus = 0;
};

struct FaceTrace {
  /// Each face as its darts in traversal order; faces ordered by first dart.
  /// Edgeless components contribute one empty face each.
  std::vector<std::vector<int>> faces;
  std::vector<int> face_of_dart;
  int vertices = 0;
  int edges = 0;
  /// For k components drawn in the plane sharing the outer face:
  /// F = sum F_i - (k - 1), so chi = sum chi_i - (k - 1).
  int face_count = 0;
  int euler_char = 0;
  int components = 0;
  std::optional<int> genus;  // connected embeddings only
  std::vector<ComponentFaces> per_component;
};

FaceTrace trace_faces(const Embedding& emb);

/// Geometric dual: one vertex per face, edge e crossing primal edge e.
/// Dart d of the dual sits at the face of primal dart d. Throws NonCellular
/// for disconnected embeddings.
Embedding dual_embedding(const Embedding& emb);

struct DualityReport {
  int rank = 0, nullity = 0;            // R, N of G
  int dual_rank = 0, dual_nullity = 0;  // R*, N* of G*
  int euler_char = 0;                   // V - E + F
  int reconstructed_char = 0;           // R - N* + 2
  bool dual_rank_is_nullity = false;    // R* = N
  bool dual_nullity_is_rank = false;    // N* = R
  bool ok() const {
    return dual_rank_is_nullity && dual_nullity_is_rank && euler_char == 2 &&
           reconstructed_char == 2;
  }
};

/// Throws NonPlanarEmbedding for genus > 0 and NonCellular when disconnected.
DualityReport rank_nullity_duality_report(const Embedding& emb);

/// Combinatorial map isomorphism (orientation preserving or reversing) of
/// connected embeddings.
bool embeddings_isomorphic(const Embedding& a, const Embedding& b);

struct PlatonicRow {
  int p = 0;  // edges per face
  int q = 0;  // faces per vertex
  int vertices = 0, edges = 0, faces = 0;
  std::string name;
};

/// Solutions of (p-2)(q-2) < 4 with p, q >= 3, ordered by (p-2)(q-2) and then
/// by descending p.
std::vector<PlatonicRow> platonic_solids();

struct Block {
  Multigraph graph;             // vertices relabelled 0..n-1
  std::vector<int> vertex_ids;  // original vertex of each block vertex
  std::vector<int> edge_ids;    // original edge of each block edge
};

/// Biconnected components (loops and bridges are blocks of their own).
/// Isolated vertices have no edges and produce no block.
std::vector<Block> blocks(const Multigraph& g);

/// Bases are the spanning forests, labelled by edge index. Throws
/// TooManyBases when the edge count exceeds `bound` or the family is larger
/// than `max_bases`.
Matroid cycle_matroid(const Multigraph& g,
                      std::size_t bound = Matroid::kMaxBound,
                      std::size_t max_bases = 1u << 20);

Multigraph complete_graph(int n);
Multigraph complete_bipartite_graph(int a, int b);
Multigraph cycle_graph(int n);
Multigraph path_graph(int vertices);
Multigraph cube_graph();
Multigraph octahedron_graph();
Multigraph dodecahedron_graph();

/// `k5`, `k33`, `kN`, `kA,B`, `cN`, `pN`, `cube`, `octahedron`,
/// `dodecahedron`, `icosahedron`, `tetrahedron`, `petersen`.
Multigraph named_graph(std::string_view name);

/// Platonic solids (`tetrahedron`, `cube`, `octahedron`, `dodecahedron`,
/// `icosahedron`), `torus` (one vertex, two loops) and `genus:g` (one vertex,
/// 2g loops with rotation a b a' b' c d c' d' ...).
Embedding named_embedding(std::string_view name);

/// One vertex with 2g loops, rotation a+ b+ a- b- for each handle.
Embedding bouquet_embedding(int genus);

/// Builds the rotation system of a simple graph from oriented facial cycles
/// (vertex sequences, each edge traversed once in each direction overall).
Embedding embedding_from_faces(const Multigraph& g,
                               const std::vector<std::vector<int>>& faces);

// ---------------------------------------------------------------------------
// Planarity

struct KuratowskiWitness {
  std::string target;  // "K5" or "K3,3"
  std::vector<int> deletions;     // edge indices
  std::vector<int> contractions;  // edge indices
};

struct PlanarityResult {
  bool planar = false;
  std::optional<Embedding> embedding;  // genus-0 rotation system
  std::optional<KuratowskiWitness> witness;
};

inline constexpr int kPlanarityEdgeBound = 20;

/// Planar verdict certified by a genus-0 embedding, nonplanar verdict by a
/// K5 or K3,3 minor. Throws TooLarge above `edge_bound` edges.
PlanarityResult is_planar(const Multigraph& g,
                          int edge_bound = kPlanarityEdgeBound);

/// Genus-0 rotation system, if the graph is planar. No size bound.
std::optional<Embedding> planar_embedding(const Multigraph& g);

/// Applies a deletion/contraction witness; isolated vertices are dropped and
/// loops/parallel edges produced by contraction are kept.
Multigraph apply_graph_minor(const Multigraph& g, const std::vector<int>& deletions,
                             const std::vector<int>& contractions);

bool is_k5(const Multigraph& g);
bool is_k33(const Multigraph& g);

}  // namespace duality
