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

// Seeded random instances for property tests and the CLI's sampled modes.

#include <cstdint>
#include <random>
#include <vector>

#include "duality/complex.hpp"
#include "duality/graph.hpp"
#include "duality/rational.hpp"

namespace duality {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
int random_int(Rng& rng, int lo, int hi);

/// Connected genus-0 embedding on 1..max_vertices vertices grown by leaf
/// insertions and same-face chords (loops and parallel edges included).
/// At most max_edges edges.
Embedding random_planar_embedding(Rng& rng, int max_vertices, int max_edges);

/// Disjoint union of embeddings; component i's edges follow those of i-1.
Embedding disjoint_union(const std::vector<Embedding>& parts);

/// Connected multigraph with a uniformly shuffled rotation system and
/// genus at most max_genus.
Embedding random_cellular_embedding(Rng& rng, int max_vertices, int max_genus);

/// Random multigraph, possibly disconnected, with loops.
Multigraph random_multigraph(Rng& rng, int max_vertices, int max_edges);

/// Closure of a few random simplices of dimension <= 3 on <= max_vertices.
SimplicialComplex random_complex(Rng& rng, int max_vertices);

/// n columns of r rational coordinates with at least one nonzero r-minor.
std::vector<Vector> random_configuration(Rng& rng, int max_points, int max_rank);

}  // namespace duality
