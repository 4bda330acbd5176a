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
#include <cstdint>
#include <string_view>
#include <vector>

#include "duality/graph.hpp"

namespace duality {

/// Sorted vertex labels.
using Simplex = std::vector<int>;

/// Downward-closed family of simplices, grouped by dimension.
class SimplicialComplex {
 public:
  /// Closes the given simplices under taking faces. Throws EmptyInput when
  /// no nonempty simplex is given.
  static SimplicialComplex make(const std::vector<Simplex>& maximal);

  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }

  /// alpha[i] = number of i-simplices.
  std::vector<std::int64_t> alpha() const;
  std::size_t total() const;

  const std::vector<Simplex>& simplices(int dim) const { return by_dim_[dim]; }
  /// Index of a sorted simplex in simplices(size - 1), or -1.
  long index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s) >= 0; }

  /// Simplices that are not a face of any other, canonical order.
  std::vector<Simplex> maximal_simplices() const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  std::vector<std::vector<Simplex>> by_dim_;
};

/// sum over i >= 0 of (-1)^i alpha_i.
std::int64_t euler_characteristic(const SimplicialComplex& k);

struct BettiVector {
  std::vector<std::int64_t> b;  // GF(2) coefficients
  std::int64_t alternating_sum() const;
};

inline constexpr std::size_t kBettiSimplexLimit = 5000;

/// b_i = dim ker d_i - rank d_{i+1} over GF(2). Throws TooLarge above
/// `limit` simplices.
BettiVector betti_numbers(const SimplicialComplex& k,
                          std::size_t limit = kBettiSimplexLimit);

/// Boundary of the (n+1)-simplex on vertices 0..n+1.
SimplicialComplex sphere(int n);

/// g = 0: boundary of the tetrahedron. g >= 1: connected sum of g copies of
/// the 9-vertex 3x3 grid torus, glued along vertex-disjoint removed
/// triangles; 6g + 3 vertices.
SimplicialComplex genus_surface(int g);

/// `sphere:n` (n <= 5), `genus:g` / `genus_surface:g` (g <= 4), `torus`.
SimplicialComplex named_complex(std::string_view name);

struct IndexReport {
  std::int64_t sources = 0;  // one per vertex, index +1
  std::int64_t saddles = 0;  // one per edge, index -1
  std::int64_t sinks = 0;    // one per triangle, index +1
  std::int64_t index_sum = 0;
};

/// Canonical vector field on a closed triangulated surface. Throws
/// NotASurface unless the complex is 2-dimensional with every edge in
/// exactly two triangles.
IndexReport index_sum_canonical(const SimplicialComplex& k);

struct GenusDualityReport {
  int vertices = 0, edges = 0, faces = 0, genus = 0;
  int virtual_vertices = 0;       // V + g
  int dual_virtual_vertices = 0;  // V* + g, with V* = F
  int aug_rank = 0, aug_nullity = 0;            // R = V' - 1, N = E - R
  int dual_aug_rank = 0, dual_aug_nullity = 0;  // starred, with E* = E
  bool virtual_euler_ok = false;   // V' - E* + V*' = 2
  bool rank_duality_ok = false;    // R* = N and N* = R
  bool genus_formula_ok = false;   // chi + 2g = 2
  bool ok() const { return virtual_euler_ok && rank_duality_ok && genus_formula_ok; }
};

/// Throws NonCellular for disconnected embeddings.
GenusDualityReport genus_duality_check(const Embedding& emb);

}  // namespace duality
