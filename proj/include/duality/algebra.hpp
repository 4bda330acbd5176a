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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "duality/matroid.hpp"
#include "duality/rational.hpp"

namespace duality {

struct BasisProduct {
  int sign = 1;   // +1 or -1
  int index = 0;  // e_i e_j = sign * e_index
};

enum class Provenance { CayleyDickson, FanoLines };

/// Real algebra of dimension 2^k given by a signed multiplication table on
/// the basis e_0..e_{dim-1}, with e_0 the identity.
class HypercomplexAlgebra {
 public:
  HypercomplexAlgebra(std::string name, Provenance provenance,
                      std::vector<std::vector<BasisProduct>> table);

  int dim() const { return static_cast<int>(table_.size()); }
  const std::string& name() const { return name_; }
  Provenance provenance() const { return provenance_; }
  const BasisProduct& product(int i, int j) const { return table_[i][j]; }
  const std::vector<std::vector<BasisProduct>>& table() const { return table_; }

 private:
  std::string name_;
  Provenance provenance_;
  std::vector<std::vector<BasisProduct>> table_;
};

/// Doubling (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)) applied `level`
/// times to R: 0..4 give R, C, H, O and the sedenions. Throws LevelTooLarge.
HypercomplexAlgebra cayley_dickson_algebra(int level);

/// Octonions from the oriented Fano lines (1,2,4), (2,3,5), (3,4,6),
/// (4,5,7), (5,6,1), (6,7,2), (7,1,3): e_i e_j = e_k cyclically along each
/// line, anticommuting off the diagonal, e_i^2 = -e_0.
HypercomplexAlgebra fano_octonion_algebra();

/// `r`, `c`, `h`, `o`, `o-fano`, `sedenion`. Throws UnknownName.
HypercomplexAlgebra algebra_by_name(std::string_view name);

Vector basis_element(int dim, int i);

/// Bilinear extension of the table. Throws DimMismatch.
Vector multiply(const HypercomplexAlgebra& alg, const Vector& x, const Vector& y);

Vector conjugate(const Vector& x);
Rational norm_sq(const Vector& x);

struct NormConjugate {
  Rational norm_sq;
  Vector conj;
};
NormConjugate norm_and_conjugate(const HypercomplexAlgebra& alg, const Vector& x);

struct ElementPair {
  Vector x;
  Vector y;
};

struct DivisionAlgebraReport {
  bool norm_multiplicative = false;  // |xy|^2 = |x|^2 |y|^2
  bool alternative = false;          // (xx)y = x(xy), (yx)x = y(xx)
  std::optional<ElementPair> norm_counterexample;
  std::optional<ElementPair> alternativity_counterexample;
  /// First x = e_i ± e_j, y = e_k ± e_l (i<j, k<l) with xy = 0.
  std::optional<ElementPair> zero_divisor;
  std::size_t basis_pairs_checked = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t zero_divisor_candidates = 0;
};

/// Norm and alternativity are checked exactly on all basis pairs, on the
/// pairs (e_i ± e_j, e_k) and on `sample_count` seeded random integer pairs.
DivisionAlgebraReport division_algebra_report(const HypercomplexAlgebra& alg,
                                              std::size_t sample_count,
                                              std::uint64_t seed);

/// Zero-divisor search alone (exhaustive over the e_i ± e_j family).
std::optional<ElementPair> find_zero_divisor(const HypercomplexAlgebra& alg,
                                             std::size_t* examined = nullptr);

// ---------------------------------------------------------------------------
// Cross products

struct CrossProductCase {
  enum class Kind { ComplexStructure, Epsilon, Three, Seven, Triple8 };
  Kind kind = Kind::Three;
  int n = 3;  // dimension
  int r = 2;  // number of arguments

  /// `three`, `seven`, `triple8`, `epsilon:<n>` (n >= 2), `j:<n>` (n even).
  static CrossProductCase parse(std::string_view text);
  static CrossProductCase complex_structure(int n);
  static CrossProductCase epsilon(int n);
  static CrossProductCase three();
  static CrossProductCase seven();
  static CrossProductCase triple8();

  std::string name() const;
};

/// Throws CaseArityMismatch or DimMismatch.
Vector cross_product(const CrossProductCase& c, std::span<const Vector> args);

struct CrossAxiomsReport {
  bool orthogonality_ok = false;
  bool norm_identity_ok = false;   // |X|^2 = Gram determinant
  bool multilinearity_ok = false;
  bool alternating_ok = false;     // vacuous for r = 1
  std::size_t basis_tuples = 0;
  std::size_t random_tuples = 0;
  std::uint64_t seed = 0;
  std::string first_failure;
  bool ok() const {
    return orthogonality_ok && norm_identity_ok && multilinearity_ok && alternating_ok;
  }
};

/// Exact checks on every basis tuple (n^r of them, n <= 8) and on `trials`
/// seeded random integer tuples.
CrossAxiomsReport cross_axioms_report(const CrossProductCase& c,
                                      std::size_t trials, std::uint64_t seed);

/// Sign of the permutation (1-based labels 1..n, n = indices.size()); 0 on
/// a repeat. Throws IndexOutOfRange.
int epsilon_symbol(std::span<const int> indices);

/// Sorted k-subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k);

/// A k-vector on R^n: coefficients over k_subsets(n, k).
struct KVector {
  int n = 0;
  int k = 0;
  Vector coeffs;
};

/// (*w)_J = sum over I of eps(I, J) w_I. Throws BadDims unless k <= n <= 8
/// and the coefficient count matches.
KVector hodge_dual(const KVector& w);

// ---------------------------------------------------------------------------
// Chirotopes

/// Sign map on sorted r-subsets of n labelled points (labels 1..n).
class Chirotope {
 public:
  Chirotope(int n, int r, std::vector<int> signs);

  int n() const { return n_; }
  int r() const { return r_; }
  /// Signs over k_subsets(n, r).
  const std::vector<int>& signs() const { return signs_; }
  /// Sign for an ordered tuple of labels; alternating under transpositions.
  int sign(std::span<const int> tuple) const;

 private:
  int n_;
  int r_;
  std::vector<int> signs_;
};

/// `points` holds n columns of r coordinates each. Throws BadDims outside
/// n <= 10, r <= 4 and RankDeficient when every sign is zero.
Chirotope chirotope_of_configuration(const std::vector<Vector>& points);

/// Nonzero-sign subsets validated as matroid bases on labels 1..n.
Matroid chirotope_support(const Chirotope& chi);

}  // namespace duality
