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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace duality {

/// Subset of a ground set, bit i standing for the i-th smallest label.
using Mask = std::uint32_t;

/// Lexicographic order on the sorted element sequences of two subsets.
bool lex_less(Mask a, Mask b);

/// A matroid on a small labelled ground set, stored as its family of bases.
///
/// The family is kept in canonical form: each basis is a sorted set, and the
/// bases are sorted lexicographically and deduplicated, so two matroids are
/// equal exactly when their ground sets and basis families coincide.
class Matroid {
 public:
  static constexpr std::size_t kDefaultBound = 12;
  static constexpr std::size_t kMaxBound = 24;

  /// Validates basis axioms (nonempty family, no containment, exchange) and
  /// returns the canonical matroid. Throws Error naming the first violated
  /// axiom with its witness.
  static Matroid make(std::vector<int> ground,
                      const std::vector<std::vector<int>>& bases,
                      std::size_t bound = kDefaultBound);

  /// Builds from masks over a sorted ground without validating the axioms.
  /// For families produced by operations that preserve them.
  static Matroid from_masks(std::vector<int> sorted_ground,
                            std::vector<Mask> bases);

  const std::vector<int>& ground() const { return ground_; }
  std::size_t size() const { return ground_.size(); }
  int rank() const { return rank_; }
  Mask full_mask() const;

  /// Canonically ordered basis masks.
  const std::vector<Mask>& basis_masks() const { return bases_; }
  std::size_t basis_count() const { return bases_.size(); }
  std::vector<std::vector<int>> bases() const;

  bool is_basis(Mask set) const;
  bool is_independent(Mask set) const;

  /// Throws ElementNotInGround for unknown labels.
  Mask mask_of(std::span<const int> labels) const;
  int position_of(int label) const;
  std::vector<int> labels_of(Mask set) const;

  /// Elements in no basis / in every basis.
  Mask loops() const;
  Mask coloops() const;

  /// Number of bases containing each element, by position.
  std::vector<int> degrees() const;

  bool operator==(const Matroid& other) const {
    return ground_ == other.ground_ && bases_ == other.bases_;
  }

 private:
  Matroid(std::vector<int> ground, std::vector<Mask> bases);

  std::vector<int> ground_;
  std::vector<Mask> bases_;   // canonical order
  std::vector<Mask> lookup_;  // numeric order, for membership tests
  int rank_ = 0;
};

Matroid dual(const Matroid& m);

int rank_of(const Matroid& m, std::span<const int> subset);
int rank_of_mask(const Matroid& m, Mask subset);

/// Deletes `deletions` and contracts `contractions`. Loops in the
/// contraction set are deleted; the rest must be independent.
Matroid minor(const Matroid& m, std::span<const int> deletions,
              std::span<const int> contractions);

/// Single-element and mask forms used by the searches. Contracting a loop
/// equals deleting it; deleting a coloop leaves {B \ e}.
Matroid delete_set(const Matroid& m, Mask set);
Matroid contract_set(const Matroid& m, Mask set);
Matroid delete_element(const Matroid& m, int label);
Matroid contract_element(const Matroid& m, int label);

/// A label bijection: mapping[i] is the image of m1.ground()[i].
struct Isomorphism {
  std::vector<int> mapping;
};

/// Backtracking over bijections, pruned by per-element and per-pair basis
/// degrees. Deterministic: returns the first bijection in ascending order.
std::optional<Isomorphism> find_isomorphism(const Matroid& m1,
                                            const Matroid& m2);
bool is_isomorphic(const Matroid& m1, const Matroid& m2);

struct MinorWitness {
  std::vector<int> deletions;
  std::vector<int> contractions;
};

struct MinorSearch {
  std::optional<MinorWitness> witness;
  std::size_t pairs_enumerated = 0;     // (contraction, deletion) pairs tried
  std::size_t candidates_examined = 0;  // distinct minors tested for isomorphism
};

/// Exhaustive search over (independent contraction, coindependent deletion)
/// pairs for a minor isomorphic to `target`.
MinorSearch find_minor(const Matroid& m, const Matroid& target);
bool has_minor(const Matroid& m, const Matroid& target);

Matroid uniform_matroid(int r, int n);
Matroid fano_matroid();

/// Identifiers: `uniform:r,n`, `fano`, `fano_dual`, `mk4`, `mk5`, `mk33`,
/// plus `free:n`. Graphic ones are labelled by edge index.
Matroid named_matroid(std::string_view name);

/// Bases {B1 ∪ B2}. If the ground sets overlap, m2 is relabelled to follow
/// the largest label of m1 (order preserving).
Matroid direct_sum(const Matroid& m1, const Matroid& m2);

/// Relabels the ground set; `labels` must be distinct, one per element.
Matroid relabel(const Matroid& m, std::span<const int> labels);

struct FlagVerdict {
  enum class Kind { ExcludedMinor, Realization, Exhaustion };
  bool holds = false;
  Kind kind = Kind::Exhaustion;
  std::string detail;
};

std::string_view to_string(FlagVerdict::Kind kind);

struct ClassificationReport {
  FlagVerdict binary;
  FlagVerdict regular;
  FlagVerdict graphic;
  FlagVerdict cographic;
  FlagVerdict transversal;
};

inline constexpr std::size_t kClassifyBound = 10;

/// Excluded-minor classification (binary, regular, graphic, cographic) plus
/// a presentation search for transversality. Throws GroundTooLarge above
/// kClassifyBound elements.
ClassificationReport classify(const Matroid& m);

/// Transversality by search over presentations with rank-many sets. Grounds
/// of at most `exhaustive_limit` elements search all subsets; larger ones
/// search cocircuit presentations.
struct TransversalSearch {
  std::optional<std::vector<std::vector<int>>> presentation;
  std::size_t presentations_examined = 0;
  bool exhaustive = true;
};
TransversalSearch find_transversal_presentation(const Matroid& m,
                                                std::size_t exhaustive_limit = 7);

struct DualityAxiomReport {
  bool involution_ok = false;       // D(D(M)) = M
  bool ground_preserved_ok = false;  // E(D(M)) = E(M)
  std::vector<int> elements;         // labels, in ground order
  std::vector<bool> delete_contract_ok;  // D(M\e) = D(M)/e
  std::vector<bool> contract_delete_ok;  // D(M/e) = D(M)\e
  struct Counterexample {
    int element;
    std::string axiom;
    std::vector<std::vector<int>> lhs_bases;
    std::vector<std::vector<int>> rhs_bases;
  };
  std::optional<Counterexample> counterexample;

  bool all_ok() const;
};

DualityAxiomReport check_duality_axioms(const Matroid& m);

/// All circuits (minimal dependent sets), canonical order.
std::vector<Mask> circuits(const Matroid& m);
std::vector<Mask> cocircuits(const Matroid& m);

}  // namespace duality
