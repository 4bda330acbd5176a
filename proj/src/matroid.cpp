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

#include "duality/matroid.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "duality/error.hpp"
#include "duality/graph.hpp"
#include "duality/kernels.hpp"

namespace duality {
namespace {

std::string SetToString(const std::vector<int>& labels) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out << ' ';
    out << labels[i];
  }
  out << '}';
  return out.str();
}

// Keeps the bits of `set` that are outside `removed`, packed downward.
Mask Compress(Mask set, Mask removed) {
  Mask out = 0;
  int j = 0;
  for (int i = 0; i < 32; ++i) {
    if (removed >> i & 1u) continue;
    if (set >> i & 1u) out |= Mask{1} << j;
    ++j;
  }
  return out;
}

std::vector<int> RemainingGround(const std::vector<int>& ground, Mask removed) {
  std::vector<int> out;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (!(removed >> i & 1u)) out.push_back(ground[i]);
  }
  return out;
}

void CanonicalSort(std::vector<Mask>& family) {
  std::sort(family.begin(), family.end(), lex_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

// Next subset of the same popcount (Gosper's hack).
Mask NextCombination(Mask x) {
  Mask c = x & -x;
  Mask r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

template <typename Fn>
void ForEachSubsetOfSize(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(Mask{0});
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < limit;) {
    if (!fn(static_cast<Mask>(s))) return;
    if (k == n) return;
    s = NextCombination(static_cast<Mask>(s));
    if (s == 0) return;
  }
}

}  // namespace

bool lex_less(Mask a, Mask b) {
  while (a && b) {
    int la = std::countr_zero(a);
    int lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

Matroid::Matroid(std::vector<int> ground, std::vector<Mask> bases)
    : ground_(std::move(ground)), bases_(std::move(bases)) {
  CanonicalSort(bases_);
  lookup_ = bases_;
  std::sort(lookup_.begin(), lookup_.end());
  rank_ = bases_.empty() ? 0 : std::popcount(bases_.front());
}

Matroid Matroid::from_masks(std::vector<int> sorted_ground,
                            std::vector<Mask> bases) {
  return Matroid(std::move(sorted_ground), std::move(bases));
}

Matroid Matroid::make(std::vector<int> ground,
                      const std::vector<std::vector<int>>& bases,
                      std::size_t bound) {
  bound = std::min(bound, kMaxBound);
  std::sort(ground.begin(), ground.end());
  if (std::adjacent_find(ground.begin(), ground.end()) != ground.end()) {
    throw Error(ErrorKind::BadParams, "ground set labels must be distinct");
  }
  if (ground.size() > bound) {
    throw Error(ErrorKind::GroundTooLarge,
                "ground set has " + std::to_string(ground.size()) +
                    " elements, bound is " + std::to_string(bound));
  }
  Matroid shell(ground, {});
  std::vector<Mask> masks;
  masks.reserve(bases.size());
  for (const auto& b : bases) {
    Mask m = shell.mask_of(b);
    if (static_cast<std::size_t>(std::popcount(m)) != b.size()) {
      throw Error(ErrorKind::BadParams,
                  "basis " + SetToString(b) + " repeats an element");
    }
    masks.push_back(m);
  }
  CanonicalSort(masks);

  // (A)
  if (masks.empty()) {
    throw Error(ErrorKind::EmptyBases, "the basis family is empty");
  }
  // (B)
  for (Mask a : masks) {
    for (Mask b : masks) {
      if (a != b && (a & b) == a) {
        throw Error(ErrorKind::ContainmentViolation,
                    SetToString(shell.labels_of(a)) + " is a proper subset of " +
                        SetToString(shell.labels_of(b)));
      }
    }
  }
  Matroid result(std::move(ground), std::move(masks));
  // (C): for B != B' and b in B \ B', some b' in B' \ B has B - b + b' a basis.
  for (Mask b1 : result.bases_) {
    for (Mask b2 : result.bases_) {
      if (b1 == b2) continue;
      for (Mask out = b1 & ~b2; out; out &= out - 1) {
        Mask b = out & -out;
        bool found = false;
        for (Mask in = b2 & ~b1; in && !found; in &= in - 1) {
          Mask candidate = (b1 & ~b) | (in & -in);
          found = result.is_basis(candidate);
        }
        if (!found) {
          throw Error(
              ErrorKind::ExchangeFailure,
              "B=" + SetToString(result.labels_of(b1)) +
                  " B'=" + SetToString(result.labels_of(b2)) +
                  " b=" + std::to_string(result.ground_[std::countr_zero(b)]) +
                  " has no exchange partner in B' \\ B");
        }
      }
    }
  }
  return result;
}

Mask Matroid::full_mask() const {
  return ground_.size() >= 32 ? ~Mask{0}
                              : (Mask{1} << ground_.size()) - 1;
}

std::vector<std::vector<int>> Matroid::bases() const {
  std::vector<std::vector<int>> out;
  out.reserve(bases_.size());
  for (Mask b : bases_) out.push_back(labels_of(b));
  return out;
}

bool Matroid::is_basis(Mask set) const {
  return std::binary_search(lookup_.begin(), lookup_.end(), set);
}

bool Matroid::is_independent(Mask set) const {
  return kernels::count_supersets(bases_, set) > 0;
}

int Matroid::position_of(int label) const {
  auto it = std::lower_bound(ground_.begin(), ground_.end(), label);
  if (it == ground_.end() || *it != label) {
    throw Error(ErrorKind::ElementNotInGround,
                "element " + std::to_string(label) + " is not in the ground set");
  }
  return static_cast<int>(it - ground_.begin());
}

Mask Matroid::mask_of(std::span<const int> labels) const {
  Mask m = 0;
  for (int label : labels) m |= Mask{1} << position_of(label);
  return m;
}

std::vector<int> Matroid::labels_of(Mask set) const {
  std::vector<int> out;
  for (; set; set &= set - 1) out.push_back(ground_[std::countr_zero(set)]);
  return out;
}

Mask Matroid::loops() const {
  Mask any = 0;
  for (Mask b : bases_) any |= b;
  return full_mask() & ~any;
}

Mask Matroid::coloops() const {
  Mask all = full_mask();
  for (Mask b : bases_) all &= b;
  return all;
}

std::vector<int> Matroid::degrees() const {
  std::vector<int> deg(ground_.size(), 0);
  for (std::size_t i = 0; i < ground_.size(); ++i) {
    deg[i] = static_cast<int>(kernels::count_supersets(bases_, Mask{1} << i));
  }
  return deg;
}

Matroid dual(const Matroid& m) {
  std::vector<Mask> complements;
  complements.reserve(m.basis_count());
  const Mask full = m.full_mask();
  for (Mask b : m.basis_masks()) complements.push_back(full & ~b);
  return Matroid::from_masks(m.ground(), std::move(complements));
}

int rank_of_mask(const Matroid& m, Mask subset) {
  return kernels::max_masked_popcount(m.basis_masks(), subset);
}

int rank_of(const Matroid& m, std::span<const int> subset) {
  return rank_of_mask(m, m.mask_of(subset));
}

Matroid contract_set(const Matroid& m, Mask set) {
  const int keep = kernels::max_masked_popcount(m.basis_masks(), set);
  std::vector<Mask> bases;
  for (Mask b : m.basis_masks()) {
    if (std::popcount(b & set) == keep) bases.push_back(Compress(b, set));
  }
  return Matroid::from_masks(RemainingGround(m.ground(), set), std::move(bases));
}

Matroid delete_set(const Matroid& m, Mask set) {
  const int keep = kernels::min_masked_popcount(m.basis_masks(), set);
  std::vector<Mask> bases;
  for (Mask b : m.basis_masks()) {
    if (std::popcount(b & set) == keep) bases.push_back(Compress(b, set));
  }
  return Matroid::from_masks(RemainingGround(m.ground(), set), std::move(bases));
}

Matroid delete_element(const Matroid& m, int label) {
  return delete_set(m, Mask{1} << m.position_of(label));
}

Matroid contract_element(const Matroid& m, int label) {
  return contract_set(m, Mask{1} << m.position_of(label));
}

Matroid minor(const Matroid& m, std::span<const int> deletions,
              std::span<const int> contractions) {
  const Mask del = m.mask_of(deletions);
  const Mask con = m.mask_of(contractions);
  if (del & con) {
    throw Error(ErrorKind::OverlappingSets,
                "elements " + SetToString(m.labels_of(del & con)) +
                    " are both deleted and contracted");
  }
  const Mask proper = con & ~m.loops();
  if (!m.is_independent(proper)) {
    throw Error(ErrorKind::DependentContraction,
                "contraction set " + SetToString(m.labels_of(proper)) +
                    " is dependent");
  }
  Matroid contracted = contract_set(m, con);
  return delete_set(contracted, contracted.mask_of(m.labels_of(del)));
}

Matroid relabel(const Matroid& m, std::span<const int> labels) {
  if (labels.size() != m.size()) {
    throw Error(ErrorKind::BadParams, "relabel needs one label per element");
  }
  std::vector<std::pair<int, int>> order;  // new label, old position
  for (std::size_t i = 0; i < labels.size(); ++i) {
    order.emplace_back(labels[i], static_cast<int>(i));
  }
  std::sort(order.begin(), order.end());
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (order[i].first == order[i - 1].first) {
      throw Error(ErrorKind::BadParams, "relabel labels must be distinct");
    }
  }
  std::vector<int> new_pos(m.size());
  std::vector<int> ground;
  for (std::size_t i = 0; i < order.size(); ++i) {
    new_pos[order[i].second] = static_cast<int>(i);
    ground.push_back(order[i].first);
  }
  std::vector<Mask> bases;
  for (Mask b : m.basis_masks()) {
    Mask nb = 0;
    for (Mask s = b; s; s &= s - 1) nb |= Mask{1} << new_pos[std::countr_zero(s)];
    bases.push_back(nb);
  }
  return Matroid::from_masks(std::move(ground), std::move(bases));
}

Matroid direct_sum(const Matroid& m1, const Matroid& m2) {
  const std::size_t n = m1.size() + m2.size();
  if (n > Matroid::kMaxBound) {
    throw Error(ErrorKind::GroundTooLarge, "direct sum exceeds the ground bound");
  }
  Matroid right = m2;
  bool overlap = false;
  for (int label : m2.ground()) {
    if (std::binary_search(m1.ground().begin(), m1.ground().end(), label)) {
      overlap = true;
    }
  }
  if (overlap) {
    int next = m1.ground().empty() ? 0 : m1.ground().back() + 1;
    std::vector<int> labels(m2.size());
    std::iota(labels.begin(), labels.end(), next);
    right = relabel(m2, labels);
  }
  std::vector<int> ground = m1.ground();
  ground.insert(ground.end(), right.ground().begin(), right.ground().end());
  std::vector<int> sorted = ground;
  std::sort(sorted.begin(), sorted.end());
  // Position maps from each side into the merged ground.
  auto positions = [&](const std::vector<int>& side) {
    std::vector<int> pos;
    for (int label : side) {
      pos.push_back(static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), label) - sorted.begin()));
    }
    return pos;
  };
  auto p1 = positions(m1.ground());
  auto p2 = positions(right.ground());
  auto lift = [](Mask b, const std::vector<int>& pos) {
    Mask out = 0;
    for (; b; b &= b - 1) out |= Mask{1} << pos[std::countr_zero(b)];
    return out;
  };
  std::vector<Mask> bases;
  for (Mask a : m1.basis_masks()) {
    for (Mask b : right.basis_masks()) bases.push_back(lift(a, p1) | lift(b, p2));
  }
  return Matroid::from_masks(std::move(sorted), std::move(bases));
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

struct IsoProfile {
  std::vector<int> degree;
  std::vector<std::vector<int>> pair;  // bases containing both i and j
};

IsoProfile Profile(const Matroid& m) {
  IsoProfile p;
  const std::size_t n = m.size();
  p.degree = m.degrees();
  p.pair.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Mask both = (Mask{1} << i) | (Mask{1} << j);
      p.pair[i][j] = p.pair[j][i] =
          static_cast<int>(kernels::count_supersets(m.basis_masks(), both));
    }
  }
  return p;
}

class IsoSearch {
 public:
  IsoSearch(const Matroid& a, const Matroid& b)
      : a_(a), b_(b), pa_(Profile(a)), pb_(Profile(b)),
        image_(a.size(), -1), used_(b.size(), false) {}

  bool Run() { return Assign(0); }
  const std::vector<int>& image() const { return image_; }

 private:
  bool Assign(std::size_t i) {
    const std::size_t n = a_.size();
    if (i == n) return Verify();
    for (std::size_t y = 0; y < n; ++y) {
      if (used_[y] || pb_.degree[y] != pa_.degree[i]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) {
        ok = pa_.pair[i][k] == pb_.pair[y][image_[k]];
      }
      if (!ok) continue;
      image_[i] = static_cast<int>(y);
      used_[y] = true;
      if (Assign(i + 1)) return true;
      used_[y] = false;
      image_[i] = -1;
    }
    return false;
  }

  bool Verify() const {
    for (Mask basis : a_.basis_masks()) {
      Mask mapped = 0;
      for (Mask s = basis; s; s &= s - 1) {
        mapped |= Mask{1} << image_[std::countr_zero(s)];
      }
      if (!b_.is_basis(mapped)) return false;
    }
    return true;
  }

  const Matroid& a_;
  const Matroid& b_;
  IsoProfile pa_, pb_;
  std::vector<int> image_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<Isomorphism> find_isomorphism(const Matroid& m1,
                                            const Matroid& m2) {
  if (m1.size() != m2.size() || m1.rank() != m2.rank() ||
      m1.basis_count() != m2.basis_count()) {
    return std::nullopt;
  }
  auto d1 = m1.degrees();
  auto d2 = m2.degrees();
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2) return std::nullopt;
  IsoSearch search(m1, m2);
  if (!search.Run()) return std::nullopt;
  Isomorphism iso;
  for (int y : search.image()) iso.mapping.push_back(m2.ground()[y]);
  return iso;
}

bool is_isomorphic(const Matroid& m1, const Matroid& m2) {
  return find_isomorphism(m1, m2).has_value();
}

// ---------------------------------------------------------------------------
// Minors

MinorSearch find_minor(const Matroid& m, const Matroid& target) {
  MinorSearch result;
  const int n = static_cast<int>(m.size());
  const int nt = static_cast<int>(target.size());
  const int contract_count = m.rank() - target.rank();
  const int delete_count = (n - nt) - contract_count;
  if (nt > n || contract_count < 0 || delete_count < 0) return result;

  std::set<std::vector<Mask>> seen;
  ForEachSubsetOfSize(n, contract_count, [&](Mask con) {
    if (!m.is_independent(con)) return true;
    Matroid contracted = contract_set(m, con);
    const int rest = n - contract_count;
    ForEachSubsetOfSize(rest, delete_count, [&](Mask del) {
      Matroid candidate = delete_set(contracted, del);
      ++result.pairs_enumerated;
      if (candidate.rank() != target.rank() ||
          candidate.basis_count() != target.basis_count()) {
        return true;
      }
      if (!seen.insert(candidate.basis_masks()).second) return true;
      ++result.candidates_examined;
      if (is_isomorphic(candidate, target)) {
        result.witness = MinorWitness{contracted.labels_of(del),
                                      m.labels_of(con)};
        return false;
      }
      return true;
    });
    return !result.witness.has_value();
  });
  return result;
}

bool has_minor(const Matroid& m, const Matroid& target) {
  return find_minor(m, target).witness.has_value();
}

// ---------------------------------------------------------------------------
// Named matroids

Matroid uniform_matroid(int r, int n) {
  if (n < 0 || r < 0 || r > n ||
      static_cast<std::size_t>(n) > Matroid::kMaxBound) {
    throw Error(ErrorKind::BadParams, "uniform matroid needs 0 <= r <= n <= " +
                                          std::to_string(Matroid::kMaxBound));
  }
  std::vector<int> ground(n);
  std::iota(ground.begin(), ground.end(), 1);
  std::vector<Mask> bases;
  ForEachSubsetOfSize(n, r, [&](Mask s) {
    bases.push_back(s);
    return true;
  });
  return Matroid::from_masks(std::move(ground), std::move(bases));
}

Matroid fano_matroid() {
  static const int kLines[7][3] = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7},
                                   {5, 6, 1}, {6, 7, 2}, {7, 1, 3}};
  std::vector<int> ground = {1, 2, 3, 4, 5, 6, 7};
  std::vector<std::vector<int>> bases;
  for (int a = 1; a <= 7; ++a) {
    for (int b = a + 1; b <= 7; ++b) {
      for (int c = b + 1; c <= 7; ++c) {
        bool on_line = false;
        for (const auto& line : kLines) {
          std::vector<int> l(line, line + 3);
          std::sort(l.begin(), l.end());
          on_line = on_line || (l == std::vector<int>{a, b, c});
        }
        if (!on_line) bases.push_back({a, b, c});
      }
    }
  }
  return Matroid::make(ground, bases);
}

namespace {

int ParseInt(std::string_view text, std::string_view name) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::BadParams,
                "bad parameter '" + std::string(text) + "' for " + std::string(name));
  }
  return value;
}

}  // namespace

Matroid named_matroid(std::string_view name) {
  std::string_view base = name;
  std::string_view params;
  if (auto colon = name.find(':'); colon != std::string_view::npos) {
    base = name.substr(0, colon);
    params = name.substr(colon + 1);
  } else if (auto paren = name.find('('); paren != std::string_view::npos &&
                                          name.back() == ')') {
    base = name.substr(0, paren);
    params = name.substr(paren + 1, name.size() - paren - 2);
  }
  if (base == "uniform" || base == "U" || base == "u") {
    auto comma = params.find(',');
    if (comma == std::string_view::npos) {
      throw Error(ErrorKind::BadParams, "uniform needs parameters r,n");
    }
    return uniform_matroid(ParseInt(params.substr(0, comma), name),
                           ParseInt(params.substr(comma + 1), name));
  }
  if (base == "free") {
    int n = ParseInt(params, name);
    return uniform_matroid(n, n);
  }
  if (!params.empty()) {
    throw Error(ErrorKind::BadParams, std::string(base) + " takes no parameters");
  }
  if (base == "fano" || base == "F7") return fano_matroid();
  if (base == "fano_dual" || base == "fano*" || base == "F7*") {
    return dual(fano_matroid());
  }
  if (base == "mk4") return cycle_matroid(complete_graph(4));
  if (base == "mk5") return cycle_matroid(complete_graph(5));
  if (base == "mk33") return cycle_matroid(complete_bipartite_graph(3, 3));
  throw Error(ErrorKind::UnknownName, "unknown matroid '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Circuits

std::vector<Mask> circuits(const Matroid& m) {
  const std::size_t n = m.size();
  std::vector<Mask> out;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    Mask set = static_cast<Mask>(s);
    if (m.is_independent(set)) continue;
    bool minimal = true;
    for (Mask rest = set; rest && minimal; rest &= rest - 1) {
      minimal = m.is_independent(set & ~(rest & -rest));
    }
    if (minimal) out.push_back(set);
  }
  CanonicalSort(out);
  return out;
}

std::vector<Mask> cocircuits(const Matroid& m) { return circuits(dual(m)); }

// ---------------------------------------------------------------------------
// Duality axioms

bool DualityAxiomReport::all_ok() const {
  if (!involution_ok || !ground_preserved_ok) return false;
  for (bool ok : delete_contract_ok) {
    if (!ok) return false;
  }
  for (bool ok : contract_delete_ok) {
    if (!ok) return false;
  }
  return true;
}

DualityAxiomReport check_duality_axioms(const Matroid& m) {
  DualityAxiomReport report;
  const Matroid d = dual(m);
  report.involution_ok = dual(d) == m;
  report.ground_preserved_ok = d.ground() == m.ground();
  for (int e : m.ground()) {
    report.elements.push_back(e);
    Matroid lhs_a = dual(delete_element(m, e));
    Matroid rhs_a = contract_element(d, e);
    Matroid lhs_b = dual(contract_element(m, e));
    Matroid rhs_b = delete_element(d, e);
    report.delete_contract_ok.push_back(lhs_a == rhs_a);
    report.contract_delete_ok.push_back(lhs_b == rhs_b);
    if (!report.counterexample) {
      if (!(lhs_a == rhs_a)) {
        report.counterexample = {e, "D(M\\e) = D(M)/e", lhs_a.bases(), rhs_a.bases()};
      } else if (!(lhs_b == rhs_b)) {
        report.counterexample = {e, "D(M/e) = D(M)\\e", lhs_b.bases(), rhs_b.bases()};
      }
    }
  }
  return report;
}

}  // namespace duality
