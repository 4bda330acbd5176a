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

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <sstream>

#include "duality/error.hpp"
#include "duality/graph.hpp"
#include "duality/matroid.hpp"

namespace duality {
namespace {

std::string Braced(const std::vector<int>& labels) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? " " : "") << labels[i];
  out << '}';
  return out.str();
}

struct Excluded {
  std::string name;
  Matroid matroid;
};

const std::vector<Excluded>& ExcludedMinors() {
  static const std::vector<Excluded> list = [] {
    Matroid mk5 = cycle_matroid(complete_graph(5));
    Matroid mk33 = cycle_matroid(complete_bipartite_graph(3, 3));
    return std::vector<Excluded>{
        {"U_{2,4}", uniform_matroid(2, 4)},
        {"F7", fano_matroid()},
        {"F7*", dual(fano_matroid())},
        {"M*(K5)", dual(mk5)},
        {"M*(K3,3)", dual(mk33)},
        {"M(K5)", mk5},
        {"M(K3,3)", mk33},
    };
  }();
  return list;
}

// Perfect matching of the elements of `set` (|set| == sets.size()) into
// distinct presentation sets.
struct Matcher {
  Mask set;
  const Mask* sets;
  std::array<int, 32> owner;  // element -> set index
  unsigned visited;

  bool Augment(int j) {
    for (Mask s = sets[j] & set; s; s &= s - 1) {
      const int x = std::countr_zero(s);
      if (visited >> x & 1u) continue;
      visited |= 1u << x;
      if (owner[x] < 0 || Augment(owner[x])) {
        owner[x] = j;
        return true;
      }
    }
    return false;
  }
};

// Size of a maximum matching between the elements of `set` and the first
// `count` entries of `sets` (Kuhn's augmenting paths).
int MatchingSize(Mask set, const std::vector<Mask>& sets, int count) {
  Matcher m{set, sets.data(), {}, 0};
  m.owner.fill(-1);
  int size = 0;
  for (int j = 0; j < count; ++j) {
    m.visited = 0;
    size += m.Augment(j);
  }
  return size;
}

bool IsTransversal(Mask set, const std::vector<Mask>& sets) {
  const int r = static_cast<int>(sets.size());
  return std::popcount(set) == r && MatchingSize(set, sets, r) == r;
}

// Graph with edge i standing for ground position i whose cycle matroid is m,
// searched over spanning trees carrying the fundamental circuits of the
// first basis as paths.
class GraphRealizer {
 public:
  explicit GraphRealizer(const Matroid& m, std::size_t node_budget)
      : m_(m), budget_(node_budget) {}

  std::optional<Multigraph> Run() {
    const int n = static_cast<int>(m_.size());
    const Mask loops = m_.loops();
    const Mask basis = m_.basis_masks().front();
    r_ = m_.rank();
    for (Mask s = basis; s; s &= s - 1) basis_elems_.push_back(std::countr_zero(s));
    for (int e = 0; e < n; ++e) {
      if ((basis >> e & 1u) || (loops >> e & 1u)) continue;
      Mask fc = 0;
      for (int b : basis_elems_) {
        if (m_.is_basis((basis & ~(Mask{1} << b)) | (Mask{1} << e))) fc |= Mask{1} << b;
      }
      circuits_.push_back({e, fc});
    }
    ends_.assign(n, {0, 0});
    if (!Place(0, r_ == 0 ? 1 : 0)) return std::nullopt;
    return result_;
  }

  bool exhausted_budget() const { return nodes_ > budget_; }

 private:
  struct Circuit {
    int element;
    Mask tree_part;
  };

  bool Place(std::size_t i, int used) {
    if (++nodes_ > budget_) return false;
    if (i == basis_elems_.size()) return used == r_ + 1 && Finish();
    const int b = basis_elems_[i];
    const int limit = std::min(used + 2, r_ + 1);
    for (int x = 0; x < limit; ++x) {
      for (int y = x + 1; y < limit; ++y) {
        // New vertices are introduced in order.
        if (x >= used && x != used) continue;
        if (y >= used && !(y == used || (x == used && y == used + 1))) continue;
        const int next_used = std::max(used, y + 1);
        if (Connected(i, x, y)) continue;
        ends_[b] = {x, y};
        if (PartialOk(i + 1) && Place(i + 1, next_used)) return true;
        if (nodes_ > budget_) return false;
      }
    }
    return false;
  }

  // Whether x and y are already joined by the first `count` placed edges.
  bool Connected(std::size_t count, int x, int y) const {
    std::vector<int> parent(r_ + 2);
    for (std::size_t v = 0; v < parent.size(); ++v) parent[v] = static_cast<int>(v);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v];
      return v;
    };
    for (std::size_t k = 0; k < count; ++k) {
      auto [a, c] = ends_[basis_elems_[k]];
      parent[find(a)] = find(c);
    }
    return find(x) == find(y);
  }

  // Placed edges of each circuit keep vertex degrees <= 2.
  bool PartialOk(std::size_t placed) const {
    Mask placed_mask = 0;
    for (std::size_t k = 0; k < placed; ++k) placed_mask |= Mask{1} << basis_elems_[k];
    for (const Circuit& c : circuits_) {
      std::vector<int> deg(r_ + 2, 0);
      for (Mask s = c.tree_part & placed_mask; s; s &= s - 1) {
        auto [a, b] = ends_[std::countr_zero(s)];
        if (++deg[a] > 2 || ++deg[b] > 2) return false;
      }
    }
    return true;
  }

  bool Finish() {
    std::vector<std::pair<int, int>> edges(m_.size(), {0, 0});
    for (int b : basis_elems_) edges[b] = ends_[b];
    for (const Circuit& c : circuits_) {
      std::vector<int> deg(r_ + 1, 0);
      int count = 0;
      for (Mask s = c.tree_part; s; s &= s - 1) {
        auto [a, b] = ends_[std::countr_zero(s)];
        ++deg[a];
        ++deg[b];
        ++count;
      }
      std::vector<int> odd;
      int touched = 0;
      for (int v = 0; v <= r_; ++v) {
        if (deg[v]) ++touched;
        if (deg[v] == 1) odd.push_back(v);
      }
      // A forest piece with touched - edges == 1 is connected: a path.
      if (odd.size() != 2 || touched - count != 1) return false;
      edges[c.element] = {odd[0], odd[1]};
    }
    Multigraph g = make_graph(r_ + 1, edges);
    std::vector<int> labels = m_.ground();
    if (!(relabel(cycle_matroid(g), labels) == m_)) return false;
    result_ = g;
    return true;
  }

  const Matroid& m_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  int r_ = 0;
  std::vector<int> basis_elems_;
  std::vector<Circuit> circuits_;
  std::vector<std::pair<int, int>> ends_;
  std::optional<Multigraph> result_;
};

std::string DescribeGraph(const Multigraph& g, const Matroid& m) {
  std::ostringstream out;
  out << "realized by a graph on " << g.vertex_count() << " vertices:";
  for (int e = 0; e < g.edge_count(); ++e) {
    out << ' ' << m.ground()[e] << "=(" << g.edge(e).u << ',' << g.edge(e).v << ')';
  }
  return out.str();
}

}  // namespace

std::string_view to_string(FlagVerdict::Kind kind) {
  switch (kind) {
    case FlagVerdict::Kind::ExcludedMinor: return "excluded-minor";
    case FlagVerdict::Kind::Realization: return "realization";
    case FlagVerdict::Kind::Exhaustion: return "exhaustion";
  }
  return "unknown";
}

TransversalSearch find_transversal_presentation(const Matroid& m,
                                                std::size_t exhaustive_limit) {
  TransversalSearch out;
  const int r = m.rank();
  if (r == 0) {
    out.presentation = std::vector<std::vector<int>>{};
    return out;
  }
  std::vector<Mask> candidates;
  if (m.size() <= exhaustive_limit) {
    // A set missing some basis B would leave B to be matched into r - 1
    // sets, so every set of a presentation meets every basis.
    const Mask usable = m.full_mask() & ~m.loops();
    for (Mask s = 1; s <= m.full_mask(); ++s) {
      if ((s & ~usable) != 0) continue;
      const auto& bs = m.basis_masks();
      if (std::all_of(bs.begin(), bs.end(), [s](Mask b) { return (b & s) != 0; })) {
        candidates.push_back(s);
      }
    }
  } else {
    out.exhaustive = false;
    candidates = cocircuits(m);
  }
  // All r-subsets, bases first so that most presentations fail fast.
  std::vector<Mask> bases = m.basis_masks();
  std::vector<Mask> non_bases;
  for (Mask s = 0; s <= m.full_mask(); ++s) {
    if (std::popcount(s) == r && !m.is_basis(s)) non_bases.push_back(s);
  }
  std::vector<Mask> chosen(r);
  std::function<bool(int, std::size_t)> pick = [&](int slot, std::size_t from) {
    if (slot == r) {
      ++out.presentations_examined;
      for (Mask b : bases) {
        if (!IsTransversal(b, chosen)) return false;
      }
      for (Mask s : non_bases) {
        if (IsTransversal(s, chosen)) return false;
      }
      return true;
    }
    for (std::size_t i = from; i < candidates.size(); ++i) {
      chosen[slot] = candidates[i];
      if (pick(slot + 1, i)) return true;
    }
    return false;
  };
  if (pick(0, 0)) {
    std::vector<std::vector<int>> sets;
    for (Mask s : chosen) sets.push_back(m.labels_of(s));
    out.presentation = std::move(sets);
  }
  return out;
}

ClassificationReport classify(const Matroid& m) {
  if (m.size() > kClassifyBound) {
    throw Error(ErrorKind::GroundTooLarge,
                "classification searches grounds of at most " +
                    std::to_string(kClassifyBound) + " elements");
  }
  const auto& excluded = ExcludedMinors();
  std::vector<std::optional<MinorSearch>> cache(excluded.size());
  auto search = [&](std::size_t i) -> const MinorSearch& {
    if (!cache[i]) cache[i] = find_minor(m, excluded[i].matroid);
    return *cache[i];
  };
  auto verdict = [&](std::initializer_list<std::size_t> list) {
    FlagVerdict v;
    std::size_t examined = 0, pairs = 0;
    std::string names;
    for (std::size_t i : list) {
      const MinorSearch& s = search(i);
      examined += s.candidates_examined;
      pairs += s.pairs_enumerated;
      names += (names.empty() ? "" : ", ") + excluded[i].name;
      if (s.witness) {
        v.holds = false;
        v.kind = FlagVerdict::Kind::ExcludedMinor;
        v.detail = excluded[i].name + " minor: delete " + Braced(s.witness->deletions) +
                   " contract " + Braced(s.witness->contractions);
        return v;
      }
    }
    v.holds = true;
    v.kind = FlagVerdict::Kind::Exhaustion;
    v.detail = "no minor isomorphic to " + names + " (exhaustive: " +
               std::to_string(pairs) + " deletion/contraction pairs, " +
               std::to_string(examined) + " isomorphism tests)";
    return v;
  };

  ClassificationReport report;
  report.binary = verdict({0});
  report.regular = verdict({0, 1, 2});
  report.graphic = verdict({0, 1, 2, 3, 4});
  report.cographic = verdict({0, 1, 2, 5, 6});
  if (report.graphic.holds) {
    GraphRealizer realizer(m, 2'000'000);
    if (auto g = realizer.Run()) {
      report.graphic.kind = FlagVerdict::Kind::Realization;
      report.graphic.detail = DescribeGraph(*g, m) + "; " + report.graphic.detail;
    }
  }
  if (report.cographic.holds) {
    Matroid d = dual(m);
    GraphRealizer realizer(d, 2'000'000);
    if (auto g = realizer.Run()) {
      report.cographic.kind = FlagVerdict::Kind::Realization;
      report.cographic.detail = "dual " + DescribeGraph(*g, d) + "; " + report.cographic.detail;
    }
  }
  TransversalSearch t = find_transversal_presentation(m);
  report.transversal.holds = t.presentation.has_value();
  if (t.presentation) {
    report.transversal.kind = FlagVerdict::Kind::Realization;
    std::string sets;
    for (const auto& s : *t.presentation) sets += (sets.empty() ? "" : " ") + Braced(s);
    report.transversal.detail = "presentation " + (sets.empty() ? "()" : sets);
  } else {
    report.transversal.kind = FlagVerdict::Kind::Exhaustion;
    report.transversal.detail =
        "no presentation among " + std::to_string(t.presentations_examined) +
        (t.exhaustive ? " multisets of rank-many subsets (exhaustive)"
                      : " multisets of rank-many cocircuits (exhaustive)");
  }
  return report;
}

}  // namespace duality
