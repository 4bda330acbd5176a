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

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "duality/error.hpp"
#include "duality/generators.hpp"
#include "duality/graph.hpp"
#include "duality/matroid.hpp"

using namespace duality;

namespace {

using Family = std::set<std::vector<int>>;

Family BasesOf(const Matroid& m) {
  auto b = m.bases();
  return Family(b.begin(), b.end());
}

// Brute force over all bijections of the sorted grounds.
bool IsoOracle(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size()) return false;
  const Family fb = BasesOf(b);
  std::vector<int> perm(b.ground());
  std::sort(perm.begin(), perm.end());
  do {
    bool ok = a.basis_count() == fb.size();
    for (const auto& basis : a.bases()) {
      if (!ok) break;
      std::vector<int> image;
      for (int x : basis) image.push_back(perm[a.position_of(x)]);
      std::sort(image.begin(), image.end());
      ok = fb.count(image) > 0;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Fraction-free determinant on integers.
long long Bareiss(std::vector<std::vector<long long>> m) {
  const int n = static_cast<int>(m.size());
  long long prev = 1, sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Matrix-tree theorem: any cofactor of the Laplacian.
long long SpanningTrees(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<long long>> lap(n, std::vector<long long>(n));
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    ++lap[e.u][e.u];
    ++lap[e.v][e.v];
    --lap[e.u][e.v];
    --lap[e.v][e.u];
  }
  if (n == 1) return 1;
  std::vector<std::vector<long long>> minor(n - 1, std::vector<long long>(n - 1));
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) minor[i - 1][j - 1] = lap[i][j];
  }
  return Bareiss(minor);
}

// Largest acyclic subset of the given edges, by union-find.
int ForestRank(const Multigraph& g, const std::vector<int>& edges) {
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int r = 0;
  for (int e : edges) {
    int a = find(g.edge(e).u), b = find(g.edge(e).v);
    if (a != b) {
      parent[a] = b;
      ++r;
    }
  }
  return r;
}

std::vector<std::vector<int>> FanoTriples() {
  const Family lines{{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {1, 5, 6}, {2, 6, 7}, {1, 3, 7}};
  std::vector<std::vector<int>> out;
  for (int a = 1; a <= 7; ++a)
    for (int b = a + 1; b <= 7; ++b)
      for (int c = b + 1; c <= 7; ++c)
        if (!lines.count({a, b, c})) out.push_back({a, b, c});
  return out;
}

std::vector<Matroid> SampleMatroids() {
  std::vector<Matroid> out{uniform_matroid(2, 4), uniform_matroid(0, 3), uniform_matroid(3, 3),
                           uniform_matroid(2, 5), fano_matroid(),        dual(fano_matroid()),
                           named_matroid("mk4"),  named_matroid("free:1")};
  Rng rng(5);
  for (int i = 0; i < 15; ++i) out.push_back(cycle_matroid(random_multigraph(rng, 5, 7)));
  return out;
}

}  // namespace

TEST_CASE("make validates the basis axioms") {
  const auto u23 = Matroid::make({1, 2, 3}, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(u23 == uniform_matroid(2, 3));
  CHECK(u23.rank() == 2);

  const auto fano = Matroid::make({1, 2, 3, 4, 5, 6, 7}, FanoTriples());
  CHECK(fano.basis_count() == 28);
  CHECK(fano == fano_matroid());

  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::ParseError;
  };
  CHECK(kind_of([] { Matroid::make({1, 2}, {{1}, {1, 2}}); }) == ErrorKind::ContainmentViolation);
  CHECK(kind_of([] { Matroid::make({1, 2}, {}); }) == ErrorKind::EmptyBases);
  CHECK(kind_of([] { Matroid::make({1, 2, 3, 4}, {{1, 2}, {3, 4}}); }) == ErrorKind::ExchangeFailure);
  CHECK(kind_of([] { Matroid::make({1, 2}, {{1, 5}}); }) == ErrorKind::ElementNotInGround);
  CHECK(kind_of([] { Matroid::make({1, 2, 3}, {{1}}, 2); }) == ErrorKind::GroundTooLarge);
}

TEST_CASE("bases come out in canonical lexicographic order") {
  const auto m = Matroid::make({3, 1, 2}, {{3, 2}, {2, 1}, {1, 3}});
  CHECK(m.ground() == std::vector<int>{1, 2, 3});
  CHECK(m.bases() == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("dual complements every basis") {
  CHECK(dual(uniform_matroid(2, 3)) == uniform_matroid(1, 3));
  CHECK(dual(dual(fano_matroid())) == fano_matroid());
  const auto fd = dual(fano_matroid());
  CHECK(fd.basis_count() == 28);
  for (const auto& b : fd.bases()) CHECK(b.size() == 4);
  for (const Matroid& m : SampleMatroids()) {
    const auto d = dual(m);
    CHECK(dual(d) == m);
    CHECK(d.rank() == static_cast<int>(m.size()) - m.rank());
    CHECK(BasesOf(dual(d)) == BasesOf(m));
  }
}

TEST_CASE("rank from bases matches the spanning-forest oracle") {
  CHECK(rank_of(fano_matroid(), fano_matroid().ground()) == 3);
  const std::vector<int> one{1};
  CHECK(rank_of(uniform_matroid(2, 4), one) == 1);
  const auto k4 = complete_graph(4);
  const auto mk4 = cycle_matroid(k4);
  // every subset of K4's edges
  for (Mask s = 0; s < (1u << 6); ++s) {
    std::vector<int> edges;
    for (int e = 0; e < 6; ++e)
      if (s >> e & 1) edges.push_back(e);
    CHECK(rank_of(mk4, edges) == ForestRank(k4, edges));
  }
  const std::vector<int> bad{9};
  CHECK_THROWS_AS(rank_of(mk4, bad), Error);
}

TEST_CASE("rank is submodular on small matroids") {
  for (const Matroid& m : SampleMatroids()) {
    if (m.size() > 6) continue;
    const Mask full = m.full_mask();
    for (Mask a = 0; a <= full; ++a) {
      for (Mask b = 0; b <= full; ++b) {
        CHECK(rank_of_mask(m, a | b) + rank_of_mask(m, a & b) <=
              rank_of_mask(m, a) + rank_of_mask(m, b));
      }
    }
  }
}

TEST_CASE("minors") {
  const auto f7 = fano_matroid();
  const std::vector<int> none, seven{7}, one{1};
  const auto del = minor(f7, seven, none);
  CHECK(IsoOracle(del, named_matroid("mk4")));
  CHECK(is_isomorphic(del, named_matroid("mk4")));

  const auto con = minor(f7, none, seven);
  CHECK(con.rank() == 2);
  CHECK(con.size() == 6);
  CHECK(con.basis_count() == 12);

  const auto u24 = uniform_matroid(2, 4);
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      if (a == b) continue;
      CHECK(contract_element(delete_element(u24, a), b) ==
            delete_element(contract_element(u24, b), a));
      const std::vector<int> d{a}, c{b};
      CHECK(minor(u24, d, c) == contract_element(delete_element(u24, a), b));
    }
  }
  const std::vector<int> overlap{1};
  CHECK_THROWS_AS(minor(u24, overlap, overlap), Error);
  const std::vector<int> dependent{1, 2, 3};
  CHECK_THROWS_AS(minor(u24, none, dependent), Error);
}

TEST_CASE("loops and coloops") {
  // element 3 is a loop, element 1 a coloop
  const auto m = Matroid::make({1, 2, 3}, {{1, 2}});
  CHECK(m.labels_of(m.loops()) == std::vector<int>{3});
  CHECK(contract_element(m, 3) == delete_element(m, 3));
  CHECK(delete_element(m, 1).bases() == std::vector<std::vector<int>>{{2}});
  const std::vector<int> none, loop{3};
  CHECK(minor(m, none, loop) == delete_element(m, 3));
}

TEST_CASE("isomorphism agrees with the permutation oracle") {
  const auto u24 = uniform_matroid(2, 4);
  CHECK(is_isomorphic(u24, dual(u24)));
  CHECK_FALSE(is_isomorphic(fano_matroid(), dual(fano_matroid())));
  const std::vector<int> shift{2, 3, 4, 5, 6, 7, 1};
  const auto rotated = relabel(fano_matroid(), shift);
  CHECK(rotated.ground() == fano_matroid().ground());
  const auto iso = find_isomorphism(fano_matroid(), rotated);
  REQUIRE(iso);
  CHECK(IsoOracle(fano_matroid(), rotated));

  const auto samples = SampleMatroids();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = 0; j < samples.size(); ++j) {
      if (samples[i].size() > 7 || samples[i].size() != samples[j].size()) continue;
      const auto found = find_isomorphism(samples[i], samples[j]);
      CHECK(found.has_value() == IsoOracle(samples[i], samples[j]));
      if (found) {
        // the bijection really maps bases to bases
        Family image;
        for (const auto& b : samples[i].bases()) {
          std::vector<int> im;
          for (int x : b) im.push_back(found->mapping[samples[i].position_of(x)]);
          std::sort(im.begin(), im.end());
          image.insert(im);
        }
        CHECK(image == BasesOf(samples[j]));
      }
    }
  }
}

TEST_CASE("minor search") {
  const auto u24 = uniform_matroid(2, 4);
  const auto s = find_minor(u24, u24);
  REQUIRE(s.witness);
  CHECK(s.witness->deletions.empty());
  CHECK(s.witness->contractions.empty());
  CHECK_FALSE(has_minor(fano_matroid(), u24));
  const auto mk5 = named_matroid("mk5");
  const auto w = find_minor(mk5, named_matroid("mk4"));
  REQUIRE(w.witness);
  CHECK(is_isomorphic(minor(mk5, w.witness->deletions, w.witness->contractions),
                      named_matroid("mk4")));
}

TEST_CASE("named matroids") {
  CHECK(uniform_matroid(2, 4).basis_count() == 6);
  CHECK(named_matroid("uniform:2,4") == uniform_matroid(2, 4));
  CHECK(named_matroid("uniform(2,4)") == uniform_matroid(2, 4));
  CHECK(named_matroid("fano").basis_count() == 28);
  CHECK(named_matroid("fano_dual") == dual(fano_matroid()));
  const auto mk5 = named_matroid("mk5");
  CHECK(mk5.rank() == 4);
  CHECK(mk5.size() == 10);
  CHECK(static_cast<long long>(mk5.basis_count()) == SpanningTrees(complete_graph(5)));
  CHECK(static_cast<long long>(named_matroid("mk33").basis_count()) ==
        SpanningTrees(complete_bipartite_graph(3, 3)));
  CHECK_THROWS_AS(named_matroid("nope"), Error);
  CHECK_THROWS_AS(named_matroid("uniform:5,3"), Error);
}

TEST_CASE("cycle matroid basis counts match the matrix-tree theorem") {
  Rng rng(17);
  for (int i = 0; i < 40; ++i) {
    const auto emb = random_planar_embedding(rng, 6, 9);
    const auto& g = emb.graph();
    CHECK(static_cast<long long>(cycle_matroid(g).basis_count()) == SpanningTrees(g));
  }
}

TEST_CASE("direct sums") {
  const auto u11 = uniform_matroid(1, 1);
  const auto free2 = direct_sum(u11, u11);
  CHECK(free2.size() == 2);
  CHECK(free2.basis_count() == 1);
  CHECK(free2.rank() == 2);
  const auto a = uniform_matroid(2, 3), b = relabel(uniform_matroid(1, 2), std::vector<int>{4, 5});
  CHECK(dual(direct_sum(a, b)) == direct_sum(dual(a), dual(b)));
  const auto two_triangles = make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  const auto c3 = cycle_matroid(cycle_graph(3));
  CHECK(cycle_matroid(two_triangles) == direct_sum(c3, c3));
}

TEST_CASE("duality axioms hold on every sample") {
  for (const Matroid& m : SampleMatroids()) {
    const auto r = check_duality_axioms(m);
    CHECK(r.all_ok());
    CHECK(r.elements.size() == m.size());
    for (int e : m.ground()) {
      CHECK(dual(delete_element(m, e)) == contract_element(dual(m), e));
      CHECK(dual(contract_element(m, e)) == delete_element(dual(m), e));
    }
  }
  CHECK(check_duality_axioms(named_matroid("free:1")).all_ok());
}

TEST_CASE("circuits and cocircuits") {
  const auto f7 = fano_matroid();
  CHECK(circuits(f7).size() == 14);  // 7 lines + 7 line complements
  const auto c = cocircuits(f7);
  CHECK(c.size() == 7);
  for (Mask x : c) CHECK(std::popcount(x) == 4);
}
