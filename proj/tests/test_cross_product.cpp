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

#include <random>

#include "duality/algebra.hpp"
#include "duality/error.hpp"
#include "duality/matroid.hpp"

using namespace duality;

namespace {

Vector E(int n, int i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

// Cofactor expansion along the first row.
Rational Cofactor(const std::vector<Vector>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Rational det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<Vector> sub;
    for (std::size_t r = 1; r < n; ++r) {
      Vector row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      sub.push_back(row);
    }
    det += (c % 2 ? -1 : 1) * m[0][c] * Cofactor(sub);
  }
  return det;
}

// X(a_1..a_{n-1})_i = det[a_1, ..., a_{n-1}, e_i] (arguments as columns).
Vector EpsilonOracle(const std::vector<Vector>& args, int n) {
  Vector out(n);
  for (int i = 0; i < n; ++i) {
    std::vector<Vector> m(n, Vector(n));
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c + 1 < n; ++c) m[r][c] = args[c][r];
      m[r][n - 1] = r == i ? 1 : 0;
    }
    out[i] = Cofactor(m);
  }
  return out;
}

}  // namespace

TEST_CASE("case parsing") {
  CHECK(CrossProductCase::parse("three").r == 2);
  CHECK(CrossProductCase::parse("seven").n == 7);
  const auto t = CrossProductCase::parse("triple8");
  CHECK(t.n == 8);
  CHECK(t.r == 3);
  const auto e = CrossProductCase::parse("epsilon:5");
  CHECK(e.n == 5);
  CHECK(e.r == 4);
  const auto j = CrossProductCase::parse("j:6");
  CHECK(j.r == 1);
  CHECK(j.name() == "j:6");
  CHECK_THROWS_AS(CrossProductCase::parse("j:5"), Error);
  CHECK_THROWS_AS(CrossProductCase::parse("epsilon:x"), Error);
  CHECK_THROWS_AS(CrossProductCase::parse("five"), Error);
}

TEST_CASE("basic products") {
  const Vector e1 = E(3, 0), e2 = E(3, 1), e3 = E(3, 2);
  CHECK(cross_product(CrossProductCase::three(), std::vector<Vector>{e1, e2}) == e3);
  CHECK(cross_product(CrossProductCase::seven(), std::vector<Vector>{E(7, 0), E(7, 1)}) == E(7, 3));
  CHECK(cross_product(CrossProductCase::epsilon(4),
                      std::vector<Vector>{E(4, 0), E(4, 1), E(4, 2)}) == E(4, 3));
  const auto j = CrossProductCase::complex_structure(4);
  const Vector x{1, 2, 3, 4};
  const Vector jx = cross_product(j, std::vector<Vector>{x});
  CHECK(cross_product(j, std::vector<Vector>{jx}) == Vector{-1, -2, -3, -4});
  CHECK_THROWS_AS(cross_product(CrossProductCase::three(), std::vector<Vector>{e1}), Error);
  CHECK_THROWS_AS(cross_product(CrossProductCase::three(), std::vector<Vector>{e1, E(4, 0)}), Error);
}

TEST_CASE("epsilon product matches cofactor determinants") {
  std::mt19937_64 rng(71);
  for (int n = 2; n <= 6; ++n) {
    const auto c = CrossProductCase::epsilon(n);
    for (int t = 0; t < 25; ++t) {
      std::vector<Vector> args(n - 1, Vector(n));
      for (auto& a : args)
        for (auto& x : a) x = static_cast<int>(rng() % 7) - 3;
      CHECK(cross_product(c, args) == EpsilonOracle(args, n));
    }
  }
  // the three-dimensional case is the n = 3 epsilon product
  std::vector<Vector> args{{1, 2, 3}, {-4, 0, 5}};
  CHECK(cross_product(CrossProductCase::three(), args) == EpsilonOracle(args, 3));
}

TEST_CASE("triple product on an orthonormal imaginary triple") {
  const auto t = CrossProductCase::triple8();
  std::vector<Vector> args{E(8, 1), E(8, 2), E(8, 3)};
  const Vector x = cross_product(t, args);
  for (const auto& a : args) CHECK(dot(x, a) == 0);
  CHECK(dot(x, x) == 1);
}

TEST_CASE("axiom reports pass for every admissible case") {
  std::vector<CrossProductCase> cases{CrossProductCase::three(), CrossProductCase::seven(),
                                      CrossProductCase::triple8()};
  for (int n : {2, 4, 6, 8}) cases.push_back(CrossProductCase::complex_structure(n));
  for (int n : {2, 3, 4, 5}) cases.push_back(CrossProductCase::epsilon(n));
  for (const auto& c : cases) {
    const auto r = cross_axioms_report(c, 40, 5);
    CHECK_MESSAGE(r.ok(), c.name(), ": ", r.first_failure);
    std::size_t expect = 1;
    for (int i = 0; i < c.r; ++i) expect *= c.n;
    CHECK(r.basis_tuples == expect);
    CHECK(r.random_tuples == 40);
  }
  const auto seven = cross_axioms_report(CrossProductCase::seven(), 0, 1);
  CHECK(seven.norm_identity_ok);
}

TEST_CASE("epsilon symbol") {
  CHECK(epsilon_symbol(std::vector<int>{1, 2, 3}) == 1);
  CHECK(epsilon_symbol(std::vector<int>{2, 1, 3}) == -1);
  CHECK(epsilon_symbol(std::vector<int>{1, 1, 3}) == 0);
  CHECK(epsilon_symbol(std::vector<int>{4, 1, 2, 3}) == -1);
  CHECK_THROWS_AS(epsilon_symbol(std::vector<int>{1, 4, 2}), Error);
}

TEST_CASE("k-subsets") {
  CHECK(k_subsets(4, 2) == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(k_subsets(3, 0) == std::vector<std::vector<int>>{{}});
  CHECK(k_subsets(2, 3).empty());
}

TEST_CASE("Hodge dual") {
  // n = 3: *(e1^e2) = e3
  KVector w{3, 2, {1, 0, 0}};
  auto d = hodge_dual(w);
  CHECK(d.k == 1);
  CHECK(d.coeffs == Vector{0, 0, 1});
  // n = 4, k = 2: *(e1^e2) = e3^e4
  d = hodge_dual(KVector{4, 2, {1, 0, 0, 0, 0, 0}});
  CHECK(d.coeffs == Vector{0, 0, 0, 0, 0, 1});
  // ** = (-1)^{k(n-k)} on every basis k-vector, k <= n <= 6
  for (int n = 0; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      const std::size_t count = k_subsets(n, k).size();
      for (std::size_t i = 0; i < count; ++i) {
        KVector b{n, k, Vector(count)};
        b.coeffs[i] = 1;
        const auto dd = hodge_dual(hodge_dual(b));
        Vector expect = b.coeffs;
        if ((k * (n - k)) % 2) for (auto& c : expect) c = -c;
        CHECK(dd.coeffs == expect);
      }
    }
  }
  std::mt19937_64 rng(73);
  KVector r{4, 2, Vector(6)};
  for (auto& c : r.coeffs) c = static_cast<int>(rng() % 11) - 5;
  CHECK(hodge_dual(hodge_dual(r)).coeffs == r.coeffs);
  CHECK_THROWS_AS(hodge_dual(KVector{9, 1, Vector(9)}), Error);
  CHECK_THROWS_AS(hodge_dual(KVector{3, 1, Vector(2)}), Error);
}

TEST_CASE("chirotopes") {
  auto chi = chirotope_of_configuration({{1, 0}, {0, 1}, {1, 1}});
  CHECK(chi.signs() == std::vector<int>{1, 1, -1});
  // one collinear triple among four points in the affine plane
  chi = chirotope_of_configuration({{0, 0, 1}, {1, 0, 1}, {2, 0, 1}, {0, 1, 1}});
  CHECK(std::count(chi.signs().begin(), chi.signs().end(), 0) == 1);
  CHECK(chi.sign(std::vector<int>{1, 2, 3}) == 0);
  CHECK(chi.sign(std::vector<int>{2, 1, 4}) == -chi.sign(std::vector<int>{1, 2, 4}));
  CHECK(chi.sign(std::vector<int>{1, 1, 4}) == 0);
  const auto u24 = chirotope_of_configuration({{1, 0}, {0, 1}, {1, 1}, {1, 2}});
  CHECK(chirotope_support(u24) == uniform_matroid(2, 4));
  CHECK_THROWS_AS(chirotope_of_configuration({{1, 2}, {2, 4}}), Error);
  CHECK_THROWS_AS(chirotope_of_configuration(std::vector<Vector>(11, Vector{1})), Error);
  CHECK_THROWS_AS(chirotope_of_configuration({{1, 0, 0, 0, 0}}), Error);
  CHECK_THROWS_AS(Chirotope(3, 2, {0, 0, 0}), Error);
}
