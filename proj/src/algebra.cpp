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

#include "duality/algebra.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "duality/error.hpp"

namespace duality {
namespace {

using Table = std::vector<std::vector<BasisProduct>>;

// Basis conjugation: e_0 fixed, every other unit negated.
int ConjSign(int i) { return i == 0 ? 1 : -1; }

Table DoubleTable(const Table& half) {
  const int m = static_cast<int>(half.size());
  Table t(2 * m, std::vector<BasisProduct>(2 * m));
  for (int i = 0; i < 2 * m; ++i) {
    for (int j = 0; j < 2 * m; ++j) {
      const bool hi_i = i >= m, hi_j = j >= m;
      const int a = i % m, b = j % m;
      BasisProduct p;
      if (!hi_i && !hi_j) {
        // (e_a, 0)(e_b, 0) = (e_a e_b, 0)
        p = half[a][b];
      } else if (!hi_i && hi_j) {
        // (e_a, 0)(0, e_b) = (0, e_b e_a)
        p = half[b][a];
        p.index += m;
      } else if (hi_i && !hi_j) {
        // (0, e_a)(e_b, 0) = (0, e_a conj(e_b))
        p = half[a][b];
        p.sign *= ConjSign(b);
        p.index += m;
      } else {
        // (0, e_a)(0, e_b) = (-conj(e_b) e_a, 0)
        p = half[b][a];
        p.sign *= -ConjSign(b);
      }
      t[i][j] = p;
    }
  }
  return t;
}

std::uint64_t Draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

Vector RandomElement(std::mt19937_64& rng, int dim) {
  Vector v(dim);
  for (auto& c : v) c = static_cast<int>(Draw(rng, 11)) - 5;
  return v;
}

bool Alternative(const HypercomplexAlgebra& alg, const Vector& x, const Vector& y) {
  const Vector xx = multiply(alg, x, x);
  return multiply(alg, xx, y) == multiply(alg, x, multiply(alg, x, y)) &&
         multiply(alg, multiply(alg, y, x), x) == multiply(alg, y, xx);
}

bool NormMultiplicative(const HypercomplexAlgebra& alg, const Vector& x, const Vector& y) {
  return norm_sq(multiply(alg, x, y)) == norm_sq(x) * norm_sq(y);
}

}  // namespace

HypercomplexAlgebra::HypercomplexAlgebra(std::string name, Provenance provenance,
                                         std::vector<std::vector<BasisProduct>> table)
    : name_(std::move(name)), provenance_(provenance), table_(std::move(table)) {}

HypercomplexAlgebra cayley_dickson_algebra(int level) {
  if (level < 0 || level > 4) {
    throw Error(ErrorKind::LevelTooLarge,
                "Cayley-Dickson level " + std::to_string(level) + " outside 0..4");
  }
  static const char* kNames[] = {"R", "C", "H", "O", "S"};
  Table t = {{BasisProduct{1, 0}}};
  for (int k = 0; k < level; ++k) t = DoubleTable(t);
  return HypercomplexAlgebra(kNames[level], Provenance::CayleyDickson, std::move(t));
}

HypercomplexAlgebra fano_octonion_algebra() {
  static const int kLines[7][3] = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7},
                                   {5, 6, 1}, {6, 7, 2}, {7, 1, 3}};
  Table t(8, std::vector<BasisProduct>(8));
  for (int i = 0; i < 8; ++i) {
    t[0][i] = {1, i};
    t[i][0] = {1, i};
    if (i > 0) t[i][i] = {-1, 0};
  }
  for (const auto& line : kLines) {
    for (int s = 0; s < 3; ++s) {
      int i = line[s], j = line[(s + 1) % 3], k = line[(s + 2) % 3];
      t[i][j] = {1, k};
      t[j][i] = {-1, k};
    }
  }
  return HypercomplexAlgebra("O-fano", Provenance::FanoLines, std::move(t));
}

HypercomplexAlgebra algebra_by_name(std::string_view name) {
  if (name == "r" || name == "R") return cayley_dickson_algebra(0);
  if (name == "c" || name == "C") return cayley_dickson_algebra(1);
  if (name == "h" || name == "H") return cayley_dickson_algebra(2);
  if (name == "o" || name == "O") return cayley_dickson_algebra(3);
  if (name == "o-fano" || name == "O-fano") return fano_octonion_algebra();
  if (name == "sedenion" || name == "s" || name == "S") return cayley_dickson_algebra(4);
  throw Error(ErrorKind::UnknownName, "unknown algebra '" + std::string(name) + "'");
}

Vector basis_element(int dim, int i) {
  if (i < 0 || i >= dim) {
    throw Error(ErrorKind::IndexOutOfRange,
                "basis index " + std::to_string(i) + " outside 0.." + std::to_string(dim - 1));
  }
  Vector v(dim);
  v[i] = 1;
  return v;
}

Vector multiply(const HypercomplexAlgebra& alg, const Vector& x, const Vector& y) {
  const int dim = alg.dim();
  if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim) {
    throw Error(ErrorKind::DimMismatch,
                "operands of length " + std::to_string(x.size()) + " and " +
                    std::to_string(y.size()) + " in an algebra of dimension " +
                    std::to_string(dim));
  }
  Vector out(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      const BasisProduct& p = alg.product(i, j);
      if (p.sign > 0) {
        out[p.index] += x[i] * y[j];
      } else {
        out[p.index] -= x[i] * y[j];
      }
    }
  }
  return out;
}

Vector conjugate(const Vector& x) {
  Vector c = x;
  for (std::size_t i = 1; i < c.size(); ++i) c[i] = -c[i];
  return c;
}

Rational norm_sq(const Vector& x) { return dot(x, x); }

NormConjugate norm_and_conjugate(const HypercomplexAlgebra& alg, const Vector& x) {
  if (static_cast<int>(x.size()) != alg.dim()) {
    throw Error(ErrorKind::DimMismatch, "element length does not match the algebra");
  }
  return {norm_sq(x), conjugate(x)};
}

std::optional<ElementPair> find_zero_divisor(const HypercomplexAlgebra& alg,
                                             std::size_t* examined) {
  const int dim = alg.dim();
  struct Candidate {
    int i, j, s;
  };
  std::vector<Candidate> family;
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      family.push_back({i, j, 1});
      family.push_back({i, j, -1});
    }
  }
  std::size_t count = 0;
  std::vector<int> acc(dim);
  auto add = [&](int a, int b, int coeff) {
    const BasisProduct& p = alg.product(a, b);
    acc[p.index] += p.sign * coeff;
  };
  for (const Candidate& x : family) {
    for (const Candidate& y : family) {
      ++count;
      std::fill(acc.begin(), acc.end(), 0);
      add(x.i, y.i, 1);
      add(x.i, y.j, y.s);
      add(x.j, y.i, x.s);
      add(x.j, y.j, x.s * y.s);
      if (std::all_of(acc.begin(), acc.end(), [](int c) { return c == 0; })) {
        if (examined) *examined = count;
        ElementPair pair{Vector(dim), Vector(dim)};
        pair.x[x.i] = 1;
        pair.x[x.j] = x.s;
        pair.y[y.i] = 1;
        pair.y[y.j] = y.s;
        return pair;
      }
    }
  }
  if (examined) *examined = count;
  return std::nullopt;
}

DivisionAlgebraReport division_algebra_report(const HypercomplexAlgebra& alg,
                                              std::size_t sample_count,
                                              std::uint64_t seed) {
  const int dim = alg.dim();
  DivisionAlgebraReport report;
  report.seed = seed;
  report.samples = sample_count;
  report.norm_multiplicative = true;
  report.alternative = true;

  auto check = [&](const Vector& x, const Vector& y) {
    if (report.norm_multiplicative && !NormMultiplicative(alg, x, y)) {
      report.norm_multiplicative = false;
      report.norm_counterexample = ElementPair{x, y};
    }
    if (report.alternative && !Alternative(alg, x, y)) {
      report.alternative = false;
      report.alternativity_counterexample = ElementPair{x, y};
    }
  };
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      check(basis_element(dim, i), basis_element(dim, j));
      ++report.basis_pairs_checked;
    }
  }
  // Sums of two units against a unit: the smallest family on which the
  // sedenions already lose alternativity.
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      for (int sgn : {1, -1}) {
        Vector x = basis_element(dim, i);
        x[j] = sgn;
        for (int k = 0; k < dim; ++k) check(x, basis_element(dim, k));
      }
    }
  }
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < sample_count; ++s) {
    Vector x = RandomElement(rng, dim);
    Vector y = RandomElement(rng, dim);
    check(x, y);
  }
  report.zero_divisor = find_zero_divisor(alg, &report.zero_divisor_candidates);
  return report;
}

}  // namespace duality
