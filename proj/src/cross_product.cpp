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
#include <random>

#include "duality/algebra.hpp"
#include "duality/error.hpp"

namespace duality {
namespace {

constexpr int kMaxCrossDim = 8;

int ParseDim(std::string_view text, std::string_view whole) {
  int n = 0;
  if (text.empty() || text.size() > 3) {
    throw Error(ErrorKind::BadParams, "bad dimension in case '" + std::string(whole) + "'");
  }
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw Error(ErrorKind::BadParams, "bad dimension in case '" + std::string(whole) + "'");
    }
    n = n * 10 + (ch - '0');
  }
  return n;
}

const HypercomplexAlgebra& Octonions() {
  static const HypercomplexAlgebra alg = fano_octonion_algebra();
  return alg;
}

// Sum over injective assignments of indices to the arguments; the last slot
// of the epsilon symbol is the output component.
void EpsilonProduct(std::span<const Vector> args, int n, Vector& out) {
  const int r = static_cast<int>(args.size());
  std::vector<int> chosen;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int slot, const Rational& coeff) -> void {
    if (slot == r) {
      for (int i = 0; i < n; ++i) {
        if (used[i]) continue;
        chosen.push_back(i + 1);
        const int sign = epsilon_symbol(chosen);
        chosen.pop_back();
        if (sign > 0) {
          out[i] += coeff;
        } else if (sign < 0) {
          out[i] -= coeff;
        }
      }
      return;
    }
    for (int j = 0; j < n; ++j) {
      if (used[j] || args[slot][j] == 0) continue;
      used[j] = true;
      chosen.push_back(j + 1);
      self(self, slot + 1, coeff * args[slot][j]);
      chosen.pop_back();
      used[j] = false;
    }
  };
  rec(rec, 0, Rational(1));
}

Vector Embed(const Vector& x) {
  Vector v(8);
  for (int i = 0; i < 7; ++i) v[i + 1] = x[i];
  return v;
}

Vector Scale(const Vector& v, const Rational& s) {
  Vector out = v;
  for (auto& c : out) c *= s;
  return out;
}

Vector Add(const Vector& a, const Vector& b) {
  Vector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Vector RandomVector(std::mt19937_64& rng, int n) {
  Vector v(n);
  for (auto& c : v) c = static_cast<int>(rng() % 11) - 5;
  return v;
}

std::string DescribeTuple(std::span<const Vector> args) {
  std::string s = "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) s += "; ";
    s += format_vector(args[i]);
  }
  return s + ")";
}

}  // namespace

CrossProductCase CrossProductCase::complex_structure(int n) {
  if (n < 2 || n % 2 != 0 || n > kMaxCrossDim) {
    throw Error(ErrorKind::BadParams,
                "complex structure needs even n in 2.." + std::to_string(kMaxCrossDim));
  }
  return {Kind::ComplexStructure, n, 1};
}

CrossProductCase CrossProductCase::epsilon(int n) {
  if (n < 2 || n > kMaxCrossDim) {
    throw Error(ErrorKind::BadParams,
                "epsilon product needs n in 2.." + std::to_string(kMaxCrossDim));
  }
  return {Kind::Epsilon, n, n - 1};
}

CrossProductCase CrossProductCase::three() { return {Kind::Three, 3, 2}; }
CrossProductCase CrossProductCase::seven() { return {Kind::Seven, 7, 2}; }
CrossProductCase CrossProductCase::triple8() { return {Kind::Triple8, 8, 3}; }

CrossProductCase CrossProductCase::parse(std::string_view text) {
  if (text == "three") return three();
  if (text == "seven") return seven();
  if (text == "triple8") return triple8();
  if (text.starts_with("epsilon:")) return epsilon(ParseDim(text.substr(8), text));
  if (text.starts_with("j:")) return complex_structure(ParseDim(text.substr(2), text));
  throw Error(ErrorKind::UnknownName, "unknown cross-product case '" + std::string(text) + "'");
}

std::string CrossProductCase::name() const {
  switch (kind) {
    case Kind::ComplexStructure:
      return "j:" + std::to_string(n);
    case Kind::Epsilon:
      return "epsilon:" + std::to_string(n);
    case Kind::Three:
      return "three";
    case Kind::Seven:
      return "seven";
    case Kind::Triple8:
      return "triple8";
  }
  return "?";
}

Vector cross_product(const CrossProductCase& c, std::span<const Vector> args) {
  if (static_cast<int>(args.size()) != c.r) {
    throw Error(ErrorKind::CaseArityMismatch,
                c.name() + " takes " + std::to_string(c.r) + " arguments, got " +
                    std::to_string(args.size()));
  }
  for (const Vector& a : args) {
    if (static_cast<int>(a.size()) != c.n) {
      throw Error(ErrorKind::DimMismatch, c.name() + " expects vectors of length " +
                                              std::to_string(c.n) + ", got " +
                                              std::to_string(a.size()));
    }
  }
  Vector out(c.n);
  switch (c.kind) {
    case CrossProductCase::Kind::ComplexStructure:
      for (int k = 0; k + 1 < c.n; k += 2) {
        out[k] = -args[0][k + 1];
        out[k + 1] = args[0][k];
      }
      break;
    case CrossProductCase::Kind::Epsilon:
    case CrossProductCase::Kind::Three:
      EpsilonProduct(args, c.n, out);
      break;
    case CrossProductCase::Kind::Seven: {
      const Vector p = multiply(Octonions(), Embed(args[0]), Embed(args[1]));
      for (int i = 0; i < 7; ++i) out[i] = p[i + 1];
      break;
    }
    case CrossProductCase::Kind::Triple8: {
      const auto& o = Octonions();
      const Vector bbar = conjugate(args[1]);
      const Vector lhs = multiply(o, args[0], multiply(o, bbar, args[2]));
      const Vector rhs = multiply(o, args[2], multiply(o, bbar, args[0]));
      for (int i = 0; i < 8; ++i) out[i] = (lhs[i] - rhs[i]) / 2;
      break;
    }
  }
  return out;
}

CrossAxiomsReport cross_axioms_report(const CrossProductCase& c, std::size_t trials,
                                      std::uint64_t seed) {
  CrossAxiomsReport rep;
  rep.seed = seed;
  rep.orthogonality_ok = rep.norm_identity_ok = rep.multilinearity_ok = rep.alternating_ok = true;
  std::mt19937_64 rng(seed);

  auto fail = [&](bool& flag, const char* what, std::span<const Vector> args) {
    if (flag && rep.first_failure.empty()) {
      rep.first_failure = std::string(what) + " at " + DescribeTuple(args);
    }
    flag = false;
  };

  auto check = [&](std::vector<Vector> args) {
    const Vector x = cross_product(c, args);
    for (const Vector& a : args) {
      if (dot(x, a) != 0) fail(rep.orthogonality_ok, "orthogonality", args);
    }
    if (dot(x, x) != gram_determinant(args)) fail(rep.norm_identity_ok, "norm identity", args);

    // Linearity in each slot against a fresh random vector.
    for (int s = 0; s < c.r; ++s) {
      const Vector b = RandomVector(rng, c.n);
      std::vector<Vector> mixed = args, other = args;
      mixed[s] = Add(Scale(args[s], 2), Scale(b, 3));
      other[s] = b;
      const Vector expect = Add(Scale(x, 2), Scale(cross_product(c, other), 3));
      if (cross_product(c, mixed) != expect) fail(rep.multilinearity_ok, "multilinearity", args);
    }
    for (int s = 0; s < c.r; ++s) {
      for (int t = s + 1; t < c.r; ++t) {
        std::vector<Vector> swapped = args;
        std::swap(swapped[s], swapped[t]);
        if (cross_product(c, swapped) != Scale(x, -1)) {
          fail(rep.alternating_ok, "alternation", args);
        }
      }
    }
  };

  std::vector<int> idx(c.r, 0);
  while (true) {
    std::vector<Vector> args;
    for (int i : idx) {
      Vector e(c.n);
      e[i] = 1;
      args.push_back(std::move(e));
    }
    check(std::move(args));
    ++rep.basis_tuples;
    int p = c.r - 1;
    while (p >= 0 && ++idx[p] == c.n) idx[p--] = 0;
    if (p < 0) break;
  }
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<Vector> args;
    for (int i = 0; i < c.r; ++i) args.push_back(RandomVector(rng, c.n));
    check(std::move(args));
    ++rep.random_tuples;
  }
  return rep;
}

int epsilon_symbol(std::span<const int> indices) {
  const int n = static_cast<int>(indices.size());
  std::vector<bool> seen(n + 1, false);
  bool repeat = false;
  for (int v : indices) {
    if (v < 1 || v > n) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "epsilon index " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    if (seen[v]) repeat = true;
    seen[v] = true;
  }
  if (repeat) return 0;
  int inversions = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) inversions += indices[i] > indices[j];
  }
  return inversions % 2 ? -1 : 1;
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int p = k - 1;
    while (p >= 0 && cur[p] == n - k + p + 1) --p;
    if (p < 0) break;
    ++cur[p];
    for (int q = p + 1; q < k; ++q) cur[q] = cur[q - 1] + 1;
  }
  return out;
}

KVector hodge_dual(const KVector& w) {
  if (w.k < 0 || w.k > w.n || w.n > kMaxCrossDim) {
    throw Error(ErrorKind::BadDims, "hodge dual needs 0 <= k <= n <= 8, got n=" +
                                        std::to_string(w.n) + " k=" + std::to_string(w.k));
  }
  const auto in = k_subsets(w.n, w.k);
  if (w.coeffs.size() != in.size()) {
    throw Error(ErrorKind::BadDims, "expected " + std::to_string(in.size()) +
                                        " coefficients, got " + std::to_string(w.coeffs.size()));
  }
  const auto out_sets = k_subsets(w.n, w.n - w.k);
  KVector out{w.n, w.n - w.k, Vector(out_sets.size())};
  for (std::size_t a = 0; a < in.size(); ++a) {
    if (w.coeffs[a] == 0) continue;
    for (std::size_t b = 0; b < out_sets.size(); ++b) {
      std::vector<int> joined = in[a];
      joined.insert(joined.end(), out_sets[b].begin(), out_sets[b].end());
      const int s = epsilon_symbol(joined);
      if (s > 0) {
        out.coeffs[b] += w.coeffs[a];
      } else if (s < 0) {
        out.coeffs[b] -= w.coeffs[a];
      }
    }
  }
  return out;
}

}  // namespace duality
