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

#include "duality/algebra.hpp"
#include "duality/error.hpp"

namespace duality {
namespace {

std::size_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

Chirotope::Chirotope(int n, int r, std::vector<int> signs)
    : n_(n), r_(r), signs_(std::move(signs)) {
  if (n < 1 || r < 1 || r > n) {
    throw Error(ErrorKind::BadDims,
                "chirotope needs 1 <= r <= n, got n=" + std::to_string(n) + " r=" +
                    std::to_string(r));
  }
  if (signs_.size() != Binomial(n, r)) {
    throw Error(ErrorKind::BadDims, "sign table has " + std::to_string(signs_.size()) +
                                        " entries, expected " +
                                        std::to_string(Binomial(n, r)));
  }
  for (int s : signs_) {
    if (s < -1 || s > 1) throw Error(ErrorKind::BadParams, "sign outside {-1,0,1}");
  }
  if (std::all_of(signs_.begin(), signs_.end(), [](int s) { return s == 0; })) {
    throw Error(ErrorKind::RankDeficient, "every r-subset has sign 0");
  }
}

int Chirotope::sign(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != r_) {
    throw Error(ErrorKind::BadDims, "tuple length differs from the rank");
  }
  std::vector<int> t(tuple.begin(), tuple.end());
  int parity = 0;
  for (int v : t) {
    if (v < 1 || v > n_) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "label " + std::to_string(v) + " outside 1.." + std::to_string(n_));
    }
  }
  // insertion sort, counting transpositions
  for (int i = 1; i < r_; ++i) {
    for (int j = i; j > 0 && t[j - 1] > t[j]; --j) {
      std::swap(t[j - 1], t[j]);
      parity ^= 1;
    }
  }
  for (int i = 1; i < r_; ++i) {
    if (t[i] == t[i - 1]) return 0;
  }
  // rank of t among sorted r-subsets of {1..n} (lex order)
  std::size_t index = 0;
  int prev = 0;
  for (int i = 0; i < r_; ++i) {
    for (int v = prev + 1; v < t[i]; ++v) index += Binomial(n_ - v, r_ - i - 1);
    prev = t[i];
  }
  const int s = signs_[index];
  return parity ? -s : s;
}

Chirotope chirotope_of_configuration(const std::vector<Vector>& points) {
  const int n = static_cast<int>(points.size());
  if (n == 0 || n > 10) {
    throw Error(ErrorKind::BadDims, "configuration needs 1..10 points, got " + std::to_string(n));
  }
  const int r = static_cast<int>(points[0].size());
  if (r < 1 || r > 4 || r > n) {
    throw Error(ErrorKind::BadDims, "configuration rank must be in 1..min(4, n), got " +
                                        std::to_string(r));
  }
  for (const Vector& p : points) {
    if (static_cast<int>(p.size()) != r) {
      throw Error(ErrorKind::BadDims, "points have differing coordinate counts");
    }
  }
  std::vector<int> signs;
  for (const auto& subset : k_subsets(n, r)) {
    RationalMatrix m(r, Vector(r));
    for (int col = 0; col < r; ++col) {
      for (int row = 0; row < r; ++row) m[row][col] = points[subset[col] - 1][row];
    }
    const Rational d = determinant(std::move(m));
    signs.push_back(d > 0 ? 1 : (d < 0 ? -1 : 0));
  }
  return Chirotope(n, r, std::move(signs));
}

Matroid chirotope_support(const Chirotope& chi) {
  std::vector<int> ground(chi.n());
  for (int i = 0; i < chi.n(); ++i) ground[i] = i + 1;
  std::vector<std::vector<int>> bases;
  const auto subsets = k_subsets(chi.n(), chi.r());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (chi.signs()[i] != 0) bases.push_back(subsets[i]);
  }
  return Matroid::make(std::move(ground), bases);
}

}  // namespace duality
