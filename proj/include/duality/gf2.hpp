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
#include <span>
#include <vector>

namespace duality {

/// Dense bit matrix over GF(2), rows packed into 64-bit words.
class Gf2Matrix {
 public:
  Gf2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value = true);
  void flip(std::size_t r, std::size_t c);

  std::span<std::uint64_t> row(std::size_t r);
  std::span<const std::uint64_t> row(std::size_t r) const;

  /// Rank by Gaussian elimination on a copy; row reductions use the
  /// dispatched xor kernel.
  std::size_t rank() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_;
  std::vector<std::uint64_t> data_;
};

}  // namespace duality
