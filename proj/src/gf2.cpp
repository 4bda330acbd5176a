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

#include "duality/gf2.hpp"

#include <algorithm>

#include "duality/kernels.hpp"

namespace duality {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows),
      cols_(cols),
      words_((cols + 63) / 64),
      data_(rows * ((cols + 63) / 64), 0) {}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
  return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) {
  std::uint64_t bit = std::uint64_t{1} << (c % 64);
  std::uint64_t& word = data_[r * words_ + c / 64];
  word = value ? (word | bit) : (word & ~bit);
}

void Gf2Matrix::flip(std::size_t r, std::size_t c) {
  data_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64);
}

std::span<std::uint64_t> Gf2Matrix::row(std::size_t r) {
  return {data_.data() + r * words_, words_};
}

std::span<const std::uint64_t> Gf2Matrix::row(std::size_t r) const {
  return {data_.data() + r * words_, words_};
}

std::size_t Gf2Matrix::rank() const {
  Gf2Matrix work = *this;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows_ && !work.get(pivot, c)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank) {
      std::swap_ranges(work.row(pivot).begin(), work.row(pivot).end(),
                       work.row(rank).begin());
    }
    // Columns left of c are already zero below the pivot, so only the tail
    // words need reducing.
    const std::size_t first_word = c / 64;
    auto pivot_tail = work.row(rank).subspan(first_word);
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (work.get(r, c)) {
        kernels::xor_words(work.row(r).subspan(first_word), pivot_tail);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace duality
