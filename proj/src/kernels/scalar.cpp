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

#include <bit>

#include "duality/kernels.hpp"

namespace duality::kernels::detail {
namespace {

void XorWords(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

int MaxMaskedPopcount(const std::uint32_t* sets, std::size_t n,
                      std::uint32_t mask) {
  int best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int c = std::popcount(sets[i] & mask);
    if (c > best) best = c;
  }
  return best;
}

int MinMaskedPopcount(const std::uint32_t* sets, std::size_t n,
                      std::uint32_t mask) {
  int best = 32;
  for (std::size_t i = 0; i < n; ++i) {
    int c = std::popcount(sets[i] & mask);
    if (c < best) best = c;
  }
  return best;
}

std::size_t CountSupersets(const std::uint32_t* sets, std::size_t n,
                           std::uint32_t mask) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) count += (sets[i] & mask) == mask;
  return count;
}

}  // namespace

const KernelTable kScalarTable = {XorWords, MaxMaskedPopcount,
                                  MinMaskedPopcount, CountSupersets};

}  // namespace duality::kernels::detail
