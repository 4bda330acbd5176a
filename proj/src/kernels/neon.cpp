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

#include <arm_neon.h>

#include <bit>

#include "duality/kernels.hpp"

namespace duality::kernels::detail {
namespace {

void XorWords(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  }
  for (; i < n; ++i) dst[i] ^= src[i];
}

inline uint32x4_t Popcount32(uint32x4_t v) {
  uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u32(v));
  return vpaddlq_u16(vpaddlq_u8(bytes));
}

int MaxMaskedPopcount(const std::uint32_t* sets, std::size_t n,
                      std::uint32_t mask) {
  const uint32x4_t m = vdupq_n_u32(mask);
  uint32x4_t best = vdupq_n_u32(0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    best = vmaxq_u32(best, Popcount32(vandq_u32(vld1q_u32(sets + i), m)));
  }
  int result = static_cast<int>(vmaxvq_u32(best));
  for (; i < n; ++i) {
    int c = std::popcount(sets[i] & mask);
    if (c > result) result = c;
  }
  return result;
}

int MinMaskedPopcount(const std::uint32_t* sets, std::size_t n,
                      std::uint32_t mask) {
  const uint32x4_t m = vdupq_n_u32(mask);
  uint32x4_t best = vdupq_n_u32(32);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    best = vminq_u32(best, Popcount32(vandq_u32(vld1q_u32(sets + i), m)));
  }
  int result = static_cast<int>(vminvq_u32(best));
  for (; i < n; ++i) {
    int c = std::popcount(sets[i] & mask);
    if (c < result) result = c;
  }
  return result;
}

std::size_t CountSupersets(const std::uint32_t* sets, std::size_t n,
                           std::uint32_t mask) {
  const uint32x4_t m = vdupq_n_u32(mask);
  uint32x4_t acc = vdupq_n_u32(0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t eq = vceqq_u32(vandq_u32(vld1q_u32(sets + i), m), m);
    acc = vsubq_u32(acc, eq);  // eq lanes are all-ones, i.e. -1
  }
  std::size_t count = vaddvq_u32(acc);
  for (; i < n; ++i) count += (sets[i] & mask) == mask;
  return count;
}

}  // namespace

const KernelTable kNeonTable = {XorWords, MaxMaskedPopcount, MinMaskedPopcount,
                                CountSupersets};

}  // namespace duality::kernels::detail
