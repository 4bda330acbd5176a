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

#include <immintrin.h>

#include <bit>

#include "duality/kernels.hpp"

#define DUALITY_AVX2 __attribute__((target("avx2")))

namespace duality::kernels::detail {
namespace {

DUALITY_AVX2 void XorWords(std::uint64_t* dst, const std::uint64_t* src,
                           std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_xor_si256(a, b));
  }
  for (; i < n; ++i) dst[i] ^= src[i];
}

// Per-32-bit-lane popcount via the nibble lookup (pshufb) method.
DUALITY_AVX2 inline __m256i Popcount32(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2,
                                       3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2,
                                       2, 3, 2, 3, 3, 4);
  const __m256i low4 = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low4);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low4);
  __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo),
                                  _mm256_shuffle_epi8(lut, hi));
  __m256i x = _mm256_add_epi32(bytes, _mm256_srli_epi32(bytes, 8));
  x = _mm256_add_epi32(x, _mm256_srli_epi32(x, 16));
  return _mm256_and_si256(x, _mm256_set1_epi32(0x3f));
}

DUALITY_AVX2 int HorizontalMax(__m256i v) {
  alignas(32) std::uint32_t lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  std::uint32_t best = 0;
  for (std::uint32_t lane : lanes) best = lane > best ? lane : best;
  return static_cast<int>(best);
}

DUALITY_AVX2 int HorizontalMin(__m256i v) {
  alignas(32) std::uint32_t lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  std::uint32_t best = 32;
  for (std::uint32_t lane : lanes) best = lane < best ? lane : best;
  return static_cast<int>(best);
}

DUALITY_AVX2 int MaxMaskedPopcount(const std::uint32_t* sets, std::size_t n,
                                   std::uint32_t mask) {
  const __m256i m = _mm256_set1_epi32(static_cast<int>(mask));
  __m256i best = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sets + i));
    best = _mm256_max_epu32(best, Popcount32(_mm256_and_si256(v, m)));
  }
  int result = HorizontalMax(best);
  for (; i < n; ++i) {
    int c = std::popcount(sets[i] & mask);
    if (c > result) result = c;
  }
  return result;
}

DUALITY_AVX2 int MinMaskedPopcount(const std::uint32_t* sets, std::size_t n,
                                   std::uint32_t mask) {
  const __m256i m = _mm256_set1_epi32(static_cast<int>(mask));
  __m256i best = _mm256_set1_epi32(32);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sets + i));
    best = _mm256_min_epu32(best, Popcount32(_mm256_and_si256(v, m)));
  }
  int result = HorizontalMin(best);
  for (; i < n; ++i) {
    int c = std::popcount(sets[i] & mask);
    if (c < result) result = c;
  }
  return result;
}

DUALITY_AVX2 std::size_t CountSupersets(const std::uint32_t* sets,
                                        std::size_t n, std::uint32_t mask) {
  const __m256i m = _mm256_set1_epi32(static_cast<int>(mask));
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sets + i));
    __m256i eq = _mm256_cmpeq_epi32(_mm256_and_si256(v, m), m);
    count += static_cast<std::size_t>(
        std::popcount(static_cast<unsigned>(
            _mm256_movemask_ps(_mm256_castsi256_ps(eq)))));
  }
  for (; i < n; ++i) count += (sets[i] & mask) == mask;
  return count;
}

}  // namespace

const KernelTable kAvx2Table = {XorWords, MaxMaskedPopcount, MinMaskedPopcount,
                                CountSupersets};

}  // namespace duality::kernels::detail
