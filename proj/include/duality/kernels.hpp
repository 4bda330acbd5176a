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

// Data-parallel inner loops shared by the exhaustive searches: GF(2) row
// elimination (Betti numbers) and bitmask scans over basis families (rank,
// basis degrees). Each kernel has a scalar reference and, where the target
// supports it, an AVX2 or NEON variant selected once at runtime.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace duality::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa);

bool isa_available(Isa isa);

// Best ISA supported by the running CPU.
Isa detect_isa();

Isa active_isa();

// Overrides dispatch (tests, benchmarking). Throws std::invalid_argument if
// the ISA is not available on this CPU.
void force_isa(Isa isa);

// dst[i] ^= src[i]; spans must have equal length.
void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);

// max over s of popcount(s & mask); 0 for an empty family.
int max_masked_popcount(std::span<const std::uint32_t> sets, std::uint32_t mask);

// min over s of popcount(s & mask); 32 for an empty family.
int min_masked_popcount(std::span<const std::uint32_t> sets, std::uint32_t mask);

// Number of sets s with (s & mask) == mask.
std::size_t count_supersets(std::span<const std::uint32_t> sets, std::uint32_t mask);

namespace detail {

struct KernelTable {
  void (*xor_words)(std::uint64_t*, const std::uint64_t*, std::size_t);
  int (*max_masked_popcount)(const std::uint32_t*, std::size_t, std::uint32_t);
  int (*min_masked_popcount)(const std::uint32_t*, std::size_t, std::uint32_t);
  std::size_t (*count_supersets)(const std::uint32_t*, std::size_t, std::uint32_t);
};

extern const KernelTable kScalarTable;
#if defined(__x86_64__) || defined(_M_X64)
extern const KernelTable kAvx2Table;
#endif
#if defined(__aarch64__)
extern const KernelTable kNeonTable;
#endif

}  // namespace detail
}  // namespace duality::kernels
