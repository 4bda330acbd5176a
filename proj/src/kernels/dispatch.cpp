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

#include <atomic>
#include <cassert>
#include <stdexcept>
#include <string>

#include "duality/kernels.hpp"

namespace duality::kernels {
namespace {

const detail::KernelTable* TableFor(Isa isa) {
  switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
    case Isa::Avx2: return &detail::kAvx2Table;
#endif
#if defined(__aarch64__)
    case Isa::Neon: return &detail::kNeonTable;
#endif
    default: return &detail::kScalarTable;
  }
}

struct Dispatch {
  std::atomic<Isa> isa{detect_isa()};
  std::atomic<const detail::KernelTable*> table{TableFor(isa.load())};
};

Dispatch& State() {
  static Dispatch state;
  return state;
}

const detail::KernelTable& Active() {
  return *State().table.load(std::memory_order_relaxed);
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detect_isa() {
  if (isa_available(Isa::Avx2)) return Isa::Avx2;
  if (isa_available(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

Isa active_isa() { return State().isa.load(); }

void force_isa(Isa isa) {
  if (!isa_available(isa)) {
    throw std::invalid_argument("kernel ISA not available: " +
                                std::string(to_string(isa)));
  }
  State().isa.store(isa);
  State().table.store(TableFor(isa));
}

void xor_words(std::span<std::uint64_t> dst,
               std::span<const std::uint64_t> src) {
  assert(dst.size() == src.size());
  Active().xor_words(dst.data(), src.data(), dst.size());
}

int max_masked_popcount(std::span<const std::uint32_t> sets,
                        std::uint32_t mask) {
  return Active().max_masked_popcount(sets.data(), sets.size(), mask);
}

int min_masked_popcount(std::span<const std::uint32_t> sets,
                        std::uint32_t mask) {
  return Active().min_masked_popcount(sets.data(), sets.size(), mask);
}

std::size_t count_supersets(std::span<const std::uint32_t> sets,
                            std::uint32_t mask) {
  return Active().count_supersets(sets.data(), sets.size(), mask);
}

}  // namespace duality::kernels
