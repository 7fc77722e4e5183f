#pragma once

// Word-parallel kernels over packed 64-bit membership masks.
//
// Every kernel has a portable scalar reference; wider variants are compiled
// per-function with target attributes and picked at runtime from CPU feature
// bits, so the library runs on any x86-64 or AArch64 host. The active table
// can be pinned with set_active_isa() or the AGROUP_ISA environment variable
// (scalar | avx2 | neon).

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace agroup::simd {

enum class Isa { Scalar, Avx2, Neon };

struct BitsetKernels {
  Isa isa;
  std::uint64_t (*popcount)(const std::uint64_t* a, std::size_t n);
  std::uint64_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
  // a is a subset of b
  bool (*is_subset)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
  bool (*equal)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
  void (*or_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
  void (*and_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
};

std::string_view to_string(Isa isa);

bool isa_available(Isa isa);
std::vector<Isa> available_isas();

/// Kernel table for a specific ISA; throws std::invalid_argument if unavailable.
const BitsetKernels& kernels_for(Isa isa);

/// Table used by Bitset. Defaults to the widest available ISA.
const BitsetKernels& active_kernels();
void set_active_isa(Isa isa);

namespace scalar {
std::uint64_t popcount(const std::uint64_t* a, std::size_t n);
std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
bool is_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
bool equal(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
void and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
}  // namespace scalar

}  // namespace agroup::simd
