#include "agroup/simd/bitset_kernels.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#if defined(__x86_64__) || defined(_M_X64)
#define AGROUP_X86 1
#include <immintrin.h>
#else
#define AGROUP_X86 0
#endif

#if defined(__aarch64__)
#define AGROUP_NEON 1
#include <arm_neon.h>
#else
#define AGROUP_NEON 0
#endif

namespace agroup::simd {

namespace scalar {

std::uint64_t popcount(const std::uint64_t* a, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i]));
  return total;
}

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
  }
  return total;
}

bool is_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

bool equal(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] |= src[i];
}

void and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] &= src[i];
}

}  // namespace scalar

#if AGROUP_X86
namespace avx2 {

#define AGROUP_AVX2 __attribute__((target("avx2")))

// Per-byte popcount by nibble lookup, then horizontal byte sums via SAD.
AGROUP_AVX2 inline __m256i popcount_bytes(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  return _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
}

AGROUP_AVX2 inline std::uint64_t horizontal_sum(__m256i acc) {
  return static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 0)) +
         static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 1)) +
         static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 2)) +
         static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 3));
}

AGROUP_AVX2 std::uint64_t popcount(const std::uint64_t* a, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(v), _mm256_setzero_si256()));
  }
  return horizontal_sum(acc) + scalar::popcount(a + i, n - i);
}

AGROUP_AVX2 std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                                       std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_add_epi64(
        acc, _mm256_sad_epu8(popcount_bytes(_mm256_and_si256(va, vb)), _mm256_setzero_si256()));
  }
  return horizontal_sum(acc) + scalar::and_popcount(a + i, b + i, n - i);
}

AGROUP_AVX2 bool is_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    // andnot(b, a) = a & ~b
    if (!_mm256_testz_si256(_mm256_andnot_si256(vb, va), _mm256_set1_epi64x(-1))) return false;
  }
  return scalar::is_subset(a + i, b + i, n - i);
}

AGROUP_AVX2 bool equal(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const __m256i diff = _mm256_xor_si256(va, vb);
    if (!_mm256_testz_si256(diff, diff)) return false;
  }
  return scalar::equal(a + i, b + i, n - i);
}

AGROUP_AVX2 void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i* d = reinterpret_cast<__m256i*>(dst + i);
    const __m256i vs = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(d, _mm256_or_si256(_mm256_loadu_si256(d), vs));
  }
  scalar::or_into(dst + i, src + i, n - i);
}

AGROUP_AVX2 void and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i* d = reinterpret_cast<__m256i*>(dst + i);
    const __m256i vs = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(d, _mm256_and_si256(_mm256_loadu_si256(d), vs));
  }
  scalar::and_into(dst + i, src + i, n - i);
}

#undef AGROUP_AVX2

}  // namespace avx2
#endif

#if AGROUP_NEON
namespace neon {

inline std::uint64_t sum_bytes(uint8x16_t v) { return vaddlvq_u8(v); }

std::uint64_t popcount(const std::uint64_t* a, std::size_t n) {
  std::uint64_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    total += sum_bytes(vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(a + i))));
  }
  return total + scalar::popcount(a + i, n - i);
}

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::uint64_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint64x2_t v = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    total += sum_bytes(vcntq_u8(vreinterpretq_u8_u64(v)));
  }
  return total + scalar::and_popcount(a + i, b + i, n - i);
}

bool is_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint64x2_t extra = vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    if (vmaxvq_u32(vreinterpretq_u32_u64(extra)) != 0) return false;
  }
  return scalar::is_subset(a + i, b + i, n - i);
}

bool equal(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint64x2_t diff = veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    if (vmaxvq_u32(vreinterpretq_u32_u64(diff)) != 0) return false;
  }
  return scalar::equal(a + i, b + i, n - i);
}

void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_u64(dst + i, vorrq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  scalar::or_into(dst + i, src + i, n - i);
}

void and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_u64(dst + i, vandq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  scalar::and_into(dst + i, src + i, n - i);
}

}  // namespace neon
#endif

namespace {

constexpr BitsetKernels kScalar{Isa::Scalar,     scalar::popcount, scalar::and_popcount,
                                scalar::is_subset, scalar::equal,    scalar::or_into,
                                scalar::and_into};
#if AGROUP_X86
constexpr BitsetKernels kAvx2{Isa::Avx2,       avx2::popcount, avx2::and_popcount,
                              avx2::is_subset, avx2::equal,    avx2::or_into,
                              avx2::and_into};
#endif
#if AGROUP_NEON
constexpr BitsetKernels kNeon{Isa::Neon,       neon::popcount, neon::and_popcount,
                              neon::is_subset, neon::equal,    neon::or_into,
                              neon::and_into};
#endif

Isa best_isa() {
  if (const char* env = std::getenv("AGROUP_ISA")) {
    const std::string_view want(env);
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
      if (want == to_string(isa) && isa_available(isa)) return isa;
    }
  }
  if (isa_available(Isa::Avx2)) return Isa::Avx2;
  if (isa_available(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

std::atomic<const BitsetKernels*>& active_slot() {
  static std::atomic<const BitsetKernels*> slot{&kernels_for(best_isa())};
  return slot;
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
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if AGROUP_X86
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon: return AGROUP_NEON != 0;
  }
  return false;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
    if (isa_available(isa)) out.push_back(isa);
  }
  return out;
}

const BitsetKernels& kernels_for(Isa isa) {
  if (!isa_available(isa)) {
    throw std::invalid_argument("ISA not available on this host: " + std::string(to_string(isa)));
  }
  switch (isa) {
#if AGROUP_X86
    case Isa::Avx2: return kAvx2;
#endif
#if AGROUP_NEON
    case Isa::Neon: return kNeon;
#endif
    default: return kScalar;
  }
}

const BitsetKernels& active_kernels() { return *active_slot().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) { active_slot().store(&kernels_for(isa), std::memory_order_relaxed); }

}  // namespace agroup::simd
