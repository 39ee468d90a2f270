#include "poplab/kernels.hpp"

#if defined(POPLAB_HAVE_AVX2)
#include <immintrin.h>

namespace poplab::simd {
namespace {

// All values are < 128, so signed byte compares are exact.

std::uint32_t window_mask_avx2(const PackedSeq& seq, int m, const OffsetPair* pairs, int count) {
  if (m > seq.n || m <= 0) return 0;
  std::uint32_t mask = low_bits(seq.n - m + 1);
  for (int r = 0; r < count && mask != 0; ++r) {
    const __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(seq.v + pairs[r].lo));
    const __m256i hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(seq.v + pairs[r].hi));
    mask &= static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpgt_epi8(hi, lo)));
  }
  return mask;
}

int inversions_avx2(const PackedSeq& seq) {
  const __m256i all = _mm256_load_si256(reinterpret_cast<const __m256i*>(seq.v));
  const std::uint32_t valid = low_bits(seq.n);
  int inv = 0;
  for (int i = 0; i + 1 < seq.n; ++i) {
    const __m256i pivot = _mm256_set1_epi8(static_cast<char>(seq.v[i]));
    const auto gt = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpgt_epi8(pivot, all)));
    const std::uint32_t after = valid & ~low_bits(i + 1);
    inv += _mm_popcnt_u32(gt & after);
  }
  return inv;
}

std::uint32_t descent_mask_avx2(const PackedSeq& seq) {
  if (seq.n < 2) return 0;
  const __m256i cur = _mm256_load_si256(reinterpret_cast<const __m256i*>(seq.v));
  const __m256i next = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(seq.v + 1));
  const auto gt = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpgt_epi8(cur, next)));
  return gt & low_bits(seq.n - 1);
}

constexpr KernelSet kAvx2{"avx2", window_mask_avx2, inversions_avx2, descent_mask_avx2};

}  // namespace

const KernelSet* avx2_kernels() noexcept {
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  return supported ? &kAvx2 : nullptr;
}

}  // namespace poplab::simd

#else

namespace poplab::simd {
const KernelSet* avx2_kernels() noexcept { return nullptr; }
}  // namespace poplab::simd

#endif
