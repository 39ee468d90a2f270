#pragma once

// Data-parallel inner loops used by the enumeration sweeps. Each kernel has a
// scalar reference version and, on x86-64, an AVX2 version; the active set is
// chosen once at startup from CPUID and can be pinned to the scalar set with
// POPLAB_SIMD=scalar.
//
// Kernels operate on byte-packed sequences of length n <= kMaxLength stored in
// a PackedSeq, whose tail beyond n is zero.

#include <cstdint>
#include <span>

namespace poplab::simd {

inline constexpr int kMaxLength = 32;

struct alignas(32) PackedSeq {
  std::uint8_t v[3 * kMaxLength];
  int n = 0;

  // Returns false (and leaves the buffer unusable) if the sequence is longer
  // than kMaxLength or holds values outside 0..127.
  bool load(std::span<const int> values) noexcept;
};

// One order constraint of a segmented window: v[s + lo] < v[s + hi].
struct OffsetPair {
  std::uint8_t lo;
  std::uint8_t hi;
};

struct KernelSet {
  const char* name;
  // Bit s set iff the window of length m starting at s satisfies every pair.
  // Only starts 0..n-m are considered; m > n yields 0.
  std::uint32_t (*window_mask)(const PackedSeq& seq, int m, const OffsetPair* pairs, int count);
  // Number of pairs i<j with v[i] > v[j].
  int (*inversions)(const PackedSeq& seq);
  // Bit i set iff v[i] > v[i+1] (0-based).
  std::uint32_t (*descent_mask)(const PackedSeq& seq);
};

const KernelSet& scalar_kernels() noexcept;
// nullptr when AVX2 was not compiled in or the CPU lacks it.
const KernelSet* avx2_kernels() noexcept;
const KernelSet& active_kernels() noexcept;

inline std::uint32_t low_bits(int count) noexcept {
  return count >= 32 ? 0xffffffffu : ((std::uint32_t{1} << count) - 1u);
}

}  // namespace poplab::simd
