#include <cstdlib>
#include <cstring>
#include <string_view>

#include "poplab/kernels.hpp"

namespace poplab::simd {

bool PackedSeq::load(std::span<const int> values) noexcept {
  if (values.size() > static_cast<std::size_t>(kMaxLength)) return false;
  std::memset(v, 0, sizeof v);
  n = static_cast<int>(values.size());
  for (int i = 0; i < n; ++i) {
    if (values[i] < 0 || values[i] > 127) return false;
    v[i] = static_cast<std::uint8_t>(values[i]);
  }
  return true;
}

namespace {

std::uint32_t window_mask_scalar(const PackedSeq& seq, int m, const OffsetPair* pairs,
                                 int count) {
  if (m > seq.n || m <= 0) return 0;
  std::uint32_t mask = 0;
  for (int s = 0; s + m <= seq.n; ++s) {
    bool ok = true;
    for (int r = 0; r < count && ok; ++r) ok = seq.v[s + pairs[r].lo] < seq.v[s + pairs[r].hi];
    if (ok) mask |= std::uint32_t{1} << s;
  }
  return mask;
}

int inversions_scalar(const PackedSeq& seq) {
  int inv = 0;
  for (int i = 0; i < seq.n; ++i)
    for (int j = i + 1; j < seq.n; ++j) inv += seq.v[i] > seq.v[j];
  return inv;
}

std::uint32_t descent_mask_scalar(const PackedSeq& seq) {
  std::uint32_t mask = 0;
  for (int i = 0; i + 1 < seq.n; ++i)
    if (seq.v[i] > seq.v[i + 1]) mask |= std::uint32_t{1} << i;
  return mask;
}

constexpr KernelSet kScalar{"scalar", window_mask_scalar, inversions_scalar,
                            descent_mask_scalar};

}  // namespace

const KernelSet& scalar_kernels() noexcept { return kScalar; }

const KernelSet& active_kernels() noexcept {
  static const KernelSet* chosen = [] {
    const char* env = std::getenv("POPLAB_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return &kScalar;
    const KernelSet* fast = avx2_kernels();
    return fast != nullptr ? fast : &kScalar;
  }();
  return *chosen;
}

}  // namespace poplab::simd
