#include "poplab/stats.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "poplab/error.hpp"
#include "poplab/kernels.hpp"

namespace poplab {

int inv(std::span<const int> p) {
  simd::PackedSeq packed;
  if (packed.load(p)) return simd::active_kernels().inversions(packed);
  int count = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) count += p[i] > p[j];
  return count;
}

namespace {

template <class F>
void for_each_descent(std::span<const int> p, F&& f) {
  simd::PackedSeq packed;
  if (packed.load(p)) {
    std::uint32_t mask = simd::active_kernels().descent_mask(packed);
    while (mask != 0) {
      f(std::countr_zero(mask));
      mask &= mask - 1;
    }
    return;
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] > p[i + 1]) f(static_cast<int>(i));
}

// Value at 0-based position i with virtual zeros outside 0..n-1.
int padded(std::span<const int> p, int i) {
  return (i < 0 || i >= static_cast<int>(p.size())) ? 0 : p[static_cast<std::size_t>(i)];
}

}  // namespace

int maj(std::span<const int> p) {
  int total = 0;
  for_each_descent(p, [&](int i) { total += i + 1; });
  return total;
}

int des(std::span<const int> p) {
  int total = 0;
  for_each_descent(p, [&](int) { ++total; });
  return total;
}

Permutation inverse(const Permutation& p) {
  std::vector<int> out(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p[i] - 1)] = i + 1;
  return Permutation(std::move(out));
}

Permutation reverse(const Permutation& p) {
  std::vector<int> out(p.values().rbegin(), p.values().rend());
  return Permutation(std::move(out));
}

Permutation complement(const Permutation& p) {
  std::vector<int> out;
  for (int v : p.values()) out.push_back(p.size() + 1 - v);
  return Permutation(std::move(out));
}

int peaks(std::span<const int> p) {
  int count = 0;
  for (std::size_t j = 1; j + 1 < p.size(); ++j) count += p[j] > p[j - 1] && p[j] > p[j + 1];
  return count;
}

int valleys(std::span<const int> p) {
  int count = 0;
  for (std::size_t j = 1; j + 1 < p.size(); ++j) count += p[j] < p[j - 1] && p[j] < p[j + 1];
  return count;
}

std::vector<int> left_to_right_minima(std::span<const int> p) {
  std::vector<int> out;
  int low = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (out.empty() || p[i] < low) {
      out.push_back(static_cast<int>(i));
      low = p[i];
    }
  }
  return out;
}

std::vector<int> place_sigma(const PopPattern& sigma, std::span<const int> p) {
  if (!sigma.is_segmented()) throw Error("place_sigma: pattern must be segmented");
  std::vector<int> out;
  for (const auto& occ : occurrences(sigma, p)) out.push_back(occ[0] + 1);
  return out;
}

int maj_sigma(const PopPattern& sigma, std::span<const int> p) {
  auto places = place_sigma(sigma, p);
  return std::accumulate(places.begin(), places.end(), 0);
}

int maj_sigma(const Matcher& sigma, std::span<const int> p) {
  if (!sigma.segmented()) throw Error("maj_sigma: pattern must be segmented");
  std::uint32_t mask = sigma.window_mask(p);
  int total = 0;
  while (mask != 0) {
    total += std::countr_zero(mask) + 1;
    mask &= mask - 1;
  }
  return total;
}

int modified_maxima(std::span<const int> p) {
  int count = 0;
  const int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i) count += padded(p, i - 1) < p[i] && p[i] > padded(p, i + 1);
  return count;
}

int modified_minima(std::span<const int> p) {
  int count = 0;
  const int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i) count += padded(p, i - 1) > p[i] && p[i] < padded(p, i + 1);
  return count;
}

int double_rises(std::span<const int> p) {
  int count = 0;
  const int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i) count += padded(p, i - 1) < p[i] && p[i] < padded(p, i + 1);
  return count;
}

int double_falls(std::span<const int> p) {
  int count = 0;
  const int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i) count += padded(p, i - 1) > p[i] && p[i] > padded(p, i + 1);
  return count;
}

int circular_maxima(std::span<const int> p) {
  const std::size_t n = p.size();
  if (n < 2) return 0;
  int count = 0;
  for (std::size_t j = 0; j < n; ++j) {
    count += p[j] > p[(j + n - 1) % n] && p[j] > p[(j + 1) % n];
  }
  return count;
}

bool is_alternating(std::span<const int> p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const bool down = i % 2 == 0;
    if (down != (p[i] > p[i + 1])) return false;
  }
  return true;
}

bool is_reverse_alternating(std::span<const int> p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const bool up = i % 2 == 0;
    if (up != (p[i] < p[i + 1])) return false;
  }
  return true;
}

std::vector<std::vector<int>> cycles(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(static_cast<std::size_t>(p.size()) + 1, 0);
  for (int start = 1; start <= p.size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int i = start; !seen[static_cast<std::size_t>(i)]; i = p[i - 1]) {
      seen[static_cast<std::size_t>(i)] = 1;
      cycle.push_back(i);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> image(static_cast<std::size_t>(n), 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int from = c[i];
      const int to = c[(i + 1) % c.size()];
      if (from < 1 || from > n || image[static_cast<std::size_t>(from - 1)] != 0) {
        throw Error("cycle form: entries must cover 1.." + std::to_string(n) + " exactly once");
      }
      image[static_cast<std::size_t>(from - 1)] = to;
    }
  }
  return Permutation(std::move(image));
}

}  // namespace poplab
