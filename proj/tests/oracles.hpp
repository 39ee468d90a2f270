#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond the pattern and poset accessors.

#include <algorithm>
#include <numeric>
#include <random>
#include <span>
#include <vector>

#include "poplab/pattern.hpp"

namespace oracle {

inline std::vector<std::vector<int>> all_perms(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Every increasing index tuple checked against gaps, anchors and the order.
inline std::size_t count(const poplab::PopPattern& p, std::span<const int> s) {
  const int n = static_cast<int>(s.size());
  const int m = static_cast<int>(p.length());
  if (m > n) return 0;
  std::vector<int> idx(static_cast<std::size_t>(m));
  std::iota(idx.begin(), idx.end(), 0);
  std::size_t total = 0;
  for (;;) {
    bool ok = true;
    if (p.anchored_left() && idx[0] != 0) ok = false;
    if (p.anchored_right() && idx.back() != n - 1) ok = false;
    for (int j = 0; ok && j + 1 < m; ++j) {
      const int d = idx[static_cast<std::size_t>(j + 1)] - idx[static_cast<std::size_t>(j)];
      const auto g = p.gaps()[static_cast<std::size_t>(j)];
      if (g == poplab::Gap::adjacent && d != 1) ok = false;
      if (g == poplab::Gap::strict && d < 2) ok = false;
    }
    for (int a = 0; ok && a < m; ++a) {
      for (int b = 0; ok && b < m; ++b) {
        if (p.position_less(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) &&
            !(s[static_cast<std::size_t>(idx[static_cast<std::size_t>(a)])] <
              s[static_cast<std::size_t>(idx[static_cast<std::size_t>(b)])]))
          ok = false;
      }
    }
    total += ok;
    int j = m - 1;
    while (j >= 0 && idx[static_cast<std::size_t>(j)] == n - m + j) --j;
    if (j < 0) break;
    ++idx[static_cast<std::size_t>(j)];
    for (int t = j + 1; t < m; ++t) idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
  }
  return total;
}

inline int inv(std::span<const int> p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) c += p[i] > p[j];
  return c;
}

}  // namespace oracle
