#pragma once

#include <span>
#include <vector>

#include "poplab/pattern.hpp"
#include "poplab/permutation.hpp"

namespace poplab {

// Permutation statistics. Sequences are one-line notation, values 1..n.
// Positions in results are 1-based unless stated otherwise.

int inv(std::span<const int> p);
int maj(std::span<const int> p);
int des(std::span<const int> p);

Permutation inverse(const Permutation& p);
Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);

int peaks(std::span<const int> p);
int valleys(std::span<const int> p);
/// 0-based positions of the left-to-right minima.
std::vector<int> left_to_right_minima(std::span<const int> p);

/// Starting positions (1-based) of occurrences of a segmented pattern.
std::vector<int> place_sigma(const PopPattern& sigma, std::span<const int> p);
int maj_sigma(const PopPattern& sigma, std::span<const int> p);
int maj_sigma(const Matcher& sigma, std::span<const int> p);

// Boundary convention: virtual zeros at positions 0 and n+1. Every position
// falls in exactly one of the four classes below.
int modified_maxima(std::span<const int> p);
int modified_minima(std::span<const int> p);
int double_rises(std::span<const int> p);
int double_falls(std::span<const int> p);

/// Entries larger than both cyclic neighbours (n >= 2; zero for n <= 1).
int circular_maxima(std::span<const int> p);

/// p1 > p2 < p3 > ...
bool is_alternating(std::span<const int> p);
/// p1 < p2 > p3 < ...
bool is_reverse_alternating(std::span<const int> p);

/// Cycles of the permutation as a map i -> p(i); each cycle starts at its least
/// element and cycles are listed by increasing least element.
std::vector<std::vector<int>> cycles(const Permutation& p);
Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

}  // namespace poplab
