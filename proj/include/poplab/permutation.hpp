#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace poplab {

/// A permutation of 1..n in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  /// Throws poplab::Error unless `values` is a bijection on 1..n.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);
  /// "31254" (one digit per entry) or whitespace/comma separated values.
  static Permutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  /// 0-based position, 1-based value.
  int operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
  std::span<const int> values() const noexcept { return values_; }
  operator std::span<const int>() const noexcept { return values_; }

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

/// Sequence over the alphabet 1..k; repeats allowed.
using Word = std::vector<int>;

/// Lexicographic stream over S_n, optionally restricted to permutations that
/// start with a given value (one shard of a partitioned sweep).
class PermutationStream {
 public:
  explicit PermutationStream(int n, std::optional<int> first = std::nullopt);

  /// Advances to the next permutation; the first call yields the first one.
  bool next();
  std::span<const int> current() const noexcept { return values_; }

 private:
  std::vector<int> values_;
  bool started_ = false;
  bool done_ = false;
  int offset_;  // entries before this index are held fixed
};

/// Lexicographic stream over [k]^n.
class WordStream {
 public:
  WordStream(int n, int k, std::optional<int> first = std::nullopt);
  bool next();
  std::span<const int> current() const noexcept { return values_; }

 private:
  std::vector<int> values_;
  int k_;
  bool started_ = false;
  bool done_ = false;
  int offset_;
};

std::vector<Permutation> all_permutations(int n);
std::vector<Word> all_words(int n, int k);

}  // namespace poplab
