#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "poplab/kernels.hpp"
#include "poplab/poset.hpp"

namespace poplab {

// Constraint between two consecutive pattern letters.
//   adjacent: the matched positions are neighbours
//   free:     any positive distance (a dash)
//   strict:   distance at least two (a box)
enum class Gap { adjacent, free, strict };

const char* to_string(Gap g);
Gap gap_from_string(const std::string& s);

/// A partially ordered pattern: distinct letters drawn from a poset, joined by
/// gap constraints, optionally anchored at either end of the host sequence.
class PopPattern {
 public:
  /// Throws poplab::Error if a letter is missing from the poset, repeats, or
  /// the gap count does not match.
  PopPattern(Poset poset, std::vector<std::string> letters, std::vector<Gap> gaps,
             bool anchored_left = false, bool anchored_right = false);

  /// All letters adjacent, no anchors.
  static PopPattern segmented(Poset poset, std::vector<std::string> letters);

  const Poset& poset() const noexcept { return poset_; }
  const std::vector<std::string>& letters() const noexcept { return letters_; }
  const std::vector<Gap>& gaps() const noexcept { return gaps_; }
  bool anchored_left() const noexcept { return anchored_left_; }
  bool anchored_right() const noexcept { return anchored_right_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_segmented() const noexcept;

  /// letter_a <_poset letter_b, by pattern position.
  bool position_less(std::size_t a, std::size_t b) const noexcept {
    return poset_.less(index_[a], index_[b]);
  }

  friend bool operator==(const PopPattern& a, const PopPattern& b) {
    return a.poset_ == b.poset_ && a.letters_ == b.letters_ && a.gaps_ == b.gaps_ &&
           a.anchored_left_ == b.anchored_left_ && a.anchored_right_ == b.anchored_right_;
  }

 private:
  Poset poset_;
  std::vector<std::string> letters_;
  std::vector<Gap> gaps_;
  bool anchored_left_;
  bool anchored_right_;
  std::vector<std::size_t> index_;  // poset index of each letter
};

/// Reverses letters and gaps and swaps the anchors.
PopPattern reverse(const PopPattern& p);
/// Replaces the poset by its dual.
PopPattern complement(const PopPattern& p);
/// p-q on the disjoint union of the two posets (labels must not clash).
PopPattern join_free(const PopPattern& p, const PopPattern& q);
/// Copy of p with `suffix` appended to every label.
PopPattern relabel(const PopPattern& p, const std::string& suffix);

/// 0-based positions i1 < ... < im of one occurrence.
using Occurrence = std::vector<int>;

/// Compiled form of a pattern for repeated matching. Segmented patterns are
/// matched through the window-mask kernel; everything else uses a pruned
/// depth-first position assignment. Thread-safe for concurrent reads.
class Matcher {
 public:
  explicit Matcher(const PopPattern& p);

  std::size_t length() const noexcept { return m_; }
  bool segmented() const noexcept { return segmented_; }

  std::vector<Occurrence> occurrences(std::span<const int> seq) const;
  std::size_t count(std::span<const int> seq) const;
  bool occurs(std::span<const int> seq) const;

  /// Start positions of matching windows (segmented patterns, length <= 32).
  std::uint32_t window_mask(const simd::PackedSeq& seq) const;
  std::uint32_t window_mask(std::span<const int> seq) const;

  /// Exactly one occurrence, occupying the final positions. Segmented and
  /// unanchored patterns only.
  bool quasi_avoided_by(std::span<const int> seq) const;

  /// Maximum number of pairwise position-disjoint occurrences (segmented only).
  /// Greedy by earliest right endpoint; when verification mode is on the
  /// result is checked against max_nonoverlapping_dp.
  int max_nonoverlapping(std::span<const int> seq) const;
  int max_nonoverlapping_dp(std::span<const int> seq) const;

 private:
  struct Letter {
    std::vector<int> below;  // earlier positions whose value must be smaller
    std::vector<int> above;  // earlier positions whose value must be larger
  };

  template <class Visit>
  bool search(std::span<const int> seq, Visit&& visit) const;
  std::uint32_t window_mask_scalar(std::span<const int> seq) const;
  void require_segmented(const char* op) const;

  std::size_t m_;
  bool segmented_;
  bool anchored_left_;
  bool anchored_right_;
  std::vector<Gap> gaps_;
  std::vector<Letter> letters_;
  std::vector<int> min_tail_;  // minimal span needed after placing letter j
  std::vector<simd::OffsetPair> pairs_;
};

std::vector<Occurrence> occurrences(const PopPattern& p, std::span<const int> seq);
std::size_t count_occurrences(const PopPattern& p, std::span<const int> seq);
bool avoids(const PopPattern& p, std::span<const int> seq);
bool avoids_all(std::span<const PopPattern> patterns, std::span<const int> seq);
bool quasi_avoids(const PopPattern& p, std::span<const int> seq);
int max_nonoverlapping(const PopPattern& p, std::span<const int> seq);
/// Words use the same semantics; equal letters never satisfy a strict relation.
std::size_t word_occurrences(const PopPattern& p, std::span<const int> word);

/// Greedy/DP cross-check for non-overlapping counts. Defaults to on in debug
/// builds and when POPLAB_VERIFY=1.
bool verification_mode() noexcept;
void set_verification_mode(bool on) noexcept;

}  // namespace poplab
