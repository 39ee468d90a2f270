#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "poplab/flat.hpp"
#include "poplab/pattern.hpp"
#include "poplab/permutation.hpp"

namespace poplab {

// --- Cycles of bounded length <-> avoiders of a-a1..ak ----------------------

using CycleForm = std::vector<std::vector<int>>;

/// Each cycle least element first; cycles by decreasing least element.
CycleForm standard_cycle_form(const Permutation& p);
/// Parses "(1 2)(3 4)"; entries separated by spaces or commas.
CycleForm parse_cycles(std::string_view text);
std::string format_cycles(const CycleForm& c);

/// Writes p in standard cycle form and erases the parentheses. Throws if a
/// cycle is longer than k.
Permutation cycles_to_avoider(const Permutation& p, int k);
/// Cuts s at its left-to-right minima and reads the pieces as cycles. Throws
/// if s contains a-a1...ak.
Permutation avoider_to_cycles(const Permutation& s, int k);

// --- Square faces of the hypercube -> good permutations ---------------------

/// A binary vector of length n+1 in which positions x < y are marked.
class HypercubeFace {
 public:
  /// Parses a string over {0,1,x,y} with exactly one x before exactly one y.
  static HypercubeFace parse(std::string_view text);
  HypercubeFace(std::vector<int> bits, int x, int y);

  int n() const noexcept { return static_cast<int>(bits_.size()) - 1; }
  int x() const noexcept { return x_; }
  int y() const noexcept { return y_; }
  /// Entry at position k; meaningless at the marks.
  int bit(int k) const { return bits_.at(static_cast<std::size_t>(k)); }
  std::string to_string() const;

  friend bool operator==(const HypercubeFace&, const HypercubeFace&) = default;

 private:
  std::vector<int> bits_;
  int x_;
  int y_;
};

/// All C(n+1,2) 2^{n-1} faces for vector length n+1, n >= 1.
std::vector<HypercubeFace> all_faces(int n);

/// The good (n+2)-permutation of the face: leading bits place the smallest
/// values at the ends in turn, then the pivot splits the rest into a block A
/// of larger values and a block B of smaller values.
Permutation face_to_good_perm(const HypercubeFace& f);

/// Avoids 2-1-3 and contains exactly one occurrence of the segmented 312.
bool is_good_permutation(std::span<const int> p);

struct FaceReport {
  int n = 0;
  long long faces = 0;
  long long distinct_images = 0;
  long long good_permutations = 0;
  long long expected = 0;  // C(n+1,2) 2^{n-1}
  bool all_images_good = true;
  bool vector_ok = true;  // the published example, checked when n = 6
  bool passed() const {
    return all_images_good && vector_ok && distinct_images == faces && faces == expected &&
           good_permutations == expected;
  }
};

FaceReport verify_faces(int n);

}  // namespace poplab
