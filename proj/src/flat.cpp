#include "poplab/flat.hpp"

#include <string>

#include "poplab/error.hpp"

namespace poplab {

namespace {

std::string leg(int i) { return "a" + std::to_string(i); }

}  // namespace

PopPattern flat_dashed_pattern(int k) {
  std::vector<std::string> letters{"a"};
  std::vector<Gap> gaps{Gap::free};
  for (int i = 1; i <= k; ++i) letters.push_back(leg(i));
  for (int i = 1; i < k; ++i) gaps.push_back(Gap::adjacent);
  return PopPattern(Poset::flat(k), letters, gaps);
}

PopPattern flat_segmented_pattern(int k) { return flat_split_pattern(0, k); }

PopPattern flat_split_pattern(int k, int l) {
  if (k < 0 || l < 0 || k + l < 1) throw Error("flat_split_pattern: need k, l >= 0 and k + l >= 1");
  std::vector<std::string> letters;
  for (int i = 1; i <= k; ++i) letters.push_back(leg(i));
  letters.push_back("a");
  for (int i = k + 1; i <= k + l; ++i) letters.push_back(leg(i));
  return PopPattern::segmented(Poset::flat(k + l), letters);
}

}  // namespace poplab
