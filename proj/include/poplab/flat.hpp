#pragma once

// Patterns on the flat poset a < a1, ..., a < ak.

#include "poplab/pattern.hpp"

namespace poplab {

/// a-a1...ak.
PopPattern flat_dashed_pattern(int k);
/// aa1...ak.
PopPattern flat_segmented_pattern(int k);
/// a1...ak a ak+1...ak+l, segmented; k + l >= 1.
PopPattern flat_split_pattern(int k, int l);

}  // namespace poplab
