#pragma once

#include <vector>

#include "pathforge/checkmark.hpp"
#include "pathforge/path.hpp"

namespace pathforge {

/// Entries of a word at 1-based odd and even positions.
struct SplitWord {
  std::vector<Step> odd;
  std::vector<Step> even;
};

SplitWord split_word(std::span<const Step> steps);
/// Inverse of split_word; odd and even must have equal length.
std::vector<Step> interleave(const SplitWord& split);

/// Step 2 of the map: toggle the odd part into the north-west sequence and
/// drop the last even entry to get the south-west sequence.
CheckmarkPair bijection_pair(PathView path);

/// Bi-banded path to peak-counting path.
Path phi(PathView path);
/// Peak-counting path back to its bi-banded preimage.
Path phi_inverse(PathView path);

struct WeightCorrespondence {
  int v = 0;
  bool holds = false;
};

/// With 2v the b-exponent of `path`, checks that phi(path) has v + 1 peaks.
WeightCorrespondence check_weight_correspondence(PathView path);

}  // namespace pathforge
