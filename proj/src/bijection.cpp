#include "pathforge/bijection.hpp"

#include <algorithm>

#include "pathforge/error.hpp"
#include "pathforge/weighting.hpp"

namespace pathforge {

SplitWord split_word(std::span<const Step> steps) {
  SplitWord split;
  split.odd.reserve(steps.size() / 2);
  split.even.reserve(steps.size() / 2);
  for (std::size_t j = 0; j < steps.size(); ++j) {
    // 0-based j is the 1-based position j + 1.
    (j % 2 == 0 ? split.odd : split.even).push_back(steps[j]);
  }
  return split;
}

std::vector<Step> interleave(const SplitWord& split) {
  std::vector<Step> steps;
  steps.reserve(split.odd.size() + split.even.size());
  for (std::size_t j = 0; j < split.odd.size(); ++j) {
    steps.push_back(split.odd[j]);
    steps.push_back(split.even[j]);
  }
  return steps;
}

namespace {

Mark as_mark(Step s) { return s == Step::Up ? Mark::Arrow : Mark::Blank; }
Step as_step(Mark m) { return m == Mark::Arrow ? Step::Up : Step::Down; }

}  // namespace

CheckmarkPair bijection_pair(PathView path) {
  const SplitWord split = split_word(path.steps);
  std::vector<Mark> nw;
  nw.reserve(split.odd.size());
  for (Step s : split.odd) nw.push_back(as_mark(toggled(s)));
  std::vector<Mark> sw;
  sw.reserve(split.even.size());
  for (Step s : split.even) sw.push_back(as_mark(s));
  sw.pop_back();
  return CheckmarkPair(CheckmarkSeq(std::move(nw)), CheckmarkSeq(std::move(sw)));
}

Path phi(PathView path) { return from_checkmarks(bijection_pair(path)); }

Path phi_inverse(PathView path) {
  const CheckmarkPair pair = to_checkmarks(path);
  const int n = pair.n();
  SplitWord split;
  for (Mark m : pair.nw().marks()) split.odd.push_back(toggled(as_step(m)));
  for (Mark m : pair.sw().marks()) split.even.push_back(as_step(m));
  const auto ups = std::count(split.odd.begin(), split.odd.end(), Step::Up) +
                   std::count(split.even.begin(), split.even.end(), Step::Up);
  const auto missing = n - ups;
  if (missing != 0 && missing != 1) {
    throw Error(ErrorCode::InternalConsistency,
                "inverse map needs " + std::to_string(missing) + " more up-steps in one slot");
  }
  split.even.push_back(missing == 1 ? Step::Up : Step::Down);
  return Path(Word(interleave(split)));
}

WeightCorrespondence check_weight_correspondence(PathView path) {
  const int v = bibanded_monomial(path).v();
  const Path image = phi(path);
  return {v, peak_monomial(image).exp_m == v + 1};
}

}  // namespace pathforge
