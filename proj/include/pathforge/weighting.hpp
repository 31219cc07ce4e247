#pragma once

#include <string>

#include "pathforge/path.hpp"

namespace pathforge {

enum class Band { Odd, Even };

/// Odd band: an up-step from an even height or a down-step from an odd height.
/// Parity is mathematical, so -1 is odd.
constexpr Band band_of(Step step, int start_height) {
  const bool even_start = (start_height & 1) == 0;
  return (step == Step::Up) == even_start ? Band::Odd : Band::Even;
}

/// a^{exp_a} b^{exp_b} with exp_a + exp_b = 2n, both even.
struct BiBandedMonomial {
  int exp_a = 0;
  int exp_b = 0;
  int n = 0;

  /// Key shared with the peak-counting image: exp_b = 2v.
  int v() const { return exp_b / 2; }

  friend bool operator==(const BiBandedMonomial&, const BiBandedMonomial&) = default;
};

/// m^{exp_m}, 1 <= exp_m <= n + 1.
struct PeakMonomial {
  int exp_m = 0;
  int n = 0;

  int v() const { return exp_m - 1; }

  friend bool operator==(const PeakMonomial&, const PeakMonomial&) = default;
};

BiBandedMonomial bibanded_monomial(PathView path);
PeakMonomial peak_monomial(PathView path);

/// Number of Up-steps at odd 1-based positions.
int odd_indexed_ups(PathView path);

std::string to_string(const BiBandedMonomial& m);
std::string to_string(const PeakMonomial& m);

}  // namespace pathforge
