#include "pathforge/weighting.hpp"

namespace pathforge {

BiBandedMonomial bibanded_monomial(PathView path) {
  BiBandedMonomial m;
  m.n = path.n();
  for (std::size_t j = 0; j < path.steps.size(); ++j) {
    if (band_of(path.steps[j], path.heights[j]) == Band::Odd) {
      ++m.exp_a;
    } else {
      ++m.exp_b;
    }
  }
  return m;
}

PeakMonomial peak_monomial(PathView path) {
  // A peak wherever Up is followed by Down, with a virtual Up before e_1 and a
  // virtual Down after e_2n.
  PeakMonomial m;
  m.n = path.n();
  Step previous = Step::Up;
  for (Step s : path.steps) {
    if (previous == Step::Up && s == Step::Down) ++m.exp_m;
    previous = s;
  }
  if (previous == Step::Up) ++m.exp_m;
  return m;
}

int odd_indexed_ups(PathView path) {
  int count = 0;
  for (std::size_t j = 0; j < path.steps.size(); j += 2) {
    if (path.steps[j] == Step::Up) ++count;
  }
  return count;
}

namespace {

void append_power(std::string& out, char var, int exp) {
  if (exp == 0) return;
  out.push_back(var);
  if (exp != 1) out += "^" + std::to_string(exp);
}

}  // namespace

std::string to_string(const BiBandedMonomial& m) {
  std::string out;
  append_power(out, 'a', m.exp_a);
  append_power(out, 'b', m.exp_b);
  return out.empty() ? "1" : out;
}

std::string to_string(const PeakMonomial& m) {
  std::string out;
  append_power(out, 'm', m.exp_m);
  return out.empty() ? "1" : out;
}

}  // namespace pathforge
