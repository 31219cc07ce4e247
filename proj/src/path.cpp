#include "pathforge/path.hpp"

#include <algorithm>

#include "pathforge/error.hpp"

namespace pathforge {

const char* to_string(Lattice lattice) {
  return lattice == Lattice::Dyck ? "dyck" : "bilateral";
}

Lattice parse_lattice(std::string_view text) {
  if (text == "dyck") return Lattice::Dyck;
  if (text == "bilateral") return Lattice::Bilateral;
  throw Error(ErrorCode::InvalidArgument, "unknown lattice '" + std::string(text) + "'");
}

Word::Word(std::vector<Step> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) throw Error(ErrorCode::EmptyWord, "word is empty");
  if (steps_.size() % 2 != 0) {
    throw Error(ErrorCode::OddLength,
                "word has odd length " + std::to_string(steps_.size()));
  }
  const auto ups = std::count(steps_.begin(), steps_.end(), Step::Up);
  const auto downs = static_cast<std::ptrdiff_t>(steps_.size()) - ups;
  if (ups != downs) {
    throw Error(ErrorCode::UnbalancedWord, "word has " + std::to_string(ups) + " up-steps and " +
                                               std::to_string(downs) + " down-steps");
  }
}

Word parse_word(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == 'U' || c == '1') {
      steps.push_back(Step::Up);
    } else if (c == 'D' || c == '0') {
      steps.push_back(Step::Down);
    } else {
      throw Error(ErrorCode::IllegalCharacter,
                  "illegal character '" + std::string(1, c) + "' at position " +
                      std::to_string(i + 1),
                  i + 1);
    }
  }
  return Word(std::move(steps));
}

std::string to_string(std::span<const Step> steps) {
  std::string out;
  out.reserve(steps.size());
  for (Step s : steps) out.push_back(s == Step::Up ? 'U' : 'D');
  return out;
}

Path::Path(Word word) : word_(std::move(word)) {
  heights_.reserve(word_.length() + 1);
  int h = 0;
  heights_.push_back(h);
  for (Step s : word_.steps()) {
    h += delta(s);
    heights_.push_back(h);
  }
}

Path to_path(PathView view) {
  return Path(Word(std::vector<Step>(view.steps.begin(), view.steps.end())));
}

Classification classify(PathView path) {
  const auto [lo, hi] = std::minmax_element(path.heights.begin(), path.heights.end());
  return {*lo >= 0, *lo, *hi};
}

bool belongs_to(PathView path, Lattice lattice) {
  return lattice == Lattice::Bilateral || classify(path).is_dyck;
}

TurnList turns(PathView path) {
  TurnList out;
  const auto t = static_cast<int>(path.steps.size());
  // Virtual up-step into v_0 and virtual down-step out of v_t.
  auto in_step = [&](int i) { return i == 0 ? Step::Up : path.steps[static_cast<std::size_t>(i - 1)]; };
  auto out_step = [&](int i) { return i == t ? Step::Down : path.steps[static_cast<std::size_t>(i)]; };
  for (int i = 0; i <= t; ++i) {
    const Step in = in_step(i);
    const Step out_s = out_step(i);
    if (in == Step::Up && out_s == Step::Down) {
      out.peaks.push_back(i);
    } else if (in == Step::Down && out_s == Step::Up) {
      out.valleys.push_back(i);
    }
  }
  return out;
}

}  // namespace pathforge
