#include "pathforge/checkmark.hpp"

#include <algorithm>

#include "pathforge/error.hpp"

namespace pathforge {

CheckmarkSeq CheckmarkSeq::from_labels(int length, std::span<const int> labels) {
  std::vector<Mark> marks(static_cast<std::size_t>(std::max(length, 0)), Mark::Blank);
  for (int label : labels) {
    if (label < 1 || label > length) {
      throw Error(ErrorCode::MalformedPair, "checkmark label " + std::to_string(label) +
                                                " outside 1.." + std::to_string(length));
    }
    marks[static_cast<std::size_t>(label - 1)] = Mark::Arrow;
  }
  return CheckmarkSeq(std::move(marks));
}

int CheckmarkSeq::arrows() const {
  return static_cast<int>(std::count(marks_.begin(), marks_.end(), Mark::Arrow));
}

std::vector<int> CheckmarkSeq::arrow_labels() const {
  std::vector<int> labels;
  for (int k = 1; k <= length(); ++k) {
    if (arrow_at(k)) labels.push_back(k);
  }
  return labels;
}

bool satisfies_condition_i(const CheckmarkSeq& nw, const CheckmarkSeq& sw) {
  const int diff = nw.arrows() - sw.arrows();
  return diff == 0 || diff == 1;
}

CheckmarkPair::CheckmarkPair(CheckmarkSeq nw, CheckmarkSeq sw)
    : nw_(std::move(nw)), sw_(std::move(sw)) {
  if (nw_.length() < 1) throw Error(ErrorCode::MalformedPair, "north-west sequence is empty");
  if (sw_.length() != nw_.length() - 1) {
    throw Error(ErrorCode::MalformedPair,
                "south-west sequence has length " + std::to_string(sw_.length()) +
                    ", expected " + std::to_string(nw_.length() - 1));
  }
  if (!satisfies_condition_i(nw_, sw_)) {
    throw Error(ErrorCode::MalformedPair,
                "north-west arrows (" + std::to_string(nw_.arrows()) +
                    ") must equal or exceed by one the south-west arrows (" +
                    std::to_string(sw_.arrows()) + ")");
  }
}

CheckmarkPair to_checkmarks(PathView path) {
  const int n = path.n();
  std::vector<Mark> nw(static_cast<std::size_t>(n), Mark::Blank);
  std::vector<Mark> sw(static_cast<std::size_t>(n - 1), Mark::Blank);
  const TurnList t = turns(path);
  for (int i : t.peaks) {
    const int anti = i + path.heights[static_cast<std::size_t>(i)];
    if (anti == 2 * n) continue;  // north-east wall
    nw[static_cast<std::size_t>(anti / 2)] = Mark::Arrow;
  }
  for (int i : t.valleys) {
    const int diag = i - path.heights[static_cast<std::size_t>(i)];
    if (diag == 2 * n) continue;  // south-east wall
    sw[static_cast<std::size_t>(diag / 2 - 1)] = Mark::Arrow;
  }
  return CheckmarkPair(CheckmarkSeq(std::move(nw)), CheckmarkSeq(std::move(sw)));
}

Path from_checkmarks(const CheckmarkPair& pair) {
  const int n = pair.n();
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(2 * n));
  int i = 0;
  int h = 0;
  Step direction = Step::Up;
  int nw_used = 0;
  int sw_used = 0;
  while (i < 2 * n) {
    if (direction == Step::Up) {
      const int label = (i + h) / 2 + 1;
      if (i + h == 2 * n) {
        direction = Step::Down;
      } else if (label <= n && pair.nw().arrow_at(label)) {
        direction = Step::Down;
        ++nw_used;
      }
    } else {
      const int label = (i - h) / 2;
      if (i - h == 2 * n) {
        direction = Step::Up;
      } else if (label >= 1 && label <= n - 1 && pair.sw().arrow_at(label)) {
        direction = Step::Up;
        ++sw_used;
      }
    }
    steps.push_back(direction);
    h += delta(direction);
    ++i;
  }
  if (h != 0 || nw_used != pair.nw().arrows() || sw_used != pair.sw().arrows()) {
    throw Error(ErrorCode::InternalConsistency,
                "checkmark walk ended at height " + std::to_string(h) + " having used " +
                    std::to_string(nw_used) + "/" + std::to_string(pair.nw().arrows()) +
                    " north-west and " + std::to_string(sw_used) + "/" +
                    std::to_string(pair.sw().arrows()) + " south-west arrows");
  }
  return Path(Word(std::move(steps)));
}

bool is_dyck_pair(const CheckmarkPair& pair) {
  const auto nw = pair.nw().arrow_labels();
  const auto sw = pair.sw().arrow_labels();
  if (nw.size() != sw.size()) return false;
  for (std::size_t h = 0; h < nw.size(); ++h) {
    if (nw[h] <= sw[h]) return false;
  }
  return true;
}

namespace {

std::string marks_text(const CheckmarkSeq& seq) {
  std::string out;
  for (Mark m : seq.marks()) out.push_back(m == Mark::Arrow ? '^' : '.');
  return out;
}

CheckmarkSeq parse_marks(std::string_view text, std::size_t offset) {
  std::vector<Mark> marks;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '^') {
      marks.push_back(Mark::Arrow);
    } else if (text[i] == '.') {
      marks.push_back(Mark::Blank);
    } else {
      throw Error(ErrorCode::IllegalCharacter,
                  "illegal checkmark character '" + std::string(1, text[i]) + "' at position " +
                      std::to_string(offset + i + 1),
                  offset + i + 1);
    }
  }
  return CheckmarkSeq(std::move(marks));
}

}  // namespace

std::string to_string(const CheckmarkPair& pair) {
  return "NW=" + marks_text(pair.nw()) + ";SW=" + marks_text(pair.sw());
}

CheckmarkPair parse_checkmarks(std::string_view text) {
  constexpr std::string_view nw_tag = "NW=";
  constexpr std::string_view sw_tag = ";SW=";
  const auto sep = text.find(sw_tag);
  if (!text.starts_with(nw_tag) || sep == std::string_view::npos) {
    throw Error(ErrorCode::MalformedPair, "expected checkmarks of the form NW=...;SW=...");
  }
  const auto nw_text = text.substr(nw_tag.size(), sep - nw_tag.size());
  const auto sw_offset = sep + sw_tag.size();
  return CheckmarkPair(parse_marks(nw_text, nw_tag.size()),
                       parse_marks(text.substr(sw_offset), sw_offset));
}

}  // namespace pathforge
