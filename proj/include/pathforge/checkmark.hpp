#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pathforge/path.hpp"

namespace pathforge {

enum class Mark : std::uint8_t { Blank = 0, Arrow = 1 };

/// Fixed-length arrow/blank sequence. Labels are 1-based.
class CheckmarkSeq {
 public:
  CheckmarkSeq() = default;
  explicit CheckmarkSeq(std::vector<Mark> marks) : marks_(std::move(marks)) {}
  /// Sequence of `length` blanks with arrows at the given 1-based labels.
  static CheckmarkSeq from_labels(int length, std::span<const int> labels);

  int length() const { return static_cast<int>(marks_.size()); }
  bool arrow_at(int label) const { return marks_[static_cast<std::size_t>(label - 1)] == Mark::Arrow; }
  std::span<const Mark> marks() const { return marks_; }
  int arrows() const;
  std::vector<int> arrow_labels() const;

  friend bool operator==(const CheckmarkSeq&, const CheckmarkSeq&) = default;

 private:
  std::vector<Mark> marks_;
};

/// True iff arrows(nw) - arrows(sw) is 0 or 1.
bool satisfies_condition_i(const CheckmarkSeq& nw, const CheckmarkSeq& sw);

/// North-west sequence of length n and south-west sequence of length n-1
/// satisfying condition (i). Construction throws Error{MalformedPair} otherwise.
class CheckmarkPair {
 public:
  CheckmarkPair(CheckmarkSeq nw, CheckmarkSeq sw);

  int n() const { return nw_.length(); }
  const CheckmarkSeq& nw() const { return nw_; }
  const CheckmarkSeq& sw() const { return sw_; }

  friend bool operator==(const CheckmarkPair&, const CheckmarkPair&) = default;

 private:
  CheckmarkSeq nw_;
  CheckmarkSeq sw_;
};

/// North-west label k sits on the anti-diagonal i + h = 2(k-1); south-west
/// label k on the diagonal i - h = 2k.
CheckmarkPair to_checkmarks(PathView path);

/// Reconstitution walk. Throws Error{InternalConsistency} if the walk does not
/// end at (2n, 0) having consumed every arrow.
Path from_checkmarks(const CheckmarkPair& pair);

/// Condition (ii), read with equal arrow counts required.
bool is_dyck_pair(const CheckmarkPair& pair);

/// "NW=.^^;SW=^." with '^' arrow and '.' blank, labels left to right.
std::string to_string(const CheckmarkPair& pair);
CheckmarkPair parse_checkmarks(std::string_view text);

}  // namespace pathforge
