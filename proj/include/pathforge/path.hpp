#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pathforge {

/// Up is the vertex difference (1,1), Down is (1,-1). Up orders before Down.
enum class Step : std::uint8_t { Up = 0, Down = 1 };

/// Dyck: upper half plane (all heights >= 0). Bilateral: no height restriction.
enum class Lattice { Dyck, Bilateral };

constexpr Step toggled(Step s) { return s == Step::Up ? Step::Down : Step::Up; }
constexpr int delta(Step s) { return s == Step::Up ? 1 : -1; }

const char* to_string(Lattice lattice);
Lattice parse_lattice(std::string_view text);

/// A balanced, nonempty, even-length sequence of steps.
class Word {
 public:
  /// Throws Error{EmptyWord | OddLength | UnbalancedWord}.
  explicit Word(std::vector<Step> steps);

  std::span<const Step> steps() const { return steps_; }
  std::size_t length() const { return steps_.size(); }
  int n() const { return static_cast<int>(steps_.size() / 2); }
  Step operator[](std::size_t i) const { return steps_[i]; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Step> steps_;
};

/// Accepts U/D or 1/0. Errors report a 1-based character position.
Word parse_word(std::string_view text);
std::string to_string(std::span<const Step> steps);
inline std::string to_string(const Word& word) { return to_string(word.steps()); }

/// Non-owning view of a path: steps e_1..e_2n (stored 0-based) and heights h_0..h_2n.
struct PathView {
  std::span<const Step> steps;
  std::span<const int> heights;

  int n() const { return static_cast<int>(steps.size() / 2); }
};

/// Owning path: a word plus its prefix-sum height profile.
class Path {
 public:
  explicit Path(Word word);

  const Word& word() const { return word_; }
  std::span<const Step> steps() const { return word_.steps(); }
  std::span<const int> heights() const { return heights_; }
  int n() const { return word_.n(); }

  PathView view() const { return {word_.steps(), heights_}; }
  operator PathView() const { return view(); }

  friend bool operator==(const Path& a, const Path& b) { return a.word_ == b.word_; }
  friend auto operator<=>(const Path& a, const Path& b) { return a.word_ <=> b.word_; }

 private:
  Word word_;
  std::vector<int> heights_;
};

inline Path to_path(Word word) { return Path(std::move(word)); }
inline Path parse_path(std::string_view text) { return Path(parse_word(text)); }
/// Copies a view into an owning path (re-validating the word).
Path to_path(PathView view);
inline std::string to_string(const Path& path) { return to_string(path.steps()); }

struct Classification {
  bool is_dyck;
  int min_height;
  int max_height;
};

Classification classify(PathView path);
bool belongs_to(PathView path, Lattice lattice);

/// Peak and valley vertex indices (0..2n). v_0 is a peak iff e_1 is Down, v_2n
/// is a peak iff e_2n is Up; the endpoints are never valleys.
struct TurnList {
  std::vector<int> peaks;
  std::vector<int> valleys;

  friend bool operator==(const TurnList&, const TurnList&) = default;
};

TurnList turns(PathView path);

}  // namespace pathforge
