#include <doctest.h>

#include "oracle.hpp"
#include "pathforge/error.hpp"
#include "pathforge/path.hpp"

using namespace pathforge;

namespace {

ErrorCode parse_error(std::string_view text) {
  try {
    parse_word(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse error for " << text);
  return ErrorCode::InternalConsistency;
}

std::vector<int> heights_of(std::string_view text) {
  const Path p = parse_path(text);
  return {p.heights().begin(), p.heights().end()};
}

}  // namespace

TEST_CASE("parse_word accepts both alphabets") {
  const Word w = parse_word("UUDDDU");
  CHECK(w.steps().size() == 6);
  CHECK(w.n() == 3);
  CHECK(to_string(w) == "UUDDDU");
  CHECK(parse_word("110001") == w);
  CHECK(to_string(parse_word("UD")) == "UD");
}

TEST_CASE("parse_word errors") {
  CHECK(parse_error("UUD") == ErrorCode::OddLength);
  CHECK(parse_error("UUUD") == ErrorCode::UnbalancedWord);
  CHECK(parse_error("") == ErrorCode::EmptyWord);
  CHECK(parse_error("UxDD") == ErrorCode::IllegalCharacter);
  CHECK(parse_error("ud") == ErrorCode::IllegalCharacter);

  try {
    parse_word("UDUx");
    FAIL("no throw");
  } catch (const Error& e) {
    REQUIRE(e.position().has_value());
    CHECK(*e.position() == 4);
  }
}

TEST_CASE("heights are prefix sums") {
  CHECK(heights_of("UUDDDU") == std::vector<int>{0, 1, 2, 1, 0, -1, 0});
  CHECK(heights_of("UD") == std::vector<int>{0, 1, 0});
  CHECK(heights_of("DU") == std::vector<int>{0, -1, 0});
}

TEST_CASE("classify") {
  CHECK_FALSE(classify(parse_path("UUDDDU")).is_dyck);
  CHECK(classify(parse_path("UUDDDU")).min_height == -1);
  CHECK(classify(parse_path("UUUDDD")).is_dyck);
  CHECK(classify(parse_path("UDUDUD")).is_dyck);
  CHECK(belongs_to(parse_path("DU"), Lattice::Bilateral));
  CHECK_FALSE(belongs_to(parse_path("DU"), Lattice::Dyck));
}

TEST_CASE("turns with boundary conventions") {
  CHECK(turns(parse_path("UDUDUD")) == TurnList{{1, 3, 5}, {2, 4}});
  CHECK(turns(parse_path("DUDUDU")) == TurnList{{0, 2, 4, 6}, {1, 3, 5}});
  CHECK(turns(parse_path("UUUDDD")) == TurnList{{3}, {}});
}

TEST_CASE("lattice names round trip") {
  CHECK(parse_lattice(to_string(Lattice::Dyck)) == Lattice::Dyck);
  CHECK(parse_lattice(to_string(Lattice::Bilateral)) == Lattice::Bilateral);
  CHECK_THROWS_AS(parse_lattice("motzkin"), Error);
}

TEST_CASE("path invariants, exhaustive n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& w : oracle::all_words(n)) {
      const Path p = parse_path(w);
      CHECK(to_string(p) == w);
      const auto h = p.heights();
      REQUIRE(h.size() == w.size() + 1);
      CHECK(h.front() == 0);
      CHECK(h.back() == 0);
      for (std::size_t i = 0; i < h.size(); ++i) {
        CHECK(((h[i] - static_cast<int>(i)) & 1) == 0);
        if (i > 0) CHECK(std::abs(h[i] - h[i - 1]) == 1);
      }
      CHECK(classify(p).is_dyck == oracle::is_dyck(w));

      const TurnList t = turns(p);
      CHECK(t.peaks.size() == t.valleys.size() + 1);
      CHECK(static_cast<int>(t.peaks.size()) == oracle::peak_count(w));
      // Peaks and valleys strictly interleave, starting and ending with a peak.
      for (std::size_t k = 0; k < t.valleys.size(); ++k) {
        CHECK(t.peaks[k] < t.valleys[k]);
        CHECK(t.valleys[k] < t.peaks[k + 1]);
      }
      for (std::size_t k = 1; k < t.peaks.size(); ++k) {
        const auto a = static_cast<std::size_t>(t.peaks[k - 1]);
        const auto b = static_cast<std::size_t>(t.peaks[k]);
        CHECK(static_cast<int>(a) + h[a] < static_cast<int>(b) + h[b]);
      }
      for (std::size_t k = 1; k < t.valleys.size(); ++k) {
        const auto a = static_cast<std::size_t>(t.valleys[k - 1]);
        const auto b = static_cast<std::size_t>(t.valleys[k]);
        CHECK(static_cast<int>(a) - h[a] < static_cast<int>(b) - h[b]);
      }
      if (classify(p).is_dyck) {
        CHECK(t.peaks.front() != 0);
        CHECK(t.peaks.back() != 2 * n);
      }
    }
  }
}

TEST_CASE("word order is lexicographic with U before D") {
  CHECK(parse_word("UUDD") < parse_word("UDUD"));
  CHECK(parse_word("UDDU") < parse_word("DUUD"));
}
