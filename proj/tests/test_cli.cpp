#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace cli = pathforge::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "pathforge");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::filesystem::path kGolden = PATHFORGE_GOLDEN_DIR;

}  // namespace

TEST_CASE("golden outputs are byte-stable") {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases = {
      {{"map", "UUDDDU"}, "map_UUDDDU.txt"},
      {{"map", "UUDDDU", "--format", "json"}, "map_UUDDDU.json"},
      {{"map", "UDUDDU", "--direction", "inverse", "--format", "json"}, "map_UDUDDU_inverse.json"},
      {{"poly", "3", "dyck", "bibanded"}, "poly_3_dyck_bibanded.txt"},
      {{"poly", "3", "dyck", "peaks"}, "poly_3_dyck_peaks.txt"},
      {{"poly", "3", "dyck", "bibanded", "--format", "json"}, "poly_3_dyck_bibanded.json"},
      {{"poly", "3", "bilateral", "peaks"}, "poly_3_bilateral_peaks.txt"},
      {{"enumerate", "3", "dyck"}, "enumerate_3_dyck.txt"},
      {{"checkmarks", "UDUDDU", "--format", "json"}, "checkmarks_UDUDDU.json"},
      {{"render", "UUDDDU"}, "render_UUDDDU.txt"},
      {{"render", "UDUDDU", "--as", "svg", "--checkmarks"}, "render_UDUDDU_checkmarks.svg"},
      {{"render", "UUDDDU", "--as", "svg", "--bands", "--peaks", "--checkmarks"}, "render_UUDDDU_full.svg"},
      {{"render", "UD", "--as", "svg", "--bands"}, "render_UD_bands.svg"},
  };
  for (const auto& [args, fixture] : cases) {
    CAPTURE(fixture);
    const Result r = run(args);
    CHECK(r.code == cli::kOk);
    CHECK(r.out == read_file(kGolden / fixture));
  }
}

TEST_CASE("map round trip through the CLI") {
  const Result forward = run({"map", "UUDDDU", "--format", "json"});
  REQUIRE(forward.code == 0);
  CHECK(forward.out.find("\"image\":\"UDUDDU\"") != std::string::npos);
  const Result back = run({"map", "UDUDDU", "--direction", "inverse"});
  CHECK(back.out.rfind("UDUDDU -> UUDDDU", 0) == 0);
  CHECK(run({"map", "UD"}).out == "UD -> UD  a^2 -> m\n");
}

TEST_CASE("checkmarks command both ways") {
  CHECK(run({"checkmarks", "UDUDDU"}).out == "NW=.^^;SW=^.\n");
  CHECK(run({"checkmarks", "--from", "NW=.^^;SW=^."}).out == "UDUDDU\n");
  CHECK(run({"checkmarks", "--from-json", R"({"n":3,"nw":[2,3],"sw":[1]})", "--format", "json"}).out ==
        "{\"word\":\"UDUDDU\",\"heights\":[0,1,0,1,0,-1,0],\"dyck\":false}\n");
  CHECK(run({"checkmarks", "--from", "NW=...;SW=^."}).code == cli::kUsage);
  CHECK(run({"checkmarks"}).code == cli::kUsage);
}

TEST_CASE("poly closed form matches enumeration") {
  CHECK(run({"poly", "6", "bilateral", "bibanded", "--source", "closed-form"}).out ==
        run({"poly", "6", "bilateral", "bibanded"}).out);
  CHECK(run({"poly", "--n", "3", "--lattice", "dyck", "--scheme", "peaks"}).out == "m^3 + 3m^2 + m\n");
}

TEST_CASE("verify exit codes") {
  const Result ok = run({"verify", "3", "dyck", "--format", "json"});
  CHECK(ok.code == cli::kOk);
  CHECK(ok.out.find("{\"n\":3,\"lattice\":\"dyck\",\"scheme\":\"bibanded\",\"path_count\":5,\"match\":true") !=
        std::string::npos);
  CHECK(ok.out.find("{\"summary\":{\"reports\":6,\"matched\":6,\"errors\":0,\"paths\":16}}") !=
        std::string::npos);

  CHECK(run({"verify", "8", "both"}).code == cli::kOk);
  CHECK(run({"verify", "0"}).code == cli::kUsage);
  CHECK(run({"verify", "4", "dyck", "--max-n", "3"}).code == cli::kLimit);
  CHECK(run({"verify", "3", "bilateral", "--format", "json"}).out.find("\"stated_match\":false") !=
        std::string::npos);
}

TEST_CASE("limit from the environment") {
  ::setenv("PATHFORGE_MAX_N", "2", 1);
  CHECK(run({"enumerate", "3"}).code == cli::kLimit);
  CHECK(run({"enumerate", "3", "--max-n", "3"}).code == cli::kOk);
  ::setenv("PATHFORGE_MAX_N", "zero", 1);
  CHECK(run({"enumerate", "1"}).code == cli::kUsage);
  ::unsetenv("PATHFORGE_MAX_N");
  CHECK(run({"enumerate", "15"}).code == cli::kLimit);
}

TEST_CASE("parse errors report 1-based positions") {
  const Result r = run({"map", "UUxD"});
  CHECK(r.code == cli::kUsage);
  CHECK(r.err.find("position 3") != std::string::npos);
  CHECK(run({"map", "UUD"}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"poly", "3", "motzkin"}).code == cli::kUsage);
  CHECK(run({"render", "UD", "--as", "svg", "--cell", "2"}).code == cli::kUsage);
}

TEST_CASE("--out writes a file; unwritable destinations exit 4") {
  const auto path = std::filesystem::temp_directory_path() / "pathforge_cli_test.svg";
  std::filesystem::remove(path);
  const Result r = run({"render", "UD", "--as", "svg", "--out", path.string()});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.empty());
  CHECK(read_file(path) == run({"render", "UD", "--as", "svg"}).out);
  std::filesystem::remove(path);

  CHECK(run({"render", "UD", "--out", "/nonexistent-dir/x.txt"}).code == cli::kIo);
}

TEST_CASE("help exits cleanly") {
  const Result r = run({"--help"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("verify") != std::string::npos);
}
