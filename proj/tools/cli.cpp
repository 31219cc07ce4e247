#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pathforge/bijection.hpp"
#include "pathforge/checkmark.hpp"
#include "pathforge/enumeration.hpp"
#include "pathforge/error.hpp"
#include "pathforge/json.hpp"
#include "pathforge/render.hpp"
#include "pathforge/weighting.hpp"

namespace pathforge::cli {

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::LimitExceeded:
    case ErrorCode::ArithmeticOverflow:
      return kLimit;
    case ErrorCode::Io:
      return kIo;
    case ErrorCode::InternalConsistency:
      return kInternal;
    default:
      return kUsage;
  }
}

int max_n_from_env() {
  const char* env = std::getenv("PATHFORGE_MAX_N");
  if (env == nullptr || *env == '\0') return kDefaultMaxN;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 1 || value > 64) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad PATHFORGE_MAX_N '") + env + "'");
  }
  return static_cast<int>(value);
}

struct Globals {
  std::string format = "text";
  std::string out_path;
  int max_n = 0;  // 0: environment or default

  bool json() const { return format == "json"; }
};

int cmd_enumerate(int n, const std::string& lattice, const EnumerationOptions& opts,
                  const Globals& g, std::ostream& out) {
  for_each_path(
      n, parse_lattice(lattice),
      [&](PathView p) {
        if (g.json()) {
          out << json::path(p).dump() << '\n';
        } else {
          out << to_string(p.steps) << '\n';
        }
      },
      opts);
  return kOk;
}

int cmd_map(const std::string& word, const std::string& direction, const Globals& g,
            std::ostream& out) {
  const Path input = parse_path(word);
  const bool inverse = direction == "inverse";
  const Path image = inverse ? phi_inverse(input) : phi(input);
  if (g.json()) {
    out << json::mapping(input, image, inverse).dump() << '\n';
  } else {
    const PathView banded = inverse ? image.view() : input.view();
    const PathView peaked = inverse ? input.view() : image.view();
    out << to_string(input) << " -> " << to_string(image) << "  "
        << to_string(bibanded_monomial(banded)) << (inverse ? " <- " : " -> ")
        << to_string(peak_monomial(peaked)) << '\n';
  }
  return kOk;
}

int cmd_checkmarks(const std::string& word, const std::string& from, const std::string& from_json,
                   const Globals& g, std::ostream& out) {
  const int sources = !word.empty() + !from.empty() + !from_json.empty();
  if (sources != 1) {
    throw Error(ErrorCode::InvalidArgument,
                "checkmarks needs exactly one of WORD, --from or --from-json");
  }
  if (!word.empty()) {
    const CheckmarkPair pair = to_checkmarks(parse_path(word));
    if (g.json()) {
      out << json::checkmarks(pair).dump() << '\n';
    } else {
      out << to_string(pair) << '\n';
    }
    return kOk;
  }
  CheckmarkPair pair = [&] {
    if (!from.empty()) return parse_checkmarks(from);
    json::Json parsed = json::Json::parse(from_json, nullptr, false);
    if (parsed.is_discarded()) throw Error(ErrorCode::MalformedPair, "checkmark JSON does not parse");
    return json::checkmarks_from(parsed);
  }();
  const Path path = from_checkmarks(pair);
  if (g.json()) {
    out << json::path(path).dump() << '\n';
  } else {
    out << to_string(path) << '\n';
  }
  return kOk;
}

int cmd_poly(int n, const std::string& lattice_text, const std::string& scheme_text,
             const std::string& source, const EnumerationOptions& opts, const Globals& g,
             std::ostream& out) {
  const Lattice lattice = parse_lattice(lattice_text);
  const Scheme scheme = parse_scheme(scheme_text);
  const WeightPolynomial poly = source == "closed-form"
                                    ? closed_form_polynomial(n, lattice, scheme)
                                    : weight_polynomial(n, lattice, scheme, opts);
  if (g.json()) {
    out << json::polynomial(poly, lattice).dump() << '\n';
  } else {
    out << to_string(poly) << '\n';
  }
  return kOk;
}

int cmd_verify(int n_max, const std::string& lattice_text, const std::string& scheme_text,
               bool timing, const EnumerationOptions& opts, const Globals& g, std::ostream& out) {
  if (n_max < 1) throw Error(ErrorCode::InvalidArgument, "verify needs n_max >= 1");
  std::vector<Lattice> lattices;
  if (lattice_text == "both") {
    lattices = {Lattice::Dyck, Lattice::Bilateral};
  } else {
    lattices = {parse_lattice(lattice_text)};
  }
  std::vector<Scheme> schemes;
  if (scheme_text == "both") {
    schemes = {Scheme::BiBanded, Scheme::PeakCounting};
  } else {
    schemes = {parse_scheme(scheme_text)};
  }

  std::size_t total = 0, matched = 0, errors = 0;
  Count paths = 0;
  for (Lattice lattice : lattices) {
    for (Scheme scheme : schemes) {
      for (const VerifyReport& r : verify(1, n_max, lattice, scheme, opts)) {
        ++total;
        if (r.error) ++errors;
        if (r.match) ++matched;
        paths = checked_add(paths, r.path_count);
        if (g.json()) {
          out << json::report(r, timing).dump() << '\n';
          continue;
        }
        out << "n=" << r.n << ' ' << to_string(r.lattice) << ' ' << to_string(r.scheme) << ' ';
        if (r.error) {
          out << "error " << to_string(*r.error) << ": " << r.error_message;
        } else {
          out << "paths=" << r.path_count << ' ' << (r.match ? "match" : "MISMATCH") << "  "
              << to_string(r.enumerated);
        }
        if (timing) {
          out << "  (" << std::chrono::duration<double, std::milli>(r.elapsed).count() << " ms)";
        }
        out << '\n';
      }
    }
  }
  if (g.json()) {
    json::Json summary;
    summary["reports"] = total;
    summary["matched"] = matched;
    summary["errors"] = errors;
    summary["paths"] = paths;
    out << json::Json{{"summary", summary}}.dump() << '\n';
  } else {
    out << "verified " << total << " reports: " << matched << " matched, "
        << total - matched - errors << " mismatched, " << errors << " errors, " << paths
        << " paths\n";
  }
  if (errors != 0) return kLimit;
  return matched == total ? kOk : kMismatch;
}

int cmd_render(const std::string& word, const RenderSpec& spec, std::ostream& out) {
  out << render(parse_path(word), spec);
  return kOk;
}

void write_output(const Globals& g, const std::string& text, std::ostream& out) {
  if (g.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(g.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::Io, "cannot open '" + g.out_path + "' for writing");
  file << text;
  file.close();
  if (!file) throw Error(ErrorCode::Io, "failed writing '" + g.out_path + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bi-banded and peak-counting lattice path workbench", "pathforge"};
  app.require_subcommand(1);

  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--out", g.out_path, "Write output to this file instead of stdout");
  app.add_option("--max-n", g.max_n, "Enumeration limit (overrides PATHFORGE_MAX_N)")
      ->check(CLI::Range(1, 64));

  const auto lattices = CLI::IsMember({"dyck", "bilateral"});
  const auto schemes = CLI::IsMember({"bibanded", "peaks", "peak-counting", "peakcounting"});

  int n = 0;
  std::string lattice = "dyck";
  std::string scheme = "bibanded";
  std::string word;

  auto* enumerate = app.add_subcommand("enumerate", "List all paths of length 2n");
  enumerate->fallthrough();
  enumerate->add_option("n,--n", n, "Half-length n")->required();
  enumerate->add_option("lattice,--lattice", lattice)->check(lattices)->capture_default_str();

  std::string direction = "forward";
  auto* map = app.add_subcommand("map", "Apply the bijection or its inverse to a word");
  map->fallthrough();
  map->add_option("word", word, "Path word over U/D")->required();
  map->add_option("--direction", direction)
      ->check(CLI::IsMember({"forward", "inverse"}))
      ->capture_default_str();

  std::string from;
  std::string from_json;
  auto* checkmarks = app.add_subcommand("checkmarks", "Checkmark representation of a path, or back");
  checkmarks->fallthrough();
  checkmarks->add_option("word", word, "Path word over U/D");
  checkmarks->add_option("--from", from, "Rebuild a path from NW=...;SW=... text");
  checkmarks->add_option("--from-json", from_json, "Rebuild a path from {\"n\",\"nw\",\"sw\"} JSON");

  std::string source = "enumerate";
  auto* poly = app.add_subcommand("poly", "Weight polynomial for length 2n");
  poly->fallthrough();
  poly->add_option("n,--n", n)->required();
  poly->add_option("lattice,--lattice", lattice)->check(lattices)->capture_default_str();
  poly->add_option("scheme,--scheme", scheme)->check(schemes)->capture_default_str();
  poly->add_option("--source", source)
      ->check(CLI::IsMember({"enumerate", "closed-form"}))
      ->capture_default_str();

  std::string verify_lattice = "both";
  std::string verify_scheme = "both";
  bool timing = false;
  auto* verify_cmd = app.add_subcommand("verify", "Compare enumerated and closed-form polynomials for n = 1..N");
  verify_cmd->fallthrough();
  verify_cmd->add_option("n,--n", n, "Largest n")->required();
  verify_cmd->add_option("lattice,--lattice", verify_lattice)
      ->check(CLI::IsMember({"dyck", "bilateral", "both"}))
      ->capture_default_str();
  verify_cmd->add_option("--scheme", verify_scheme)
      ->check(CLI::IsMember({"bibanded", "peaks", "both"}))
      ->capture_default_str();
  verify_cmd->add_flag("--timing", timing, "Include elapsed times");

  RenderSpec spec;
  std::string image = "ascii";
  auto* render_cmd = app.add_subcommand("render", "Draw a path as ASCII or SVG");
  render_cmd->fallthrough();
  render_cmd->add_option("word", word, "Path word over U/D")->required();
  render_cmd->add_option("--as", image)->check(CLI::IsMember({"ascii", "svg"}))->capture_default_str();
  render_cmd->add_flag("--bands", spec.show_bands, "Shade odd bands / list edge bands");
  render_cmd->add_flag("--peaks", spec.show_peaks, "Mark peaks");
  render_cmd->add_flag("--checkmarks", spec.show_checkmarks, "Show checkmark labels");
  render_cmd->add_option("--cell", spec.cell_size, "SVG pixels per lattice unit")
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    EnumerationOptions opts;
    opts.max_n = g.max_n != 0 ? g.max_n : max_n_from_env();

    std::ostringstream buffer;
    int code = kOk;
    if (*enumerate) {
      code = cmd_enumerate(n, lattice, opts, g, buffer);
    } else if (*map) {
      code = cmd_map(word, direction, g, buffer);
    } else if (*checkmarks) {
      code = cmd_checkmarks(word, from, from_json, g, buffer);
    } else if (*poly) {
      code = cmd_poly(n, lattice, scheme, source, opts, g, buffer);
    } else if (*verify_cmd) {
      code = cmd_verify(n, verify_lattice, verify_scheme, timing, opts, g, buffer);
    } else if (*render_cmd) {
      spec.format = image == "svg" ? RenderFormat::Svg : RenderFormat::Ascii;
      code = cmd_render(word, spec, buffer);
    }
    write_output(g, buffer.str(), out);
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

}  // namespace pathforge::cli
