#pragma once

#include <string>

#include "pathforge/path.hpp"

namespace pathforge {

enum class RenderFormat { Ascii, Svg };

struct RenderSpec {
  RenderFormat format = RenderFormat::Ascii;
  bool show_bands = false;
  bool show_peaks = false;
  bool show_checkmarks = false;
  /// SVG pixels per lattice unit; must be >= 4 for SVG.
  int cell_size = 20;
};

/// Deterministic text or SVG drawing of a path.
std::string render(PathView path, const RenderSpec& spec);

}  // namespace pathforge
