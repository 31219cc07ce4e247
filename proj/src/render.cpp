#include "pathforge/render.hpp"

#include <algorithm>
#include <sstream>

#include "pathforge/checkmark.hpp"
#include "pathforge/error.hpp"
#include "pathforge/weighting.hpp"

namespace pathforge {

namespace {

std::string render_ascii(PathView path, const RenderSpec& spec) {
  const auto cls = classify(path);
  const TurnList t = turns(path);
  const auto columns = path.heights.size();
  std::ostringstream out;
  for (int h = cls.max_height; h >= cls.min_height; --h) {
    std::string row(columns, h == 0 ? '-' : ' ');
    for (std::size_t i = 0; i < columns; ++i) {
      if (path.heights[i] == h) row[i] = 'o';
    }
    if (spec.show_peaks) {
      for (int i : t.peaks) {
        if (path.heights[static_cast<std::size_t>(i)] == h) row[static_cast<std::size_t>(i)] = '^';
      }
    }
    row.erase(row.find_last_not_of(' ') + 1);
    out << row << '\n';
  }
  if (spec.show_bands) {
    std::string bands;
    for (std::size_t j = 0; j < path.steps.size(); ++j) {
      bands.push_back(band_of(path.steps[j], path.heights[j]) == Band::Odd ? 'a' : 'b');
    }
    out << "bands: " << bands << "  weight " << to_string(bibanded_monomial(path)) << '\n';
  }
  if (spec.show_peaks) {
    out << "peaks:";
    for (int i : t.peaks) out << ' ' << i;
    out << "  weight " << to_string(peak_monomial(path)) << '\n';
  }
  if (spec.show_checkmarks) out << "checkmarks: " << to_string(to_checkmarks(path)) << '\n';
  return out.str();
}

class SvgFrame {
 public:
  SvgFrame(int n, int cell) : n_(n), cell_(cell), margin_(2 * cell) {}

  int x(int i) const { return margin_ + i * cell_; }
  int y(int h) const { return margin_ + (n_ - h) * cell_; }
  int size() const { return 2 * n_ * cell_ + 2 * margin_; }
  int cell() const { return cell_; }

 private:
  int n_;
  int cell_;
  int margin_;
};

std::string render_svg(PathView path, const RenderSpec& spec) {
  if (spec.cell_size < 4) {
    throw Error(ErrorCode::InvalidArgument,
                "SVG cell size must be at least 4, got " + std::to_string(spec.cell_size));
  }
  const int n = path.n();
  const SvgFrame f(n, spec.cell_size);
  const int c = f.cell();
  const auto cls = classify(path);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f.size() << "\" height=\""
      << f.size() << "\" viewBox=\"0 0 " << f.size() << ' ' << f.size() << "\">\n";
  out << "<title>" << to_string(path.steps) << "</title>\n";

  if (spec.show_bands) {
    // Odd bands are the strips between heights 2k and 2k+1.
    out << "<g class=\"bands\" fill=\"#d8e4f4\">\n";
    for (int j = cls.min_height; j < cls.max_height; ++j) {
      if ((j & 1) != 0) continue;
      out << "<rect x=\"" << f.x(0) << "\" y=\"" << f.y(j + 1) << "\" width=\"" << 2 * n * c
          << "\" height=\"" << c << "\"/>\n";
    }
    out << "</g>\n";
  }

  out << "<polygon class=\"bounding-box\" points=\"" << f.x(0) << ',' << f.y(0) << ' ' << f.x(n)
      << ',' << f.y(n) << ' ' << f.x(2 * n) << ',' << f.y(0) << ' ' << f.x(n) << ',' << f.y(-n)
      << "\" fill=\"none\" stroke=\"#999999\" stroke-dasharray=\"4 3\"/>\n";
  out << "<line class=\"baseline\" x1=\"" << f.x(0) << "\" y1=\"" << f.y(0) << "\" x2=\""
      << f.x(2 * n) << "\" y2=\"" << f.y(0) << "\" stroke=\"#555555\" stroke-width=\"2\"/>\n";

  out << "<polyline class=\"path\" points=\"";
  for (std::size_t i = 0; i < path.heights.size(); ++i) {
    if (i != 0) out << ' ';
    out << f.x(static_cast<int>(i)) << ',' << f.y(path.heights[i]);
  }
  out << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"3\" stroke-linejoin=\"round\"/>\n";

  if (spec.show_peaks) {
    const int r = std::max(2, c / 5);
    out << "<g class=\"peaks\" fill=\"#cc2222\">\n";
    for (int i : turns(path).peaks) {
      out << "<circle cx=\"" << f.x(i) << "\" cy=\"" << f.y(path.heights[static_cast<std::size_t>(i)])
          << "\" r=\"" << r << "\"/>\n";
    }
    out << "</g>\n";
  }

  if (spec.show_checkmarks) {
    const CheckmarkPair pair = to_checkmarks(path);
    const int font = std::max(4, c / 2);
    out << "<g class=\"checkmarks\" font-family=\"sans-serif\" font-size=\"" << font << "\">\n";
    auto tick = [&](int px, int py) {
      out << "<path class=\"mark\" d=\"M" << px - c / 3 << ',' << py << " l" << c / 6 << ','
          << c / 6 << " l" << c / 3 << ',' << -(c / 2)
          << "\" fill=\"none\" stroke=\"#1a7f37\" stroke-width=\"2\"/>\n";
    };
    // North-west label k sits at vertex (k-1, k-1).
    for (int k = 1; k <= pair.n(); ++k) {
      const int px = f.x(k - 1);
      const int py = f.y(k - 1);
      out << "<text class=\"nw-label\" x=\"" << px - c / 2 << "\" y=\"" << py - c / 4
          << "\" text-anchor=\"end\">" << k << "</text>\n";
      if (pair.nw().arrow_at(k)) tick(px, py);
    }
    // South-west label k sits at vertex (k, -k).
    for (int k = 1; k <= pair.n() - 1; ++k) {
      const int px = f.x(k);
      const int py = f.y(-k);
      out << "<text class=\"sw-label\" x=\"" << px - c / 2 << "\" y=\"" << py + c / 2 + font / 2
          << "\" text-anchor=\"end\">" << k << "</text>\n";
      if (pair.sw().arrow_at(k)) tick(px, py);
    }
    out << "</g>\n";
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render(PathView path, const RenderSpec& spec) {
  return spec.format == RenderFormat::Svg ? render_svg(path, spec) : render_ascii(path, spec);
}

}  // namespace pathforge
