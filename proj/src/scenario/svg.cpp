#include <array>
#include <cmath>

#include "qbath/scenario/csv.hpp"
#include "qbath/scenario/scan.hpp"

namespace qbath {

namespace {

struct Style {
  ScanRegion region;
  const char* color;
  const char* label;
};

constexpr std::array<Style, 5> kStyles{{
    {ScanRegion::outside_disk, "#e6e6e6", "not completely positive (a^2+b^2 > 1)"},
    {ScanRegion::no_creation, "#4c78a8", "D~ positive: no creation"},
    {ScanRegion::canonical_creation, "#f58518", "creation from |++&gt;"},
    {ScanRegion::searched_creation, "#e45756", "creation via searched initial state"},
    {ScanRegion::undetermined, "#eeca3b", "not resolved within budget"},
}};

const Style& style_of(ScanRegion r) {
  for (const auto& s : kStyles)
    if (s.region == r) return s;
  return kStyles.back();
}

std::string num(double x) { return csv::format_double(std::round(x * 100.0) / 100.0); }

}  // namespace

void write_scan_svg(std::ostream& out, const std::vector<ScanRecord>& records, int resolution,
                    const SvgOptions& options) {
  const double w = options.width;
  const double h = options.height;
  const double left = 0.1 * w;
  const double top = 0.05 * h;
  const double plot = std::min(0.8 * w, 0.7 * h);
  const double cell = plot / resolution;
  // Maps a in [-1, 1] to x and b in [-1, 1] to y (b grows upwards).
  const auto x_of = [&](double a) { return left + (a + 1.0) / 2.0 * plot; };
  const auto y_of = [&](double b) { return top + (1.0 - b) / 2.0 * plot; };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.width << "\" height=\""
      << options.height << "\" viewBox=\"0 0 " << options.width << ' ' << options.height << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << options.width << "\" height=\"" << options.height
      << "\" fill=\"white\"/>\n<g shape-rendering=\"crispEdges\">\n";
  for (const auto& r : records) {
    const double x = x_of(r.a) - cell / 2.0;
    const double y = y_of(r.b) - cell / 2.0;
    out << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(cell + 0.01) << "\" height=\""
        << num(cell + 0.01) << "\" fill=\"" << style_of(classify(r)).color << "\"/>\n";
  }
  out << "</g>\n";

  // Disk boundary and the square |a +- b| <= 1.
  out << "<circle cx=\"" << num(x_of(0)) << "\" cy=\"" << num(y_of(0)) << "\" r=\"" << num(plot / 2.0)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out << "<polygon points=\"" << num(x_of(1)) << ',' << num(y_of(0)) << ' ' << num(x_of(0)) << ',' << num(y_of(1))
      << ' ' << num(x_of(-1)) << ',' << num(y_of(0)) << ' ' << num(x_of(0)) << ',' << num(y_of(-1))
      << "\" fill=\"none\" stroke=\"black\" stroke-dasharray=\"4 3\" stroke-width=\"1\"/>\n";
  out << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\"" << num(plot) << "\" height=\""
      << num(plot) << "\" fill=\"none\" stroke=\"black\"/>\n";

  const double font = std::max(10.0, h / 60.0);
  out << "<g font-family=\"sans-serif\" font-size=\"" << num(font) << "\">\n";
  out << "<text x=\"" << num(left + plot / 2.0) << "\" y=\"" << num(top + plot + 1.8 * font)
      << "\" text-anchor=\"middle\">a</text>\n";
  out << "<text x=\"" << num(left - 1.5 * font) << "\" y=\"" << num(top + plot / 2.0)
      << "\" text-anchor=\"middle\">b</text>\n";
  for (double t : {-1.0, 0.0, 1.0}) {
    out << "<text x=\"" << num(x_of(t)) << "\" y=\"" << num(top + plot + 0.9 * font) << "\" text-anchor=\"middle\">"
        << num(t) << "</text>\n";
    out << "<text x=\"" << num(left - 0.4 * font) << "\" y=\"" << num(y_of(t) + 0.35 * font)
        << "\" text-anchor=\"end\">" << num(t) << "</text>\n";
  }
  double y = top + plot + 3.2 * font;
  for (const auto& s : kStyles) {
    out << "<rect x=\"" << num(left) << "\" y=\"" << num(y - 0.8 * font) << "\" width=\"" << num(font)
        << "\" height=\"" << num(font) << "\" fill=\"" << s.color << "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
    out << "<text x=\"" << num(left + 1.5 * font) << "\" y=\"" << num(y) << "\">" << s.label << "</text>\n";
    y += 1.4 * font;
  }
  out << "</g>\n</svg>\n";
}

}  // namespace qbath
