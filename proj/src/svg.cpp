#include "effradius/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "effradius/format.hpp"

namespace effradius {

namespace {

constexpr double kWidth = 800, kHeight = 600;
constexpr double kLeft = 70, kRight = 780, kTop = 40, kBottom = 550;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
constexpr int kPaletteSize = 4;

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = 0.0, hi = 1.0;

  void include(const Eigen::VectorXd& v) {
    if (v.size() == 0) return;
    lo = std::min(lo, v.minCoeff());
    hi = std::max(hi, v.maxCoeff());
  }

  // Pad 5% on each end; guard against a degenerate span.
  void finish() {
    if (hi <= lo) {
      lo -= 1.0;
      hi += 1.0;
    }
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;
  }

  double map(double v, double out_lo, double out_hi) const {
    return out_lo + (v - lo) / (hi - lo) * (out_hi - out_lo);
  }
};

}  // namespace

void write_svg_chart(std::ostream& out, const std::string& title,
                     const std::string& x_label, const std::string& y_label,
                     const std::vector<PlotSeries>& series) {
  if (series.empty()) throw std::invalid_argument("chart needs at least one series");
  bool any = false;
  Range xr, yr;
  bool first = true;
  for (const auto& s : series) {
    if (s.x.size() != s.y.size())
      throw std::invalid_argument("chart series x and y lengths differ");
    if (s.x.size() == 0) continue;
    if (first) {
      xr.lo = xr.hi = s.x(0);
      yr.lo = yr.hi = s.y(0);
      first = false;
    }
    xr.include(s.x);
    yr.include(s.y);
    any = true;
  }
  if (!any) throw std::invalid_argument("chart needs at least one data point");
  xr.finish();
  yr.finish();

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n";
  out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << (kWidth / 2)
      << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" "
         "text-anchor=\"middle\">"
      << xml_escape(title) << "</text>\n";

  // Axes box.
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\""
      << (kRight - kLeft) << "\" height=\"" << (kBottom - kTop)
      << "\" fill=\"none\" stroke=\"black\"/>\n";

  // Five ticks per axis with grid lines.
  constexpr int kTicks = 5;
  for (int i = 0; i < kTicks; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / (kTicks - 1);
    const double px = xr.map(fx, kLeft, kRight);
    out << "<line x1=\"" << coord(px) << "\" y1=\"" << kTop << "\" x2=\""
        << coord(px) << "\" y2=\"" << kBottom
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << coord(px) << "\" y=\"" << (kBottom + 20)
        << "\" font-family=\"sans-serif\" font-size=\"12\" "
           "text-anchor=\"middle\">"
        << format_sig(fx, 4) << "</text>\n";

    const double fy = yr.lo + (yr.hi - yr.lo) * i / (kTicks - 1);
    const double py = yr.map(fy, kBottom, kTop);
    out << "<line x1=\"" << kLeft << "\" y1=\"" << coord(py) << "\" x2=\""
        << kRight << "\" y2=\"" << coord(py)
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << (kLeft - 8) << "\" y=\"" << coord(py + 4)
        << "\" font-family=\"sans-serif\" font-size=\"12\" "
           "text-anchor=\"end\">"
        << format_sig(fy, 4) << "</text>\n";
  }

  out << "<text x=\"" << ((kLeft + kRight) / 2) << "\" y=\"" << (kBottom + 40)
      << "\" font-family=\"sans-serif\" font-size=\"14\" "
         "text-anchor=\"middle\">"
      << xml_escape(x_label) << "</text>\n";
  out << "<text x=\"20\" y=\"" << ((kTop + kBottom) / 2)
      << "\" font-family=\"sans-serif\" font-size=\"14\" "
         "text-anchor=\"middle\" transform=\"rotate(-90 20 "
      << ((kTop + kBottom) / 2) << ")\">" << xml_escape(y_label) << "</text>\n";

  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    if (s.x.size() == 0) continue;
    const char* color = kPalette[k % kPaletteSize];
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    for (Eigen::Index i = 0; i < s.x.size(); ++i) {
      if (i) out << ' ';
      out << coord(xr.map(s.x(i), kLeft, kRight)) << ','
          << coord(yr.map(s.y(i), kBottom, kTop));
    }
    out << "\"/>\n";
    if (s.markers)
      for (Eigen::Index i = 0; i < s.x.size(); ++i)
        out << "<circle cx=\"" << coord(xr.map(s.x(i), kLeft, kRight))
            << "\" cy=\"" << coord(yr.map(s.y(i), kBottom, kTop))
            << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
  }

  // Legend, top right inside the plot area.
  for (std::size_t k = 0; k < series.size(); ++k) {
    const double ly = kTop + 18 + 18 * static_cast<double>(k);
    const char* color = kPalette[k % kPaletteSize];
    out << "<line x1=\"" << (kRight - 150) << "\" y1=\"" << coord(ly)
        << "\" x2=\"" << (kRight - 120) << "\" y2=\"" << coord(ly)
        << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << (kRight - 112) << "\" y=\"" << coord(ly + 4)
        << "\" font-family=\"sans-serif\" font-size=\"12\">"
        << xml_escape(series[k].label) << "</text>\n";
  }

  out << "</svg>\n";
}

}  // namespace effradius
