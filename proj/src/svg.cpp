#include "wqsdc/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace wqsdc {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 50.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                          "#9467bd", "#8c564b", "#e377c2"};

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return std::string(buf);
}

std::string escape_text(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::string render_line_chart(const SweepTable& table,
                              const std::string& x_column,
                              const std::vector<std::string>& y_columns,
                              const std::string& title) {
  std::size_t xi = table.column_index(x_column);
  std::vector<std::size_t> yis;
  yis.reserve(y_columns.size());
  for (const auto& name : y_columns) {
    yis.push_back(table.column_index(name));
  }

  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  bool any = false;
  for (const auto& row : table.rows) {
    double x = row[xi];
    if (!std::isfinite(x)) continue;
    for (std::size_t yi : yis) {
      double y = row[yi];
      if (!std::isfinite(y)) continue;
      if (!any) {
        xmin = xmax = x;
        ymin = ymax = y;
        any = true;
      } else {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
      }
    }
  }
  if (xmax - xmin < 1e-300) xmax = xmin + 1.0;
  if (ymax - ymin < 1e-300) ymax = ymin + 1.0;

  double plot_w = kWidth - kMarginLeft - kMarginRight;
  double plot_h = kHeight - kMarginTop - kMarginBottom;
  auto px = [&](double x) {
    return kMarginLeft + (x - xmin) / (xmax - xmin) * plot_w;
  };
  auto py = [&](double y) {
    return kMarginTop + plot_h - (y - ymin) / (ymax - ymin) * plot_h;
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fmt(kWidth)
      << " " << fmt(kHeight) << "\" font-family=\"monospace\" font-size=\"12\">\n";
  svg << "<rect width=\"" << fmt(kWidth) << "\" height=\"" << fmt(kHeight)
      << "\" fill=\"white\"/>\n";
  svg << "<text x=\"" << fmt(kWidth / 2.0)
      << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
      << escape_text(title) << "</text>\n";

  // Axes with min/max labels.
  svg << "<line x1=\"" << fmt(kMarginLeft) << "\" y1=\"" << fmt(kMarginTop)
      << "\" x2=\"" << fmt(kMarginLeft) << "\" y2=\""
      << fmt(kMarginTop + plot_h) << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << fmt(kMarginLeft) << "\" y1=\""
      << fmt(kMarginTop + plot_h) << "\" x2=\"" << fmt(kMarginLeft + plot_w)
      << "\" y2=\"" << fmt(kMarginTop + plot_h) << "\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << fmt(kMarginLeft) << "\" y=\""
      << fmt(kHeight - kMarginBottom + 18.0) << "\" text-anchor=\"middle\">"
      << fmt(xmin) << "</text>\n";
  svg << "<text x=\"" << fmt(kMarginLeft + plot_w) << "\" y=\""
      << fmt(kHeight - kMarginBottom + 18.0) << "\" text-anchor=\"middle\">"
      << fmt(xmax) << "</text>\n";
  svg << "<text x=\"" << fmt(kMarginLeft - 6.0) << "\" y=\""
      << fmt(kMarginTop + plot_h + 4.0) << "\" text-anchor=\"end\">"
      << fmt(ymin) << "</text>\n";
  svg << "<text x=\"" << fmt(kMarginLeft - 6.0) << "\" y=\""
      << fmt(kMarginTop + 4.0) << "\" text-anchor=\"end\">" << fmt(ymax)
      << "</text>\n";
  svg << "<text x=\"" << fmt(kMarginLeft + plot_w / 2.0) << "\" y=\""
      << fmt(kHeight - 12.0) << "\" text-anchor=\"middle\">"
      << escape_text(x_column) << "</text>\n";

  for (std::size_t s = 0; s < yis.size(); ++s) {
    std::size_t yi = yis[s];
    const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
    std::vector<std::string> segments;
    std::string seg;
    double prev_x = -std::numeric_limits<double>::infinity();
    for (const auto& row : table.rows) {
      double x = row[xi];
      double y = row[yi];
      bool broken = !std::isfinite(x) || !std::isfinite(y) || x < prev_x;
      if (broken && !seg.empty()) {
        segments.push_back(seg);
        seg.clear();
      }
      if (std::isfinite(x) && std::isfinite(y)) {
        if (!seg.empty()) seg += " ";
        seg += fmt(px(x)) + "," + fmt(py(y));
        prev_x = x;
      } else {
        prev_x = -std::numeric_limits<double>::infinity();
      }
    }
    if (!seg.empty()) segments.push_back(seg);
    for (const auto& points : segments) {
      svg << "<polyline fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"1.5\" points=\"" << points << "\"/>\n";
    }
    // Legend entry.
    double ly = kMarginTop + 14.0 * static_cast<double>(s);
    svg << "<line x1=\"" << fmt(kMarginLeft + plot_w - 110.0) << "\" y1=\""
        << fmt(ly) << "\" x2=\"" << fmt(kMarginLeft + plot_w - 90.0)
        << "\" y2=\"" << fmt(ly) << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << fmt(kMarginLeft + plot_w - 84.0) << "\" y=\""
        << fmt(ly + 4.0) << "\">" << escape_text(y_columns[s]) << "</text>\n";
  }

  if (table.rows.empty()) {
    svg << "<text x=\"" << fmt(kWidth / 2.0) << "\" y=\""
        << fmt(kHeight / 2.0) << "\" text-anchor=\"middle\">no data</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace wqsdc
