// Copyright 2026 The Friendfoe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "svg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace friendfoe::cli {
namespace {

constexpr double kWidth = 640.0;
constexpr double kPanelHeight = 300.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 150.0;
constexpr double kTop = 36.0;
constexpr double kBottom = 44.0;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string Px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string Tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

std::string Escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = INFINITY;
  double hi = -INFINITY;

  void Add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void Finish() {
    if (!(lo <= hi)) lo = 0.0, hi = 1.0;
    if (hi - lo < 1e-12) lo -= 0.5, hi += 0.5;
  }
};

// Maps data coordinates into one panel's plotting area.
struct Frame {
  Range x, y;
  double top = 0.0;

  double Sx(double v) const {
    return kLeft + (v - x.lo) / (x.hi - x.lo) * (kWidth - kLeft - kRight);
  }
  double Sy(double v) const {
    const double h = kPanelHeight - kTop - kBottom;
    return top + kTop + (1.0 - (v - y.lo) / (y.hi - y.lo)) * h;
  }
};

void Axes(std::ostringstream& out, const Frame& f, const std::string& title,
          const std::string& x_label, const std::string& y_label) {
  const double x0 = kLeft, x1 = kWidth - kRight;
  const double y0 = f.top + kPanelHeight - kBottom, y1 = f.top + kTop;
  out << "<text x=\"" << Px((x0 + x1) / 2) << "\" y=\"" << Px(f.top + 22)
      << "\" text-anchor=\"middle\" font-size=\"14\">" << Escape(title)
      << "</text>\n";
  out << "<rect x=\"" << Px(x0) << "\" y=\"" << Px(y1) << "\" width=\""
      << Px(x1 - x0) << "\" height=\"" << Px(y0 - y1)
      << "\" fill=\"none\" stroke=\"#333\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double xv = f.x.lo + (f.x.hi - f.x.lo) * k / 4;
    const double yv = f.y.lo + (f.y.hi - f.y.lo) * k / 4;
    out << "<text x=\"" << Px(f.Sx(xv)) << "\" y=\"" << Px(y0 + 16)
        << "\" text-anchor=\"middle\" font-size=\"11\">" << Tick(xv)
        << "</text>\n";
    out << "<text x=\"" << Px(x0 - 6) << "\" y=\"" << Px(f.Sy(yv) + 4)
        << "\" text-anchor=\"end\" font-size=\"11\">" << Tick(yv)
        << "</text>\n";
  }
  out << "<text x=\"" << Px((x0 + x1) / 2) << "\" y=\"" << Px(y0 + 34)
      << "\" text-anchor=\"middle\" font-size=\"12\">" << Escape(x_label)
      << "</text>\n";
  const double ym = (y0 + y1) / 2;
  out << "<text x=\"16\" y=\"" << Px(ym) << "\" transform=\"rotate(-90 16 "
      << Px(ym) << ")\" text-anchor=\"middle\" font-size=\"12\">"
      << Escape(y_label) << "</text>\n";
}

void Legend(std::ostringstream& out, double top,
            const std::vector<std::string>& names) {
  for (std::size_t k = 0; k < names.size(); ++k) {
    const double y = top + kTop + 14 + 18.0 * k;
    const double x = kWidth - kRight + 12;
    out << "<rect x=\"" << Px(x) << "\" y=\"" << Px(y - 9)
        << "\" width=\"12\" height=\"10\" fill=\"" << kPalette[k % 8]
        << "\"/>\n<text x=\"" << Px(x + 18) << "\" y=\"" << Px(y)
        << "\" font-size=\"11\">" << Escape(names[k]) << "</text>\n";
  }
}

std::string Open(double height) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << Px(kWidth)
      << "\" height=\"" << Px(height) << "\" viewBox=\"0 0 " << Px(kWidth)
      << " " << Px(height) << "\" font-family=\"sans-serif\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return out.str();
}

}  // namespace

std::string LineChart(const std::vector<Panel>& panels) {
  std::ostringstream out;
  out << Open(kPanelHeight * panels.size());
  for (std::size_t p = 0; p < panels.size(); ++p) {
    const Panel& panel = panels[p];
    Frame f;
    f.top = kPanelHeight * p;
    for (const Series& s : panel.series) {
      for (double v : s.x) f.x.Add(v);
      for (double v : s.y) f.y.Add(v);
    }
    f.x.Finish();
    f.y.Finish();
    Axes(out, f, panel.title, panel.x_label, panel.y_label);
    std::vector<std::string> names;
    for (std::size_t k = 0; k < panel.series.size(); ++k) {
      const Series& s = panel.series[k];
      names.push_back(s.name);
      // Non-finite values break the line into separate runs.
      std::string points;
      auto flush = [&] {
        if (!points.empty()) {
          out << "<polyline fill=\"none\" stroke-width=\"1.5\" stroke=\""
              << kPalette[k % 8] << "\" points=\"" << points << "\"/>\n";
        }
        points.clear();
      };
      for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
        if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
          flush();
          continue;
        }
        if (!points.empty()) points += ' ';
        points += Px(f.Sx(s.x[i])) + "," + Px(f.Sy(s.y[i]));
      }
      flush();
    }
    Legend(out, f.top, names);
  }
  out << "</svg>\n";
  return out.str();
}

std::string StackChart(const std::string& title, const std::string& x_label,
                       const std::vector<double>& x,
                       const std::vector<std::string>& names,
                       const std::vector<std::vector<double>>& layers) {
  std::ostringstream out;
  out << Open(kPanelHeight);
  Frame f;
  for (double v : x) f.x.Add(v);
  f.x.Finish();
  f.y.lo = 0.0;
  f.y.hi = 1.0;
  Axes(out, f, title, x_label, "probability");
  std::vector<double> base(x.size(), 0.0);
  for (std::size_t k = 0; k < layers.size(); ++k) {
    std::string upper, lower;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double v = std::isfinite(layers[k][i]) ? layers[k][i] : 0.0;
      upper += Px(f.Sx(x[i])) + "," + Px(f.Sy(base[i] + v)) + " ";
      base[i] += v;
    }
    std::vector<double> previous(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double v = std::isfinite(layers[k][i]) ? layers[k][i] : 0.0;
      previous[i] = base[i] - v;
    }
    for (std::size_t i = x.size(); i-- > 0;) {
      lower += Px(f.Sx(x[i])) + "," + Px(f.Sy(previous[i]));
      if (i > 0) lower += ' ';
    }
    out << "<polygon stroke=\"none\" fill=\"" << kPalette[k % 8]
        << "\" points=\"" << upper << lower << "\"/>\n";
  }
  Legend(out, 0.0, names);
  out << "</svg>\n";
  return out.str();
}

std::string HeatGrid(const std::string& title, std::size_t rows,
                     std::size_t cols, const std::vector<double>& values,
                     const std::vector<std::string>& row_labels,
                     const std::vector<std::string>& col_labels) {
  constexpr double kCell = 48.0;
  const double width = kLeft + cols * kCell + 40;
  const double height = kTop + rows * kCell + kBottom;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << Px(width)
      << "\" height=\"" << Px(height) << "\" viewBox=\"0 0 " << Px(width)
      << " " << Px(height) << "\" font-family=\"sans-serif\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << Px(width / 2) << "\" y=\"22\" text-anchor=\"middle\" "
      << "font-size=\"14\">" << Escape(title) << "</text>\n";
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const double v = std::clamp(values[r * cols + c], 0.0, 1.0);
      const int shade = static_cast<int>(std::lround(255.0 * (1.0 - v)));
      char fill[16];
      std::snprintf(fill, sizeof(fill), "#%02x%02x%02x", shade, shade, shade);
      const double x = kLeft + c * kCell, y = kTop + r * kCell;
      out << "<rect x=\"" << Px(x) << "\" y=\"" << Px(y) << "\" width=\""
          << Px(kCell) << "\" height=\"" << Px(kCell) << "\" fill=\"" << fill
          << "\" stroke=\"#999\"/>\n<text x=\"" << Px(x + kCell / 2)
          << "\" y=\"" << Px(y + kCell / 2 + 4)
          << "\" text-anchor=\"middle\" font-size=\"10\" fill=\""
          << (v > 0.6 ? "white" : "black") << "\">" << Tick(v) << "</text>\n";
    }
    out << "<text x=\"" << Px(kLeft - 6) << "\" y=\""
        << Px(kTop + r * kCell + kCell / 2 + 4)
        << "\" text-anchor=\"end\" font-size=\"11\">" << Escape(row_labels[r])
        << "</text>\n";
  }
  for (std::size_t c = 0; c < cols; ++c) {
    out << "<text x=\"" << Px(kLeft + c * kCell + kCell / 2) << "\" y=\""
        << Px(kTop + rows * kCell + 16)
        << "\" text-anchor=\"middle\" font-size=\"11\">" << Escape(col_labels[c])
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace friendfoe::cli
