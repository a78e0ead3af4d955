#pragma once

// CSV and SVG writers for sweep tables. Both are byte-deterministic:
// fixed column order, locale-free number formatting, LF line endings.

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "qplasma/cli/sweep.hpp"

namespace qplasma::cli {

/// 17 significant digits, general notation.
inline std::string format_value(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return std::string(buf.data(), ptr);
}

/// Shortest round-trip form, used in column labels.
inline std::string format_label(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

inline void write_csv(std::ostream& out, const SweepTable& table) {
  out << table.axis_name;
  for (double y : table.ys) out << ",re_eps_y" << format_label(y) << ",im_eps_y" << format_label(y);
  out << '\n';
  for (std::size_t row = 0; row < table.axis.size(); ++row) {
    out << format_value(table.axis[row]);
    for (std::size_t iy = 0; iy < table.ys.size(); ++iy) {
      const auto& v = table.values[iy][row];
      out << ',';
      if (v) out << format_value(v->real());
      out << ',';
      if (v) out << format_value(v->imag());
    }
    out << '\n';
  }
}

namespace detail {

inline std::string fixed(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

inline std::string tick_label(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

// 1-2-5 tick spacing with roughly `target` intervals.
inline std::vector<double> nice_ticks(double lo, double hi, int target = 5) {
  const double span = hi - lo;
  if (!(span > 0.0)) return {lo};
  const double raw = span / target;
  const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
  double step = magnitude;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    step = m * magnitude;
    if (step >= raw) break;
  }
  std::vector<double> ticks;
  for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * step; t += step) ticks.push_back(t);
  return ticks;
}

}  // namespace detail

/// Re eps against the sweep axis, one polyline per y; skipped cells break the line.
inline void write_svg(std::ostream& out, const SweepTable& table) {
  constexpr double width = 800.0, height = 450.0;
  constexpr double left = 70.0, right = 20.0, top = 20.0, bottom = 50.0;
  static constexpr std::array<const char*, 6> colors{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

  double x_lo = table.axis.front(), x_hi = table.axis.back();
  double y_lo = INFINITY, y_hi = -INFINITY;
  for (const auto& column : table.values)
    for (const auto& v : column)
      if (v) {
        y_lo = std::min(y_lo, v->real());
        y_hi = std::max(y_hi, v->real());
      }
  if (!std::isfinite(y_lo)) y_lo = 0.0, y_hi = 1.0;
  if (y_hi - y_lo < 1e-12) y_lo -= 0.5, y_hi += 0.5;
  const double pad = 0.05 * (y_hi - y_lo);
  y_lo -= pad;
  y_hi += pad;

  const auto px = [&](double v) { return left + (v - x_lo) / (x_hi - x_lo) * (width - left - right); };
  const auto py = [&](double v) { return height - bottom - (v - y_lo) / (y_hi - y_lo) * (height - top - bottom); };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"450\" viewBox=\"0 0 800 450\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"450\" fill=\"white\"/>\n";
  out << "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  out << "<line x1=\"" << detail::fixed(left) << "\" y1=\"" << detail::fixed(height - bottom) << "\" x2=\""
      << detail::fixed(width - right) << "\" y2=\"" << detail::fixed(height - bottom) << "\"/>\n";
  out << "<line x1=\"" << detail::fixed(left) << "\" y1=\"" << detail::fixed(top) << "\" x2=\"" << detail::fixed(left)
      << "\" y2=\"" << detail::fixed(height - bottom) << "\"/>\n";
  out << "</g>\n<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
  for (double t : detail::nice_ticks(x_lo, x_hi)) {
    const double x = px(t);
    out << "<line x1=\"" << detail::fixed(x) << "\" y1=\"" << detail::fixed(height - bottom) << "\" x2=\""
        << detail::fixed(x) << "\" y2=\"" << detail::fixed(height - bottom + 5) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << detail::fixed(x) << "\" y=\"" << detail::fixed(height - bottom + 18)
        << "\" text-anchor=\"middle\">" << detail::tick_label(t) << "</text>\n";
  }
  for (double t : detail::nice_ticks(y_lo, y_hi)) {
    const double y = py(t);
    out << "<line x1=\"" << detail::fixed(left - 5) << "\" y1=\"" << detail::fixed(y) << "\" x2=\"" << detail::fixed(left)
        << "\" y2=\"" << detail::fixed(y) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << detail::fixed(left - 8) << "\" y=\"" << detail::fixed(y + 4) << "\" text-anchor=\"end\">"
        << detail::tick_label(t) << "</text>\n";
  }
  out << "<text x=\"" << detail::fixed(0.5 * (left + width - right)) << "\" y=\"" << detail::fixed(height - 10)
      << "\" text-anchor=\"middle\">" << table.axis_name << "</text>\n";
  out << "<text x=\"15\" y=\"" << detail::fixed(0.5 * (top + height - bottom))
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 15 " << detail::fixed(0.5 * (top + height - bottom))
      << ")\">Re eps</text>\n";
  out << "</g>\n";

  for (std::size_t iy = 0; iy < table.ys.size(); ++iy) {
    const char* color = colors[iy % colors.size()];
    std::string points;
    const auto flush = [&] {
      if (!points.empty())
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"" << points << "\"/>\n";
      points.clear();
    };
    for (std::size_t row = 0; row < table.axis.size(); ++row) {
      const auto& v = table.values[iy][row];
      if (!v) {
        flush();
        continue;
      }
      if (!points.empty()) points += ' ';
      points += detail::fixed(px(table.axis[row])) + "," + detail::fixed(py(std::clamp(v->real(), y_lo, y_hi)));
    }
    flush();
    out << "<text x=\"" << detail::fixed(width - right - 10) << "\" y=\"" << detail::fixed(top + 16 * (iy + 1))
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << color << "\">y = "
        << format_label(table.ys[iy]) << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace qplasma::cli
