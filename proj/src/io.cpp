#include "dickeenv/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>

namespace dickeenv {

namespace {

void check_columns(const std::vector<Column>& columns, const char* what) {
  if (columns.empty()) {
    throw IoError(std::string(what) + ": no columns");
  }
  const std::size_t n = columns.front().values->size();
  for (const Column& c : columns) {
    if (c.values == nullptr) {
      throw IoError(std::string(what) + ": null column '" + c.name + "'");
    }
    if (c.values->size() != n) {
      throw IoError(std::string(what) + ": column '" + c.name +
                    "' length differs from '" + columns.front().name + "'");
    }
  }
}

/// Map a value in [0, 1] to a grayscale hex color, black = 1.
std::string gray_hex(double v) {
  const double clamped = std::min(1.0, std::max(0.0, v));
  const int level = static_cast<int>(std::lround(255.0 * (1.0 - clamped)));
  static const char* digits = "0123456789abcdef";
  std::string s = "#......";
  for (int i = 0; i < 3; ++i) {
    s[1 + 2 * i] = digits[level / 16];
    s[2 + 2 * i] = digits[level % 16];
  }
  return s;
}

}  // namespace

std::string format_sig(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 12);
  if (res.ec != std::errc()) {
    throw IoError("format_sig: conversion failed");
  }
  return std::string(buf.data(), res.ptr);
}

void write_csv(std::ostream& os, const std::vector<std::string>& metadata,
               const std::vector<Column>& columns) {
  check_columns(columns, "write_csv");
  for (const std::string& line : metadata) {
    os << "# " << line << "\n";
  }
  for (std::size_t c = 0; c < columns.size(); ++c) {
    os << (c ? "," : "") << columns[c].name;
  }
  os << "\n";
  const std::size_t rows = columns.front().values->size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      os << (c ? "," : "") << format_sig((*columns[c].values)[r]);
    }
    os << "\n";
  }
  if (!os) throw IoError("write_csv: stream failure");
}

void write_svg_heatmap(std::ostream& os, const std::vector<double>& rows,
                       const std::vector<double>& cols,
                       const std::vector<double>& values,
                       const std::string& row_label,
                       const std::string& col_label) {
  if (rows.empty() || cols.empty() ||
      values.size() != rows.size() * cols.size()) {
    throw IoError("write_svg_heatmap: values must be rows x cols");
  }
  const double cell_w = std::max(1.0, 860.0 / double(cols.size()));
  const double cell_h = std::max(4.0, 400.0 / double(rows.size()));
  const double margin = 40.0;
  const double w = margin * 2 + cell_w * double(cols.size());
  const double h = margin * 2 + cell_h * double(rows.size());
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
     << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  os << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      // Row 0 drawn at the bottom so both axes increase away from the origin.
      const double x = margin + cell_w * double(c);
      const double y = margin + cell_h * double(rows.size() - 1 - r);
      os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell_w
         << "\" height=\"" << cell_h << "\" fill=\""
         << gray_hex(values[r * cols.size() + c]) << "\"/>\n";
    }
  }
  os << "<text x=\"" << margin << "\" y=\"" << h - 10 << "\" font-size=\"14\">"
     << col_label << " from " << format_sig(cols.front()) << " to "
     << format_sig(cols.back()) << "</text>\n";
  os << "<text x=\"6\" y=\"" << margin - 10 << "\" font-size=\"14\">"
     << row_label << " from " << format_sig(rows.front()) << " to "
     << format_sig(rows.back()) << " (bottom to top), black = 1</text>\n";
  os << "</svg>\n";
  if (!os) throw IoError("write_svg_heatmap: stream failure");
}

void write_svg_traces(std::ostream& os, const std::vector<double>& x,
                      const std::vector<Column>& series,
                      const std::string& x_label) {
  check_columns(series, "write_svg_traces");
  if (x.size() != series.front().values->size() || x.size() < 2) {
    throw IoError("write_svg_traces: need a common x grid of length >= 2");
  }
  static const std::array<const char*, 4> palette = {"#000000", "#c0392b",
                                                     "#2980b9", "#27ae60"};
  const double w = 940.0, h = 460.0, margin = 50.0;
  const double plot_w = w - 2 * margin, plot_h = h - 2 * margin;
  const double x_lo = x.front(), x_hi = x.back();
  const auto px = [&](double v) {
    return margin + plot_w * (v - x_lo) / (x_hi - x_lo);
  };
  const auto py = [&](double v) {
    return margin + plot_h * (1.0 - std::min(1.0, std::max(0.0, v)));
  };
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
     << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  os << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
  os << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << plot_w
     << "\" height=\"" << plot_h
     << "\" fill=\"none\" stroke=\"#888888\"/>\n";
  for (std::size_t s = 0; s < series.size(); ++s) {
    os << "<polyline fill=\"none\" stroke=\""
       << palette[s % palette.size()] << "\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < x.size(); ++i) {
      os << (i ? " " : "") << px(x[i]) << "," << py((*series[s].values)[i]);
    }
    os << "\"/>\n";
    os << "<text x=\"" << margin + 8 << "\" y=\"" << margin + 16 + 16 * double(s)
       << "\" font-size=\"13\" fill=\"" << palette[s % palette.size()] << "\">"
       << series[s].name << "</text>\n";
  }
  os << "<text x=\"" << margin << "\" y=\"" << h - 12 << "\" font-size=\"14\">"
     << x_label << " from " << format_sig(x_lo) << " to " << format_sig(x_hi)
     << "; vertical axis 0 to 1</text>\n";
  os << "</svg>\n";
  if (!os) throw IoError("write_svg_traces: stream failure");
}

void write_file(const std::string& path,
                const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("write_file: cannot open '" + path + "' for writing");
  }
  body(out);
  out.flush();
  if (!out) {
    throw IoError("write_file: write to '" + path + "' failed");
  }
}

}  // namespace dickeenv
