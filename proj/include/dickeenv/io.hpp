#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "dickeenv/errors.hpp"

namespace dickeenv {

/// Shortest decimal form with 12 significant digits, '.' separator,
/// locale-independent (std::to_chars).
std::string format_sig(double v);

/// One named data column of a table; all columns must share one length.
struct Column {
  std::string name;
  const std::vector<double>* values = nullptr;
};

/// CSV layout: '#'-prefixed metadata lines, one comma-joined header line,
/// then rows, all LF-terminated.
void write_csv(std::ostream& os, const std::vector<std::string>& metadata,
               const std::vector<Column>& columns);

/// Grayscale cell grid (black = 1, white = 0) with row/column labels taken
/// from the axis vectors; values row-major, rows indexed by `rows`.
void write_svg_heatmap(std::ostream& os, const std::vector<double>& rows,
                       const std::vector<double>& cols,
                       const std::vector<double>& values,
                       const std::string& row_label,
                       const std::string& col_label);

/// Polyline chart of one or more series over a common x grid, fixed palette,
/// y range [0, 1].
void write_svg_traces(std::ostream& os, const std::vector<double>& x,
                      const std::vector<Column>& series,
                      const std::string& x_label);

/// Opens `path` for binary writing (LF endings everywhere), streams `body`
/// into it, and throws IoError when the stream fails.
void write_file(const std::string& path,
                const std::function<void(std::ostream&)>& body);

}  // namespace dickeenv
