#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "dickeenv/io.hpp"

using namespace dickeenv;

namespace {

int count_occurrences(const std::string& haystack, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("format_sig: shortest 12-digit forms") {
  CHECK(format_sig(0.0) == "0");
  CHECK(format_sig(1.0) == "1");
  CHECK(format_sig(1.5) == "1.5");
  CHECK(format_sig(-2.5) == "-2.5");
  CHECK(format_sig(100.0) == "100");
  CHECK(format_sig(0.25) == "0.25");
  CHECK(format_sig(1.0 / 3.0) == "0.333333333333");
  CHECK(format_sig(1e20) == "1e+20");
  CHECK(format_sig(1e-7) == "1e-07");
}

TEST_CASE("format_sig round-trips through stod to 12 digits") {
  for (double v : {3.14159265358979, -1.2345678e-9, 6.02214076e23, 0.1}) {
    const double back = std::stod(format_sig(v));
    CHECK(std::abs(back - v) <= 1e-11 * std::abs(v));
  }
}

TEST_CASE("write_csv emits metadata, header, and rows exactly") {
  const std::vector<double> x = {0.0, 0.5};
  const std::vector<double> y = {1.0, 0.25};
  std::ostringstream os;
  write_csv(os, {"alpha = 1", "run 2"}, {{"x", &x}, {"y", &y}});
  CHECK(os.str() == "# alpha = 1\n# run 2\nx,y\n0,1\n0.5,0.25\n");
}

TEST_CASE("write_csv with no metadata starts at the header") {
  const std::vector<double> x = {2.0};
  std::ostringstream os;
  write_csv(os, {}, {{"only", &x}});
  CHECK(os.str() == "only\n2\n");
}

TEST_CASE("write_csv rejects malformed column sets") {
  const std::vector<double> a = {1.0, 2.0};
  const std::vector<double> b = {1.0};
  std::ostringstream os;
  CHECK_THROWS_AS(write_csv(os, {}, {}), IoError);
  CHECK_THROWS_AS(write_csv(os, {}, {{"a", &a}, {"b", &b}}), IoError);
  CHECK_THROWS_AS(write_csv(os, {}, {{"a", &a}, {"null", nullptr}}), IoError);
}

TEST_CASE("heatmap: one cell rect per value plus the background") {
  const std::vector<double> rows = {0.0, 1.0};
  const std::vector<double> cols = {0.0, 1.0, 2.0};
  const std::vector<double> values = {1.0, 0.5, 0.2, 0.9, 0.7, 0.0};
  std::ostringstream os;
  write_svg_heatmap(os, rows, cols, values, "n", "gt");
  const std::string svg = os.str();
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>\n") != std::string::npos);
  CHECK(count_occurrences(svg, "<rect") == 1 + 2 * 3);
  CHECK(svg.find("#000000") != std::string::npos);  // value 1 paints black
  CHECK(svg.find("#ffffff") != std::string::npos);  // value 0 paints white
  CHECK(svg.find("#808080") != std::string::npos);  // value 0.5 is mid-gray
  CHECK(svg.find("black = 1") != std::string::npos);
  CHECK(svg.find("bottom to top") != std::string::npos);
}

TEST_CASE("heatmap rejects a value grid that is not rows x cols") {
  std::ostringstream os;
  const std::vector<double> axis = {0.0, 1.0};
  CHECK_THROWS_AS(
      write_svg_heatmap(os, axis, axis, std::vector<double>(3, 0.0), "r", "c"),
      IoError);
  CHECK_THROWS_AS(write_svg_heatmap(os, {}, axis, {}, "r", "c"), IoError);
}

TEST_CASE("traces: one polyline per series with the fixed palette") {
  const std::vector<double> x = {0.0, 1.0, 2.0};
  const std::vector<double> up = {0.0, 0.5, 1.0};
  const std::vector<double> down = {1.0, 0.5, 0.0};
  std::ostringstream os;
  write_svg_traces(os, x, {{"up", &up}, {"down", &down}}, "gt");
  const std::string svg = os.str();
  CHECK(count_occurrences(svg, "<polyline") == 2);
  CHECK(svg.find("#000000") != std::string::npos);
  CHECK(svg.find("#c0392b") != std::string::npos);
  CHECK(svg.find(">up</text>") != std::string::npos);
  CHECK(svg.find(">down</text>") != std::string::npos);
  CHECK(svg.find("gt from 0 to 2") != std::string::npos);
}

TEST_CASE("traces reject a degenerate or mismatched x grid") {
  std::ostringstream os;
  const std::vector<double> one = {0.0};
  const std::vector<double> three = {0.0, 1.0, 2.0};
  CHECK_THROWS_AS(write_svg_traces(os, one, {{"s", &one}}, "x"), IoError);
  CHECK_THROWS_AS(write_svg_traces(os, three, {{"s", &one}}, "x"), IoError);
}

TEST_CASE("write_file round-trips bytes and reports unwritable paths") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "dickeenv_io_test.csv";
  const std::string body = "# meta\nx\n1\n2\n";
  write_file(path.string(), [&](std::ostream& os) { os << body; });
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream read_back;
  read_back << in.rdbuf();
  CHECK(read_back.str() == body);
  std::remove(path.string().c_str());

  CHECK_THROWS_AS(
      write_file("/nonexistent_dir_dickeenv/out.csv", [](std::ostream&) {}),
      IoError);
}

}  // TEST_SUITE
