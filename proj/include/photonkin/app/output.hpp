// CSV tables and minimal SVG line plots.

#pragma once

#include <string>
#include <vector>

namespace photonkin::app {

struct Column {
  std::string name;
  std::vector<double> values;
};

/// Decimal, 12 significant digits, comma separated, '\n' line ends.
std::string format_number(double v);
std::string csv_text(const std::vector<Column>& columns);
void write_csv(const std::string& path, const std::vector<Column>& columns);

struct Series {
  std::string label;
  std::vector<double> y;
  bool dashed = false;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_y = false;
};

std::string svg_text(const PlotSpec& spec, const std::vector<double>& x,
                     const std::vector<Series>& series);
void write_svg(const std::string& path, const PlotSpec& spec, const std::vector<double>& x,
               const std::vector<Series>& series);

}  // namespace photonkin::app
