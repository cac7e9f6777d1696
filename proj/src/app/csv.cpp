#include <cmath>
#include <fstream>

#include <fmt/format.h>

#include "photonkin/app/output.hpp"
#include "photonkin/errors.hpp"

namespace photonkin::app {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  return fmt::format("{:.12g}", v);
}

std::string csv_text(const std::vector<Column>& columns) {
  if (columns.empty()) throw InvalidArgument("csv: no columns");
  const std::size_t rows = columns.front().values.size();
  std::string out;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].values.size() != rows) {
      throw InvalidArgument("csv: column '" + columns[j].name + "' has a different length");
    }
    if (j) out += ',';
    out += columns[j].name;
  }
  out += '\n';
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (j) out += ',';
      out += format_number(columns[j].values[i]);
    }
    out += '\n';
  }
  return out;
}

void write_csv(const std::string& path, const std::vector<Column>& columns) {
  const auto text = csv_text(columns);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
  if (!f) throw Error("write failed for '" + path + "'");
}

}  // namespace photonkin::app
