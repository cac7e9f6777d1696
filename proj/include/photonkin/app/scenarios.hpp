#pragma once

#include <optional>
#include <string>
#include <vector>

#include "photonkin/app/config.hpp"
#include "photonkin/first_order.hpp"
#include "photonkin/ww_kinetics.hpp"

namespace photonkin::app {

struct SummaryLine {
  std::string label;
  double computed = 0.0;
  std::optional<double> reference;
  std::string note;
};

struct Manifest {
  std::string scenario;
  std::vector<std::string> files;
  std::vector<SummaryLine> summary;

  /// One line per number: computed, reference value, absolute and relative deviation.
  std::string summary_text() const;
};

/// Runs one scenario, writes its files under cfg.output.dir and returns the
/// manifest (also written as <scenario>_summary.txt).
Manifest run(const RunConfig& cfg);

/// CSV column documentation for --help.
std::string csv_schemas();

ww::WWModel make_ww_model(const RunConfig& cfg, double lambda);
first_order::FirstOrderModel make_first_order_model(const RunConfig& cfg, double lambda);

}  // namespace photonkin::app
