#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "shortside/engine.hpp"

namespace shortside {

class EmptySeries : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PlotSeries {
  std::string label;
  std::vector<double> values;  ///< one value per week
};

struct Chart {
  std::string file_name;
  std::string title;
  std::string y_label;
  std::vector<double> weeks;
  std::vector<PlotSeries> series;
};

/// The four standard charts of a run:
///   graph1_capital_labor.svg   capital rented and labor employed
///   graph2_produced_capital.svg output of the capital line
///   graph3_consumption.svg     ex-post consumption
///   graph4_real_wage.svg       p_w / p_c
[[nodiscard]] std::vector<Chart> standard_charts(const SimulationSeries& series);

/// Self-contained SVG line chart. Each polyline carries its raw data in a
/// `data-values` attribute (shortest round-trip decimals) so the plotted
/// points can be checked against the CSV export.
[[nodiscard]] std::string render_svg(const Chart& chart);

/// Writes the four standard charts into `out_dir` and returns their paths.
/// Throws EmptySeries for a series without records.
std::vector<std::filesystem::path> emit_plots(const SimulationSeries& series,
                                              const std::filesystem::path& out_dir);

}  // namespace shortside
