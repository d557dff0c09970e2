#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "shortside/engine.hpp"

namespace shortside {

enum class SeriesFormat { Csv, JsonLines };

/// Fixed column order of the CSV export (also the key order of each JSON line).
[[nodiscard]] const std::vector<std::string>& series_columns();

/// Renders one row per week. Reals use the shortest decimal that round-trips.
[[nodiscard]] std::string export_series(const SimulationSeries& series, SeriesFormat format);

/// Full human-readable dump of one week, used by `shortside trace`.
[[nodiscard]] std::string describe_week(const WeekRecord& record);

[[nodiscard]] SeriesFormat parse_series_format(std::string_view name);

}  // namespace shortside
