#pragma once

// Cartesian-product parameter sweeps.
//
// Sweep files use the same `key = value` layout as scenario files plus three
// directives:
//
//   base = scenario_mixed.cfg        # optional, relative to the sweep file
//   set populations.omega = 10       # override one base key
//   vary populations.n_poor = 0, 1   # one axis of the product
//   window = 200                     # regime classification window
//   max_combinations = 10000         # refuse larger products

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shortside/core.hpp"
#include "shortside/engine.hpp"

namespace shortside {

inline constexpr std::size_t kDefaultSweepCap = 10000;

struct SweepAxis {
  std::string key;
  std::vector<std::string> values;
};

struct SweepSpec {
  ScenarioConfig base{};
  std::vector<SweepAxis> axes;
  std::size_t window = 200;
  std::size_t max_combinations = kDefaultSweepCap;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepRow {
  std::size_t index = 0;
  std::vector<std::string> values;  ///< one per axis
  std::string regime;               ///< Collapse, Growth, Indeterminate, Invalid or Diverged
  std::optional<std::int64_t> collapse_onset;
  double final_capital = 0.0;
  double final_real_wage_ratio = 0.0;
  std::string termination;
  std::size_t weeks = 0;
};

struct SweepReport {
  std::vector<std::string> keys;
  std::vector<SweepRow> rows;  ///< ordered by Cartesian-product index
};

/// Parses a sweep document; `base_dir` resolves a relative `base =` path.
[[nodiscard]] SweepSpec parse_sweep_spec(std::string_view text,
                                         const std::filesystem::path& base_dir = {});

/// Number of combinations: product of the axis lengths (1 with no axes).
[[nodiscard]] std::size_t combination_count(const SweepSpec& spec);

/// Runs every combination, up to `jobs` at a time. Throws CapExceeded when the
/// product exceeds spec.max_combinations, ConfigError for unknown keys.
[[nodiscard]] SweepReport run_sweep(const SweepSpec& spec, unsigned jobs = 1);

[[nodiscard]] std::string sweep_report_csv(const SweepReport& report);

}  // namespace shortside
