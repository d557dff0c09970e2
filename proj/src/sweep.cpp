#include "shortside/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <limits>
#include <thread>

#include <fmt/format.h>

#include "shortside/config_io.hpp"
#include "text_util.hpp"

namespace shortside {

namespace {

std::vector<std::string> split_values(std::string_view list) {
  std::vector<std::string> out;
  while (true) {
    const auto comma = list.find(',');
    const auto item = detail::trim(list.substr(0, comma));
    if (!item.empty()) out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

std::size_t parse_size(std::string_view text, std::size_t line) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError(ConfigErrorKind::SyntaxError, line, fmt::format("expected an integer, got '{}'", text));
  }
  return value;
}

SweepRow run_one(const SweepSpec& spec, std::size_t index) {
  SweepRow row;
  row.index = index;
  ScenarioConfig config = spec.base;

  // Row-major decoding: the last axis varies fastest.
  std::size_t rest = index;
  row.values.resize(spec.axes.size());
  for (std::size_t a = spec.axes.size(); a-- > 0;) {
    const auto& axis = spec.axes[a];
    row.values[a] = axis.values[rest % axis.values.size()];
    rest /= axis.values.size();
  }
  for (std::size_t a = 0; a < spec.axes.size(); ++a) {
    set_config_value(config, spec.axes[a].key, row.values[a]);
  }

  const auto validated = validate_config(config);
  if (!validated) {
    row.regime = "Invalid";
    return row;
  }
  try {
    const auto series = run_simulation(validated.value());
    row.termination = to_string(series.termination);
    row.weeks = series.records.size();
    if (series.records.empty()) {
      row.regime = to_string(RegimeKind::Indeterminate);
      row.final_capital = config.initial_state.capital_stock_K;
      row.final_real_wage_ratio = config.initial_state.prices.p_w / config.initial_state.prices.p_c;
      return row;
    }
    const auto regime = classify_regime(series, std::min(spec.window, represented_weeks(series)));
    row.regime = to_string(regime.kind);
    row.collapse_onset = regime.collapse_onset;
    row.final_capital = series.records.back().capital_stock_next;
    row.final_real_wage_ratio = series.records.back().real_wage_ratio;
  } catch (const NumericalDivergence&) {
    row.regime = "Diverged";
    row.termination = "numerical-divergence";
  }
  return row;
}

}  // namespace

SweepSpec parse_sweep_spec(std::string_view text, const std::filesystem::path& base_dir) {
  SweepSpec spec;
  std::vector<std::pair<std::string, std::string>> overrides;
  std::size_t line_no = 0;

  for (std::string_view line : detail::split_lines(text)) {
    ++line_no;
    line = detail::trim(detail::strip_comment(line));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(ConfigErrorKind::SyntaxError, line_no, "expected 'key = value'");
    }
    auto lhs = detail::trim(line.substr(0, eq));
    const auto rhs = detail::trim(line.substr(eq + 1));

    if (lhs == "base") {
      const std::filesystem::path path(rhs);
      spec.base = parse_config_fields(read_text_file((path.is_absolute() ? path : base_dir / path).string()));
    } else if (lhs == "window") {
      spec.window = parse_size(rhs, line_no);
    } else if (lhs == "max_combinations") {
      spec.max_combinations = parse_size(rhs, line_no);
    } else if (lhs.starts_with("set ") || lhs.starts_with("vary ")) {
      const bool vary = lhs.starts_with("vary ");
      const auto key = detail::trim(lhs.substr(vary ? 5 : 4));
      if (!is_config_key(key)) {
        throw ConfigError(ConfigErrorKind::UnknownKey, line_no, fmt::format("unknown key '{}'", key));
      }
      if (vary) {
        auto values = split_values(rhs);
        if (values.empty()) {
          throw ConfigError(ConfigErrorKind::SyntaxError, line_no, "vary needs at least one value");
        }
        spec.axes.push_back({std::string(key), std::move(values)});
      } else {
        overrides.emplace_back(key, rhs);
      }
    } else {
      throw ConfigError(ConfigErrorKind::UnknownKey, line_no, fmt::format("unknown sweep directive '{}'", lhs));
    }
  }
  // Overrides apply after `base` regardless of line order.
  for (const auto& [key, value] : overrides) set_config_value(spec.base, key, value);
  return spec;
}

std::size_t combination_count(const SweepSpec& spec) {
  std::size_t total = 1;
  for (const auto& axis : spec.axes) {
    if (axis.values.empty()) return 0;
    if (total > std::numeric_limits<std::size_t>::max() / axis.values.size()) {
      return std::numeric_limits<std::size_t>::max();
    }
    total *= axis.values.size();
  }
  return total;
}

SweepReport run_sweep(const SweepSpec& spec, unsigned jobs) {
  // Reject bad keys and unparsable values up front, before any worker starts.
  for (const auto& axis : spec.axes) {
    ScenarioConfig probe = spec.base;
    for (const auto& v : axis.values) set_config_value(probe, axis.key, v);
  }
  const std::size_t total = combination_count(spec);
  if (total > spec.max_combinations) {
    throw CapExceeded(fmt::format("sweep has {} combinations, cap is {}", total, spec.max_combinations));
  }

  SweepReport report;
  for (const auto& axis : spec.axes) report.keys.push_back(axis.key);
  report.rows.resize(total);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
      report.rows[i] = run_one(spec, i);
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(total)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return report;
}

std::string sweep_report_csv(const SweepReport& report) {
  std::string out = "index";
  for (const auto& key : report.keys) out += "," + key;
  out += ",regime,collapse_onset,final_K,final_real_wage_ratio,termination,weeks\n";
  for (const auto& row : report.rows) {
    out += fmt::format("{}", row.index);
    for (const auto& v : row.values) out += "," + v;
    out += fmt::format(",{},{},{},{},{},{}\n", row.regime,
                       row.collapse_onset ? fmt::format("{}", *row.collapse_onset) : std::string(),
                       row.final_capital, row.final_real_wage_ratio, row.termination, row.weeks);
  }
  return out;
}

}  // namespace shortside
