// shortside: command-line front end for the rationed-market economy simulator.
//
//   shortside run <config> [--out DIR] [--format csv|jsonl] [--plots] [--window N]
//   shortside sweep <sweep-file> [--out DIR] [--jobs N]
//   shortside validate <config>
//   shortside trace <config> --week W
//
// Exit codes: 0 success, 1 invalid input, 2 numerical divergence.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "shortside/config_io.hpp"
#include "shortside/engine.hpp"
#include "shortside/export.hpp"
#include "shortside/plots.hpp"
#include "shortside/sweep.hpp"

namespace fs = std::filesystem;
using namespace shortside;

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitDiverged = 2;

void write_file(const fs::path& path, const std::string& contents) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", path.string()));
  out << contents;
}

ValidatedConfig load_config(const std::string& path) {
  const auto config = parse_config(read_text_file(path));
  for (const auto& w : config.warnings()) std::cerr << "warning: " << w << '\n';
  return config;
}

int cmd_run(const std::string& config_path, const std::string& out_dir, const std::string& format_name,
            bool plots, std::size_t window) {
  const auto config = load_config(config_path);
  const auto format = parse_series_format(format_name);
  const auto series = run_simulation(config);
  const auto document = export_series(series, format);

  if (out_dir.empty()) {
    std::cout << document;
  } else {
    write_file(fs::path(out_dir) / (format == SeriesFormat::Csv ? "series.csv" : "series.jsonl"), document);
  }
  if (plots) {
    const fs::path plot_dir = out_dir.empty() ? fs::path("plots") : fs::path(out_dir);
    for (const auto& p : emit_plots(series, plot_dir)) std::cerr << "wrote " << p.string() << '\n';
  }

  std::cerr << fmt::format("weeks simulated: {} ({})\n", series.records.size(), to_string(series.termination));
  if (!series.records.empty()) {
    const auto regime = classify_regime(series, std::min(window, represented_weeks(series)));
    std::cerr << "regime: " << to_string(regime.kind);
    if (regime.collapse_onset) std::cerr << " (onset week " << *regime.collapse_onset << ')';
    std::cerr << '\n';
  }
  return 0;
}

int cmd_sweep(const std::string& spec_path, const std::string& out_dir, unsigned jobs) {
  const auto spec = parse_sweep_spec(read_text_file(spec_path), fs::path(spec_path).parent_path());
  const auto report = run_sweep(spec, jobs);
  const auto csv = sweep_report_csv(report);
  if (out_dir.empty()) {
    std::cout << csv;
  } else {
    write_file(fs::path(out_dir) / "sweep.csv", csv);
  }
  return 0;
}

int cmd_validate(const std::string& config_path) {
  const auto config = load_config(config_path);
  std::cout << "valid\n" << serialize_config(config.config());
  return 0;
}

int cmd_trace(const std::string& config_path, std::int64_t week) {
  const auto config = load_config(config_path);
  EconomyState state = config.config().initial_state;
  for (std::int64_t w = 0;; ++w) {
    auto [next, record] = step_week(state, config);
    if (w == week) {
      std::cout << describe_week(record);
      return 0;
    }
    state = next;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulator of a two-class economy with short-side rationed markets"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::string format = "csv";
  bool plots = false;
  std::size_t window = 200;
  auto* run = app.add_subcommand("run", "simulate a scenario and export the weekly series");
  run->add_option("config", config_path, "scenario file")->required();
  run->add_option("--out", out_dir, "output directory (default: series to stdout)");
  run->add_option("--format", format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
  run->add_flag("--plots", plots, "emit the four SVG charts");
  run->add_option("--window", window, "regime classification window in weeks");

  std::string spec_path;
  unsigned jobs = 1;
  auto* sweep = app.add_subcommand("sweep", "run a parameter sweep and report regimes");
  sweep->add_option("spec", spec_path, "sweep file")->required();
  sweep->add_option("--out", out_dir, "output directory (default: report to stdout)");
  sweep->add_option("--jobs", jobs, "simulations run concurrently")->check(CLI::PositiveNumber);

  auto* validate = app.add_subcommand("validate", "check a scenario file");
  validate->add_option("config", config_path, "scenario file")->required();

  std::int64_t trace_week = 0;
  auto* trace = app.add_subcommand("trace", "dump every quantity of one simulated week");
  trace->add_option("config", config_path, "scenario file")->required();
  trace->add_option("--week", trace_week, "week index")->required()->check(CLI::NonNegativeNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(config_path, out_dir, format, plots, window);
    if (*sweep) return cmd_sweep(spec_path, out_dir, jobs);
    if (*validate) return cmd_validate(config_path);
    if (*trace) return cmd_trace(config_path, trace_week);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const NumericalDivergence& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDiverged;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return 0;
}
