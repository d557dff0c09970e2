// Random parameter search used to pick the shipped scenario files.
//
// A candidate mixed (rich + poor) economy is accepted when
//   * the mixed run grows: after a transient of at most --max-transient weeks,
//     capital, ex-post consumption and the real wage rise strictly for
//     --window weeks, employment never drops below the poor's hours, and rich
//     labor falls monotonically to zero;
//   * the same economy with n_poor = 0 collapses within --collapse-horizon
//     weeks with rich labor falling monotonically to zero;
//   * in both runs the rich start out working and only stop after at least
//     --min-labor-weeks weeks;
//   * no price ever touches the positive floor.
// Accepted candidates are printed as config documents, ranked by the smallest
// relative week-over-week increment of the three growth series (larger is
// more robust against rounding).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "shortside/config_io.hpp"
#include "shortside/engine.hpp"

namespace {

using namespace shortside;

struct Options {
  std::uint64_t seed = 1;
  std::size_t samples = 20000;
  std::size_t window = 200;
  std::size_t max_transient = 100;
  std::int64_t collapse_horizon = 500;
  std::size_t keep = 3;
  std::size_t min_labor_weeks = 20;
  std::int64_t horizon = 320;
};

bool labor_monotone_to_zero(const std::vector<WeekRecord>& recs, std::size_t min_weeks) {
  for (std::size_t i = 1; i < recs.size(); ++i) {
    if (recs[i].rich.supply_labor > recs[i - 1].rich.supply_labor) return false;
  }
  auto zero = std::find_if(recs.begin(), recs.end(), [](const WeekRecord& r) { return r.rich.supply_labor == 0.0; });
  return zero != recs.end() && static_cast<std::size_t>(zero - recs.begin()) >= min_weeks;
}

double min_relative_increment(const std::vector<WeekRecord>& recs, std::size_t from) {
  double worst = INFINITY;
  for (std::size_t i = from + 1; i < recs.size(); ++i) {
    const auto& a = recs[i - 1];
    const auto& b = recs[i];
    worst = std::min({worst, b.capital_stock_next / a.capital_stock_next - 1.0,
                      b.consumption_expost() / a.consumption_expost() - 1.0,
                      b.real_wage_ratio / a.real_wage_ratio - 1.0});
  }
  return worst;
}

int total_clamps(const SimulationSeries& s) {
  int n = 0;
  for (const auto& r : s.records) n += r.diagnostics.clamp_count;
  return n;
}

/// First week from which every growth condition holds through the end of the
/// series, if that week is early enough.
std::optional<std::size_t> growth_onset(const SimulationSeries& s, const Options& opt) {
  const auto& recs = s.records;
  const double poor_hours =
      static_cast<double>(s.config.populations.n_poor) * s.config.populations.omega;
  std::size_t onset = recs.size();
  while (onset > 0) {
    const std::size_t i = onset - 1;
    if (recs[i].labor_expost() < poor_hours) break;
    if (i + 1 < recs.size()) {
      const auto& a = recs[i];
      const auto& b = recs[i + 1];
      if (!(b.capital_stock_next > a.capital_stock_next && b.consumption_expost() > a.consumption_expost() &&
            b.real_wage_ratio > a.real_wage_ratio)) {
        break;
      }
    }
    --onset;
  }
  if (onset > opt.max_transient || recs.size() - onset < opt.window + 1) return std::nullopt;
  return onset;
}

struct Candidate {
  ScenarioConfig config;
  double margin = 0.0;  ///< larger is better
  std::size_t onset = 0;
  std::size_t collapse_week = 0;
};

std::optional<Candidate> evaluate(const ScenarioConfig& mixed, const Options& opt) {
  auto valid = validate_config(mixed);
  if (!valid) return std::nullopt;
  try {
    const auto series = run_simulation(valid.value());
    if (series.termination != Termination::HorizonReached || total_clamps(series) > 0) return std::nullopt;
    const auto onset = growth_onset(series, opt);
    if (!onset) return std::nullopt;
    if (!labor_monotone_to_zero(series.records, opt.min_labor_weeks)) return std::nullopt;
    if (classify_regime(series, opt.window).kind != RegimeKind::Growth) return std::nullopt;

    ScenarioConfig rich_only = mixed;
    rich_only.populations.n_poor = 0;
    rich_only.horizon = opt.collapse_horizon;
    const auto collapse = run_simulation(require_valid(rich_only));
    if (collapse.termination != Termination::CollapsedAbsorbing || total_clamps(collapse) > 0) {
      return std::nullopt;
    }
    if (!labor_monotone_to_zero(collapse.records, opt.min_labor_weeks)) return std::nullopt;

    return Candidate{mixed, min_relative_increment(series.records, *onset), *onset,
                     collapse.records.size() - 1};
  } catch (const NumericalDivergence&) {
    return std::nullopt;
  }
}

ScenarioConfig sample(std::mt19937_64& rng, const Options& opt) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto log_uniform = [&](double lo, double hi) { return lo * std::pow(hi / lo, unit(rng)); };
  auto between = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };

  ScenarioConfig c;
  c.preferences.alpha_three = between(0.2, 0.8);
  const double goods = 1.0 - c.preferences.alpha_three;
  c.preferences.alpha_one = goods * between(0.1, 0.9);
  c.preferences.alpha_two = 1.0 - c.preferences.alpha_three - c.preferences.alpha_one;

  c.technology_consumer.beta_one = between(0.1, 0.95);
  c.technology_consumer.beta_two = 1.0 - c.technology_consumer.beta_one;
  c.technology_consumer.scale_B = log_uniform(0.3, 30.0);
  c.technology_capital.beta_one = between(0.5, 0.995);
  c.technology_capital.beta_two = 1.0 - c.technology_capital.beta_one;
  c.technology_capital.scale_B = log_uniform(0.3, 30.0);

  c.populations.n_rich = 1;
  c.populations.n_poor = std::uniform_int_distribution<std::int64_t>(1, 10)(rng);
  c.populations.omega = log_uniform(0.05, 40.0);
  c.populations.time_endowment_T = log_uniform(0.5, 100.0);

  c.varmax = log_uniform(1e-4, 0.3);
  c.scale_cap_multiplier = between(1.05, 2.0);
  c.horizon = opt.horizon;
  c.initial_state.capital_stock_K = log_uniform(1e-3, 100.0);
  c.initial_state.prices = {log_uniform(0.1, 10.0), log_uniform(0.1, 10.0), log_uniform(0.1, 10.0),
                            log_uniform(0.1, 10.0)};
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Random search for shipped scenario parameters"};
  app.add_option("--seed", opt.seed, "RNG seed");
  app.add_option("--samples", opt.samples, "number of random candidates");
  app.add_option("--window", opt.window, "growth window in weeks");
  app.add_option("--max-transient", opt.max_transient, "latest admissible growth onset");
  app.add_option("--collapse-horizon", opt.collapse_horizon, "weeks allowed for the rich-only collapse");
  app.add_option("--keep", opt.keep, "number of candidates to print");
  app.add_option("--horizon", opt.horizon, "weeks simulated for the mixed economy");
  std::string check_path;
  app.add_option("--check", check_path, "evaluate one scenario file instead of searching");
  app.add_option("--min-labor-weeks", opt.min_labor_weeks, "earliest week the rich may stop working");
  CLI11_PARSE(app, argc, argv);

  if (!check_path.empty()) {
    const auto cfg = parse_config(read_text_file(check_path)).config();
    const auto cand = evaluate(cfg, opt);
    if (!cand) {
      std::cout << "rejected\n";
      return 1;
    }
    std::cout << fmt::format("accepted: min relative increment {}, growth onset week {}, rich-only collapse week {}\n",
                             cand->margin, cand->onset, cand->collapse_week);
    return 0;
  }

  std::mt19937_64 rng(opt.seed);
  std::vector<Candidate> found;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    const auto cfg = sample(rng, opt);
    if (auto cand = evaluate(cfg, opt)) found.push_back(*cand);
  }
  std::sort(found.begin(), found.end(),
            [](const Candidate& a, const Candidate& b) { return a.margin > b.margin; });

  std::cout << fmt::format("# {} of {} candidates accepted\n", found.size(), opt.samples);
  for (std::size_t i = 0; i < std::min(opt.keep, found.size()); ++i) {
    std::cout << fmt::format("\n# candidate {}: min relative increment {}, growth onset week {}, "
                             "rich-only collapse week {}\n",
                             i, found[i].margin, found[i].onset, found[i].collapse_week)
              << serialize_config(found[i].config);
  }
  return found.empty() ? 1 : 0;
}
