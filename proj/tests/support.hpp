#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "shortside/config_io.hpp"
#include "shortside/agents.hpp"
#include "shortside/core.hpp"

namespace shortside::testing {

inline std::string scenario_path(const std::string& name) {
  return std::string(SHORTSIDE_SCENARIO_DIR) + "/" + name;
}

inline ValidatedConfig load_scenario(const std::string& name) {
  return parse_config(read_text_file(scenario_path(name)));
}

inline double rel_diff(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return a == b ? 0.0 : std::abs(a - b) / scale;
}

// Small config used by many engine tests: symmetric shares and technologies.
inline ScenarioConfig symmetric_config() {
  ScenarioConfig c;
  c.preferences = {1.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  c.technology_consumer = {1.0, 0.5, 0.5};
  c.technology_capital = {1.0, 0.5, 0.5};
  c.populations = {1, 1, 8.0, 12.0};
  c.varmax = 0.1;
  c.horizon = 10;
  c.initial_state = {0, 4.0, {1.0, 1.0, 1.0, 1.0}};
  c.scale_cap_multiplier = 1.2;
  return c;
}

struct GridBest {
  double utility = 0.0;
  double demand_consumer = 0.0;
  double demand_new_capital = 0.0;
  double free_time = 0.0;
};

// Brute-force rich-agent optimum. Enumerates spending shares (s1, s2, s3) of
// full income M on a grid of step 1/steps, where s3 * M / p_w is free time and
// must not exceed T. The boundary s3 = p_w * T / M is enumerated as well.
// Works in logs so a fine grid stays cheap.
inline GridBest grid_search_rich(const PriceVector& p, double capital, const Preferences& prefs,
                                 double T, int steps) {
  const double M = p.p_ok * capital + p.p_w * T;
  const double cap = std::min(1.0, p.p_w * T / M);
  std::vector<double> log_share(static_cast<std::size_t>(steps) + 1);
  log_share[0] = -std::numeric_limits<double>::infinity();
  for (int i = 1; i <= steps; ++i) log_share[i] = std::log(static_cast<double>(i) / steps);

  double best = -std::numeric_limits<double>::infinity();
  double b1 = 0.0, b2 = 0.0, b3 = 0.0;
  auto consider = [&](double value, double s1, double s2, double s3) {
    if (value > best) {
      best = value;
      b1 = s1;
      b2 = s2;
      b3 = s3;
    }
  };
  for (int i = 1; i < steps; ++i) {
    for (int j = 1; i + j < steps; ++j) {
      const int k = steps - i - j;
      const double s3 = static_cast<double>(k) / steps;
      if (s3 > cap) continue;
      consider(prefs.alpha_one * log_share[i] + prefs.alpha_two * log_share[j] +
                   prefs.alpha_three * log_share[k],
               static_cast<double>(i) / steps, static_cast<double>(j) / steps, s3);
    }
  }
  // Points on the time-endowment boundary.
  const double log_cap = std::log(cap);
  const double rest = 1.0 - cap;
  if (rest > 0.0) {
    const double log_rest = std::log(rest);
    for (int i = 1; i < steps; ++i) {
      const double t = static_cast<double>(i) / steps;
      consider(prefs.alpha_one * (log_share[i] + log_rest) +
                   prefs.alpha_two * (std::log1p(-t) + log_rest) + prefs.alpha_three * log_cap,
               t * rest, (1.0 - t) * rest, cap);
    }
  }

  GridBest out;
  out.demand_consumer = b1 * M / p.p_c;
  out.demand_new_capital = b2 * M / p.p_nk;
  out.free_time = b3 * M / p.p_w;
  const double offset = prefs.alpha_one * std::log(M / p.p_c) + prefs.alpha_two * std::log(M / p.p_nk) +
                        prefs.alpha_three * std::log(M / p.p_w);
  out.utility = prefs.scale_C * std::exp(best + offset);
  return out;
}

}  // namespace shortside::testing
