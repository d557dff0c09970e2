#include "shortside/core.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace shortside {

bool PriceVector::valid() const noexcept {
  for (double p : {p_c, p_nk, p_ok, p_w}) {
    if (!std::isfinite(p) || p <= 0.0) return false;
  }
  return true;
}

PriceVector PriceVector::scaled(double lambda) const noexcept {
  return {p_c * lambda, p_nk * lambda, p_ok * lambda, p_w * lambda};
}

const char* to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::AlphaSumViolation: return "AlphaSumViolation";
    case ViolationKind::BetaSumViolation: return "BetaSumViolation";
    case ViolationKind::NonPositivePrice: return "NonPositivePrice";
    case ViolationKind::NonPositiveParameter: return "NonPositiveParameter";
    case ViolationKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ViolationKind::EmptyEconomy: return "EmptyEconomy";
  }
  return "Unknown";
}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  std::string out = "invalid scenario config:";
  for (const auto& v : violations) {
    out += fmt::format("\n  {} [{}]: {}", to_string(v.kind), v.field, v.message);
  }
  return out;
}

class Checker {
 public:
  void positive(double value, const std::string& field) {
    if (!std::isfinite(value) || value <= 0.0) {
      add(ViolationKind::NonPositiveParameter, field,
          fmt::format("must be finite and > 0, got {}", value));
    }
  }

  void non_negative(double value, const std::string& field) {
    if (!std::isfinite(value) || value < 0.0) {
      add(ViolationKind::NonPositiveParameter, field,
          fmt::format("must be finite and >= 0, got {}", value));
    }
  }

  void price(double value, const std::string& field) {
    if (!std::isfinite(value) || value <= 0.0) {
      add(ViolationKind::NonPositivePrice, field,
          fmt::format("price must be finite and > 0, got {}", value));
    }
  }

  void technology(const Technology& tech, const std::string& prefix) {
    positive(tech.scale_B, prefix + ".scale_B");
    positive(tech.beta_one, prefix + ".beta_one");
    positive(tech.beta_two, prefix + ".beta_two");
    const double sum = tech.beta_one + tech.beta_two;
    if (!(std::abs(sum - 1.0) <= kShareSumTolerance)) {
      add(ViolationKind::BetaSumViolation, prefix,
          fmt::format("beta_one + beta_two must equal 1, got {}", sum));
    }
  }

  void add(ViolationKind kind, std::string field, std::string message) {
    violations.push_back({kind, std::move(field), std::move(message)});
  }

  std::vector<Violation> violations;
};

}  // namespace

const ValidatedConfig& ValidationResult::value() const {
  if (!validated_) throw ValidationError(violations_);
  return *validated_;
}

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error(summarize(violations)), violations_(std::move(violations)) {}

ValidationResult validate_config(const ScenarioConfig& config) {
  Checker check;

  const auto& prefs = config.preferences;
  check.positive(prefs.scale_C, "preferences.scale_C");
  check.positive(prefs.alpha_one, "preferences.alpha_one");
  check.positive(prefs.alpha_two, "preferences.alpha_two");
  check.positive(prefs.alpha_three, "preferences.alpha_three");
  const double alpha_sum = prefs.alpha_one + prefs.alpha_two + prefs.alpha_three;
  if (!(std::abs(alpha_sum - 1.0) <= kShareSumTolerance)) {
    check.add(ViolationKind::AlphaSumViolation, "preferences",
              fmt::format("alpha_one + alpha_two + alpha_three must equal 1, got {}", alpha_sum));
  }

  check.technology(config.technology_consumer, "technology_consumer");
  check.technology(config.technology_capital, "technology_capital");

  const auto& pop = config.populations;
  if (pop.n_rich < 0) {
    check.add(ViolationKind::NonPositiveParameter, "populations.n_rich", "must be >= 0");
  }
  if (pop.n_poor < 0) {
    check.add(ViolationKind::NonPositiveParameter, "populations.n_poor", "must be >= 0");
  }
  if (pop.n_rich + pop.n_poor < 1) {
    check.add(ViolationKind::EmptyEconomy, "populations", "n_rich + n_poor must be at least 1");
  }
  check.non_negative(pop.omega, "populations.omega");
  check.positive(pop.time_endowment_T, "populations.time_endowment_T");

  if (!std::isfinite(config.varmax) || config.varmax <= 0.0) {
    check.add(ViolationKind::NonPositiveParameter, "varmax",
              fmt::format("must be > 0, got {}", config.varmax));
  } else if (config.varmax >= 1.0) {
    check.add(ViolationKind::ParameterOutOfRange, "varmax",
              fmt::format("must be < 1, got {}", config.varmax));
  }
  if (config.horizon < 0) {
    check.add(ViolationKind::NonPositiveParameter, "horizon", "must be >= 0");
  }
  if (!std::isfinite(config.scale_cap_multiplier) || config.scale_cap_multiplier <= 1.0) {
    check.add(ViolationKind::ParameterOutOfRange, "scale_cap_multiplier",
              fmt::format("must be > 1, got {}", config.scale_cap_multiplier));
  }

  const auto& init = config.initial_state;
  if (init.week != 0) {
    check.add(ViolationKind::ParameterOutOfRange, "initial.week", "initial state must start at week 0");
  }
  check.non_negative(init.capital_stock_K, "initial.K0");
  check.price(init.prices.p_c, "initial.p_c");
  check.price(init.prices.p_nk, "initial.p_nk");
  check.price(init.prices.p_ok, "initial.p_ok");
  check.price(init.prices.p_w, "initial.p_w");

  ValidationResult result;
  if (!check.violations.empty()) {
    result.violations_ = std::move(check.violations);
    return result;
  }

  std::vector<std::string> warnings;
  if (config.varmax >= 1.0 / std::numbers::pi) {
    warnings.push_back(fmt::format(
        "varmax {} >= 1/pi: large excess supply can push a price to the positive floor", config.varmax));
  }
  result.validated_ = ValidatedConfig(config, std::move(warnings));
  return result;
}

ValidatedConfig require_valid(const ScenarioConfig& config) {
  return validate_config(config).value();
}

}  // namespace shortside
