#pragma once

// Domain types shared by every part of the simulator: prices, preference and
// technology coefficients, class populations, the inter-week state and the
// full scenario configuration, plus configuration validation.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace shortside {

/// Tolerance used for the "shares sum to one" checks on Cobb-Douglas exponents.
inline constexpr double kShareSumTolerance = 1e-12;

/// The four prices carried from one week to the next.
struct PriceVector {
  double p_c = 1.0;   ///< consumer good, currency/unit
  double p_nk = 1.0;  ///< newly produced capital, currency/unit
  double p_ok = 1.0;  ///< rental of old capital, currency/unit
  double p_w = 1.0;   ///< wage, currency/hour

  [[nodiscard]] bool valid() const noexcept;
  [[nodiscard]] PriceVector scaled(double lambda) const noexcept;

  friend bool operator==(const PriceVector&, const PriceVector&) = default;
};

/// Rich-agent utility U = scale_C * D_ac^alpha_one * D_nk^alpha_two * FreeTime^alpha_three.
struct Preferences {
  double scale_C = 1.0;
  double alpha_one = 1.0 / 3.0;
  double alpha_two = 1.0 / 3.0;
  double alpha_three = 1.0 / 3.0;

  friend bool operator==(const Preferences&, const Preferences&) = default;
};

/// Constant-returns Cobb-Douglas line: output = scale_B * K^beta_one * L^beta_two.
struct Technology {
  double scale_B = 1.0;
  double beta_one = 0.5;
  double beta_two = 0.5;

  friend bool operator==(const Technology&, const Technology&) = default;
};

struct Populations {
  std::int64_t n_rich = 1;
  std::int64_t n_poor = 1;
  double omega = 8.0;              ///< fixed weekly hours worked by each poor agent
  double time_endowment_T = 12.0;  ///< weekly hours available to each rich agent

  friend bool operator==(const Populations&, const Populations&) = default;
};

struct EconomyState {
  std::int64_t week = 0;
  double capital_stock_K = 0.0;  ///< old capital owned by the rich class
  PriceVector prices{};

  friend bool operator==(const EconomyState&, const EconomyState&) = default;
};

/// Defaults reproduce the shipped growth scenario (scenarios/scenario_mixed.cfg).
struct ScenarioConfig {
  Preferences preferences{1.0, 0.196, 0.22, 0.584};
  Technology technology_consumer{4.92, 0.935, 0.065};
  Technology technology_capital{16.5, 0.938, 0.062};
  Populations populations{1, 9, 0.078, 4.31};
  double varmax = 0.0148;
  std::int64_t horizon = 320;
  EconomyState initial_state{0, 0.00263, {8.48, 0.528, 0.228, 0.844}};
  double scale_cap_multiplier = 1.76;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

enum class ViolationKind {
  AlphaSumViolation,
  BetaSumViolation,
  NonPositivePrice,
  NonPositiveParameter,
  ParameterOutOfRange,
  EmptyEconomy,
};

[[nodiscard]] const char* to_string(ViolationKind kind) noexcept;

struct Violation {
  ViolationKind kind;
  std::string field;  ///< config key path, e.g. "preferences.alpha_one"
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

class ValidationResult;
[[nodiscard]] ValidationResult validate_config(const ScenarioConfig& config);

/// A ScenarioConfig that has passed validate_config. Only validate_config can
/// construct one, so holding a ValidatedConfig is proof the invariants hold.
class ValidatedConfig {
 public:
  [[nodiscard]] const ScenarioConfig& config() const noexcept { return config_; }
  /// Non-fatal findings, e.g. varmax >= 1/pi where the price floor may engage.
  [[nodiscard]] const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  friend bool operator==(const ValidatedConfig&, const ValidatedConfig&) = default;

 private:
  friend class ValidationResult;
  friend ValidationResult validate_config(const ScenarioConfig& config);
  ValidatedConfig(ScenarioConfig config, std::vector<std::string> warnings)
      : config_(std::move(config)), warnings_(std::move(warnings)) {}

  ScenarioConfig config_;
  std::vector<std::string> warnings_;
};

class ValidationResult {
 public:
  [[nodiscard]] bool ok() const noexcept { return validated_.has_value(); }
  explicit operator bool() const noexcept { return ok(); }

  /// Throws ValidationError when the config was rejected.
  [[nodiscard]] const ValidatedConfig& value() const;
  [[nodiscard]] const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  friend ValidationResult validate_config(const ScenarioConfig& config);
  std::optional<ValidatedConfig> validated_;
  std::vector<Violation> violations_;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  [[nodiscard]] const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Checks every type invariant and reports all violations, not just the first.
[[nodiscard]] ValidationResult validate_config(const ScenarioConfig& config);

/// Convenience wrapper: validate or throw ValidationError.
[[nodiscard]] ValidatedConfig require_valid(const ScenarioConfig& config);

}  // namespace shortside
