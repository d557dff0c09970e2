#pragma once

// The weekly pipeline: plan, clear input markets, produce, clear output
// markets, carry capital forward, adjust prices. Plus multi-week runs and
// classification of the long-run outcome.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shortside/agents.hpp"
#include "shortside/core.hpp"
#include "shortside/markets.hpp"
#include "shortside/production.hpp"

namespace shortside {

/// Index of a production line in per-line arrays.
enum class Line { Consumer = 0, Capital = 1 };

struct InputAllocation {
  double capital = 0.0;
  double labor = 0.0;

  friend bool operator==(const InputAllocation&, const InputAllocation&) = default;
};

struct WeekDiagnostics {
  int clamp_count = 0;
  bool corner_active = false;  ///< rich labor supply at zero this week

  friend bool operator==(const WeekDiagnostics&, const WeekDiagnostics&) = default;
};

/// Complete audit of one simulated week.
///
/// `rich` and `poor` are the plans of one representative agent of each class;
/// `rich_total` and `poor_total` are the same plans multiplied by the class
/// population, which is what enters the markets.
struct WeekRecord {
  std::int64_t week = 0;
  double capital_stock = 0.0;  ///< old capital available at the start of the week

  RichPlan rich{};
  PoorPlan poor{};
  RichPlan rich_total{};
  PoorPlan poor_total{};
  std::array<ProducerPlan, 2> producers{};  ///< indexed by Line

  std::array<MarketSnapshot, 4> markets{};  ///< indexed by MarketId
  std::array<InputAllocation, 2> inputs{};  ///< ex-post, indexed by Line
  std::array<double, 2> outputs{};          ///< actual output, indexed by Line

  double consumption_rich = 0.0;  ///< ex-post consumer good bought by the rich class
  double consumption_poor = 0.0;  ///< ex-post consumer good bought by the poor class

  double capital_stock_next = 0.0;
  PriceVector prices_before{};
  PriceVector prices_after{};
  WeekDiagnostics diagnostics{};
  double real_wage_ratio = 0.0;  ///< prices_before.p_w / prices_before.p_c

  [[nodiscard]] const MarketSnapshot& market(MarketId id) const noexcept {
    return markets[static_cast<std::size_t>(id)];
  }
  [[nodiscard]] const ProducerPlan& producer(Line line) const noexcept {
    return producers[static_cast<std::size_t>(line)];
  }
  [[nodiscard]] double output(Line line) const noexcept {
    return outputs[static_cast<std::size_t>(line)];
  }
  [[nodiscard]] double labor_expost() const noexcept { return market(MarketId::Labor).ex_post_quantity; }
  [[nodiscard]] double labor_exante() const noexcept { return market(MarketId::Labor).ex_ante_supply; }
  [[nodiscard]] double capital_rented() const noexcept {
    return market(MarketId::OldCapital).ex_post_quantity;
  }
  [[nodiscard]] double consumption_expost() const noexcept {
    return market(MarketId::Consumer).ex_post_quantity;
  }
  [[nodiscard]] double new_capital_expost() const noexcept {
    return market(MarketId::NewCapital).ex_post_quantity;
  }
  /// No labor employed and nothing produced.
  [[nodiscard]] bool inactive() const noexcept;

  friend bool operator==(const WeekRecord&, const WeekRecord&) = default;
};

enum class Termination { HorizonReached, CollapsedAbsorbing };

[[nodiscard]] const char* to_string(Termination t) noexcept;

struct SimulationSeries {
  ScenarioConfig config;
  std::vector<WeekRecord> records;
  Termination termination = Termination::HorizonReached;

  friend bool operator==(const SimulationSeries&, const SimulationSeries&) = default;
};

enum class RegimeKind { Collapse, Growth, Indeterminate };

[[nodiscard]] const char* to_string(RegimeKind kind) noexcept;

struct Regime {
  RegimeKind kind = RegimeKind::Indeterminate;
  std::optional<std::int64_t> collapse_onset;  ///< set iff kind == Collapse

  friend bool operator==(const Regime&, const Regime&) = default;
};

/// A NaN or infinity appeared while simulating.
class NumericalDivergence : public std::runtime_error {
 public:
  NumericalDivergence(std::int64_t week, std::string field);
  [[nodiscard]] std::int64_t week() const noexcept { return week_; }
  [[nodiscard]] const std::string& field() const noexcept { return field_; }

 private:
  std::int64_t week_;
  std::string field_;
};

class WindowTooLong : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Activity threshold below which an output counts as zero for classification.
inline constexpr double kInactiveOutput = 1e-9;

/// Advances one week. Returns the next state and the week's full record.
[[nodiscard]] std::pair<EconomyState, WeekRecord> step_week(const EconomyState& state,
                                                            const ValidatedConfig& config);

/// Runs `horizon` weeks from the initial state, stopping early once capital and
/// employment have both reached zero (no production can ever restart).
[[nodiscard]] SimulationSeries run_simulation(const ValidatedConfig& config);

/// Weeks a series stands for: the record count, or the configured horizon for
/// a run that stopped early in the absorbing state.
[[nodiscard]] std::size_t represented_weeks(const SimulationSeries& series) noexcept;

/// Collapse: every week of the trailing window is inactive. Growth: capital,
/// ex-post consumption and the real wage all strictly increase across the
/// window. Anything else is Indeterminate. Throws WindowTooLong unless
/// 1 <= window <= represented_weeks(series).
[[nodiscard]] Regime classify_regime(const SimulationSeries& series, std::size_t window);

}  // namespace shortside
