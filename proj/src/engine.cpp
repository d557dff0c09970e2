#include "shortside/engine.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "log.hpp"

namespace shortside {

const char* to_string(Termination t) noexcept {
  switch (t) {
    case Termination::HorizonReached: return "horizon-reached";
    case Termination::CollapsedAbsorbing: return "collapsed-absorbing";
  }
  return "unknown";
}

const char* to_string(RegimeKind kind) noexcept {
  switch (kind) {
    case RegimeKind::Collapse: return "Collapse";
    case RegimeKind::Growth: return "Growth";
    case RegimeKind::Indeterminate: return "Indeterminate";
  }
  return "unknown";
}

NumericalDivergence::NumericalDivergence(std::int64_t week, std::string field)
    : std::runtime_error(fmt::format("numerical divergence in week {}: {} is not finite", week, field)),
      week_(week),
      field_(std::move(field)) {}

bool WeekRecord::inactive() const noexcept {
  return labor_expost() == 0.0 && output(Line::Consumer) < kInactiveOutput &&
         output(Line::Capital) < kInactiveOutput;
}

namespace {

void require_finite(double value, std::int64_t week, const char* field) {
  if (!std::isfinite(value)) throw NumericalDivergence(week, field);
}

void check_record(const WeekRecord& r) {
  const auto w = r.week;
  require_finite(r.rich_total.demand_consumer, w, "rich.demand_consumer");
  require_finite(r.rich_total.demand_new_capital, w, "rich.demand_new_capital");
  require_finite(r.rich_total.free_time, w, "rich.free_time");
  require_finite(r.rich_total.supply_labor, w, "rich.supply_labor");
  require_finite(r.poor_total.demand_consumer, w, "poor.demand_consumer");
  for (const auto& p : r.producers) {
    require_finite(p.demand_capital, w, "producer.demand_capital");
    require_finite(p.demand_labor, w, "producer.demand_labor");
    require_finite(p.supply_output, w, "producer.supply_output");
  }
  for (const auto& m : r.markets) {
    require_finite(m.ex_ante_demand, w, "market.ex_ante_demand");
    require_finite(m.ex_ante_supply, w, "market.ex_ante_supply");
    require_finite(m.ex_post_quantity, w, "market.ex_post_quantity");
  }
  for (double out : r.outputs) require_finite(out, w, "output");
  require_finite(r.capital_stock_next, w, "capital_stock_next");
  require_finite(r.prices_after.p_c, w, "prices.p_c");
  require_finite(r.prices_after.p_nk, w, "prices.p_nk");
  require_finite(r.prices_after.p_ok, w, "prices.p_ok");
  require_finite(r.prices_after.p_w, w, "prices.p_w");
  require_finite(r.real_wage_ratio, w, "real_wage_ratio");
}

}  // namespace

std::pair<EconomyState, WeekRecord> step_week(const EconomyState& state,
                                              const ValidatedConfig& validated) {
  const ScenarioConfig& cfg = validated.config();
  const auto& pop = cfg.populations;
  const auto n_rich = static_cast<double>(pop.n_rich);
  const auto n_poor = static_cast<double>(pop.n_poor);
  const PriceVector& prices = state.prices;

  WeekRecord rec;
  rec.week = state.week;
  rec.capital_stock = state.capital_stock_K;
  rec.prices_before = prices;
  rec.real_wage_ratio = prices.p_w / prices.p_c;

  // (1) Households.
  const double capital_per_rich = pop.n_rich > 0 ? state.capital_stock_K / n_rich : 0.0;
  rec.rich = rich_plan(prices, capital_per_rich, cfg.preferences, pop.time_endowment_T);
  rec.poor = poor_plan(prices, pop.omega);
  rec.rich_total = rec.rich.scaled(n_rich);
  rec.poor_total = rec.poor.scaled(n_poor);
  rec.diagnostics.corner_active = pop.n_rich > 0 && rec.rich.corner;

  const double labor_supply = rec.rich_total.supply_labor + rec.poor_total.supply_labor;
  const double capital_supply = rec.rich_total.supply_old_capital;

  // (2) Producers see the same economy-wide availability.
  const InputAvailability available{state.capital_stock_K, labor_supply};
  auto& consumer_plan = rec.producers[static_cast<std::size_t>(Line::Consumer)];
  auto& capital_plan = rec.producers[static_cast<std::size_t>(Line::Capital)];
  consumer_plan = producer_plan(prices, cfg.technology_consumer, prices.p_c, available,
                                cfg.scale_cap_multiplier);
  capital_plan = producer_plan(prices, cfg.technology_capital, prices.p_nk, available,
                               cfg.scale_cap_multiplier);

  // (3) Input markets.
  const auto old_capital = clear_market(MarketId::OldCapital,
                                        consumer_plan.demand_capital + capital_plan.demand_capital,
                                        capital_supply);
  const auto labor = clear_market(MarketId::Labor,
                                  consumer_plan.demand_labor + capital_plan.demand_labor,
                                  labor_supply);
  const std::array<double, 2> capital_claims{consumer_plan.demand_capital, capital_plan.demand_capital};
  const std::array<double, 2> labor_claims{consumer_plan.demand_labor, capital_plan.demand_labor};
  const auto capital_alloc = ration(capital_claims, old_capital.ex_post_quantity);
  const auto labor_alloc = ration(labor_claims, labor.ex_post_quantity);
  for (std::size_t line = 0; line < 2; ++line) {
    rec.inputs[line] = {capital_alloc[line], labor_alloc[line]};
  }

  // (4) Production; capital is used up in the process.
  rec.outputs[0] = produce(cfg.technology_consumer, rec.inputs[0].capital, rec.inputs[0].labor);
  rec.outputs[1] = produce(cfg.technology_capital, rec.inputs[1].capital, rec.inputs[1].labor);

  // (5) Output markets. Ex-post supply is what was actually produced.
  const double consumer_demand = rec.rich_total.demand_consumer + rec.poor_total.demand_consumer;
  const auto consumer = clear_market(MarketId::Consumer, consumer_demand, rec.outputs[0]);
  const auto new_capital =
      clear_market(MarketId::NewCapital, rec.rich_total.demand_new_capital, rec.outputs[1]);
  const std::array<double, 2> consumer_claims{rec.rich_total.demand_consumer,
                                              rec.poor_total.demand_consumer};
  const auto consumption = ration(consumer_claims, consumer.ex_post_quantity);
  rec.consumption_rich = consumption[0];
  rec.consumption_poor = consumption[1];

  // (6) Purchased new capital becomes next week's stock.
  rec.capital_stock_next = new_capital.ex_post_quantity;

  // (7) Prices react to ex-ante gaps; output-market supply is the planned one.
  rec.markets[static_cast<std::size_t>(MarketId::Consumer)] = consumer;
  rec.markets[static_cast<std::size_t>(MarketId::NewCapital)] = new_capital;
  rec.markets[static_cast<std::size_t>(MarketId::OldCapital)] = old_capital;
  rec.markets[static_cast<std::size_t>(MarketId::Labor)] = labor;

  std::array<MarketSnapshot, 4> ex_ante = rec.markets;
  ex_ante[static_cast<std::size_t>(MarketId::Consumer)].ex_ante_supply = consumer_plan.supply_output;
  ex_ante[static_cast<std::size_t>(MarketId::NewCapital)].ex_ante_supply = capital_plan.supply_output;
  const auto updated = update_all_prices(prices, ex_ante, cfg.varmax);
  rec.prices_after = updated.prices;
  rec.diagnostics.clamp_count = updated.clamp_count;

  check_record(rec);

  detail::log(detail::LogLevel::Debug,
              "week {}: K={} labor={} out_c={} out_k={} p=({}, {}, {}, {})", rec.week,
              rec.capital_stock, rec.labor_expost(), rec.outputs[0], rec.outputs[1],
              rec.prices_after.p_c, rec.prices_after.p_nk, rec.prices_after.p_ok,
              rec.prices_after.p_w);

  EconomyState next{state.week + 1, rec.capital_stock_next, rec.prices_after};
  return {next, rec};
}

SimulationSeries run_simulation(const ValidatedConfig& config) {
  SimulationSeries series;
  series.config = config.config();
  const auto horizon = config.config().horizon;
  series.records.reserve(static_cast<std::size_t>(horizon));

  EconomyState state = config.config().initial_state;
  for (std::int64_t w = 0; w < horizon; ++w) {
    auto [next, rec] = step_week(state, config);
    const bool absorbing = rec.capital_stock_next == 0.0 && rec.labor_expost() == 0.0;
    series.records.push_back(std::move(rec));
    state = next;
    if (absorbing) {
      series.termination = Termination::CollapsedAbsorbing;
      detail::log(detail::LogLevel::Info, "economy collapsed in week {}", w);
      break;
    }
  }
  return series;
}

std::size_t represented_weeks(const SimulationSeries& series) noexcept {
  // A run that stopped in the absorbing state stands for a full-horizon run
  // whose remaining weeks are all inactive.
  if (series.termination != Termination::CollapsedAbsorbing) return series.records.size();
  const auto horizon = static_cast<std::size_t>(std::max<std::int64_t>(series.config.horizon, 0));
  return std::max(series.records.size(), horizon);
}

Regime classify_regime(const SimulationSeries& series, std::size_t window) {
  const auto& recs = series.records;
  if (recs.empty()) throw std::invalid_argument("classify_regime: empty series");

  const bool absorbed = series.termination == Termination::CollapsedAbsorbing;
  const std::size_t length = represented_weeks(series);
  if (window == 0 || window > length) {
    throw WindowTooLong(fmt::format("classify_regime: window {} does not fit a series of {} weeks",
                                    window, length));
  }
  const std::size_t first = length - window;

  // For an absorbed run, weeks beyond the last record are inactive; the last
  // record itself is inactive by construction of the stopping rule.
  bool all_inactive = true;
  for (std::size_t i = std::min(first, recs.size()); i < recs.size(); ++i) {
    all_inactive = all_inactive && recs[i].inactive();
  }
  if (all_inactive) {
    std::size_t onset = recs.size() - 1;
    while (onset > 0 && recs[onset - 1].inactive()) --onset;
    return {RegimeKind::Collapse, recs[onset].week};
  }
  if (absorbed) return {RegimeKind::Indeterminate, std::nullopt};

  bool growing = window >= 2;
  for (std::size_t i = first + 1; i < recs.size() && growing; ++i) {
    const auto& prev = recs[i - 1];
    const auto& cur = recs[i];
    growing = cur.capital_stock_next > prev.capital_stock_next &&
              cur.consumption_expost() > prev.consumption_expost() &&
              cur.real_wage_ratio > prev.real_wage_ratio;
  }
  if (growing) return {RegimeKind::Growth, std::nullopt};
  return {RegimeKind::Indeterminate, std::nullopt};
}

}  // namespace shortside
