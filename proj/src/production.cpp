#include "shortside/production.hpp"

#include <algorithm>
#include <cmath>

namespace shortside {

UnitCost unit_cost(const Technology& tech, double rental, double wage) {
  const double cost = std::pow(rental / tech.beta_one, tech.beta_one) *
                      std::pow(wage / tech.beta_two, tech.beta_two) / tech.scale_B;
  const double ratio = (tech.beta_one / tech.beta_two) * (wage / rental);
  return {cost, ratio};
}

UnitCost unit_cost(const PriceVector& prices, const Technology& tech) {
  return unit_cost(tech, prices.p_ok, prices.p_w);
}

ProducerPlan producer_plan(const PriceVector& prices, const Technology& tech, double output_price,
                           InputAvailability available, double scale_cap_multiplier) {
  const UnitCost uc = unit_cost(prices, tech);
  if (!(output_price > uc.cost)) return {};

  const double capital_cap = scale_cap_multiplier * available.capital;
  const double labor_cap = scale_cap_multiplier * available.labor;
  const double labor = std::min(labor_cap, capital_cap / uc.capital_ratio);
  if (!(labor > 0.0)) return {};
  // Recompute the capital side so the binding bound is hit exactly.
  const double capital = labor_cap * uc.capital_ratio <= capital_cap ? labor * uc.capital_ratio
                                                                     : capital_cap;

  ProducerPlan plan;
  plan.demand_capital = capital;
  plan.demand_labor = labor;
  plan.supply_output = produce(tech, capital, labor);
  return plan;
}

double produce(const Technology& tech, double capital, double labor) {
  if (capital <= 0.0 || labor <= 0.0) return 0.0;
  return tech.scale_B * std::pow(capital, tech.beta_one) * std::pow(labor, tech.beta_two);
}

}  // namespace shortside
