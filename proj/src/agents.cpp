#include "shortside/agents.hpp"

#include <cmath>

namespace shortside {

RichPlan RichPlan::scaled(double count) const noexcept {
  return {demand_consumer * count, demand_new_capital * count, free_time * count,
          supply_labor * count, supply_old_capital * count, corner};
}

PoorPlan PoorPlan::scaled(double count) const noexcept {
  return {demand_consumer * count, supply_labor * count};
}

RichPlan rich_plan(const PriceVector& prices, double capital_owned, const Preferences& prefs,
                   double time_endowment) {
  RichPlan plan;
  plan.supply_old_capital = capital_owned;

  const double full_income = prices.p_ok * capital_owned + prices.p_w * time_endowment;
  const double free_time = prefs.alpha_three * full_income / prices.p_w;

  if (free_time > time_endowment) {
    // Labor corner: FreeTime = T, only rental income is left to spend.
    const double goods_share = prefs.alpha_one + prefs.alpha_two;
    const double capital_income = prices.p_ok * capital_owned;
    plan.corner = true;
    plan.free_time = time_endowment;
    plan.supply_labor = 0.0;
    plan.demand_consumer = (prefs.alpha_one / goods_share) * capital_income / prices.p_c;
    plan.demand_new_capital = (prefs.alpha_two / goods_share) * capital_income / prices.p_nk;
    return plan;
  }

  plan.free_time = free_time;
  plan.supply_labor = time_endowment - free_time;
  plan.demand_consumer = prefs.alpha_one * full_income / prices.p_c;
  plan.demand_new_capital = prefs.alpha_two * full_income / prices.p_nk;
  return plan;
}

PoorPlan poor_plan(const PriceVector& prices, double omega) {
  return {omega * prices.p_w / prices.p_c, omega};
}

double utility(const RichPlan& plan, const Preferences& prefs) {
  if (plan.demand_consumer <= 0.0 || plan.demand_new_capital <= 0.0 || plan.free_time <= 0.0) {
    return 0.0;
  }
  return prefs.scale_C * std::pow(plan.demand_consumer, prefs.alpha_one) *
         std::pow(plan.demand_new_capital, prefs.alpha_two) *
         std::pow(plan.free_time, prefs.alpha_three);
}

}  // namespace shortside
