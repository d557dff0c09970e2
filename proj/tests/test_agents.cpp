#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "shortside/agents.hpp"
#include "support.hpp"

using namespace shortside;
using shortside::testing::grid_search_rich;
using shortside::testing::rel_diff;

namespace {

const Preferences kThirds{1.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};

double budget_gap(const RichPlan& plan, const PriceVector& p) {
  const double income = p.p_ok * plan.supply_old_capital + p.p_w * plan.supply_labor;
  const double spending = p.p_c * plan.demand_consumer + p.p_nk * plan.demand_new_capital;
  return rel_diff(income, spending);
}

}  // namespace

TEST(RichPlan, SymmetricInteriorAtUnitPrices) {
  const auto plan = rich_plan(PriceVector{}, 0.0, kThirds, 12.0);
  EXPECT_NEAR(plan.demand_consumer, 4.0, 1e-12);
  EXPECT_NEAR(plan.demand_new_capital, 4.0, 1e-12);
  EXPECT_NEAR(plan.free_time, 4.0, 1e-12);
  EXPECT_NEAR(plan.supply_labor, 8.0, 1e-12);
  EXPECT_EQ(plan.supply_old_capital, 0.0);
  EXPECT_FALSE(plan.corner);
}

TEST(RichPlan, LaborCornerMatchesBruteForce) {
  const Preferences prefs{1.0, 0.25, 0.25, 0.5};
  const PriceVector prices{};
  const auto plan = rich_plan(prices, 100.0, prefs, 10.0);
  EXPECT_TRUE(plan.corner);
  EXPECT_DOUBLE_EQ(plan.free_time, 10.0);
  EXPECT_DOUBLE_EQ(plan.supply_labor, 0.0);
  EXPECT_DOUBLE_EQ(plan.demand_consumer, 50.0);
  EXPECT_DOUBLE_EQ(plan.demand_new_capital, 50.0);
  EXPECT_DOUBLE_EQ(plan.supply_old_capital, 100.0);

  // Independent maximizer on a 1e-4 grid of the budget simplex.
  const auto best = grid_search_rich(prices, 100.0, prefs, 10.0, 10000);
  EXPECT_NEAR(best.free_time, 10.0, 1e-9);
  EXPECT_NEAR(best.demand_consumer, 50.0, 0.05);
  EXPECT_NEAR(best.demand_new_capital, 50.0, 0.05);
  EXPECT_GE(utility(plan, prefs), best.utility * (1.0 - 1e-12));
  EXPECT_LE(utility(plan, prefs) - best.utility, 1e-6 * best.utility);
}

TEST(RichPlan, InteriorMatchesBruteForce) {
  const Preferences prefs{2.0, 0.2, 0.3, 0.5};
  const PriceVector prices{1.5, 0.7, 0.4, 2.0};
  const auto plan = rich_plan(prices, 3.0, prefs, 10.0);
  ASSERT_FALSE(plan.corner);
  const auto best = grid_search_rich(prices, 3.0, prefs, 10.0, 2000);
  EXPECT_GE(utility(plan, prefs), best.utility * (1.0 - 1e-12));
  EXPECT_NEAR(best.free_time, plan.free_time, 0.02);
}

TEST(RichPlan, DoublingPricesLeavesPlanUnchanged) {
  const Preferences prefs{1.0, 0.2, 0.3, 0.5};
  const PriceVector prices{1.3, 0.8, 0.25, 1.7};
  for (double capital : {0.0, 5.0, 500.0}) {
    const auto a = rich_plan(prices, capital, prefs, 12.0);
    const auto b = rich_plan(prices.scaled(2.0), capital, prefs, 12.0);
    EXPECT_EQ(a.corner, b.corner);
    EXPECT_LE(rel_diff(a.demand_consumer, b.demand_consumer), 1e-12);
    EXPECT_LE(rel_diff(a.demand_new_capital, b.demand_new_capital), 1e-12);
    EXPECT_LE(rel_diff(a.free_time, b.free_time), 1e-12);
    EXPECT_LE(rel_diff(a.supply_labor, b.supply_labor), 1e-12);
  }
}

TEST(RichPlan, BudgetIdentityAndTimeConstraintOnRandomInputs) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> price(0.01, 10.0);
  std::uniform_real_distribution<double> share(0.05, 1.0);
  std::uniform_real_distribution<double> capital(0.0, 200.0);
  std::uniform_real_distribution<double> hours(0.5, 24.0);
  for (int n = 0; n < 5000; ++n) {
    const PriceVector p{price(rng), price(rng), price(rng), price(rng)};
    double a1 = share(rng), a2 = share(rng), a3 = share(rng);
    const double sum = a1 + a2 + a3;
    const Preferences prefs{1.0, a1 / sum, a2 / sum, a3 / sum};
    const double T = hours(rng);
    const auto plan = rich_plan(p, capital(rng), prefs, T);
    EXPECT_LE(budget_gap(plan, p), 1e-9);
    EXPECT_NEAR(plan.free_time + plan.supply_labor, T, 1e-9);
    EXPECT_GE(plan.demand_consumer, 0.0);
    EXPECT_GE(plan.demand_new_capital, 0.0);
    EXPECT_GE(plan.free_time, 0.0);
    EXPECT_GE(plan.supply_labor, 0.0);
  }
}

TEST(RichPlan, LaborSupplyNonIncreasingInCapitalWithThreshold) {
  const Preferences prefs{1.0, 0.3, 0.2, 0.5};
  const PriceVector prices{1.0, 1.2, 0.6, 0.9};
  const double T = 10.0;
  // Corner starts where a3 * (p_ok K + p_w T) = p_w T.
  const double threshold = (prices.p_w * T / prefs.alpha_three - prices.p_w * T) / prices.p_ok;

  double previous = rich_plan(prices, 0.0, prefs, T).supply_labor;
  EXPECT_GT(previous, 0.0);
  for (double k = 0.05; k < 3.0 * threshold; k += 0.05) {
    const auto plan = rich_plan(prices, k, prefs, T);
    EXPECT_LE(plan.supply_labor, previous);
    if (k < threshold * (1.0 - 1e-9)) EXPECT_GT(plan.supply_labor, 0.0) << k;
    if (k >= threshold * (1.0 + 1e-9)) EXPECT_EQ(plan.supply_labor, 0.0) << k;
    previous = plan.supply_labor;
  }
}

TEST(PoorPlan, Examples) {
  const PriceVector p{2.0, 1.0, 1.0, 3.0};
  const auto plan = poor_plan(p, 8.0);
  EXPECT_DOUBLE_EQ(plan.demand_consumer, 12.0);
  EXPECT_EQ(plan.supply_labor, 8.0);

  const auto idle = poor_plan(p, 0.0);
  EXPECT_EQ(idle.demand_consumer, 0.0);
  EXPECT_EQ(idle.supply_labor, 0.0);

  EXPECT_DOUBLE_EQ(poor_plan(PriceVector{1.7, 1.0, 1.0, 1.7}, 6.5).demand_consumer, 6.5);
}

TEST(PoorPlan, SpendsWholeWage) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> price(0.001, 100.0);
  std::uniform_real_distribution<double> hours(0.0, 40.0);
  for (int n = 0; n < 2000; ++n) {
    const PriceVector p{price(rng), 1.0, 1.0, price(rng)};
    const double omega = hours(rng);
    const auto plan = poor_plan(p, omega);
    EXPECT_EQ(plan.supply_labor, omega);
    EXPECT_LE(rel_diff(p.p_c * plan.demand_consumer, p.p_w * plan.supply_labor), 1e-15);
  }
}

TEST(Utility, Examples) {
  RichPlan unit;
  unit.demand_consumer = unit.demand_new_capital = unit.free_time = 1.0;
  EXPECT_DOUBLE_EQ(utility(unit, kThirds), 1.0);

  RichPlan no_goods = unit;
  no_goods.demand_consumer = 0.0;
  EXPECT_EQ(utility(no_goods, kThirds), 0.0);
}

TEST(Utility, InteriorPlanBeatsFeasiblePerturbations) {
  const Preferences prefs{1.0, 0.3, 0.3, 0.4};
  const PriceVector p{1.1, 0.9, 0.5, 1.3};
  const double K = 4.0, T = 12.0;
  const auto plan = rich_plan(p, K, prefs, T);
  ASSERT_FALSE(plan.corner);
  const double u = utility(plan, prefs);
  for (double dl = -1.0; dl <= 1.0; dl += 0.1) {
    for (double share = 0.05; share < 1.0; share += 0.05) {
      RichPlan alt;
      alt.free_time = plan.free_time - dl;
      if (alt.free_time < 0.0 || alt.free_time > T) continue;
      const double budget = p.p_ok * K + p.p_w * (T - alt.free_time);
      alt.demand_consumer = share * budget / p.p_c;
      alt.demand_new_capital = (1.0 - share) * budget / p.p_nk;
      EXPECT_LE(utility(alt, prefs), u * (1.0 + 1e-12));
    }
  }
}
