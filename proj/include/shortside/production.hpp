#pragma once

#include "shortside/core.hpp"

namespace shortside {

struct ProducerPlan {
  double demand_capital = 0.0;  ///< old-capital units
  double demand_labor = 0.0;    ///< hours
  double supply_output = 0.0;

  [[nodiscard]] bool active() const noexcept { return supply_output > 0.0; }

  friend bool operator==(const ProducerPlan&, const ProducerPlan&) = default;
};

struct UnitCost {
  double cost = 0.0;           ///< minimal cost of one unit of output
  double capital_ratio = 0.0;  ///< cost-minimizing K/L
};

/// CRS Cobb-Douglas unit cost (rental/beta1)^beta1 * (wage/beta2)^beta2 / B and
/// the cost-minimizing capital/labor ratio (beta1/beta2) * (wage/rental).
[[nodiscard]] UnitCost unit_cost(const Technology& tech, double rental, double wage);
[[nodiscard]] UnitCost unit_cost(const PriceVector& prices, const Technology& tech);

/// Economy-wide input amounts a producer expects to be able to bid for.
struct InputAvailability {
  double capital = 0.0;
  double labor = 0.0;
};

/// Ex-ante plan of a price-taking CRS producer.
///
/// Unprofitable (output_price <= unit cost) lines shut down. Profitable lines
/// bid at the cost-minimizing ratio, scaled up until the first of
/// `scale_cap_multiplier * available` binds. The jump from zero to the cap when
/// the price crosses unit cost is intentional.
[[nodiscard]] ProducerPlan producer_plan(const PriceVector& prices, const Technology& tech,
                                         double output_price, InputAvailability available,
                                         double scale_cap_multiplier);

/// B * K^beta1 * L^beta2.
[[nodiscard]] double produce(const Technology& tech, double capital, double labor);

}  // namespace shortside
