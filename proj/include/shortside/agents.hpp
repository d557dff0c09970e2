#pragma once

// Ex-ante behavior of the two agent classes at given prices.

#include "shortside/core.hpp"

namespace shortside {

struct RichPlan {
  double demand_consumer = 0.0;     ///< D_ac
  double demand_new_capital = 0.0;  ///< D_nk
  double free_time = 0.0;
  double supply_labor = 0.0;        ///< O_al
  double supply_old_capital = 0.0;  ///< O_ok
  bool corner = false;              ///< labor supply pinned at zero

  [[nodiscard]] RichPlan scaled(double count) const noexcept;

  friend bool operator==(const RichPlan&, const RichPlan&) = default;
};

struct PoorPlan {
  double demand_consumer = 0.0;  ///< D_bc
  double supply_labor = 0.0;     ///< O_bl, always omega

  [[nodiscard]] PoorPlan scaled(double count) const noexcept;

  friend bool operator==(const PoorPlan&, const PoorPlan&) = default;
};

/// Utility-maximizing plan of one rich agent owning `capital_owned` units of
/// old capital and `time_endowment` weekly hours.
///
/// Full income M = p_ok * capital + p_w * T is split by the Cobb-Douglas
/// shares. If the implied free-time demand exceeds T the agent stops working
/// and spends capital income alone, in shares renormalized over the two goods.
/// Old capital is always supplied in full.
[[nodiscard]] RichPlan rich_plan(const PriceVector& prices, double capital_owned,
                                 const Preferences& prefs, double time_endowment);

/// The poor work `omega` hours and spend the whole wage on the consumer good.
[[nodiscard]] PoorPlan poor_plan(const PriceVector& prices, double omega);

/// C * D_ac^a1 * D_nk^a2 * FreeTime^a3; zero when any factor is zero.
[[nodiscard]] double utility(const RichPlan& plan, const Preferences& prefs);

}  // namespace shortside
