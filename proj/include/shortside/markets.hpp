#pragma once

// Short-side clearing, proportional rationing and the bounded arctangent
// price-adjustment rule.

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "shortside/core.hpp"

namespace shortside {

/// Lower bound applied to any adjusted price. Only reachable when varmax >= 1/pi.
inline constexpr double kPositiveFloor = 1e-12;

enum class MarketId { Consumer = 0, NewCapital = 1, OldCapital = 2, Labor = 3 };

inline constexpr std::array<MarketId, 4> kAllMarkets = {MarketId::Consumer, MarketId::NewCapital,
                                                        MarketId::OldCapital, MarketId::Labor};

[[nodiscard]] std::string_view to_string(MarketId id) noexcept;

struct MarketSnapshot {
  MarketId market_id = MarketId::Consumer;
  double ex_ante_demand = 0.0;
  double ex_ante_supply = 0.0;
  double ex_post_quantity = 0.0;

  [[nodiscard]] double excess_demand() const noexcept { return ex_ante_demand - ex_ante_supply; }

  friend bool operator==(const MarketSnapshot&, const MarketSnapshot&) = default;
};

/// Transacted quantity: min(demand, supply).
[[nodiscard]] double short_side(double demand, double supply) noexcept;

/// Builds a snapshot whose ex-post quantity is the short side.
[[nodiscard]] MarketSnapshot clear_market(MarketId id, double demand, double supply) noexcept;

/// Splits `transacted_total` across claimants in proportion to their claims.
/// Claims are served in full when they do not exceed the total.
[[nodiscard]] std::vector<double> ration(std::span<const double> claims, double transacted_total);

struct PriceUpdate {
  double price = 0.0;
  bool clamped = false;  ///< the positive floor was applied
};

/// price + price * 2 * atan(demand - supply) * varmax, floored at kPositiveFloor.
[[nodiscard]] PriceUpdate adjust_price(double price, double ex_ante_demand, double ex_ante_supply,
                                       double varmax) noexcept;

[[nodiscard]] inline double update_price(double price, double ex_ante_demand, double ex_ante_supply,
                                         double varmax) noexcept {
  return adjust_price(price, ex_ante_demand, ex_ante_supply, varmax).price;
}

struct PriceVectorUpdate {
  PriceVector prices;
  int clamp_count = 0;
};

/// Applies the price rule to each market independently, indexed by MarketId.
[[nodiscard]] PriceVectorUpdate update_all_prices(const PriceVector& prices,
                                                  const std::array<MarketSnapshot, 4>& snapshots,
                                                  double varmax);

}  // namespace shortside
