#include "shortside/markets.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "log.hpp"

namespace shortside {

std::string_view to_string(MarketId id) noexcept {
  switch (id) {
    case MarketId::Consumer: return "consumer";
    case MarketId::NewCapital: return "new_capital";
    case MarketId::OldCapital: return "old_capital";
    case MarketId::Labor: return "labor";
  }
  return "unknown";
}

double short_side(double demand, double supply) noexcept { return std::min(demand, supply); }

MarketSnapshot clear_market(MarketId id, double demand, double supply) noexcept {
  return {id, demand, supply, short_side(demand, supply)};
}

std::vector<double> ration(std::span<const double> claims, double transacted_total) {
  std::vector<double> out(claims.begin(), claims.end());
  const double total_claims = std::accumulate(claims.begin(), claims.end(), 0.0);
  if (total_claims <= transacted_total) return out;
  if (transacted_total <= 0.0) {
    std::fill(out.begin(), out.end(), 0.0);
    return out;
  }
  const double share = transacted_total / total_claims;
  for (double& claim : out) claim = std::min(claim, claim * share);
  return out;
}

PriceUpdate adjust_price(double price, double ex_ante_demand, double ex_ante_supply,
                         double varmax) noexcept {
  const double step = price * 2.0 * std::atan(ex_ante_demand - ex_ante_supply) * varmax;
  const double next = price + step;
  if (next < kPositiveFloor) return {kPositiveFloor, true};
  return {next, false};
}

PriceVectorUpdate update_all_prices(const PriceVector& prices,
                                    const std::array<MarketSnapshot, 4>& snapshots, double varmax) {
  for (std::size_t i = 0; i < snapshots.size(); ++i) {
    if (snapshots[i].market_id != kAllMarkets[i]) {
      throw std::invalid_argument("update_all_prices: snapshots must be ordered by MarketId");
    }
  }

  PriceVectorUpdate result;
  auto apply = [&](double price, MarketId id) {
    const auto& snap = snapshots[static_cast<std::size_t>(id)];
    const PriceUpdate upd = adjust_price(price, snap.ex_ante_demand, snap.ex_ante_supply, varmax);
    if (upd.clamped) {
      ++result.clamp_count;
      detail::log(detail::LogLevel::Info, "price floor engaged on {} market (price {}, excess {})",
                  to_string(id), price, snap.excess_demand());
    }
    return upd.price;
  };
  result.prices.p_c = apply(prices.p_c, MarketId::Consumer);
  result.prices.p_nk = apply(prices.p_nk, MarketId::NewCapital);
  result.prices.p_ok = apply(prices.p_ok, MarketId::OldCapital);
  result.prices.p_w = apply(prices.p_w, MarketId::Labor);
  return result;
}

}  // namespace shortside
