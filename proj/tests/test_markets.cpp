#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "shortside/markets.hpp"
#include "support.hpp"

using namespace shortside;
using shortside::testing::rel_diff;

namespace {

std::array<MarketSnapshot, 4> snapshots(std::array<double, 4> demand, std::array<double, 4> supply) {
  std::array<MarketSnapshot, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) out[i] = clear_market(kAllMarkets[i], demand[i], supply[i]);
  return out;
}

}  // namespace

TEST(ShortSide, Examples) {
  EXPECT_EQ(short_side(5.0, 3.0), 3.0);
  EXPECT_EQ(short_side(2.0, 7.0), 2.0);
  EXPECT_EQ(short_side(4.0, 4.0), 4.0);
  const auto snap = clear_market(MarketId::Labor, 5.0, 3.0);
  EXPECT_EQ(snap.market_id, MarketId::Labor);
  EXPECT_EQ(snap.ex_post_quantity, 3.0);
  EXPECT_EQ(snap.excess_demand(), 2.0);
}

TEST(Ration, Examples) {
  const std::vector<double> claims{6.0, 4.0};
  EXPECT_EQ(ration(claims, 5.0), (std::vector<double>{3.0, 2.0}));
  EXPECT_EQ(ration(claims, 10.0), (std::vector<double>{6.0, 4.0}));
  const std::vector<double> none{0.0, 0.0};
  EXPECT_EQ(ration(none, 0.0), (std::vector<double>{0.0, 0.0}));
  EXPECT_EQ(ration(claims, 0.0), (std::vector<double>{0.0, 0.0}));
}

TEST(Ration, VoluntaryExchangeOnRandomClaims) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> claim(0.0, 100.0);
  std::uniform_real_distribution<double> fraction(0.0, 1.0);
  std::uniform_int_distribution<int> count(1, 6);
  for (int n = 0; n < 5000; ++n) {
    std::vector<double> claims(static_cast<std::size_t>(count(rng)));
    for (double& c : claims) c = n % 7 == 0 ? 0.0 : claim(rng);
    const double total_claims = std::accumulate(claims.begin(), claims.end(), 0.0);
    const double supply = n % 3 == 0 ? total_claims * 2.0 : total_claims * fraction(rng);
    const double transacted = short_side(total_claims, supply);
    const auto alloc = ration(claims, transacted);
    ASSERT_EQ(alloc.size(), claims.size());
    for (std::size_t i = 0; i < claims.size(); ++i) {
      EXPECT_GE(alloc[i], 0.0);
      EXPECT_LE(alloc[i], claims[i]);
    }
    EXPECT_NEAR(std::accumulate(alloc.begin(), alloc.end(), 0.0), transacted, 1e-9);
  }
}

TEST(UpdatePrice, Examples) {
  EXPECT_EQ(update_price(1.0, 3.0, 3.0, 0.2), 1.0);
  EXPECT_NEAR(update_price(2.0, 2.0, 1.0, 0.1), 2.0 + 0.1 * std::numbers::pi, 1e-12);
  EXPECT_NEAR(update_price(2.0, 2.0, 1.0, 0.1), 2.3141593, 1e-7);

  const double sup = 1.0 + 0.1 * std::numbers::pi;
  const double near_sup = update_price(1.0, 1e6, 0.0, 0.1);
  EXPECT_LT(near_sup, sup);
  EXPECT_NEAR(near_sup, sup, 1e-6);
}

TEST(UpdatePrice, PropertiesOnRandomTuples) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> log_price(-6.0, 6.0);
  std::uniform_real_distribution<double> quantity(0.0, 50.0);
  std::uniform_real_distribution<double> vm(1e-4, 1.0 / std::numbers::pi - 1e-6);
  std::uniform_real_distribution<double> log_lambda(-3.0, 3.0);
  for (int n = 0; n < 10000; ++n) {
    const double p = std::pow(10.0, log_price(rng));
    const double d = quantity(rng);
    const double s = n % 10 == 0 ? d : quantity(rng);
    const double v = vm(rng);
    const auto upd = adjust_price(p, d, s, v);
    EXPECT_FALSE(upd.clamped);
    EXPECT_GT(upd.price, 0.0);
    if (d > s) EXPECT_GT(upd.price, p);
    if (d < s) EXPECT_LT(upd.price, p);
    if (d == s) EXPECT_EQ(upd.price, p);
    EXPECT_LE(std::abs(upd.price - p) / p, std::numbers::pi * v);
    const double lambda = std::pow(10.0, log_lambda(rng));
    EXPECT_LE(rel_diff(update_price(lambda * p, d, s, v), lambda * upd.price), 1e-12);
  }
}

TEST(UpdatePrice, FloorEngagesOnlyForLargeVarmax) {
  const auto upd = adjust_price(1.0, 0.0, 1e9, 0.9);
  EXPECT_TRUE(upd.clamped);
  EXPECT_EQ(upd.price, kPositiveFloor);
  EXPECT_FALSE(adjust_price(1.0, 0.0, 1e9, 0.3).clamped);
}

TEST(UpdateAllPrices, ClearingMarketsKeepPrices) {
  const PriceVector p{1.5, 0.5, 2.0, 3.0};
  const auto upd = update_all_prices(p, snapshots({1, 2, 3, 4}, {1, 2, 3, 4}), 0.2);
  EXPECT_EQ(upd.prices, p);
  EXPECT_EQ(upd.clamp_count, 0);
}

TEST(UpdateAllPrices, OnlyTheExcessDemandMarketMoves) {
  const PriceVector p{1.5, 0.5, 2.0, 3.0};
  const auto upd = update_all_prices(p, snapshots({1, 2, 5, 4}, {1, 2, 3, 4}), 0.2);
  EXPECT_EQ(upd.prices.p_c, p.p_c);
  EXPECT_EQ(upd.prices.p_nk, p.p_nk);
  EXPECT_GT(upd.prices.p_ok, p.p_ok);
  EXPECT_EQ(upd.prices.p_w, p.p_w);
}

TEST(UpdateAllPrices, ComponentwiseDecomposition) {
  const PriceVector p{1.5, 0.5, 2.0, 3.0};
  const std::array<double, 4> d{3.0, 0.1, 7.0, 2.0};
  const std::array<double, 4> s{1.0, 4.0, 6.5, 9.0};
  const auto upd = update_all_prices(p, snapshots(d, s), 0.15);
  EXPECT_EQ(upd.prices.p_c, update_price(p.p_c, d[0], s[0], 0.15));
  EXPECT_EQ(upd.prices.p_nk, update_price(p.p_nk, d[1], s[1], 0.15));
  EXPECT_EQ(upd.prices.p_ok, update_price(p.p_ok, d[2], s[2], 0.15));
  EXPECT_EQ(upd.prices.p_w, update_price(p.p_w, d[3], s[3], 0.15));
  EXPECT_TRUE(upd.prices.valid());
}

TEST(UpdateAllPrices, CountsClamps) {
  const auto upd = update_all_prices(PriceVector{}, snapshots({0, 0, 0, 5}, {1e9, 1e9, 0, 0}), 0.95);
  EXPECT_EQ(upd.clamp_count, 2);
  EXPECT_TRUE(upd.prices.valid());
}

TEST(UpdateAllPrices, RejectsMisorderedSnapshots) {
  auto snaps = snapshots({1, 1, 1, 1}, {1, 1, 1, 1});
  std::swap(snaps[0], snaps[3]);
  EXPECT_THROW((void)update_all_prices(PriceVector{}, snaps, 0.1), std::invalid_argument);
}
