//------------------------------------------------------------------------------
//
//   Copyright 2026 The Gridex Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "../support/chain_driver.hpp"

#include "gridex/crypto/hash.hpp"
#include "gridex/market/matching.hpp"
#include "gridex/market/satisfaction.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

namespace gridex {
namespace market {
namespace {

using testing::ChainDriver;
using testing::Key;

contract::Auction MakeAuction(std::string const &tag, Address seller, uint64_t base, uint64_t increment = 1)
{
  contract::Auction auction;
  auction.id              = AuctionId::From(crypto::Hash(AsBytes("auction/" + tag)));
  auction.lot             = LotId::From(crypto::Hash(AsBytes("lot/" + tag)));
  auction.seller          = seller;
  auction.base_price      = base;
  auction.min_increment   = increment;
  auction.opened_height   = 1;
  auction.deadline_height = 10;
  return auction;
}

contract::EnergyLot LotFor(contract::Auction const &auction, uint64_t kwh)
{
  return {auction.lot, kwh, auction.seller, auction.seller, auction.id};
}

TEST(NextValidBidTest, Examples)
{
  auto auction = MakeAuction("a", Key("s").address(), 8);
  EXPECT_EQ(NextValidBid(auction), 8u);
  auction.best_bid = contract::BestBid{Key("b").address(), 12, 12};
  EXPECT_EQ(NextValidBid(auction), 13u);
  auction.status = contract::AuctionStatus::Settled;
  EXPECT_THROW(NextValidBid(auction), AuctionClosedError);
}

TEST(RecommendBidsTest, SingleMatchAtFloor)
{
  auto const auction = MakeAuction("a", Key("s").address(), 8);
  std::map<LotId, contract::EnergyLot> lots{{auction.lot, LotFor(auction, 100)}};
  std::vector<DemandIntent> intents{{Key("b").address(), 100, 10}};
  auto const plan = RecommendBids(std::vector{auction}, lots, intents);
  ASSERT_EQ(plan.assignments.size(), 1u);
  EXPECT_EQ(plan.assignments[0].auction, auction.id);
  EXPECT_EQ(plan.assignments[0].suggested_bid, 8u);
  EXPECT_EQ(plan.BuyerSurplus(), 2u);
}

TEST(RecommendBidsTest, PriceAndSizeBounds)
{
  auto const auction = MakeAuction("a", Key("s").address(), 8);
  std::map<LotId, contract::EnergyLot> lots{{auction.lot, LotFor(auction, 100)}};
  EXPECT_TRUE(RecommendBids(std::vector{auction}, lots, std::vector<DemandIntent>{{Key("b").address(), 100, 7}})
                  .assignments.empty());
  EXPECT_TRUE(RecommendBids(std::vector{auction}, lots, std::vector<DemandIntent>{{Key("b").address(), 101, 50}})
                  .assignments.empty());
  EXPECT_TRUE(RecommendBids(std::vector{auction}, lots, std::vector<DemandIntent>{{auction.seller, 10, 50}})
                  .assignments.empty());
  DemandIntent idle{Key("b").address(), 10, 50};
  idle.active = false;
  EXPECT_TRUE(RecommendBids(std::vector{auction}, lots, std::vector{idle}).assignments.empty());
}

TEST(RecommendBidsTest, LosersFlowToNextAuction)
{
  auto const seller = Key("s").address();
  auto const cheap  = MakeAuction("cheap", seller, 5);
  auto const dear   = MakeAuction("dear", seller, 9);
  std::map<LotId, contract::EnergyLot> lots{{cheap.lot, LotFor(cheap, 50)}, {dear.lot, LotFor(dear, 50)}};
  std::vector<DemandIntent> intents{{Key("low").address(), 50, 10}, {Key("high").address(), 50, 20}};
  auto const plan = RecommendBids(std::vector{dear, cheap}, lots, intents);
  ASSERT_EQ(plan.assignments.size(), 2u);
  EXPECT_EQ(plan.assignments[0].intent.buyer, Key("high").address());
  EXPECT_EQ(plan.assignments[0].auction, cheap.id);
  EXPECT_EQ(plan.assignments[1].auction, dear.id);
}

TEST(RecommendBidsTest, PermutationInvariant)
{
  std::mt19937_64 rng(3);
  for (int round = 0; round < 50; ++round)
  {
    std::vector<contract::Auction>       auctions;
    std::map<LotId, contract::EnergyLot> lots;
    for (int i = 0; i < 3; ++i)
    {
      auto auction = MakeAuction(std::to_string(round) + "/" + std::to_string(i),
                                 Key("s" + std::to_string(rng() % 3)).address(), 1 + rng() % 10);
      lots[auction.lot] = LotFor(auction, 10 + rng() % 50);
      auctions.push_back(auction);
    }
    std::vector<DemandIntent> intents;
    for (int i = 0; i < 5; ++i)
    {
      intents.push_back({Key("b" + std::to_string(rng() % 4)).address(), 10 + rng() % 50, 1 + rng() % 15});
    }
    auto const plan = RecommendBids(auctions, lots, intents);
    std::shuffle(auctions.begin(), auctions.end(), rng);
    std::shuffle(intents.begin(), intents.end(), rng);
    ASSERT_EQ(RecommendBids(auctions, lots, intents), plan);
  }
}

class SatisfactionTest : public ::testing::Test
{
protected:
  SatisfactionTest()
    : seller_(Key("seller"))
    , buyer_(Key("buyer"))
    , driver_(ChainDriver::Config({{seller_, 100}, {buyer_, 100}}))
  {}

  AuctionId Auction(uint64_t base, std::optional<uint64_t> bid)
  {
    auto mint = driver_.Sign(seller_, ledger::MintLot{20});
    driver_.Produce(mint);
    auto open = driver_.Sign(seller_, ledger::OpenAuction{LotId::From(ledger::TxId(mint)), base, 1, 2});
    driver_.Produce(open);
    auto const id = AuctionId::From(ledger::TxId(open));
    if (bid)
    {
      driver_.Produce(driver_.Sign(buyer_, ledger::PlaceBid{id, *bid}));
    }
    driver_.AdvanceTo(driver_.state().auctions.at(id).deadline_height);
    return id;
  }

  SatisfactionReport Report(uint64_t max_price)
  {
    std::vector<DemandIntent> intents{{buyer_.address(), 20, max_price}};
    return ComputeSatisfaction(driver_.AllReceipts(), intents, driver_.state().params);
  }

  crypto::KeyPair seller_;
  crypto::KeyPair buyer_;
  ChainDriver     driver_;
};

TEST_F(SatisfactionTest, BuyerSurplus)
{
  Auction(8, 8);
  auto const report = Report(10);
  ASSERT_EQ(report.buyers.size(), 1u);
  EXPECT_EQ(report.buyers[0].surplus, 2);
  EXPECT_EQ(report.total_buyer_surplus, 2);
}

TEST_F(SatisfactionTest, SellerSurplus)
{
  Auction(8, 12);
  auto const report = Report(20);
  ASSERT_EQ(report.sellers.size(), 1u);
  EXPECT_EQ(report.sellers[0].surplus, 4);
  EXPECT_EQ(report.settled, 1u);
  EXPECT_EQ(report.cash_paid_by_buyers, 12u);
  EXPECT_EQ(report.cash_received_by_sellers, 12u);
}

TEST_F(SatisfactionTest, DiscardCostsGas)
{
  Auction(8, std::nullopt);
  auto const report = Report(20);
  ASSERT_EQ(report.sellers.size(), 1u);
  EXPECT_EQ(report.sellers[0].surplus, -10);
  EXPECT_EQ(report.discarded, 1u);
  EXPECT_EQ(report.total_buyer_surplus, 0);
}

TEST_F(SatisfactionTest, CsvHasRowPerParticipant)
{
  Auction(8, 9);
  auto const csv  = ToCsv(Report(10));
  auto const rows = std::count(csv.begin(), csv.end(), '\n');
  EXPECT_EQ(rows, 3);  // header, buyer, seller
  EXPECT_NE(csv.find(buyer_.address().ToHex()), std::string::npos);
  EXPECT_EQ(ToJson(Report(10)).at("total_buyer_surplus"), 1);
}

}  // namespace
}  // namespace market
}  // namespace gridex
