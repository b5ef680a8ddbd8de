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

#include "gridex/market/matching.hpp"

#include <algorithm>
#include <tuple>

namespace gridex {
namespace market {

uint64_t MatchPlan::BuyerSurplus() const
{
  uint64_t total = 0;
  for (auto const &assignment : assignments)
  {
    total += assignment.intent.max_price - assignment.suggested_bid;
  }
  return total;
}

uint64_t NextValidBid(contract::Auction const &auction)
{
  if (!auction.IsOpen())
  {
    throw AuctionClosedError("auction " + auction.id.ToHex() + " is not open");
  }
  if (!auction.best_bid)
  {
    return auction.base_price;
  }
  return auction.best_bid->amount + auction.min_increment;
}

MatchPlan RecommendBids(std::span<contract::Auction const> auctions,
                        std::map<LotId, contract::EnergyLot> const &lots,
                        std::span<DemandIntent const> intents)
{
  struct Candidate
  {
    contract::Auction const *auction;
    uint64_t                 floor;
    uint64_t                 kwh;
    bool                     taken;
  };

  std::vector<Candidate> candidates;
  for (auto const &auction : auctions)
  {
    if (!auction.IsOpen())
    {
      continue;
    }
    auto lot = lots.find(auction.lot);
    if (lot == lots.end())
    {
      continue;
    }
    candidates.push_back({&auction, NextValidBid(auction), lot->second.kwh, false});
  }
  std::sort(candidates.begin(), candidates.end(), [](Candidate const &a, Candidate const &b) {
    return std::tie(a.floor, a.auction->id) < std::tie(b.floor, b.auction->id);
  });
  // Duplicate auction ids in the input must not be assigned twice.
  candidates.erase(std::unique(candidates.begin(), candidates.end(),
                               [](Candidate const &a, Candidate const &b) {
                                 return a.auction->id == b.auction->id;
                               }),
                   candidates.end());

  std::vector<DemandIntent> ordered;
  std::copy_if(intents.begin(), intents.end(), std::back_inserter(ordered),
               [](DemandIntent const &intent) { return intent.active; });
  std::sort(ordered.begin(), ordered.end(), [](DemandIntent const &a, DemandIntent const &b) {
    if (a.max_price != b.max_price)
    {
      return a.max_price > b.max_price;
    }
    return std::tie(a.buyer, a.kwh_needed) < std::tie(b.buyer, b.kwh_needed);
  });

  MatchPlan plan;
  for (auto const &intent : ordered)
  {
    for (auto &candidate : candidates)
    {
      if (candidate.taken || candidate.floor > intent.max_price)
      {
        continue;
      }
      if (candidate.kwh < intent.kwh_needed || candidate.auction->seller == intent.buyer)
      {
        continue;
      }
      candidate.taken = true;
      plan.assignments.push_back({intent, candidate.auction->id, candidate.floor});
      break;
    }
  }
  return plan;
}

}  // namespace market
}  // namespace gridex
