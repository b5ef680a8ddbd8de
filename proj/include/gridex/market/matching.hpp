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

#pragma once

#include "gridex/contract/types.hpp"

#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace gridex {
namespace market {

class AuctionClosedError : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

/// Off-chain buy interest: a whole lot of at least kwh_needed at no more than max_price.
struct DemandIntent
{
  Address  buyer;
  uint64_t kwh_needed{0};
  uint64_t max_price{0};
  bool     active{true};

  friend bool operator==(DemandIntent const &, DemandIntent const &) = default;
};

struct Assignment
{
  DemandIntent intent;
  AuctionId    auction;
  uint64_t     suggested_bid{0};

  friend bool operator==(Assignment const &, Assignment const &) = default;
};

struct MatchPlan
{
  std::vector<Assignment> assignments;

  /// Sum of max_price - suggested_bid over all assignments.
  uint64_t BuyerSurplus() const;

  friend bool operator==(MatchPlan const &, MatchPlan const &) = default;
};

/// Smallest bid the auction would accept right now. Throws AuctionClosedError
/// unless the auction is open.
uint64_t NextValidBid(contract::Auction const &auction);

/**
 * Greedy price-priority matching. Auctions are taken cheapest floor first
 * (ties by id bytes), intents highest max_price first (ties by buyer bytes,
 * then smaller need). Each active intent takes the cheapest remaining auction
 * whose lot covers its need, whose floor it can pay and whose seller is not
 * the buyer. The suggested bid is the floor.
 */
MatchPlan RecommendBids(std::span<contract::Auction const> auctions,
                        std::map<LotId, contract::EnergyLot> const &lots,
                        std::span<DemandIntent const> intents);

}  // namespace market
}  // namespace gridex
