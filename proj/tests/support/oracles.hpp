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

// Reference models written straight from the protocol rules, sharing no code
// with the engine beyond plain data types.

#include "gridex/ledger/receipt.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gridex {
namespace oracle {

struct Bid
{
  std::string bidder;
  uint64_t    amount{0};
  uint64_t    height{0};
};

struct BidOutcome
{
  bool        accepted{false};
  std::string reason;  ///< rejection code, empty when accepted
};

struct Refund
{
  std::string bidder;
  uint64_t    amount{0};
};

struct AuctionOutcome
{
  std::map<std::string, uint64_t> balances;  ///< after settlement
  std::vector<BidOutcome>    bids;
  std::vector<Refund>        refunds;
  std::optional<std::string> winner;
  uint64_t                   price{0};
  bool                       discarded{false};
};

/**
 * English auction replay: the bidder must be qualified and able to pay, the
 * auction must still be open (height below the deadline), sellers cannot bid,
 * the amount must reach the base price and beat the best bid by the increment.
 * An outbid leader is refunded at once. At the end of the deadline block the
 * leader wins at their bid and the money goes to the seller, or back to the
 * winner when the seller takes a bond. Without a leader the auction is discarded.
 */
inline AuctionOutcome ReplayAuction(std::string const &seller, uint64_t base_price, uint64_t increment,
                                    uint64_t deadline, bool bond, std::map<std::string, uint64_t> balances,
                                    std::map<std::string, bool> const &qualified, std::vector<Bid> const &bids)
{
  AuctionOutcome                                 out;
  std::optional<std::pair<std::string, uint64_t>> best;
  bool                                           closed = false;

  auto close = [&] {
    if (!closed && best)
    {
      balances[bond ? best->first : seller] += best->second;
    }
    closed = true;
  };

  for (auto const &bid : bids)
  {
    if (bid.height > deadline)
    {
      close();
    }
    BidOutcome outcome;
    auto const q = qualified.find(bid.bidder);
    if (q == qualified.end() || !q->second)
    {
      outcome.reason = "NOT_QUALIFIED";
    }
    else if (balances[bid.bidder] < bid.amount)
    {
      outcome.reason = "INSUFFICIENT_FUNDS";
    }
    else if (bid.height >= deadline)
    {
      outcome.reason = "AUCTION_CLOSED";
    }
    else if (bid.bidder == seller)
    {
      outcome.reason = "SELF_BID";
    }
    else if (bid.amount < base_price || (best && bid.amount < best->second + increment))
    {
      outcome.reason = "BID_TOO_LOW";
    }
    else
    {
      outcome.accepted = true;
      if (best)
      {
        balances[best->first] += best->second;
        out.refunds.push_back({best->first, best->second});
      }
      balances[bid.bidder] -= bid.amount;
      best = std::make_pair(bid.bidder, bid.amount);
    }
    out.bids.push_back(outcome);
  }

  close();
  out.balances = std::move(balances);
  if (best)
  {
    out.winner = best->first;
    out.price  = best->second;
  }
  else
  {
    out.discarded = true;
  }
  return out;
}

struct Offer
{
  uint64_t    floor{0};
  uint64_t    kwh{0};
  std::string seller;
};

struct Want
{
  uint64_t    kwh{0};
  uint64_t    max_price{0};
  std::string buyer;
};

/// Best total buyer surplus over every assignment of intents to distinct
/// auctions (or to none) where the lot covers the need and the floor is
/// affordable and the buyer is not the seller. Surplus of a pair is max_price - floor.
inline uint64_t BestSurplus(std::vector<Offer> const &offers, std::vector<Want> const &wants)
{
  std::vector<bool> used(offers.size(), false);
  uint64_t          best = 0;

  auto search = [&](auto &self, std::size_t intent, uint64_t total) -> void {
    if (intent == wants.size())
    {
      best = std::max(best, total);
      return;
    }
    self(self, intent + 1, total);
    for (std::size_t a = 0; a < offers.size(); ++a)
    {
      if (!used[a] && offers[a].kwh >= wants[intent].kwh && offers[a].floor <= wants[intent].max_price &&
          offers[a].seller != wants[intent].buyer)
      {
        used[a] = true;
        self(self, intent + 1, total + wants[intent].max_price - offers[a].floor);
        used[a] = false;
      }
    }
  };
  search(search, 0, 0);
  return best;
}

}  // namespace oracle
}  // namespace gridex
