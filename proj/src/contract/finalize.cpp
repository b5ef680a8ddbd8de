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

#include "gridex/contract/engine.hpp"
#include "gridex/crypto/hash.hpp"

#include <limits>

namespace gridex {
namespace contract {

using ledger::Event;
using ledger::EventKind;

BondId BondIdFor(AuctionId const &auction)
{
  return BondId::From(crypto::HashConcat({auction.span(), AsBytes("bond")}));
}

void Settle(ledger::ChainState &state, Auction &auction, uint64_t height, std::vector<Event> &events)
{
  BestBid const bid  = *auction.best_bid;
  auto         &lot  = state.lots.at(auction.lot);

  if (auction.mode == SettlementMode::Cash)
  {
    state.MutableAccount(auction.seller).balance += bid.escrowed;
  }
  else
  {
    // The winner keeps the cash and owes the seller a bond of the same face value.
    state.MutableAccount(bid.bidder).balance += bid.escrowed;

    uint64_t const delta    = state.params.bond_maturity_delta;
    uint64_t const maturity = height + delta < height ? std::numeric_limits<uint64_t>::max() : height + delta;

    Bond bond;
    bond.id              = BondIdFor(auction.id);
    bond.auction         = auction.id;
    bond.face_value      = bid.amount;
    bond.issuer          = bid.bidder;
    bond.holder          = auction.seller;
    bond.maturity_height = maturity;
    state.bonds.emplace(bond.id, bond);

    events.push_back(
        Event{EventKind::BondMinted, bond.issuer, bond.holder, bond.face_value, auction.id, {}, bond.id});
  }

  auction.best_bid->escrowed = 0;
  auction.status             = AuctionStatus::Settled;
  lot.owner                  = bid.bidder;
  lot.locked_in.reset();

  events.push_back(
      Event{EventKind::AuctionSettled, auction.seller, bid.bidder, bid.amount, auction.id, auction.lot, {}});
}

std::vector<ledger::Receipt> FinalizeDueAuctions(ledger::ChainState &state, uint64_t height)
{
  std::vector<ledger::Receipt> receipts;

  // std::map iteration gives ascending auction id byte order.
  for (auto &[id, auction] : state.auctions)
  {
    if (!auction.IsOpen() || auction.deadline_height > height)
    {
      continue;
    }

    ledger::Receipt receipt;
    receipt.tx_id  = Digest32::From(id);
    receipt.height = height;
    receipt.origin = ledger::ReceiptOrigin::Finalization;

    if (auction.best_bid)
    {
      Settle(state, auction, height, receipt.events);
    }
    else
    {
      auction.status = AuctionStatus::Discarded;
      state.lots.at(auction.lot).locked_in.reset();
      receipt.events.push_back(
          Event{EventKind::AuctionDiscarded, auction.seller, {}, 0, auction.id, auction.lot, {}});
    }
    receipts.push_back(std::move(receipt));
  }
  return receipts;
}

}  // namespace contract
}  // namespace gridex
