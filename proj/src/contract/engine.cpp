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

#include <limits>

namespace gridex {
namespace contract {

using ledger::Event;
using ledger::EventKind;
using ledger::RejectReason;

namespace {

uint64_t SaturatingAdd(uint64_t a, uint64_t b)
{
  uint64_t const sum = a + b;
  return sum < a ? std::numeric_limits<uint64_t>::max() : sum;
}

}  // namespace

char const *ToString(SettlementMode mode)
{
  return mode == SettlementMode::Cash ? "cash" : "bond_allowed";
}

char const *ToString(AuctionStatus status)
{
  switch (status)
  {
  case AuctionStatus::Open:
    return "open";
  case AuctionStatus::Settled:
    return "settled";
  case AuctionStatus::Discarded:
    return "discarded";
  }
  return "unknown";
}

char const *ToString(BondState state)
{
  switch (state)
  {
  case BondState::Outstanding:
    return "outstanding";
  case BondState::Redeemed:
    return "redeemed";
  case BondState::Defaulted:
    return "defaulted";
  }
  return "unknown";
}

ExecResult ExecTransfer(TxContext &ctx, ledger::Transfer const &payload)
{
  if (ctx.state.account(ctx.sender).balance < payload.amount)
  {
    return RejectReason::InsufficientFunds;
  }
  if (payload.amount == 0)
  {
    return RejectReason::BadParams;
  }

  ctx.state.MutableAccount(ctx.sender).balance -= payload.amount;
  ctx.state.MutableAccount(payload.to).balance += payload.amount;

  Event event{EventKind::Transferred, ctx.sender, payload.to, payload.amount, {}, {}, {}};
  ctx.events.push_back(event);
  return std::nullopt;
}

ExecResult ExecOpenAuction(TxContext &ctx, ledger::OpenAuction const &payload)
{
  auto &state = ctx.state;
  auto const &params = state.params;

  if (!state.IsQualified(ctx.sender))
  {
    return RejectReason::NotQualified;
  }

  auto lot_it = state.lots.find(payload.lot);
  if (lot_it == state.lots.end())
  {
    return RejectReason::UnknownLot;
  }
  if (lot_it->second.owner != ctx.sender)
  {
    return RejectReason::NotOwner;
  }
  if (lot_it->second.locked_in)
  {
    return RejectReason::LotLocked;
  }
  if (state.account(ctx.sender).balance < params.gas_fee)
  {
    return RejectReason::InsufficientFunds;
  }
  if (payload.base_price < 1)
  {
    return RejectReason::BadParams;
  }

  uint64_t const increment = payload.min_increment == 0 ? params.default_min_increment : payload.min_increment;
  uint64_t const duration  = payload.duration_blocks == 0 ? params.default_auction_duration : payload.duration_blocks;
  if (increment < 1 || duration < 1)
  {
    return RejectReason::BadParams;
  }

  Auction auction;
  auction.id              = AuctionId::From(ctx.tx_id);
  auction.seller          = ctx.sender;
  auction.lot             = payload.lot;
  auction.base_price      = payload.base_price;
  auction.min_increment   = increment;
  auction.opened_height   = ctx.height;
  auction.deadline_height = SaturatingAdd(ctx.height, duration);
  auction.mode            = payload.mode;

  if (params.gas_fee > 0)
  {
    state.MutableAccount(ctx.sender).balance -= params.gas_fee;
    ctx.gas_collected += params.gas_fee;
    ctx.events.push_back(
        Event{EventKind::GasCharged, ctx.sender, ctx.producer, params.gas_fee, auction.id, {}, {}});
  }

  lot_it->second.locked_in = auction.id;
  ctx.events.push_back(Event{EventKind::AuctionOpened, ctx.sender, {}, auction.base_price, auction.id,
                             auction.lot, {}});
  state.auctions.emplace(auction.id, auction);
  return std::nullopt;
}

ExecResult ExecPlaceBid(TxContext &ctx, ledger::PlaceBid const &payload)
{
  auto &state = ctx.state;

  if (!state.IsQualified(ctx.sender))
  {
    return RejectReason::NotQualified;
  }
  if (state.account(ctx.sender).balance < payload.amount)
  {
    return RejectReason::InsufficientFunds;
  }

  auto it = state.auctions.find(payload.auction);
  if (it == state.auctions.end())
  {
    return RejectReason::UnknownAuction;
  }
  Auction &auction = it->second;
  if (!auction.IsOpen() || ctx.height >= auction.deadline_height)
  {
    return RejectReason::AuctionClosed;
  }
  if (auction.seller == ctx.sender)
  {
    return RejectReason::SelfBid;
  }
  if (payload.amount < auction.base_price)
  {
    return RejectReason::BidTooLow;
  }
  if (auction.best_bid && payload.amount < SaturatingAdd(auction.best_bid->amount, auction.min_increment))
  {
    return RejectReason::BidTooLow;
  }

  if (auction.best_bid)
  {
    auto const previous = *auction.best_bid;
    state.MutableAccount(previous.bidder).balance += previous.escrowed;
    ctx.events.push_back(
        Event{EventKind::BidRefunded, {}, previous.bidder, previous.escrowed, auction.id, {}, {}});
  }

  state.MutableAccount(ctx.sender).balance -= payload.amount;
  auction.best_bid = BestBid{ctx.sender, payload.amount, payload.amount};
  ctx.events.push_back(
      Event{EventKind::BidAccepted, ctx.sender, {}, payload.amount, auction.id, {}, {}});
  return std::nullopt;
}

ExecResult ExecMintLot(TxContext &ctx, ledger::MintLot const &payload)
{
  if (!ctx.state.IsQualified(ctx.sender))
  {
    return RejectReason::NotQualified;
  }
  if (payload.kwh == 0)
  {
    return RejectReason::BadParams;
  }

  EnergyLot lot;
  lot.id     = LotId::From(ctx.tx_id);
  lot.kwh    = payload.kwh;
  lot.origin = ctx.sender;
  lot.owner  = ctx.sender;
  ctx.state.lots.emplace(lot.id, lot);

  ctx.events.push_back(Event{EventKind::LotMinted, {}, ctx.sender, payload.kwh, {}, lot.id, {}});
  return std::nullopt;
}

ExecResult ExecTransferLot(TxContext &ctx, ledger::TransferLot const &payload)
{
  auto it = ctx.state.lots.find(payload.lot);
  if (it == ctx.state.lots.end())
  {
    return RejectReason::UnknownLot;
  }
  if (it->second.owner != ctx.sender)
  {
    return RejectReason::NotOwner;
  }
  if (it->second.locked_in)
  {
    return RejectReason::LotLocked;
  }

  it->second.owner = payload.to;
  ctx.events.push_back(Event{EventKind::LotTransferred, ctx.sender, payload.to, 0, {}, payload.lot, {}});
  return std::nullopt;
}

ExecResult ExecTransferBond(TxContext &ctx, ledger::TransferBond const &payload)
{
  auto it = ctx.state.bonds.find(payload.bond);
  if (it == ctx.state.bonds.end())
  {
    return RejectReason::UnknownBond;
  }
  if (it->second.holder != ctx.sender)
  {
    return RejectReason::NotHolder;
  }
  if (it->second.state != BondState::Outstanding)
  {
    return RejectReason::BondClosed;
  }

  it->second.holder = payload.to;
  ctx.events.push_back(
      Event{EventKind::BondTransferred, ctx.sender, payload.to, 0, {}, {}, payload.bond});
  return std::nullopt;
}

ExecResult ExecRedeemBond(TxContext &ctx, ledger::RedeemBond const &payload)
{
  auto it = ctx.state.bonds.find(payload.bond);
  if (it == ctx.state.bonds.end())
  {
    return RejectReason::UnknownBond;
  }
  Bond &bond = it->second;
  if (bond.holder != ctx.sender)
  {
    return RejectReason::NotHolder;
  }
  if (bond.state != BondState::Outstanding)
  {
    return RejectReason::BondClosed;
  }
  if (ctx.height < bond.maturity_height)
  {
    return RejectReason::NotMature;
  }

  // No partial payment: either the full face value moves or the bond defaults.
  if (ctx.state.account(bond.issuer).balance >= bond.face_value)
  {
    ctx.state.MutableAccount(bond.issuer).balance -= bond.face_value;
    ctx.state.MutableAccount(bond.holder).balance += bond.face_value;
    bond.state = BondState::Redeemed;
    ctx.events.push_back(
        Event{EventKind::BondRedeemed, bond.issuer, bond.holder, bond.face_value, {}, {}, bond.id});
  }
  else
  {
    bond.state = BondState::Defaulted;
    ctx.events.push_back(
        Event{EventKind::BondDefaulted, bond.issuer, bond.holder, bond.face_value, {}, {}, bond.id});
  }
  return std::nullopt;
}

ExecResult ExecRegistryUpdate(TxContext &ctx, ledger::RegistryUpdate const &payload)
{
  for (auto const &address : payload.add)
  {
    if (ctx.state.qualified.insert(address).second)
    {
      ctx.events.push_back(Event{EventKind::QualificationAdded, {}, address, 0, {}, {}, {}});
    }
  }
  for (auto const &address : payload.remove)
  {
    if (ctx.state.qualified.erase(address) != 0)
    {
      ctx.events.push_back(Event{EventKind::QualificationRemoved, {}, address, 0, {}, {}, {}});
    }
  }
  return std::nullopt;
}

}  // namespace contract
}  // namespace gridex
