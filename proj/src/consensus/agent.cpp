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

#include "gridex/consensus/agent.hpp"

#include <algorithm>

namespace gridex {
namespace consensus {

using ledger::SignedTransaction;
using nlohmann::json;

namespace {

Address ResolveAddress(json const &value, KeyDirectory const &keys)
{
  auto const text = value.get<std::string>();
  auto       it   = keys.find(text);
  if (it != keys.end())
  {
    return it->second.address();
  }
  return Address::FromHex(text);
}

std::vector<Address> ResolveAddresses(json const &args, char const *field, KeyDirectory const &keys)
{
  std::vector<Address> out;
  for (auto const &entry : args.value(field, json::array()))
  {
    out.push_back(ResolveAddress(entry, keys));
  }
  return out;
}

crypto::KeyPair const &KeyOf(KeyDirectory const &keys, std::string const &name)
{
  auto it = keys.find(name);
  if (it == keys.end())
  {
    throw std::invalid_argument("unknown signer " + name);
  }
  return it->second;
}

std::optional<LotId> IdleLot(ledger::ChainState const &state, Address const &owner)
{
  for (auto const &[id, lot] : state.lots)
  {
    if (lot.owner == owner && lot.origin == owner && !lot.locked_in)
    {
      return id;
    }
  }
  return std::nullopt;
}

bool HasOpenAuction(ledger::ChainState const &state, Address const &seller)
{
  return std::any_of(state.auctions.begin(), state.auctions.end(), [&](auto const &entry) {
    return entry.second.IsOpen() && entry.second.seller == seller;
  });
}

/// Most recently opened auction still accepting bids, ties by id.
std::optional<AuctionId> LatestOpenAuction(ledger::ChainState const &state, uint64_t height)
{
  contract::Auction const *latest = nullptr;
  for (auto const &[id, auction] : state.auctions)
  {
    if (auction.IsOpen() && height < auction.deadline_height &&
        (latest == nullptr || auction.opened_height >= latest->opened_height))
    {
      latest = &auction;
    }
  }
  if (latest == nullptr)
  {
    return std::nullopt;
  }
  return latest->id;
}

contract::SettlementMode ParseMode(std::string const &mode)
{
  if (mode == "cash")
  {
    return contract::SettlementMode::Cash;
  }
  if (mode == "bond" || mode == "bond_allowed")
  {
    return contract::SettlementMode::BondAllowed;
  }
  throw std::invalid_argument("unknown settlement mode " + mode);
}

}  // namespace

bool IsServed(ledger::ChainState const &state, market::DemandIntent const &intent)
{
  return std::any_of(state.lots.begin(), state.lots.end(), [&](auto const &entry) {
    auto const &lot = entry.second;
    return lot.owner == intent.buyer && lot.origin != intent.buyer && lot.kwh >= intent.kwh_needed;
  });
}

Agent::Agent(NodeSpec spec, crypto::KeyPair key)
  : spec_(std::move(spec))
  , key_(std::move(key))
{}

std::optional<market::DemandIntent> Agent::intent() const
{
  if (!spec_.buyer)
  {
    return std::nullopt;
  }
  return market::DemandIntent{key_.address(), spec_.buyer->kwh_needed, spec_.buyer->max_price, true};
}

SignedTransaction Agent::Sign(Node const &node, ledger::Payload payload) const
{
  ledger::Transaction tx;
  tx.sender  = key_.address();
  tx.nonce   = node.NextNonce(tx.sender);
  tx.payload = std::move(payload);
  return ledger::SignTransaction(std::move(tx), key_);
}

std::optional<SignedTransaction> Agent::Act(Node const &node, SimRng &rng)
{
  bool const active = Chance(rng, spec_.activity);
  if (!active || spec_.strategy == Strategy::Idle)
  {
    return std::nullopt;
  }

  auto const &state = node.head_state();
  if (node.NextNonce(key_.address()) != state.account(key_.address()).nonce)
  {
    return std::nullopt;
  }

  switch (spec_.strategy)
  {
  case Strategy::Seller:
    return SellerStep(node, rng);
  case Strategy::Buyer:
    return BuyerStep(node);
  case Strategy::Idle:
    break;
  }
  return std::nullopt;
}

std::optional<SignedTransaction> Agent::SellerStep(Node const &node, SimRng &rng)
{
  auto const   &state  = node.head_state();
  Address const self   = key_.address();
  uint64_t const next  = state.height + 1;

  for (auto const &[id, bond] : state.bonds)
  {
    if (bond.holder == self && bond.state == contract::BondState::Outstanding && next >= bond.maturity_height)
    {
      return Sign(node, ledger::RedeemBond{id});
    }
  }

  if (HasOpenAuction(state, self))
  {
    return std::nullopt;
  }

  auto const lot = IdleLot(state, self);
  if (!lot)
  {
    uint64_t const kwh = UniformInt(rng, spec_.seller.kwh_min, spec_.seller.kwh_max);
    return Sign(node, ledger::MintLot{kwh});
  }

  ledger::OpenAuction open;
  open.lot             = *lot;
  open.base_price      = UniformInt(rng, spec_.seller.base_price_min, spec_.seller.base_price_max);
  open.duration_blocks = spec_.seller.duration_blocks;
  open.mode            = spec_.seller.mode;
  return Sign(node, open);
}

std::optional<SignedTransaction> Agent::BuyerStep(Node const &node)
{
  auto const want = intent();
  if (!want)
  {
    return std::nullopt;
  }

  auto const    &state = node.head_state();
  Address const  self  = key_.address();
  uint64_t const next  = state.height + 1;
  if (IsServed(state, *want))
  {
    return std::nullopt;
  }

  std::vector<contract::Auction> biddable;
  for (auto const &[id, auction] : state.auctions)
  {
    if (!auction.IsOpen() || next >= auction.deadline_height)
    {
      continue;
    }
    if (auction.best_bid && auction.best_bid->bidder == self)
    {
      return std::nullopt;
    }
    biddable.push_back(auction);
  }

  auto const plan = market::RecommendBids(biddable, state.lots, std::span(&*want, 1));
  if (plan.assignments.empty())
  {
    return std::nullopt;
  }
  auto const &pick = plan.assignments.front();
  return Sign(node, ledger::PlaceBid{pick.auction, pick.suggested_bid});
}

std::vector<SignedTransaction> Agent::RunScript(ScriptAction const &action, Node const &node,
                                                KeyDirectory const &keys)
{
  auto const   &args  = action.args;
  auto const   &state = node.head_state();
  Address const self  = key_.address();

  if (action.action == "intent")
  {
    BuyerProfile buyer;
    buyer.kwh_needed = args.at("kwh").get<uint64_t>();
    buyer.max_price  = args.at("max_price").get<uint64_t>();
    spec_.buyer      = buyer;
    return {};
  }
  if (action.action == "strategy")
  {
    auto const name = args.at("strategy").get<std::string>();
    spec_.strategy  = name == "seller" ? Strategy::Seller : name == "buyer" ? Strategy::Buyer : Strategy::Idle;
    return {};
  }
  if (action.action == "transfer")
  {
    return {Sign(node, ledger::Transfer{ResolveAddress(args.at("to"), keys), args.at("amount").get<uint64_t>()})};
  }
  if (action.action == "mint_lot")
  {
    return {Sign(node, ledger::MintLot{args.at("kwh").get<uint64_t>()})};
  }
  if (action.action == "open_auction")
  {
    ledger::OpenAuction open;
    auto const lot_arg = args.value("lot", std::string("own"));
    if (lot_arg == "own")
    {
      auto const lot = IdleLot(state, self);
      if (!lot)
      {
        return {};
      }
      open.lot = *lot;
    }
    else
    {
      open.lot = LotId::FromHex(lot_arg);
    }
    open.base_price      = args.at("base_price").get<uint64_t>();
    open.min_increment   = args.value("min_increment", uint64_t{0});
    open.duration_blocks = args.value("duration", uint64_t{0});
    open.mode            = ParseMode(args.value("mode", std::string("cash")));
    return {Sign(node, open)};
  }
  if (action.action == "bid")
  {
    auto const auction_arg = args.value("auction", std::string("latest"));
    AuctionId  auction;
    if (auction_arg == "latest")
    {
      auto const latest = LatestOpenAuction(state, state.height + 1);
      if (!latest)
      {
        return {};
      }
      auction = *latest;
    }
    else
    {
      auction = AuctionId::FromHex(auction_arg);
    }
    uint64_t amount = 0;
    if (args.contains("amount") && args.at("amount").is_number_unsigned())
    {
      amount = args.at("amount").get<uint64_t>();
    }
    else
    {
      auto it = state.auctions.find(auction);
      if (it == state.auctions.end() || !it->second.IsOpen())
      {
        return {};
      }
      amount = market::NextValidBid(it->second);
    }
    return {Sign(node, ledger::PlaceBid{auction, amount})};
  }
  if (action.action == "transfer_lot")
  {
    auto const lot_arg = args.value("lot", std::string("own"));
    LotId      lot;
    if (lot_arg == "own")
    {
      auto const idle = IdleLot(state, self);
      if (!idle)
      {
        return {};
      }
      lot = *idle;
    }
    else
    {
      lot = LotId::FromHex(lot_arg);
    }
    return {Sign(node, ledger::TransferLot{lot, ResolveAddress(args.at("to"), keys)})};
  }
  if (action.action == "transfer_bond")
  {
    auto const to = ResolveAddress(args.at("to"), keys);
    if (args.contains("bond"))
    {
      return {Sign(node, ledger::TransferBond{BondId::FromHex(args.at("bond").get<std::string>()), to})};
    }
    for (auto const &[id, bond] : state.bonds)
    {
      if (bond.holder == self && bond.state == contract::BondState::Outstanding)
      {
        return {Sign(node, ledger::TransferBond{id, to})};
      }
    }
    return {};
  }
  if (action.action == "redeem_bonds")
  {
    // Consecutive nonces so several redemptions can share one block.
    std::vector<SignedTransaction> out;
    uint64_t                       nonce = node.NextNonce(self);
    for (auto const &[id, bond] : state.bonds)
    {
      if (bond.holder == self && bond.state == contract::BondState::Outstanding)
      {
        ledger::Transaction tx{self, nonce++, ledger::RedeemBond{id}};
        out.push_back(ledger::SignTransaction(std::move(tx), key_));
      }
    }
    return out;
  }
  if (action.action == "registry_update")
  {
    auto const &authority = state.params.authority_account;
    std::vector<crypto::KeyPair> signers;
    for (auto const &name : args.at("signers"))
    {
      signers.push_back(KeyOf(keys, name.get<std::string>()));
    }
    ledger::Transaction tx;
    tx.sender  = authority.address();
    tx.nonce   = node.NextNonce(tx.sender);
    tx.payload = ledger::MakeRegistryUpdate(ResolveAddresses(args, "add", keys),
                                            ResolveAddresses(args, "remove", keys));
    return {ledger::SignTransaction(std::move(tx), signers)};
  }
  throw std::invalid_argument("unknown script action " + action.action);
}

}  // namespace consensus
}  // namespace gridex
