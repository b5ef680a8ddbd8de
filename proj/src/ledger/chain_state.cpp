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

#include "gridex/ledger/chain_state.hpp"
#include "gridex/crypto/hash.hpp"

namespace gridex {
namespace ledger {
namespace {

using contract::Auction;
using contract::Bond;
using contract::EnergyLot;

template <typename T>
void EncodeOptionalId(Writer &out, std::optional<T> const &value)
{
  out.Tag(value ? 1 : 0);
  if (value)
  {
    out.Fixed(*value);
  }
}

template <typename T>
std::optional<T> DecodeOptionalId(Reader &in)
{
  if (in.Tag(1) == 0)
  {
    return std::nullopt;
  }
  return in.FixedValue<T>();
}

void Encode(Writer &out, contract::ProtocolParams const &params)
{
  out.U64(params.gas_fee);
  out.U64(params.default_min_increment);
  out.U64(params.default_auction_duration);
  out.U64(params.bond_maturity_delta);

  auto const &members = params.authority_account.members();
  out.Count(members.size());
  for (auto const &member : members)
  {
    out.Fixed(member);
  }
  out.U64(params.authority_account.threshold());

  out.Count(params.schedule.authorities.size());
  for (auto const &authority : params.schedule.authorities)
  {
    out.Fixed(authority.address);
    out.Fixed(authority.public_key);
  }
  out.U64(params.schedule.block_interval_ticks);
}

contract::ProtocolParams DecodeParams(Reader &in)
{
  contract::ProtocolParams params;
  params.gas_fee                  = in.U64();
  params.default_min_increment    = in.U64();
  params.default_auction_duration = in.U64();
  params.bond_maturity_delta      = in.U64();

  std::vector<Address> members(in.Count());
  for (auto &member : members)
  {
    member = in.FixedValue<Address>();
  }
  uint64_t const threshold = in.U64();
  if (!members.empty())
  {
    try
    {
      params.authority_account = crypto::MultisigAccount(std::move(members), threshold);
    }
    catch (std::invalid_argument const &err)
    {
      in.Fail(err.what());
    }
  }

  params.schedule.authorities.resize(in.Count());
  for (auto &authority : params.schedule.authorities)
  {
    authority.address    = in.FixedValue<Address>();
    authority.public_key = in.FixedValue<PublicKey>();
  }
  params.schedule.block_interval_ticks = in.U64();
  return params;
}

void Encode(Writer &out, Auction const &auction)
{
  out.Fixed(auction.id);
  out.Fixed(auction.seller);
  out.Fixed(auction.lot);
  out.U64(auction.base_price);
  out.U64(auction.min_increment);
  out.U64(auction.opened_height);
  out.U64(auction.deadline_height);
  out.Tag(static_cast<uint8_t>(auction.mode));
  out.Tag(auction.best_bid ? 1 : 0);
  if (auction.best_bid)
  {
    out.Fixed(auction.best_bid->bidder);
    out.U64(auction.best_bid->amount);
    out.U64(auction.best_bid->escrowed);
  }
  out.Tag(static_cast<uint8_t>(auction.status));
}

Auction DecodeAuction(Reader &in)
{
  Auction auction;
  auction.id              = in.FixedValue<AuctionId>();
  auction.seller          = in.FixedValue<Address>();
  auction.lot             = in.FixedValue<LotId>();
  auction.base_price      = in.U64();
  auction.min_increment   = in.U64();
  auction.opened_height   = in.U64();
  auction.deadline_height = in.U64();
  auction.mode            = static_cast<contract::SettlementMode>(in.Tag(1));
  if (in.Tag(1) == 1)
  {
    contract::BestBid bid;
    bid.bidder       = in.FixedValue<Address>();
    bid.amount       = in.U64();
    bid.escrowed     = in.U64();
    auction.best_bid = bid;
  }
  auction.status = static_cast<contract::AuctionStatus>(in.Tag(2));
  return auction;
}

void Encode(Writer &out, EnergyLot const &lot)
{
  out.Fixed(lot.id);
  out.U64(lot.kwh);
  out.Fixed(lot.origin);
  out.Fixed(lot.owner);
  EncodeOptionalId(out, lot.locked_in);
}

EnergyLot DecodeLot(Reader &in)
{
  EnergyLot lot;
  lot.id        = in.FixedValue<LotId>();
  lot.kwh       = in.U64();
  lot.origin    = in.FixedValue<Address>();
  lot.owner     = in.FixedValue<Address>();
  lot.locked_in = DecodeOptionalId<AuctionId>(in);
  return lot;
}

void Encode(Writer &out, Bond const &bond)
{
  out.Fixed(bond.id);
  out.Fixed(bond.auction);
  out.U64(bond.face_value);
  out.Fixed(bond.issuer);
  out.Fixed(bond.holder);
  out.U64(bond.maturity_height);
  out.Tag(static_cast<uint8_t>(bond.state));
}

Bond DecodeBond(Reader &in)
{
  Bond bond;
  bond.id              = in.FixedValue<BondId>();
  bond.auction         = in.FixedValue<AuctionId>();
  bond.face_value      = in.U64();
  bond.issuer          = in.FixedValue<Address>();
  bond.holder          = in.FixedValue<Address>();
  bond.maturity_height = in.U64();
  bond.state           = static_cast<contract::BondState>(in.Tag(2));
  return bond;
}

template <typename Key, typename Value, typename DecodeValue>
void DecodeSortedMap(Reader &in, std::map<Key, Value> &out, DecodeValue decode_value)
{
  uint32_t const count = in.Count();
  for (uint32_t i = 0; i < count; ++i)
  {
    auto [key, value] = decode_value(in);
    if (!out.empty() && !(out.rbegin()->first < key))
    {
      in.Fail("map keys are not strictly ascending");
    }
    out.emplace_hint(out.end(), key, std::move(value));
  }
}

}  // namespace

Account const &ChainState::account(Address const &address) const
{
  static Account const EMPTY{};
  auto const           it = accounts.find(address);
  return it == accounts.end() ? EMPTY : it->second;
}

Account &ChainState::MutableAccount(Address const &address)
{
  return accounts[address];
}

uint64_t ChainState::TotalBalances() const
{
  uint64_t total = 0;
  for (auto const &[address, acct] : accounts)
  {
    total += acct.balance;
  }
  return total;
}

uint64_t ChainState::TotalEscrow() const
{
  uint64_t total = 0;
  for (auto const &[id, auction] : auctions)
  {
    if (auction.IsOpen() && auction.best_bid)
    {
      total += auction.best_bid->escrowed;
    }
  }
  return total;
}

void Encode(Writer &out, ChainState const &state)
{
  out.U64(state.height);
  out.Fixed(state.head_hash);
  out.U64(state.head_tick);
  out.U64(state.supply);
  Encode(out, state.params);

  std::size_t live_accounts = 0;
  for (auto const &[address, acct] : state.accounts)
  {
    live_accounts += acct.IsEmpty() ? 0 : 1;
  }
  out.Count(live_accounts);
  for (auto const &[address, acct] : state.accounts)
  {
    if (acct.IsEmpty())
    {
      continue;
    }
    out.Fixed(address);
    out.U64(acct.balance);
    out.U64(acct.nonce);
  }

  out.Count(state.auctions.size());
  for (auto const &[id, auction] : state.auctions)
  {
    Encode(out, auction);
  }
  out.Count(state.lots.size());
  for (auto const &[id, lot] : state.lots)
  {
    Encode(out, lot);
  }
  out.Count(state.bonds.size());
  for (auto const &[id, bond] : state.bonds)
  {
    Encode(out, bond);
  }
  out.Count(state.qualified.size());
  for (auto const &address : state.qualified)
  {
    out.Fixed(address);
  }
}

ChainState DecodeChainState(Reader &in)
{
  ChainState state;
  state.height    = in.U64();
  state.head_hash = in.FixedValue<Digest32>();
  state.head_tick = in.U64();
  state.supply    = in.U64();
  state.params    = DecodeParams(in);

  DecodeSortedMap(in, state.accounts, [](Reader &r) {
    auto const address = r.FixedValue<Address>();
    Account    acct;
    acct.balance = r.U64();
    acct.nonce   = r.U64();
    return std::make_pair(address, acct);
  });
  DecodeSortedMap(in, state.auctions, [](Reader &r) {
    auto auction = DecodeAuction(r);
    return std::make_pair(auction.id, auction);
  });
  DecodeSortedMap(in, state.lots, [](Reader &r) {
    auto lot = DecodeLot(r);
    return std::make_pair(lot.id, lot);
  });
  DecodeSortedMap(in, state.bonds, [](Reader &r) {
    auto bond = DecodeBond(r);
    return std::make_pair(bond.id, bond);
  });

  uint32_t const count = in.Count();
  for (uint32_t i = 0; i < count; ++i)
  {
    auto const address = in.FixedValue<Address>();
    if (!state.qualified.empty() && !(*state.qualified.rbegin() < address))
    {
      in.Fail("qualified set is not strictly ascending");
    }
    state.qualified.insert(address);
  }
  return state;
}

Bytes EncodeChainState(ChainState const &state)
{
  Writer out;
  Encode(out, state);
  return std::move(out).Take();
}

Digest32 ComputeStateRoot(ChainState const &state)
{
  return crypto::Hash(EncodeChainState(state));
}

}  // namespace ledger
}  // namespace gridex
