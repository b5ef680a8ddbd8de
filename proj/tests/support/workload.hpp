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

#include "chain_driver.hpp"
#include "gridex/crypto/hash.hpp"

#include <random>

namespace gridex {
namespace testing {

/**
 * Random mixed traffic over a fixed cast: transfers, mints, auctions in both
 * settlement modes, bids, lot and bond transfers, redemptions and registry
 * updates, with a sprinkling of forged, replayed and out-of-range transactions.
 * Choices look at the current head state, so most transactions are plausible
 * and many still fail on later rules.
 */
class Workload
{
public:
  static constexpr std::size_t CAST = 8;

  explicit Workload(uint64_t seed, uint64_t balance = 1000)
    : rng_(seed)
  {
    for (std::size_t i = 0; i < CAST; ++i)
    {
      cast_.push_back(Key("cast/" + std::to_string(i)));
    }
    for (std::size_t i = 0; i < 3; ++i)
    {
      registry_.push_back(Key("registry/" + std::to_string(i)));
    }
    outsider_ = Key("outsider");

    std::vector<std::pair<crypto::KeyPair, uint64_t>> funded;
    for (std::size_t i = 0; i < CAST; ++i)
    {
      funded.emplace_back(cast_[i], balance);
    }
    config_                                  = ChainDriver::Config(funded);
    config_.params.default_auction_duration  = 4;
    config_.params.bond_maturity_delta       = 3;
    config_.balances[outsider_.address()]    = balance;
    // The last cast member starts unqualified so registry updates matter.
    config_.qualified.erase(cast_.back().address());
    std::vector<Address> members;
    for (auto const &key : registry_)
    {
      members.push_back(key.address());
    }
    config_.params.authority_account = crypto::MultisigAccount(members, 2);
  }

  ledger::GenesisConfig const &config() const
  {
    return config_;
  }

  /// Transactions for the next block of `driver`.
  std::vector<ledger::SignedTransaction> Batch(ChainDriver &driver, std::size_t count)
  {
    std::vector<ledger::SignedTransaction> txs;
    for (std::size_t i = 0; i < count; ++i)
    {
      txs.push_back(Next(driver));
    }
    return txs;
  }

  ledger::SignedTransaction Next(ChainDriver &driver)
  {
    auto const &state = driver.state();
    auto const &actor = cast_[Pick(cast_.size())];
    uint64_t    roll  = Pick(100);

    if (roll < 2)
    {
      // Forged: signed by someone else.
      ledger::Transaction tx{actor.address(), driver.NextNonce(actor.address()),
                             ledger::Transfer{outsider_.address(), 1}};
      return ledger::SignTransaction(std::move(tx), outsider_);
    }
    if (roll < 4)
    {
      // Replayed or skipped nonce.
      uint64_t const nonce = state.account(actor.address()).nonce;
      ledger::Transaction tx{actor.address(), Pick(2) == 0 && nonce > 0 ? nonce - 1 : nonce + 5,
                             ledger::Transfer{outsider_.address(), 1}};
      return ledger::SignTransaction(std::move(tx), actor);
    }

    roll = Pick(100);
    if (roll < 14)
    {
      uint64_t const balance = state.account(actor.address()).balance;
      uint64_t const amount  = Pick(3) == 0 ? balance + Pick(3) : Pick(balance / 2 + 2);
      return driver.Sign(actor, ledger::Transfer{Other(actor), amount});
    }
    if (roll < 28)
    {
      return driver.Sign(actor, ledger::MintLot{Pick(20) == 0 ? 0 : 1 + Pick(200)});
    }
    if (roll < 42)
    {
      ledger::OpenAuction open;
      open.lot             = OwnedLot(state, actor.address());
      open.base_price      = Pick(25) == 0 ? 0 : 1 + Pick(40);
      open.min_increment   = Pick(4);
      open.duration_blocks = Pick(6);
      open.mode            = Pick(2) == 0 ? contract::SettlementMode::Cash : contract::SettlementMode::BondAllowed;
      return driver.Sign(actor, open);
    }
    if (roll < 68)
    {
      auto const auction = SomeAuction(state);
      uint64_t   amount  = 1 + Pick(60);
      auto       it      = state.auctions.find(auction);
      if (it != state.auctions.end() && it->second.IsOpen() && Pick(4) != 0)
      {
        uint64_t const floor = it->second.best_bid ? it->second.best_bid->amount + it->second.min_increment
                                                   : it->second.base_price;
        amount = floor + Pick(8) - std::min<uint64_t>(floor, 2);
      }
      return driver.Sign(actor, ledger::PlaceBid{auction, amount});
    }
    if (roll < 76)
    {
      return driver.Sign(actor, ledger::TransferLot{OwnedLot(state, actor.address()), Other(actor)});
    }
    if (roll < 84)
    {
      return driver.Sign(actor, ledger::TransferBond{SomeBond(state, actor.address()), Other(actor)});
    }
    if (roll < 95)
    {
      return driver.Sign(actor, ledger::RedeemBond{SomeBond(state, actor.address())});
    }

    auto const          &authority = state.params.authority_account;
    std::vector<Address> add;
    std::vector<Address> remove;
    (Pick(2) == 0 ? add : remove).push_back(cast_[Pick(cast_.size())].address());
    std::vector<crypto::KeyPair> signers;
    std::size_t const            count = Pick(3) + 1;
    for (std::size_t i = 0; i < count; ++i)
    {
      signers.push_back(registry_[(i + Pick(3)) % registry_.size()]);
    }
    return driver.SignMulti(authority.address(), signers, ledger::MakeRegistryUpdate(add, remove));
  }

  std::vector<crypto::KeyPair> const &cast() const
  {
    return cast_;
  }

private:
  uint64_t Pick(uint64_t bound)
  {
    return bound == 0 ? 0 : rng_() % bound;
  }

  Address Other(crypto::KeyPair const &actor)
  {
    if (Pick(10) == 0)
    {
      return outsider_.address();
    }
    Address to = cast_[Pick(cast_.size())].address();
    return to == actor.address() ? cast_[0].address() : to;
  }

  LotId OwnedLot(ledger::ChainState const &state, Address const &owner)
  {
    std::vector<LotId> mine;
    std::vector<LotId> all;
    for (auto const &[id, lot] : state.lots)
    {
      all.push_back(id);
      if (lot.owner == owner && !lot.locked_in)
      {
        mine.push_back(id);
      }
    }
    if (!mine.empty() && Pick(6) != 0)
    {
      return mine[Pick(mine.size())];
    }
    if (!all.empty() && Pick(2) == 0)
    {
      return all[Pick(all.size())];
    }
    return LotId::From(crypto::Hash(AsBytes("no such lot " + std::to_string(Pick(1000)))));
  }

  AuctionId SomeAuction(ledger::ChainState const &state)
  {
    std::vector<AuctionId> open;
    std::vector<AuctionId> all;
    for (auto const &[id, auction] : state.auctions)
    {
      all.push_back(id);
      if (auction.IsOpen())
      {
        open.push_back(id);
      }
    }
    if (!open.empty() && Pick(8) != 0)
    {
      return open[Pick(open.size())];
    }
    if (!all.empty() && Pick(2) == 0)
    {
      return all[Pick(all.size())];
    }
    return AuctionId::From(crypto::Hash(AsBytes("no such auction")));
  }

  BondId SomeBond(ledger::ChainState const &state, Address const &holder)
  {
    std::vector<BondId> held;
    std::vector<BondId> all;
    for (auto const &[id, bond] : state.bonds)
    {
      all.push_back(id);
      if (bond.holder == holder)
      {
        held.push_back(id);
      }
    }
    if (!held.empty() && Pick(5) != 0)
    {
      return held[Pick(held.size())];
    }
    if (!all.empty() && Pick(3) != 0)
    {
      return all[Pick(all.size())];
    }
    return BondId::From(crypto::Hash(AsBytes("no such bond")));
  }

  std::mt19937_64              rng_;
  std::vector<crypto::KeyPair> cast_;
  std::vector<crypto::KeyPair> registry_;
  crypto::KeyPair              outsider_ = Key("outsider");
  ledger::GenesisConfig        config_;
};

}  // namespace testing
}  // namespace gridex
