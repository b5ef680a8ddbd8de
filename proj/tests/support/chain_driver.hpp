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

#include "gridex/consensus/schedule.hpp"
#include "gridex/ledger/chain.hpp"
#include "gridex/ledger/execution.hpp"
#include "gridex/ledger/genesis.hpp"

#include <map>
#include <string>
#include <vector>

namespace gridex {
namespace testing {

inline crypto::KeyPair Key(std::string const &label)
{
  return crypto::KeyPairFromLabel("gridex/test/" + label);
}

/// Parameters pinned by tests unless a test overrides them.
inline contract::ProtocolParams PinnedParams(crypto::KeyPair const &producer)
{
  contract::ProtocolParams params;
  params.gas_fee                       = 10;
  params.default_min_increment         = 1;
  params.default_auction_duration      = 20;
  params.bond_maturity_delta           = 100;
  params.schedule.block_interval_ticks = 1;
  params.schedule.authorities.push_back({producer.address(), producer.public_key()});
  return params;
}

/**
 * Single-producer chain built block by block with ApplyBlock, keeping every
 * block and receipt. Nonces are handed out per sender and resynchronised with
 * the state after each block.
 */
class ChainDriver
{
public:
  explicit ChainDriver(ledger::GenesisConfig config, crypto::KeyPair producer = Key("producer"))
    : producer_(std::move(producer))
    , genesis_(ledger::BuildGenesis(config))
    , state_(genesis_.state)
  {
    blocks_.push_back(genesis_.block);
    receipts_.emplace_back();
  }

  /// Genesis with the pinned parameters, every listed key funded and qualified.
  static ledger::GenesisConfig Config(std::vector<std::pair<crypto::KeyPair, uint64_t>> const &funded,
                                      crypto::KeyPair const &producer = Key("producer"))
  {
    ledger::GenesisConfig config;
    config.params = PinnedParams(producer);
    for (auto const &[key, balance] : funded)
    {
      config.balances[key.address()] = balance;
      config.qualified.insert(key.address());
    }
    return config;
  }

  uint64_t NextNonce(Address const &sender)
  {
    auto it = pending_.find(sender);
    uint64_t const base = state_.account(sender).nonce;
    return it == pending_.end() ? base : std::max(base, it->second);
  }

  ledger::SignedTransaction Sign(crypto::KeyPair const &key, ledger::Payload payload)
  {
    ledger::Transaction tx{key.address(), NextNonce(key.address()), std::move(payload)};
    pending_[tx.sender] = tx.nonce + 1;
    return ledger::SignTransaction(std::move(tx), key);
  }

  ledger::SignedTransaction SignMulti(Address const &sender, std::vector<crypto::KeyPair> const &keys,
                                      ledger::Payload payload)
  {
    ledger::Transaction tx{sender, NextNonce(sender), std::move(payload)};
    pending_[tx.sender] = tx.nonce + 1;
    return ledger::SignTransaction(std::move(tx), std::span<crypto::KeyPair const>(keys));
  }

  ledger::Block Seal(std::vector<ledger::SignedTransaction> txs) const
  {
    ledger::BlockHeader header;
    header.height    = state_.height + 1;
    header.prev_hash = state_.head_hash;
    header.producer  = producer_.address();
    header.tick      = state_.head_tick + state_.params.schedule.block_interval_ticks;
    return ledger::SealBlock(header, std::move(txs), producer_);
  }

  /// Seals and applies a block; returns its receipts.
  std::vector<ledger::Receipt> const &Produce(std::vector<ledger::SignedTransaction> txs = {})
  {
    auto block  = Seal(std::move(txs));
    auto result = ledger::ApplyBlock(state_, block);
    state_      = std::move(result.state);
    blocks_.push_back(std::move(block));
    receipts_.push_back(std::move(result.receipts));
    pending_.clear();
    return receipts_.back();
  }

  std::vector<ledger::Receipt> const &Produce(ledger::SignedTransaction stx)
  {
    return Produce(std::vector<ledger::SignedTransaction>{std::move(stx)});
  }

  /// Empty blocks until the head reaches `height`.
  void AdvanceTo(uint64_t height)
  {
    while (state_.height < height)
    {
      Produce();
    }
  }

  ledger::ChainState const                     &state() const { return state_; }
  ledger::Genesis const                        &genesis() const { return genesis_; }
  std::vector<ledger::Block> const             &blocks() const { return blocks_; }
  std::vector<std::vector<ledger::Receipt>> const &receipts() const { return receipts_; }
  crypto::KeyPair const                        &producer() const { return producer_; }

  std::vector<ledger::Receipt> AllReceipts() const
  {
    std::vector<ledger::Receipt> out;
    for (auto const &batch : receipts_)
    {
      out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
  }

private:
  crypto::KeyPair                          producer_;
  ledger::Genesis                          genesis_;
  ledger::ChainState                       state_;
  std::vector<ledger::Block>               blocks_;
  std::vector<std::vector<ledger::Receipt>> receipts_;
  std::map<Address, uint64_t>              pending_;
};

}  // namespace testing
}  // namespace gridex
