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

#include "gridex/ledger/block.hpp"
#include "gridex/ledger/chain_state.hpp"
#include "gridex/ledger/receipt.hpp"

#include <stdexcept>
#include <string>

namespace gridex {
namespace ledger {

class InvalidBlock : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct BlockResult
{
  ChainState           state;
  std::vector<Receipt> receipts;
};

/**
 * Linkage, schedule, tick spacing, body hash and producer signature of `block`
 * as a child of the head described by `parent`. Throws InvalidBlock.
 */
void CheckBlock(ChainState const &parent, Block const &block);

/**
 * Applies a block on top of `parent`: transactions in order, then auction
 * finalization at the block height, then the block's gas is credited to the
 * producer. Throws InvalidBlock if CheckBlock fails.
 */
BlockResult ApplyBlock(ChainState const &parent, Block const &block);

/// Height-0 block for an initial state. It carries no transactions and an
/// all-zero signature; prev_hash commits to the initial state root (computed
/// with head_hash cleared), so its bytes are fully determined by the genesis.
Block MakeGenesisBlock(ChainState const &initial);

struct VerifyResult
{
  bool                    ok{false};
  std::string             reason;
  std::optional<uint64_t> height;

  explicit operator bool() const
  {
    return ok;
  }
};

/**
 * Full verification of a chain starting at the genesis block. Cheap structural
 * checks (heights, hash links, body hashes, schedule) run over the whole chain
 * before signatures and replay, so most tampering is rejected without replay.
 */
VerifyResult VerifyChain(std::span<Block const> blocks, ChainState const &genesis);

struct ReplayResult
{
  ChainState                        state;
  std::vector<std::vector<Receipt>> receipts;
};

/// Applies blocks[1..] on top of genesis. Throws InvalidBlock.
ReplayResult ReplayChain(std::span<Block const> blocks, ChainState const &genesis);

}  // namespace ledger
}  // namespace gridex
