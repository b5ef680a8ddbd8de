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

#include "gridex/ledger/chain.hpp"
#include "gridex/contract/engine.hpp"
#include "gridex/ledger/execution.hpp"

namespace gridex {
namespace ledger {
namespace {

std::string AtHeight(std::string const &what, uint64_t height)
{
  return what + " (height " + std::to_string(height) + ")";
}

VerifyResult Fail(std::string reason, uint64_t height)
{
  return {false, std::move(reason), height};
}

}  // namespace

void CheckBlock(ChainState const &parent, Block const &block)
{
  auto const &header   = block.header;
  auto const &schedule = parent.params.schedule;

  if (header.height != parent.height + 1)
  {
    throw InvalidBlock(AtHeight("height does not follow parent", header.height));
  }
  if (header.prev_hash != parent.head_hash)
  {
    throw InvalidBlock(AtHeight("prev_hash does not match parent", header.height));
  }
  auto const &authority = consensus::AuthorityFor(schedule, header.height);
  if (header.producer != authority.address)
  {
    throw InvalidBlock(AtHeight("producer is not scheduled for this height", header.height));
  }
  if (header.tick < parent.head_tick + schedule.block_interval_ticks)
  {
    throw InvalidBlock(AtHeight("block interval not respected", header.height));
  }
  if (header.body_hash != BodyHash(block.txs))
  {
    throw InvalidBlock(AtHeight("body hash mismatch", header.height));
  }
  if (!crypto::Verify(authority.public_key, EncodeBlockHeader(header), block.producer_signature))
  {
    throw InvalidBlock(AtHeight("bad producer signature", header.height));
  }
}

BlockResult ApplyBlock(ChainState const &parent, Block const &block)
{
  CheckBlock(parent, block);

  BlockResult result{parent, {}};
  auto       &state  = result.state;
  uint64_t    height = block.header.height;
  uint64_t    gas    = 0;

  state.height = height;
  result.receipts.reserve(block.txs.size());
  for (auto const &stx : block.txs)
  {
    result.receipts.push_back(ExecuteTransaction(state, stx, height, block.header.producer, gas));
  }

  auto finalized = contract::FinalizeDueAuctions(state, height);
  std::move(finalized.begin(), finalized.end(), std::back_inserter(result.receipts));

  if (gas > 0)
  {
    state.MutableAccount(block.header.producer).balance += gas;
  }

  state.head_hash = HeaderHash(block.header);
  state.head_tick = block.header.tick;
  return result;
}

Block MakeGenesisBlock(ChainState const &initial)
{
  ChainState committed = initial;
  committed.head_hash  = {};

  Block genesis;
  genesis.header.height    = 0;
  genesis.header.prev_hash = ComputeStateRoot(committed);
  genesis.header.producer  = consensus::ProducerFor(initial.params.schedule, 0);
  genesis.header.tick      = 0;
  genesis.header.body_hash = BodyHash({});
  return genesis;
}

ReplayResult ReplayChain(std::span<Block const> blocks, ChainState const &genesis)
{
  ReplayResult replay{genesis, {}};
  replay.receipts.emplace_back();
  for (std::size_t i = 1; i < blocks.size(); ++i)
  {
    auto applied = ApplyBlock(replay.state, blocks[i]);
    replay.state = std::move(applied.state);
    replay.receipts.push_back(std::move(applied.receipts));
  }
  return replay;
}

VerifyResult VerifyChain(std::span<Block const> blocks, ChainState const &genesis)
{
  if (blocks.empty())
  {
    return {false, "chain is empty", std::nullopt};
  }
  if (genesis.height != 0 || genesis.params.schedule.authorities.empty())
  {
    return {false, "genesis state is not at height 0", std::nullopt};
  }
  if (blocks[0] != MakeGenesisBlock(genesis) || HeaderHash(blocks[0].header) != genesis.head_hash)
  {
    return Fail("genesis block does not match genesis state", 0);
  }

  auto const &schedule = genesis.params.schedule;

  // Structure first: these checks are hash-only and cover every byte except
  // the producer signatures and the final header.
  for (std::size_t i = 1; i < blocks.size(); ++i)
  {
    auto const &header = blocks[i].header;
    if (header.height != i)
    {
      return Fail("heights are not consecutive from 0", i);
    }
    if (header.prev_hash != HeaderHash(blocks[i - 1].header))
    {
      return Fail("prev_hash does not link to previous header", i);
    }
    if (header.producer != consensus::ProducerFor(schedule, i))
    {
      return Fail("producer does not match schedule", i);
    }
    if (header.tick < blocks[i - 1].header.tick + schedule.block_interval_ticks)
    {
      return Fail("block interval not respected", i);
    }
    if (header.body_hash != BodyHash(blocks[i].txs))
    {
      return Fail("body hash mismatch", i);
    }
  }

  for (std::size_t i = 1; i < blocks.size(); ++i)
  {
    auto const &authority = consensus::AuthorityFor(schedule, i);
    if (!crypto::Verify(authority.public_key, EncodeBlockHeader(blocks[i].header),
                        blocks[i].producer_signature))
    {
      return Fail("bad producer signature", i);
    }
  }

  try
  {
    ReplayChain(blocks, genesis);
  }
  catch (InvalidBlock const &err)
  {
    return {false, std::string("replay failed: ") + err.what(), std::nullopt};
  }
  return {true, {}, std::nullopt};
}

}  // namespace ledger
}  // namespace gridex
