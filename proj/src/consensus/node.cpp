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

#include "gridex/consensus/node.hpp"
#include "gridex/ledger/execution.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

namespace gridex {
namespace consensus {
namespace {

constexpr std::size_t MAX_DIAGNOSTICS = 128;

std::size_t RankOf(AuthoritySchedule const &schedule, Address const &producer)
{
  return ScheduleIndex(schedule, producer).value_or(std::numeric_limits<std::size_t>::max());
}

}  // namespace

ChainTip const &ForkChoice(AuthoritySchedule const &schedule, ChainTip const &a, ChainTip const &b)
{
  if (a.height != b.height)
  {
    return a.height > b.height ? a : b;
  }
  auto const rank_a = RankOf(schedule, a.producer);
  auto const rank_b = RankOf(schedule, b.producer);
  if (rank_a != rank_b)
  {
    return rank_a < rank_b ? a : b;
  }
  return b.hash < a.hash ? b : a;
}

Node::Node(std::string name, ledger::Genesis const &genesis, std::optional<crypto::KeyPair> authority_key)
  : name_(std::move(name))
  , key_(std::move(authority_key))
  , schedule_(genesis.state.params.schedule)
{
  BlockRecord record;
  record.block  = std::make_shared<ledger::Block const>(genesis.block);
  record.hash   = ledger::HeaderHash(genesis.block.header);
  record.state  = std::make_shared<ledger::ChainState const>(genesis.state);
  genesis_hash_ = record.hash;
  head_hash_    = record.hash;
  by_height_.emplace(0, record.hash);
  tree_.emplace(record.hash, std::move(record));
}

std::optional<Address> Node::authority_address() const
{
  if (!key_)
  {
    return std::nullopt;
  }
  return key_->address();
}

BlockRecord const &Node::head() const
{
  return tree_.at(head_hash_);
}

ledger::ChainState const &Node::head_state() const
{
  return *head().state;
}

ledger::Block const &Node::genesis_block() const
{
  return *tree_.at(genesis_hash_).block;
}

std::shared_ptr<ledger::Block const> Node::FindBlock(Digest32 const &hash) const
{
  auto it = tree_.find(hash);
  return it == tree_.end() ? nullptr : it->second.block;
}

std::vector<BlockRecord const *> Node::CanonicalChain() const
{
  std::vector<BlockRecord const *> chain;
  Digest32                         cursor = head_hash_;
  while (true)
  {
    auto const &record = tree_.at(cursor);
    chain.push_back(&record);
    if (record.block->header.height == 0)
    {
      break;
    }
    cursor = record.block->header.prev_hash;
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

bool Node::KnowsTransaction(Digest32 const &tx_id) const
{
  return mempool_.count(tx_id) != 0;
}

bool Node::OnReceiveTx(ledger::SignedTransaction const &stx, uint64_t tick)
{
  auto const tx_id = ledger::TxId(stx);
  if (mempool_.count(tx_id) != 0)
  {
    return false;
  }

  auto const &state = head_state();
  if (stx.tx.nonce < state.account(stx.tx.sender).nonce || ledger::CheckSignatures(state, stx))
  {
    return false;
  }

  mempool_.emplace(tx_id, MempoolEntry{stx, tx_id, tick});
  return true;
}

std::vector<MempoolEntry> Node::MempoolInOrder() const
{
  std::vector<MempoolEntry> entries;
  entries.reserve(mempool_.size());
  for (auto const &[id, entry] : mempool_)
  {
    entries.push_back(entry);
  }
  std::sort(entries.begin(), entries.end(), [](MempoolEntry const &a, MempoolEntry const &b) {
    return std::tie(a.arrival_tick, a.tx_id) < std::tie(b.arrival_tick, b.tx_id);
  });
  return entries;
}

uint64_t Node::NextNonce(Address const &sender) const
{
  uint64_t next = head_state().account(sender).nonce;
  for (auto const &[id, entry] : mempool_)
  {
    if (entry.stx.tx.sender == sender && entry.stx.tx.nonce >= next)
    {
      next = entry.stx.tx.nonce + 1;
    }
  }
  return next;
}

std::shared_ptr<ledger::Block const> Node::TryProduce(uint64_t tick)
{
  if (!key_)
  {
    return nullptr;
  }

  auto const &parent = head();
  uint64_t const height = parent.block->header.height + 1;
  if (ProducerFor(schedule_, height) != key_->address() ||
      tick < parent.block->header.tick + schedule_.block_interval_ticks)
  {
    return nullptr;
  }

  // Include every transaction whose signature and nonce are valid in sequence,
  // accepted or not; drop the ones that can never become valid. Transactions
  // ahead of their sender's nonce are retried while a pass still makes progress.
  ledger::ChainState                     working = *parent.state;
  uint64_t                               gas     = 0;
  std::vector<ledger::SignedTransaction> txs;
  std::vector<MempoolEntry>              pending = MempoolInOrder();
  bool                                   progress = true;
  while (progress && !pending.empty() && txs.size() < MAX_BLOCK_TXS)
  {
    progress = false;
    std::vector<MempoolEntry> deferred;
    for (auto const &entry : pending)
    {
      if (txs.size() >= MAX_BLOCK_TXS)
      {
        break;
      }
      auto const receipt = ledger::ExecuteTransaction(working, entry.stx, height, key_->address(), gas);
      auto const reason  = receipt.status.reason();
      if (reason == ledger::RejectReason::BadSignature || reason == ledger::RejectReason::BadMultisig)
      {
        mempool_.erase(entry.tx_id);
        continue;
      }
      if (reason == ledger::RejectReason::BadNonce)
      {
        if (entry.stx.tx.nonce < working.account(entry.stx.tx.sender).nonce)
        {
          mempool_.erase(entry.tx_id);
        }
        else
        {
          deferred.push_back(entry);
        }
        continue;
      }
      txs.push_back(entry.stx);
      progress = true;
    }
    pending = std::move(deferred);
  }

  ledger::BlockHeader header;
  header.height    = height;
  header.prev_hash = parent.hash;
  header.producer  = key_->address();
  header.tick      = tick;

  auto block  = std::make_shared<ledger::Block const>(ledger::SealBlock(header, std::move(txs), *key_));
  auto result = OnReceiveBlock(block);
  if (result.verdict != BlockVerdict::Attached)
  {
    Diagnose("own block rejected: " + result.reason);
    return nullptr;
  }
  return block;
}

ReceiveResult Node::OnReceiveBlock(std::shared_ptr<ledger::Block const> block)
{
  ReceiveResult out;
  auto const    hash = ledger::HeaderHash(block->header);

  auto known = tree_.find(hash);
  if (known != tree_.end())
  {
    // Same header but a different signature is a forgery, not a duplicate.
    if (known->second.block->producer_signature != block->producer_signature ||
        known->second.block->txs != block->txs)
    {
      out.verdict = BlockVerdict::Invalid;
      out.reason  = "conflicting copy of a known block";
      ++invalid_blocks_;
      return out;
    }
    out.verdict = BlockVerdict::Known;
    return out;
  }

  auto parent = tree_.find(block->header.prev_hash);
  if (parent == tree_.end())
  {
    if (block->header.height == 0)
    {
      out.verdict = BlockVerdict::Invalid;
      out.reason  = "foreign genesis block";
      ++invalid_blocks_;
      return out;
    }
    auto &waiting = orphans_[block->header.prev_hash];
    bool const buffered = std::any_of(waiting.begin(), waiting.end(), [&](auto const &b) {
      return ledger::HeaderHash(b->header) == hash;
    });
    if (!buffered && orphan_count_ < MAX_ORPHANS)
    {
      waiting.push_back(block);
      ++orphan_count_;
    }
    out.verdict        = BlockVerdict::Orphan;
    out.missing_parent = block->header.prev_hash;
    return out;
  }
  if (!parent->second.state)
  {
    out.verdict = BlockVerdict::Invalid;
    out.reason  = "parent state no longer retained";
    Diagnose(out.reason);
    return out;
  }

  try
  {
    Attach(block, ledger::ApplyBlock(*parent->second.state, *block), out);
  }
  catch (ledger::InvalidBlock const &err)
  {
    out.verdict = BlockVerdict::Invalid;
    out.reason  = err.what();
    ++invalid_blocks_;
    Diagnose(std::string("discarded block: ") + err.what());
    return out;
  }

  // Children that were waiting on this block can now be attached.
  std::vector<Digest32> ready{hash};
  while (!ready.empty())
  {
    Digest32 const parent_hash = ready.back();
    ready.pop_back();

    auto waiting = orphans_.find(parent_hash);
    if (waiting == orphans_.end())
    {
      continue;
    }
    auto children = std::move(waiting->second);
    orphans_.erase(waiting);
    orphan_count_ -= children.size();

    for (auto const &child : children)
    {
      auto const &parent_record = tree_.at(parent_hash);
      auto const  child_hash    = ledger::HeaderHash(child->header);
      if (tree_.count(child_hash) != 0 || !parent_record.state)
      {
        continue;
      }
      try
      {
        Attach(child, ledger::ApplyBlock(*parent_record.state, *child), out);
        ready.push_back(child_hash);
      }
      catch (ledger::InvalidBlock const &err)
      {
        ++invalid_blocks_;
        Diagnose(std::string("discarded buffered block: ") + err.what());
      }
    }
  }
  return out;
}

void Node::Attach(std::shared_ptr<ledger::Block const> block, ledger::BlockResult result, ReceiveResult &out)
{
  BlockRecord record;
  record.hash     = ledger::HeaderHash(block->header);
  record.block    = std::move(block);
  record.state    = std::make_shared<ledger::ChainState const>(std::move(result.state));
  record.receipts = std::move(result.receipts);

  auto const height = record.block->header.height;
  auto const hash   = record.hash;
  by_height_.emplace(height, hash);
  auto const &stored = tree_.emplace(hash, std::move(record)).first->second;

  out.verdict = BlockVerdict::Attached;
  UpdateHead(stored, out);
}

void Node::UpdateHead(BlockRecord const &candidate, ReceiveResult &out)
{
  auto const  current = head().tip();
  auto const  offered = candidate.tip();
  auto const &winner  = ForkChoice(schedule_, current, offered);
  if (winner.hash == current.hash)
  {
    return;
  }

  Digest32 const old_head = head_hash_;
  head_hash_              = winner.hash;
  out.head_changed        = true;
  RequeueAbandoned(old_head);
  PruneMempool();
  ReleaseOldStates();
}

void Node::RequeueAbandoned(Digest32 const &old_head)
{
  // Walk both branches back to their common ancestor.
  Digest32 abandoned = old_head;
  Digest32 adopted   = head_hash_;
  auto     height    = [this](Digest32 const &hash) { return tree_.at(hash).block->header.height; };
  auto     parent    = [this](Digest32 const &hash) { return tree_.at(hash).block->header.prev_hash; };

  std::vector<Digest32> dropped;
  while (height(adopted) > height(abandoned))
  {
    adopted = parent(adopted);
  }
  while (abandoned != adopted)
  {
    if (height(abandoned) >= height(adopted))
    {
      dropped.push_back(abandoned);
      abandoned = parent(abandoned);
    }
    else
    {
      adopted = parent(adopted);
    }
  }

  for (auto const &hash : dropped)
  {
    auto const &record = tree_.at(hash);
    for (auto const &stx : record.block->txs)
    {
      auto const tx_id = ledger::TxId(stx);
      mempool_.emplace(tx_id, MempoolEntry{stx, tx_id, record.block->header.tick});
    }
  }
}

void Node::PruneMempool()
{
  auto const &state = head_state();
  for (auto it = mempool_.begin(); it != mempool_.end();)
  {
    if (it->second.stx.tx.nonce < state.account(it->second.stx.tx.sender).nonce)
    {
      it = mempool_.erase(it);
    }
    else
    {
      ++it;
    }
  }
}

void Node::ReleaseOldStates()
{
  uint64_t const head_height = head().block->header.height;
  while (!by_height_.empty() && by_height_.begin()->first + STATE_RETENTION < head_height)
  {
    auto it = tree_.find(by_height_.begin()->second);
    if (it != tree_.end())
    {
      it->second.state.reset();
    }
    by_height_.erase(by_height_.begin());
  }
}

void Node::Diagnose(std::string message)
{
  if (diagnostics_.size() >= MAX_DIAGNOSTICS)
  {
    diagnostics_.erase(diagnostics_.begin());
  }
  diagnostics_.push_back(name_ + ": " + std::move(message));
}

}  // namespace consensus
}  // namespace gridex
