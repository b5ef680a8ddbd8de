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
#include "gridex/ledger/block.hpp"
#include "gridex/ledger/chain.hpp"
#include "gridex/ledger/genesis.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>

namespace gridex {
namespace consensus {

struct ChainTip
{
  Digest32 hash;
  uint64_t height{0};
  Address  producer;

  friend bool operator==(ChainTip const &, ChainTip const &) = default;
};

/// Higher height wins; then the producer earlier in the schedule; then the lower hash.
ChainTip const &ForkChoice(AuthoritySchedule const &schedule, ChainTip const &a, ChainTip const &b);

struct BlockRecord
{
  std::shared_ptr<ledger::Block const> block;
  Digest32                             hash;
  /// Released once the block falls far enough behind the head.
  std::shared_ptr<ledger::ChainState const> state;
  std::vector<ledger::Receipt>              receipts;

  ChainTip tip() const
  {
    return {hash, block->header.height, block->header.producer};
  }
};

enum class BlockVerdict
{
  Attached,  ///< stored in the block tree (head may or may not have moved)
  Known,
  Orphan,    ///< parent unknown; buffered until it arrives
  Invalid,
};

struct ReceiveResult
{
  BlockVerdict            verdict{BlockVerdict::Known};
  std::optional<Digest32> missing_parent;
  std::string             reason;
  bool                    head_changed{false};
};

struct MempoolEntry
{
  ledger::SignedTransaction stx;
  Digest32                  tx_id;
  uint64_t                  arrival_tick{0};
};

/**
 * Replica state machine: a block tree rooted at genesis, a head selected by
 * ForkChoice, a mempool and, for authorities, block production. Transport is
 * the caller's job; every method is synchronous and deterministic.
 */
class Node
{
public:
  static constexpr std::size_t MAX_BLOCK_TXS       = 256;
  static constexpr std::size_t MAX_ORPHANS         = 512;
  static constexpr uint64_t    STATE_RETENTION     = 512;

  Node(std::string name, ledger::Genesis const &genesis, std::optional<crypto::KeyPair> authority_key = {});

  std::string const &name() const
  {
    return name_;
  }
  bool IsAuthority() const
  {
    return key_.has_value();
  }
  std::optional<Address> authority_address() const;

  /// Returns true when the transaction was new to this node.
  bool OnReceiveTx(ledger::SignedTransaction const &stx, uint64_t tick);

  ReceiveResult OnReceiveBlock(std::shared_ptr<ledger::Block const> block);

  /// Produces, applies and returns a block when this node is scheduled for the
  /// next height and the block interval has elapsed.
  std::shared_ptr<ledger::Block const> TryProduce(uint64_t tick);

  BlockRecord const        &head() const;
  ledger::ChainState const &head_state() const;
  ledger::Block const      &genesis_block() const;
  std::shared_ptr<ledger::Block const> FindBlock(Digest32 const &hash) const;

  /// Records from genesis to head.
  std::vector<BlockRecord const *> CanonicalChain() const;

  /// Next usable nonce for `sender`, counting transactions waiting in the mempool.
  uint64_t NextNonce(Address const &sender) const;

  std::vector<MempoolEntry> MempoolInOrder() const;
  std::size_t               mempool_size() const
  {
    return mempool_.size();
  }
  bool KnowsTransaction(Digest32 const &tx_id) const;

  std::vector<std::string> const &diagnostics() const
  {
    return diagnostics_;
  }
  uint64_t invalid_blocks() const
  {
    return invalid_blocks_;
  }

private:
  void Attach(std::shared_ptr<ledger::Block const> block, ledger::BlockResult result, ReceiveResult &out);
  void UpdateHead(BlockRecord const &candidate, ReceiveResult &out);
  void RequeueAbandoned(Digest32 const &old_head);
  void PruneMempool();
  void ReleaseOldStates();
  void Diagnose(std::string message);

  std::string                    name_;
  std::optional<crypto::KeyPair> key_;
  AuthoritySchedule              schedule_;

  std::map<Digest32, BlockRecord>                                    tree_;
  std::multimap<uint64_t, Digest32>                                  by_height_;
  std::map<Digest32, std::vector<std::shared_ptr<ledger::Block const>>> orphans_;
  std::size_t                                                        orphan_count_{0};
  Digest32                                                           genesis_hash_;
  Digest32                                                           head_hash_;

  std::map<Digest32, MempoolEntry> mempool_;

  std::vector<std::string> diagnostics_;
  uint64_t                 invalid_blocks_{0};
};

}  // namespace consensus
}  // namespace gridex
