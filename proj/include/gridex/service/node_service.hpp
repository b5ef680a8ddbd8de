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

#include "gridex/consensus/node.hpp"
#include "gridex/ledger/block_log.hpp"
#include "gridex/ledger/genesis.hpp"
#include "gridex/ledger/provenance.hpp"
#include "gridex/service/event_bus.hpp"

#include <chrono>
#include <condition_variable>
#include <deque>
#include <filesystem>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

namespace gridex {
namespace service {

struct ServiceOptions
{
  std::optional<crypto::KeyPair>       producer_key;
  std::optional<std::filesystem::path> log_path;
  std::chrono::milliseconds            tick_interval{250};
  bool                                 manual_ticks{false};  ///< no timer; call Tick()
};

struct AuctionActivity
{
  uint64_t      height{0};
  Digest32      tx_id;
  ledger::Event event;
};

/// Immutable view of the canonical chain at one head. Readers hold it as long
/// as they like; the writer publishes a fresh one per head change.
struct Snapshot
{
  uint64_t                                          height{0};
  Digest32                                          head_hash;
  Digest32                                          state_root;
  std::shared_ptr<ledger::ChainState const>         state;
  std::vector<std::shared_ptr<ledger::Block const>> blocks;    ///< index = height
  std::vector<std::vector<ledger::Receipt>>         receipts;  ///< index = height
  ledger::ProvenanceIndex                           provenance;
  std::map<AuctionId, std::vector<AuctionActivity>> auction_history;
};

enum class TxState
{
  Queued,
  Accepted,
  Rejected,
};

char const *ToString(TxState state);

struct TxRecord
{
  Digest32                            tx_id;
  TxState                             state{TxState::Queued};
  std::optional<ledger::RejectReason> reason;
  std::optional<uint64_t>             height;

  nlohmann::json ToJson() const;
};

struct SubmitResult
{
  TxRecord record;
  bool     duplicate{false};
};

/**
 * Live node: one consensus::Node driven by a logical tick clock. Every mutation
 * (submission, tick) runs as a command on a single writer thread; readers take
 * snapshots. New canonical blocks are appended to the block log and announced
 * on the event bus as receipt events followed by a head event.
 */
class NodeService
{
public:
  /// Loads and verifies an existing block log. Throws std::runtime_error when
  /// the log does not verify against the genesis.
  NodeService(ledger::GenesisConfig const &genesis, ServiceOptions options);
  ~NodeService();

  NodeService(NodeService const &)            = delete;
  NodeService &operator=(NodeService const &) = delete;

  /// Starts the tick timer unless ticks are manual.
  void Start();
  void Stop();

  std::shared_ptr<Snapshot const> snapshot() const;

  /**
   * Queues a transaction. Structural failures (signature, stale nonce) throw
   * ApiError. Re-submitting a known transaction enqueues nothing and reports
   * the original record.
   */
  SubmitResult            Submit(ledger::SignedTransaction const &stx);
  std::optional<TxRecord> FindTx(Digest32 const &tx_id) const;

  /// Next nonce for the sender, counting queued transactions.
  uint64_t NextNonce(Address const &sender);

  /// Advances the logical clock one tick and produces if scheduled.
  std::shared_ptr<ledger::Block const> Tick();

  uint64_t tick();

  EventBus &events()
  {
    return events_;
  }
  ledger::Genesis const &genesis() const
  {
    return genesis_;
  }

private:
  template <typename F>
  auto Execute(F &&fn) -> decltype(fn());

  void WriterLoop();
  void TimerLoop();
  void OnHeadChanged();
  void WriteLog(std::vector<consensus::BlockRecord const *> const &chain, std::size_t diverged);

  ledger::Genesis  genesis_;
  ServiceOptions   options_;
  consensus::Node  node_;
  EventBus         events_;
  uint64_t         tick_{0};

  // Writer-owned bookkeeping of what has been indexed, logged and announced.
  std::vector<Digest32>                              indexed_;
  std::optional<ledger::BlockLogWriter>              log_;
  ledger::ProvenanceIndex                            provenance_;
  std::map<AuctionId, std::vector<AuctionActivity>> history_;

  mutable std::mutex              snapshot_mutex_;
  std::shared_ptr<Snapshot const> snapshot_;

  mutable std::mutex           tx_mutex_;
  std::map<Digest32, TxRecord> tx_records_;

  std::mutex                        queue_mutex_;
  std::condition_variable           queue_ready_;
  std::deque<std::function<void()>> queue_;
  bool                              stopping_{false};
  std::thread                       writer_;

  std::mutex              timer_mutex_;
  std::condition_variable timer_wake_;
  bool                    timer_stop_{false};
  std::thread             timer_;
};

}  // namespace service
}  // namespace gridex
