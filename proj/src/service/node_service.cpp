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

#include "gridex/service/node_service.hpp"
#include "gridex/ledger/execution.hpp"
#include "gridex/ledger/json.hpp"
#include "gridex/service/api_error.hpp"

#include <fstream>

namespace gridex {
namespace service {

char const *ToString(TxState state)
{
  switch (state)
  {
  case TxState::Queued:
    return "queued";
  case TxState::Accepted:
    return "accepted";
  case TxState::Rejected:
    return "rejected";
  }
  return "queued";
}

nlohmann::json TxRecord::ToJson() const
{
  nlohmann::json doc{{"tx_id", tx_id.ToHex()}, {"status", ToString(state)}};
  doc["reason"] = reason ? nlohmann::json(ledger::ReasonCode(*reason)) : nlohmann::json(nullptr);
  doc["height"] = height ? nlohmann::json(*height) : nlohmann::json(nullptr);
  return doc;
}

namespace {

std::optional<crypto::KeyPair> ProducerKey(ServiceOptions const &options)
{
  return options.producer_key;
}

}  // namespace

NodeService::NodeService(ledger::GenesisConfig const &genesis, ServiceOptions options)
  : genesis_(ledger::BuildGenesis(genesis))
  , options_(std::move(options))
  , node_("service", genesis_, ProducerKey(options_))
{
  indexed_.push_back(ledger::HeaderHash(genesis_.block.header));

  if (options_.log_path)
  {
    if (std::filesystem::exists(*options_.log_path) && std::filesystem::file_size(*options_.log_path) > 0)
    {
      auto loaded = ledger::LoadChainFromLog(*options_.log_path);
      if (loaded.blocks.empty() || loaded.blocks.front() != genesis_.block)
      {
        throw std::runtime_error("block log does not start with this genesis");
      }
      auto const verdict = ledger::VerifyChain(loaded.blocks, genesis_.state);
      if (!verdict)
      {
        throw std::runtime_error("block log failed verification: " + verdict.reason);
      }
      for (std::size_t i = 1; i < loaded.blocks.size(); ++i)
      {
        node_.OnReceiveBlock(std::make_shared<ledger::Block const>(std::move(loaded.blocks[i])));
      }
      tick_ = node_.head().block->header.tick;
      for (auto const *record : node_.CanonicalChain())
      {
        if (record->block->header.height > 0)
        {
          indexed_.push_back(record->hash);
        }
      }
    }
    log_.emplace(*options_.log_path);
    if (indexed_.size() == 1 && std::filesystem::file_size(*options_.log_path) <= ledger::BLOCK_LOG_MAGIC.size())
    {
      log_->Append(genesis_.block);
    }
  }

  // Indexes for whatever was recovered from the log; nothing is announced.
  auto snapshot   = std::make_shared<Snapshot>();
  auto const chain = node_.CanonicalChain();
  for (auto const *record : chain)
  {
    provenance_.Add(record->receipts);
    for (auto const &receipt : record->receipts)
    {
      for (auto const &event : receipt.events)
      {
        if (event.auction)
        {
          history_[*event.auction].push_back({receipt.height, receipt.tx_id, event});
        }
      }
    }
    snapshot->blocks.push_back(record->block);
    snapshot->receipts.push_back(record->receipts);
  }
  snapshot->height          = node_.head().block->header.height;
  snapshot->head_hash       = node_.head().hash;
  snapshot->state           = node_.head().state;
  snapshot->state_root      = ledger::ComputeStateRoot(*snapshot->state);
  snapshot->provenance      = provenance_;
  snapshot->auction_history = history_;
  snapshot_                 = std::move(snapshot);

  writer_ = std::thread([this] { WriterLoop(); });
}

NodeService::~NodeService()
{
  Stop();
  {
    std::lock_guard lock(queue_mutex_);
    stopping_ = true;
  }
  queue_ready_.notify_all();
  if (writer_.joinable())
  {
    writer_.join();
  }
  events_.Close();
}

void NodeService::Start()
{
  if (options_.manual_ticks || timer_.joinable())
  {
    return;
  }
  {
    std::lock_guard lock(timer_mutex_);
    timer_stop_ = false;
  }
  timer_ = std::thread([this] { TimerLoop(); });
}

void NodeService::Stop()
{
  {
    std::lock_guard lock(timer_mutex_);
    timer_stop_ = true;
  }
  timer_wake_.notify_all();
  if (timer_.joinable())
  {
    timer_.join();
  }
}

void NodeService::TimerLoop()
{
  std::unique_lock lock(timer_mutex_);
  while (!timer_wake_.wait_for(lock, options_.tick_interval, [this] { return timer_stop_; }))
  {
    lock.unlock();
    Tick();
    lock.lock();
  }
}

void NodeService::WriterLoop()
{
  while (true)
  {
    std::function<void()> command;
    {
      std::unique_lock lock(queue_mutex_);
      queue_ready_.wait(lock, [this] { return stopping_ || !queue_.empty(); });
      if (queue_.empty())
      {
        return;
      }
      command = std::move(queue_.front());
      queue_.pop_front();
    }
    command();
  }
}

template <typename F>
auto NodeService::Execute(F &&fn) -> decltype(fn())
{
  using Result = decltype(fn());
  auto task    = std::make_shared<std::packaged_task<Result()>>(std::forward<F>(fn));
  auto future  = task->get_future();
  {
    std::lock_guard lock(queue_mutex_);
    if (stopping_)
    {
      throw ApiError::Internal("node service is shutting down");
    }
    queue_.emplace_back([task] { (*task)(); });
  }
  queue_ready_.notify_one();
  return future.get();
}

std::shared_ptr<Snapshot const> NodeService::snapshot() const
{
  std::lock_guard lock(snapshot_mutex_);
  return snapshot_;
}

std::optional<TxRecord> NodeService::FindTx(Digest32 const &tx_id) const
{
  std::lock_guard lock(tx_mutex_);
  auto            it = tx_records_.find(tx_id);
  if (it == tx_records_.end())
  {
    return std::nullopt;
  }
  return it->second;
}

SubmitResult NodeService::Submit(ledger::SignedTransaction const &stx)
{
  return Execute([&]() -> SubmitResult {
    auto const tx_id = ledger::TxId(stx);
    if (auto known = FindTx(tx_id))
    {
      return {*known, true};
    }

    auto const &state = node_.head_state();
    if (auto reason = ledger::CheckSignatures(state, stx))
    {
      throw ApiError::Rejected(*reason, "transaction signature does not verify");
    }
    uint64_t const expected = state.account(stx.tx.sender).nonce;
    if (stx.tx.nonce < expected)
    {
      throw ApiError::Rejected(ledger::RejectReason::BadNonce,
                               "nonce " + std::to_string(stx.tx.nonce) + " already used; next is " +
                                   std::to_string(expected));
    }

    node_.OnReceiveTx(stx, tick_);
    TxRecord record{tx_id, TxState::Queued, {}, {}};
    {
      std::lock_guard lock(tx_mutex_);
      tx_records_.emplace(tx_id, record);
    }
    return {record, false};
  });
}

uint64_t NodeService::NextNonce(Address const &sender)
{
  return Execute([&] { return node_.NextNonce(sender); });
}

uint64_t NodeService::tick()
{
  return Execute([&] { return tick_; });
}

std::shared_ptr<ledger::Block const> NodeService::Tick()
{
  return Execute([&]() -> std::shared_ptr<ledger::Block const> {
    ++tick_;
    auto block = node_.TryProduce(tick_);
    if (block)
    {
      OnHeadChanged();
    }
    return block;
  });
}

void NodeService::WriteLog(std::vector<consensus::BlockRecord const *> const &chain, std::size_t diverged)
{
  if (!log_)
  {
    return;
  }
  if (diverged < indexed_.size())
  {
    // The logged suffix was abandoned; rewrite the image in one step.
    std::vector<ledger::Block> blocks;
    for (auto const *record : chain)
    {
      blocks.push_back(*record->block);
    }
    log_.reset();
    auto const bytes   = ledger::SerializeBlockLog(blocks);
    auto const staging = options_.log_path->string() + ".tmp";
    {
      std::ofstream out(staging, std::ios::binary | std::ios::trunc);
      out.write(reinterpret_cast<char const *>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    }
    std::filesystem::rename(staging, *options_.log_path);
    log_.emplace(*options_.log_path);
    return;
  }
  for (std::size_t i = diverged; i < chain.size(); ++i)
  {
    log_->Append(*chain[i]->block);
  }
}

void NodeService::OnHeadChanged()
{
  auto const chain = node_.CanonicalChain();

  std::size_t diverged = 0;
  while (diverged < chain.size() && diverged < indexed_.size() && chain[diverged]->hash == indexed_[diverged])
  {
    ++diverged;
  }
  if (diverged == chain.size() && diverged == indexed_.size())
  {
    return;
  }

  WriteLog(chain, diverged);

  if (diverged < indexed_.size())
  {
    provenance_ = {};
    history_.clear();
    for (std::size_t i = 0; i < diverged; ++i)
    {
      provenance_.Add(chain[i]->receipts);
    }
    for (std::size_t i = 0; i < diverged; ++i)
    {
      for (auto const &receipt : chain[i]->receipts)
      {
        for (auto const &event : receipt.events)
        {
          if (event.auction)
          {
            history_[*event.auction].push_back({receipt.height, receipt.tx_id, event});
          }
        }
      }
    }
  }
  indexed_.resize(diverged);

  for (std::size_t i = diverged; i < chain.size(); ++i)
  {
    auto const &record = *chain[i];
    uint64_t const height = record.block->header.height;
    provenance_.Add(record.receipts);
    for (auto const &receipt : record.receipts)
    {
      for (auto const &event : receipt.events)
      {
        if (event.auction)
        {
          history_[*event.auction].push_back({receipt.height, receipt.tx_id, event});
        }
      }
      if (receipt.origin == ledger::ReceiptOrigin::Transaction)
      {
        std::lock_guard lock(tx_mutex_);
        auto            it = tx_records_.find(receipt.tx_id);
        if (it != tx_records_.end())
        {
          it->second.state  = receipt.status.accepted() ? TxState::Accepted : TxState::Rejected;
          it->second.reason = receipt.status.reason();
          it->second.height = height;
        }
      }
    }
    indexed_.push_back(record.hash);
  }

  auto snapshot = std::make_shared<Snapshot>();
  for (auto const *record : chain)
  {
    snapshot->blocks.push_back(record->block);
    snapshot->receipts.push_back(record->receipts);
  }
  snapshot->height          = node_.head().block->header.height;
  snapshot->head_hash       = node_.head().hash;
  snapshot->state           = node_.head().state;
  snapshot->state_root      = ledger::ComputeStateRoot(*snapshot->state);
  snapshot->provenance      = provenance_;
  snapshot->auction_history = history_;
  {
    std::lock_guard lock(snapshot_mutex_);
    snapshot_ = snapshot;
  }

  // Announce after the snapshot is visible so subscribers can read what they hear about.
  for (std::size_t i = diverged; i < chain.size(); ++i)
  {
    auto const &record = *chain[i];
    uint64_t const height = record.block->header.height;
    for (auto const &receipt : record.receipts)
    {
      events_.Publish("receipt", height, ledger::ToJson(receipt));
    }
  }
  events_.Publish("head", snapshot->height,
                  {{"height", snapshot->height},
                   {"hash", snapshot->head_hash.ToHex()},
                   {"state_root", snapshot->state_root.ToHex()},
                   {"tick", node_.head().block->header.tick}});
}

}  // namespace service
}  // namespace gridex
