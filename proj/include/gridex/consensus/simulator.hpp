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

#include "gridex/consensus/agent.hpp"
#include "gridex/consensus/node.hpp"
#include "gridex/consensus/random.hpp"
#include "gridex/consensus/scenario.hpp"
#include "gridex/market/satisfaction.hpp"

#include <json.hpp>

#include <array>
#include <memory>
#include <set>
#include <variant>

namespace gridex {
namespace consensus {

struct TxGossip
{
  ledger::SignedTransaction stx;
};

struct BlockGossip
{
  std::shared_ptr<ledger::Block const> block;
};

struct BlockRequest
{
  Digest32 hash;
};

struct BlockResponse
{
  std::shared_ptr<ledger::Block const> block;
};

using Message = std::variant<TxGossip, BlockGossip, BlockRequest, BlockResponse>;

enum class MessageKind : uint8_t
{
  Tx            = 0,
  Block         = 1,
  BlockRequest  = 2,
  BlockResponse = 3,
};

constexpr std::size_t MESSAGE_KINDS = 4;

char const *ToString(MessageKind kind);

struct NetworkEvent
{
  uint64_t    deliver_at{0};
  std::size_t from{0};
  std::size_t to{0};
  uint64_t    seq{0};
  Message     message;
};

struct MessageCounts
{
  uint64_t sent{0};
  uint64_t delivered{0};
  uint64_t dropped{0};

  friend bool operator==(MessageCounts const &, MessageCounts const &) = default;
};

struct NodeReport
{
  std::string name;
  Address     address;
  bool        authority{false};
  uint64_t    head_height{0};
  Digest32    head_hash;
  Digest32    state_root;
  std::size_t mempool{0};
  uint64_t    invalid_blocks{0};

  friend bool operator==(NodeReport const &, NodeReport const &) = default;
};

struct SimReport
{
  uint64_t                                 seed{0};
  uint64_t                                 final_tick{0};
  std::vector<NodeReport>                  nodes;
  std::vector<ledger::Receipt>             receipts;  ///< canonical chain of the first node
  market::SatisfactionReport               satisfaction;
  std::array<MessageCounts, MESSAGE_KINDS> messages{};
  bool                                     converged{false};

  friend bool operator==(SimReport const &, SimReport const &) = default;
};

nlohmann::json ToJson(SimReport const &report);

/**
 * Seeded single-threaded network of nodes. Each tick delivers due messages in
 * (deliver_at, sender, sequence) order, runs script actions, agent steps and
 * block production, and re-announces heads and mempools periodically.
 */
class Simulator
{
public:
  explicit Simulator(SimConfig config);

  /// Advances one tick.
  void Step();

  /// Steps until the configured final tick and reports.
  SimReport Run();

  SimReport Report() const;

  uint64_t tick() const
  {
    return tick_;
  }
  SimConfig const &config() const
  {
    return config_;
  }
  std::size_t node_count() const
  {
    return nodes_.size();
  }
  Node const &node(std::size_t index) const
  {
    return *nodes_.at(index);
  }
  ledger::Genesis const &genesis() const
  {
    return genesis_;
  }
  std::vector<std::string> const &script_errors() const
  {
    return script_errors_;
  }

  /// True when every node has the same head hash and state root.
  bool Converged() const;

private:
  struct EventOrder
  {
    bool operator()(NetworkEvent const &a, NetworkEvent const &b) const
    {
      return std::tie(a.deliver_at, a.from, a.seq) < std::tie(b.deliver_at, b.from, b.seq);
    }
  };

  void Deliver(NetworkEvent const &event);
  void Send(std::size_t from, std::size_t to, Message message);
  void Broadcast(std::size_t from, Message const &message);
  void Submit(std::size_t index, ledger::SignedTransaction const &stx);
  bool Partitioned(std::size_t a, std::size_t b, uint64_t tick) const;
  bool ProductionOpen() const;

  SimConfig                          config_;
  ledger::Genesis                    genesis_;
  KeyDirectory                       keys_;
  std::vector<std::unique_ptr<Node>> nodes_;
  std::vector<Agent>                 agents_;
  std::set<NetworkEvent, EventOrder> queue_;
  SimRng                             rng_;
  uint64_t                           tick_{0};
  uint64_t                           seq_{0};
  std::array<MessageCounts, MESSAGE_KINDS> counts_{};
  std::vector<std::string>           script_errors_;
};

}  // namespace consensus
}  // namespace gridex
