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

#include "gridex/consensus/simulator.hpp"
#include "gridex/ledger/json.hpp"

namespace gridex {
namespace consensus {

using nlohmann::json;

char const *ToString(MessageKind kind)
{
  switch (kind)
  {
  case MessageKind::Tx:
    return "tx";
  case MessageKind::Block:
    return "block";
  case MessageKind::BlockRequest:
    return "block_request";
  case MessageKind::BlockResponse:
    return "block_response";
  }
  return "unknown";
}

namespace {

MessageKind KindOf(Message const &message)
{
  return static_cast<MessageKind>(message.index());
}

}  // namespace

Simulator::Simulator(SimConfig config)
  : config_(std::move(config))
  , genesis_(ledger::BuildGenesis(GenesisFor(config_)))
  , rng_(config_.seed)
{
  for (auto const &spec : config_.nodes)
  {
    auto key = SimulatedKey(spec.name);
    keys_.emplace(spec.name, key);
    std::optional<crypto::KeyPair> authority;
    if (spec.authority)
    {
      authority = key;
    }
    nodes_.push_back(std::make_unique<Node>(spec.name, genesis_, authority));
    agents_.emplace_back(spec, key);
  }
}

bool Simulator::Partitioned(std::size_t a, std::size_t b, uint64_t tick) const
{
  auto const &name_a = config_.nodes[a].name;
  auto const &name_b = config_.nodes[b].name;
  for (auto const &window : config_.network.partitions)
  {
    if (tick >= window.start_tick && tick < window.end_tick &&
        window.side.count(name_a) != window.side.count(name_b))
    {
      return true;
    }
  }
  return false;
}

bool Simulator::ProductionOpen() const
{
  return !config_.production_end_tick || tick_ < *config_.production_end_tick;
}

void Simulator::Send(std::size_t from, std::size_t to, Message message)
{
  auto &count = counts_[static_cast<std::size_t>(KindOf(message))];
  ++count.sent;

  auto const &net = config_.network;
  if (Partitioned(from, to, tick_))
  {
    ++count.dropped;
    return;
  }
  bool const lossy = net.drop_probability > 0.0 && (!net.drop_end_tick || tick_ < *net.drop_end_tick);
  if (lossy && Chance(rng_, net.drop_probability))
  {
    ++count.dropped;
    return;
  }

  uint64_t const latency = UniformInt(rng_, net.latency_min, net.latency_max);
  queue_.insert(NetworkEvent{tick_ + latency, from, to, seq_++, std::move(message)});
}

void Simulator::Broadcast(std::size_t from, Message const &message)
{
  for (std::size_t to = 0; to < nodes_.size(); ++to)
  {
    if (to != from)
    {
      Send(from, to, message);
    }
  }
}

void Simulator::Submit(std::size_t index, ledger::SignedTransaction const &stx)
{
  if (nodes_[index]->OnReceiveTx(stx, tick_))
  {
    Broadcast(index, TxGossip{stx});
  }
}

void Simulator::Deliver(NetworkEvent const &event)
{
  auto &count = counts_[static_cast<std::size_t>(KindOf(event.message))];
  // A partition that starts while a message is in flight also cuts it.
  if (Partitioned(event.from, event.to, tick_))
  {
    ++count.dropped;
    return;
  }
  ++count.delivered;

  Node &node = *nodes_[event.to];
  std::visit(
      [&](auto const &message) {
        using T = std::decay_t<decltype(message)>;
        if constexpr (std::is_same_v<T, TxGossip>)
        {
          if (node.OnReceiveTx(message.stx, tick_))
          {
            Broadcast(event.to, message);
          }
        }
        else if constexpr (std::is_same_v<T, BlockRequest>)
        {
          if (auto block = node.FindBlock(message.hash))
          {
            Send(event.to, event.from, BlockResponse{block});
          }
        }
        else
        {
          auto const result = node.OnReceiveBlock(message.block);
          if (result.verdict == BlockVerdict::Orphan)
          {
            Send(event.to, event.from, BlockRequest{*result.missing_parent});
          }
          else if (result.verdict == BlockVerdict::Attached && std::is_same_v<T, BlockGossip>)
          {
            Broadcast(event.to, BlockGossip{message.block});
          }
        }
      },
      event.message);
}

void Simulator::Step()
{
  ++tick_;

  while (!queue_.empty() && queue_.begin()->deliver_at <= tick_)
  {
    auto node = queue_.extract(queue_.begin());
    Deliver(node.value());
  }

  for (auto const &action : config_.script)
  {
    if (action.tick != tick_)
    {
      continue;
    }
    std::size_t const index = static_cast<std::size_t>(
        std::find_if(config_.nodes.begin(), config_.nodes.end(),
                     [&](NodeSpec const &spec) { return spec.name == action.node; }) -
        config_.nodes.begin());
    try
    {
      for (auto const &stx : agents_[index].RunScript(action, *nodes_[index], keys_))
      {
        Submit(index, stx);
      }
    }
    catch (std::exception const &err)
    {
      script_errors_.push_back("tick " + std::to_string(tick_) + " " + action.node + ": " + err.what());
    }
  }

  if (ProductionOpen())
  {
    for (std::size_t i = 0; i < agents_.size(); ++i)
    {
      if (auto stx = agents_[i].Act(*nodes_[i], rng_))
      {
        Submit(i, *stx);
      }
    }
    for (std::size_t i = 0; i < nodes_.size(); ++i)
    {
      if (auto block = nodes_[i]->TryProduce(tick_))
      {
        Broadcast(i, BlockGossip{block});
      }
    }
  }

  if (tick_ % config_.announce_interval_ticks == 0)
  {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
    {
      auto const &head = nodes_[i]->head();
      if (head.block->header.height > 0)
      {
        Broadcast(i, BlockGossip{head.block});
      }
      for (auto const &entry : nodes_[i]->MempoolInOrder())
      {
        Broadcast(i, TxGossip{entry.stx});
      }
    }
  }
}

SimReport Simulator::Run()
{
  while (tick_ < config_.until_tick)
  {
    Step();
  }
  return Report();
}

bool Simulator::Converged() const
{
  auto const &first = nodes_.front()->head();
  auto const  root  = ledger::ComputeStateRoot(*first.state);
  for (auto const &node : nodes_)
  {
    if (node->head().hash != first.hash || ledger::ComputeStateRoot(node->head_state()) != root)
    {
      return false;
    }
  }
  return true;
}

SimReport Simulator::Report() const
{
  SimReport report;
  report.seed       = config_.seed;
  report.final_tick = tick_;
  report.messages   = counts_;
  report.converged  = Converged();

  for (std::size_t i = 0; i < nodes_.size(); ++i)
  {
    auto const &node = *nodes_[i];
    NodeReport  entry;
    entry.name           = node.name();
    entry.address        = keys_.at(node.name()).address();
    entry.authority      = node.IsAuthority();
    entry.head_height    = node.head().block->header.height;
    entry.head_hash      = node.head().hash;
    entry.state_root     = ledger::ComputeStateRoot(node.head_state());
    entry.mempool        = node.mempool_size();
    entry.invalid_blocks = node.invalid_blocks();
    report.nodes.push_back(std::move(entry));
  }

  for (auto const *record : nodes_.front()->CanonicalChain())
  {
    report.receipts.insert(report.receipts.end(), record->receipts.begin(), record->receipts.end());
  }

  std::vector<market::DemandIntent> intents;
  for (auto const &agent : agents_)
  {
    if (auto intent = agent.intent())
    {
      intents.push_back(*intent);
    }
  }
  report.satisfaction = market::ComputeSatisfaction(report.receipts, intents, genesis_.state.params);
  return report;
}

json ToJson(SimReport const &report)
{
  json doc{{"seed", report.seed}, {"final_tick", report.final_tick}, {"converged", report.converged}};

  doc["nodes"] = json::array();
  for (auto const &node : report.nodes)
  {
    doc["nodes"].push_back({{"name", node.name},
                            {"address", node.address.ToHex()},
                            {"authority", node.authority},
                            {"head_height", node.head_height},
                            {"head_hash", node.head_hash.ToHex()},
                            {"state_root", node.state_root.ToHex()},
                            {"mempool", node.mempool},
                            {"invalid_blocks", node.invalid_blocks}});
  }

  json messages = json::object();
  for (std::size_t kind = 0; kind < MESSAGE_KINDS; ++kind)
  {
    auto const &count = report.messages[kind];
    messages[ToString(static_cast<MessageKind>(kind))] = {
        {"sent", count.sent}, {"delivered", count.delivered}, {"dropped", count.dropped}};
  }
  doc["messages"] = messages;

  doc["receipts"] = json::array();
  for (auto const &receipt : report.receipts)
  {
    doc["receipts"].push_back(ledger::ToJson(receipt));
  }
  doc["satisfaction"] = market::ToJson(report.satisfaction);
  return doc;
}

}  // namespace consensus
}  // namespace gridex
