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

#include "gridex/contract/types.hpp"
#include "gridex/crypto/keys.hpp"
#include "gridex/ledger/genesis.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gridex {
namespace consensus {

enum class Strategy
{
  Idle,
  Seller,
  Buyer,
};

struct SellerProfile
{
  uint64_t                 kwh_min{50};
  uint64_t                 kwh_max{150};
  uint64_t                 base_price_min{5};
  uint64_t                 base_price_max{15};
  uint64_t                 duration_blocks{0};  ///< 0 selects the protocol default
  contract::SettlementMode mode{contract::SettlementMode::Cash};
};

struct BuyerProfile
{
  uint64_t kwh_needed{50};
  uint64_t max_price{30};
};

struct NodeSpec
{
  std::string   name;
  bool          authority{false};
  Strategy      strategy{Strategy::Idle};
  uint64_t      balance{0};
  bool          qualified{true};
  double        activity{0.5};  ///< per-tick probability that the agent acts
  SellerProfile seller;
  std::optional<BuyerProfile> buyer;
};

/// During [start_tick, end_tick) nodes in `side` cannot reach the others.
struct PartitionWindow
{
  uint64_t              start_tick{0};
  uint64_t              end_tick{0};
  std::set<std::string> side;
};

struct NetworkConfig
{
  uint64_t                     latency_min{1};
  uint64_t                     latency_max{3};
  double                       drop_probability{0.0};
  std::optional<uint64_t>      drop_end_tick;  ///< drops stop at this tick
  std::vector<PartitionWindow> partitions;
};

/// Timed action for one node. `args` holds the action-specific fields.
struct ScriptAction
{
  uint64_t       tick{0};
  std::string    node;
  std::string    action;
  nlohmann::json args;
};

struct SimConfig
{
  uint64_t                seed{0};
  uint64_t                until_tick{200};
  uint64_t                block_interval_ticks{2};
  uint64_t                announce_interval_ticks{5};
  std::optional<uint64_t> production_end_tick;
  std::size_t             authority_threshold{0};  ///< 0 selects a simple majority
  contract::ProtocolParams params;                 ///< schedule and authority account are derived
  NetworkConfig           network;
  std::vector<NodeSpec>   nodes;
  std::vector<ScriptAction> script;
};

/// Throws std::invalid_argument when the document is inconsistent.
SimConfig      ScenarioFromJson(nlohmann::json const &doc);
nlohmann::json ScenarioToJson(SimConfig const &config);
SimConfig      LoadScenarioFile(std::filesystem::path const &path);

/// Deterministic key for a simulated participant.
crypto::KeyPair SimulatedKey(std::string const &node_name);

/// Genesis implied by a scenario: authorities in listed order, their multisig,
/// per-node balances and the qualified set.
ledger::GenesisConfig GenesisFor(SimConfig const &config);

}  // namespace consensus
}  // namespace gridex
