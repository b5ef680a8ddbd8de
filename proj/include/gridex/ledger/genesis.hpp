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

#include <json.hpp>

#include <filesystem>

namespace gridex {
namespace ledger {

struct GenesisConfig
{
  contract::ProtocolParams   params;
  std::map<Address, uint64_t> balances;
  std::set<Address>           qualified;
};

struct Genesis
{
  Block      block;
  ChainState state;
};

/// Throws std::invalid_argument on an empty schedule, mismatched authority
/// keys, zero durations or a supply that overflows.
Genesis BuildGenesis(GenesisConfig const &config);

/**
 * Genesis document:
 *
 *   {
 *     "authorities": [{"address": hex, "public_key": hex}, ...],   // schedule order
 *     "block_interval_ticks": 1,
 *     "authority_account": {"members": [hex, ...], "threshold": 2},  // optional
 *     "balances": {"<address hex>": 1000, ...},
 *     "qualified": [hex, ...],
 *     "params": {"gas_fee": 10, "default_min_increment": 1,
 *                "default_auction_duration": 20, "bond_maturity_delta": 100},
 *     "address_hash_rounds": 2, "address_bytes": 20                  // optional, fixed
 *   }
 */
GenesisConfig  GenesisFromJson(nlohmann::json const &doc);
nlohmann::json GenesisToJson(GenesisConfig const &config);
GenesisConfig  LoadGenesisFile(std::filesystem::path const &path);

}  // namespace ledger
}  // namespace gridex
