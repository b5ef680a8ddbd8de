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
#include "gridex/ledger/block.hpp"
#include "gridex/ledger/provenance.hpp"
#include "gridex/ledger/receipt.hpp"

#include <json.hpp>

namespace gridex {
namespace ledger {

// Binary fields are lowercase hex without a prefix throughout.

nlohmann::json ToJson(Event const &event);
nlohmann::json ToJson(Receipt const &receipt);
nlohmann::json ToJson(contract::Auction const &auction);
nlohmann::json ToJson(contract::EnergyLot const &lot);
nlohmann::json ToJson(contract::Bond const &bond);
nlohmann::json ToJson(Transaction const &tx);
nlohmann::json ToJson(SignedTransaction const &stx);
nlohmann::json ToJson(BlockHeader const &header);
nlohmann::json ToJson(Block const &block);
nlohmann::json ToJson(ProvenanceEntry const &entry);

/**
 * Unsigned transaction document, e.g.
 *   {"kind": "place_bid", "nonce": 3, "auction": hex, "amount": 12}
 * The sender is supplied separately. Throws std::invalid_argument or a json
 * exception on malformed input.
 */
Transaction TransactionFromJson(nlohmann::json const &doc, Address const &sender);

}  // namespace ledger
}  // namespace gridex
