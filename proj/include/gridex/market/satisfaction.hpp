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
#include "gridex/ledger/receipt.hpp"
#include "gridex/market/matching.hpp"

#include <json.hpp>

#include <string>

namespace gridex {
namespace market {

struct ParticipantSurplus
{
  Address  address;
  int64_t  surplus{0};
  uint64_t auctions{0};  ///< settled wins (buyers) or finalized auctions (sellers)
  uint64_t volume{0};    ///< total clearing price paid or received

  friend bool operator==(ParticipantSurplus const &, ParticipantSurplus const &) = default;
};

/**
 * Raw surplus accounting over settled receipts.
 *
 *   buyer:  max_price - price paid per won auction (0 when unmatched)
 *   seller: price - base_price per settled auction, -gas_fee per discarded one
 */
struct SatisfactionReport
{
  std::vector<ParticipantSurplus> buyers;
  std::vector<ParticipantSurplus> sellers;
  int64_t                         total_buyer_surplus{0};
  int64_t                         total_seller_surplus{0};
  uint64_t                        settled{0};
  uint64_t                        discarded{0};
  /// Net escrow (accepted minus refunded) of settled cash auctions.
  uint64_t                        cash_paid_by_buyers{0};
  uint64_t                        cash_received_by_sellers{0};
  double                          match_rate{0.0};
  double                          mean_clearing_price{0.0};

  friend bool operator==(SatisfactionReport const &, SatisfactionReport const &) = default;
};

/// Receipts must be in chain order from genesis so every settlement follows its opening.
SatisfactionReport ComputeSatisfaction(std::span<ledger::Receipt const> receipts,
                                       std::span<DemandIntent const> intents,
                                       contract::ProtocolParams const &params);

nlohmann::json ToJson(SatisfactionReport const &report);

/// One row per participant: role,address,surplus,auctions,volume
std::string ToCsv(SatisfactionReport const &report);

}  // namespace market
}  // namespace gridex
