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
#include "gridex/ledger/receipt.hpp"

#include <map>
#include <stdexcept>

namespace gridex {
namespace ledger {

class UnknownLotError : public std::runtime_error
{
public:
  explicit UnknownLotError(LotId const &lot)
    : std::runtime_error("unknown lot " + lot.ToHex())
  {}
};

struct ProvenanceEntry
{
  uint64_t height{0};
  Digest32 tx_id;
  Event    event;

  friend bool operator==(ProvenanceEntry const &, ProvenanceEntry const &) = default;
};

/// True for the event kinds that create a lot or move its ownership.
bool IsOwnershipEvent(Event const &event);

/**
 * Per-lot ownership history, fed receipt by receipt in chain order. Each chain
 * starts at the mint and every later entry's source owner is the previous
 * entry's destination.
 */
class ProvenanceIndex
{
public:
  void Add(Receipt const &receipt);
  void Add(std::span<Receipt const> receipts);

  /// Throws UnknownLotError.
  std::vector<ProvenanceEntry> const &Trace(LotId const &lot) const;

  bool Contains(LotId const &lot) const
  {
    return chains_.count(lot) != 0;
  }

private:
  std::map<LotId, std::vector<ProvenanceEntry>> chains_;
};

/// Replays the history from genesis and returns the lot's ownership chain.
std::vector<ProvenanceEntry> TraceLot(std::span<Block const> history, ChainState const &genesis,
                                      LotId const &lot);

}  // namespace ledger
}  // namespace gridex
