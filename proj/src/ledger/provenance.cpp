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

#include "gridex/ledger/provenance.hpp"
#include "gridex/ledger/chain.hpp"

namespace gridex {
namespace ledger {

bool IsOwnershipEvent(Event const &event)
{
  if (!event.lot)
  {
    return false;
  }
  return event.kind == EventKind::LotMinted || event.kind == EventKind::LotTransferred ||
         event.kind == EventKind::AuctionSettled;
}

void ProvenanceIndex::Add(Receipt const &receipt)
{
  if (!receipt.status.accepted())
  {
    return;
  }

  for (auto const &event : receipt.events)
  {
    if (!IsOwnershipEvent(event))
    {
      continue;
    }

    ProvenanceEntry entry{receipt.height, receipt.tx_id, event};
    if (event.kind == EventKind::LotMinted)
    {
      chains_[*event.lot] = {entry};
      continue;
    }

    auto it = chains_.find(*event.lot);
    if (it == chains_.end() || it->second.back().event.to != event.from)
    {
      throw std::logic_error("broken provenance chain for lot " + event.lot->ToHex());
    }
    it->second.push_back(entry);
  }
}

void ProvenanceIndex::Add(std::span<Receipt const> receipts)
{
  for (auto const &receipt : receipts)
  {
    Add(receipt);
  }
}

std::vector<ProvenanceEntry> const &ProvenanceIndex::Trace(LotId const &lot) const
{
  auto it = chains_.find(lot);
  if (it == chains_.end())
  {
    throw UnknownLotError(lot);
  }
  return it->second;
}

std::vector<ProvenanceEntry> TraceLot(std::span<Block const> history, ChainState const &genesis,
                                      LotId const &lot)
{
  auto const      replay = ReplayChain(history, genesis);
  ProvenanceIndex index;
  for (auto const &receipts : replay.receipts)
  {
    index.Add(receipts);
  }
  return index.Trace(lot);
}

}  // namespace ledger
}  // namespace gridex
