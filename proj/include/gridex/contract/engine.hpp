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

#include "gridex/ledger/chain_state.hpp"
#include "gridex/ledger/receipt.hpp"
#include "gridex/ledger/transaction.hpp"

namespace gridex {
namespace contract {

/// Execution environment for one transaction inside a block.
struct TxContext
{
  ledger::ChainState        &state;
  uint64_t                   height;
  Digest32                   tx_id;
  Address                    sender;
  Address                    producer;
  std::vector<ledger::Event> &events;
  /// Gas debited so far in this block; credited to the producer after finalization.
  uint64_t                  &gas_collected;
};

/// nullopt on success. Every handler checks qualification, then funds and
/// ownership, then its own rules, and mutates state only once all checks pass.
using ExecResult = std::optional<ledger::RejectReason>;

ExecResult ExecTransfer(TxContext &ctx, ledger::Transfer const &payload);
ExecResult ExecOpenAuction(TxContext &ctx, ledger::OpenAuction const &payload);
ExecResult ExecPlaceBid(TxContext &ctx, ledger::PlaceBid const &payload);
ExecResult ExecMintLot(TxContext &ctx, ledger::MintLot const &payload);
ExecResult ExecTransferLot(TxContext &ctx, ledger::TransferLot const &payload);
ExecResult ExecTransferBond(TxContext &ctx, ledger::TransferBond const &payload);
ExecResult ExecRedeemBond(TxContext &ctx, ledger::RedeemBond const &payload);

/// The authority multisig has already been checked by the caller.
ExecResult ExecRegistryUpdate(TxContext &ctx, ledger::RegistryUpdate const &payload);

/**
 * Closes every open auction whose deadline is at or below `height`, in
 * ascending auction id order. Auctions with a best bid settle; the rest are
 * discarded with the lot returned and the gas fee kept. One finalization
 * receipt per auction.
 */
std::vector<ledger::Receipt> FinalizeDueAuctions(ledger::ChainState &state, uint64_t height);

/// Precondition: the auction is open and has a best bid.
void Settle(ledger::ChainState &state, Auction &auction, uint64_t height,
            std::vector<ledger::Event> &events);

BondId BondIdFor(AuctionId const &auction);

}  // namespace contract
}  // namespace gridex
