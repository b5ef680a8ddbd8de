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
namespace ledger {

/// Signature stage of validation: BadSignature, or BadMultisig for registry updates.
std::optional<RejectReason> CheckSignatures(ChainState const &state, SignedTransaction const &stx);

/**
 * Runs one transaction against `state` in place as part of the block at
 * `height`. Check order: signature, nonce, qualification, funds/ownership,
 * kind rules. The nonce is consumed whenever the first two checks pass, even
 * if a later check rejects the transaction.
 */
Receipt ExecuteTransaction(ChainState &state, SignedTransaction const &stx, uint64_t height,
                           Address const &producer, uint64_t &gas_collected);

/// Status the transaction would get if it were the next one applied on top of `state`.
TxStatus ValidateTransaction(ChainState const &state, SignedTransaction const &stx);

}  // namespace ledger
}  // namespace gridex
