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

#include "gridex/ledger/execution.hpp"
#include "gridex/contract/engine.hpp"

namespace gridex {
namespace ledger {

std::optional<RejectReason> CheckSignatures(ChainState const &state, SignedTransaction const &stx)
{
  auto const message = EncodeTransaction(stx.tx);

  if (stx.tx.kind() == TxKind::RegistryUpdate)
  {
    auto const &authority = state.params.authority_account;
    if (authority.threshold() == 0 || stx.tx.sender != authority.address())
    {
      return RejectReason::BadSignature;
    }
    if (!crypto::VerifyMultisig(authority, message, stx.signatures))
    {
      return RejectReason::BadMultisig;
    }
    return std::nullopt;
  }

  if (stx.signatures.size() != 1 || stx.signatures.front().address != stx.tx.sender ||
      !crypto::VerifyEndorsement(stx.signatures.front(), message))
  {
    return RejectReason::BadSignature;
  }
  return std::nullopt;
}

Receipt ExecuteTransaction(ChainState &state, SignedTransaction const &stx, uint64_t height,
                           Address const &producer, uint64_t &gas_collected)
{
  Receipt receipt;
  receipt.tx_id  = TxId(stx);
  receipt.height = height;
  receipt.origin = ReceiptOrigin::Transaction;

  if (auto reason = CheckSignatures(state, stx))
  {
    receipt.status = TxStatus::Rejected(*reason);
    return receipt;
  }
  if (state.account(stx.tx.sender).nonce != stx.tx.nonce)
  {
    receipt.status = TxStatus::Rejected(RejectReason::BadNonce);
    return receipt;
  }
  state.MutableAccount(stx.tx.sender).nonce += 1;

  contract::TxContext ctx{state, height, receipt.tx_id, stx.tx.sender, producer, receipt.events, gas_collected};

  contract::ExecResult const result = std::visit(
      [&ctx](auto const &payload) -> contract::ExecResult {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, Transfer>)
        {
          return contract::ExecTransfer(ctx, payload);
        }
        else if constexpr (std::is_same_v<T, OpenAuction>)
        {
          return contract::ExecOpenAuction(ctx, payload);
        }
        else if constexpr (std::is_same_v<T, PlaceBid>)
        {
          return contract::ExecPlaceBid(ctx, payload);
        }
        else if constexpr (std::is_same_v<T, MintLot>)
        {
          return contract::ExecMintLot(ctx, payload);
        }
        else if constexpr (std::is_same_v<T, TransferLot>)
        {
          return contract::ExecTransferLot(ctx, payload);
        }
        else if constexpr (std::is_same_v<T, TransferBond>)
        {
          return contract::ExecTransferBond(ctx, payload);
        }
        else if constexpr (std::is_same_v<T, RedeemBond>)
        {
          return contract::ExecRedeemBond(ctx, payload);
        }
        else
        {
          return contract::ExecRegistryUpdate(ctx, payload);
        }
      },
      stx.tx.payload);

  if (result)
  {
    receipt.events.clear();
    receipt.status = TxStatus::Rejected(*result);
  }
  return receipt;
}

TxStatus ValidateTransaction(ChainState const &state, SignedTransaction const &stx)
{
  ChainState scratch = state;
  uint64_t   gas     = 0;
  Address    producer;
  if (!state.params.schedule.authorities.empty())
  {
    producer = consensus::ProducerFor(state.params.schedule, state.height + 1);
  }
  return ExecuteTransaction(scratch, stx, state.height + 1, producer, gas).status;
}

}  // namespace ledger
}  // namespace gridex
