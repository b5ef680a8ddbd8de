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
#include "gridex/crypto/multisig.hpp"
#include "gridex/ledger/codec.hpp"

#include <variant>
#include <vector>

namespace gridex {
namespace ledger {

enum class TxKind : uint8_t
{
  Transfer       = 0,
  OpenAuction    = 1,
  PlaceBid       = 2,
  MintLot        = 3,
  TransferLot    = 4,
  TransferBond   = 5,
  RedeemBond     = 6,
  RegistryUpdate = 7,
};

struct Transfer
{
  Address  to;
  uint64_t amount{0};

  friend bool operator==(Transfer const &, Transfer const &) = default;
};

/// A zero min_increment or duration selects the protocol default.
struct OpenAuction
{
  LotId                    lot;
  uint64_t                 base_price{0};
  uint64_t                 min_increment{0};
  uint64_t                 duration_blocks{0};
  contract::SettlementMode mode{contract::SettlementMode::Cash};

  friend bool operator==(OpenAuction const &, OpenAuction const &) = default;
};

struct PlaceBid
{
  AuctionId auction;
  uint64_t  amount{0};

  friend bool operator==(PlaceBid const &, PlaceBid const &) = default;
};

struct MintLot
{
  uint64_t kwh{0};

  friend bool operator==(MintLot const &, MintLot const &) = default;
};

struct TransferLot
{
  LotId   lot;
  Address to;

  friend bool operator==(TransferLot const &, TransferLot const &) = default;
};

struct TransferBond
{
  BondId  bond;
  Address to;

  friend bool operator==(TransferBond const &, TransferBond const &) = default;
};

struct RedeemBond
{
  BondId bond;

  friend bool operator==(RedeemBond const &, RedeemBond const &) = default;
};

/// Sets are kept sorted and de-duplicated; see MakeRegistryUpdate.
struct RegistryUpdate
{
  std::vector<Address> add;
  std::vector<Address> remove;

  friend bool operator==(RegistryUpdate const &, RegistryUpdate const &) = default;
};

RegistryUpdate MakeRegistryUpdate(std::vector<Address> add, std::vector<Address> remove);

// Alternative index equals the TxKind tag.
using Payload = std::variant<Transfer, OpenAuction, PlaceBid, MintLot, TransferLot, TransferBond,
                             RedeemBond, RegistryUpdate>;

struct Transaction
{
  Address  sender;
  uint64_t nonce{0};
  Payload  payload;

  TxKind kind() const
  {
    return static_cast<TxKind>(payload.index());
  }

  friend bool operator==(Transaction const &, Transaction const &) = default;
};

struct SignedTransaction
{
  Transaction                      tx;
  std::vector<crypto::Endorsement> signatures;

  friend bool operator==(SignedTransaction const &, SignedTransaction const &) = default;
};

char const *ToString(TxKind kind);

void              Encode(Writer &out, Transaction const &tx);
void              Encode(Writer &out, SignedTransaction const &stx);
Transaction       DecodeTransaction(Reader &in);
SignedTransaction DecodeSignedTransaction(Reader &in);

Bytes EncodeTransaction(Transaction const &tx);
Bytes EncodeSignedTransaction(SignedTransaction const &stx);

/// Decodes a complete buffer; trailing bytes are an error.
SignedTransaction DecodeSignedTransaction(ByteSpan bytes);

/// Hash of the canonical unsigned transaction. This is also the signed message.
Digest32 TxId(Transaction const &tx);
Digest32 TxId(SignedTransaction const &stx);

/// Single-signer convenience: signs the canonical unsigned encoding.
SignedTransaction SignTransaction(Transaction tx, crypto::KeyPair const &keys);

/// Multisig convenience: every key endorses the canonical unsigned encoding.
SignedTransaction SignTransaction(Transaction tx, std::span<crypto::KeyPair const> keys);

}  // namespace ledger
}  // namespace gridex
