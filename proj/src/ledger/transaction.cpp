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

#include "gridex/ledger/transaction.hpp"
#include "gridex/crypto/hash.hpp"

#include <algorithm>

namespace gridex {
namespace ledger {
namespace {

constexpr uint8_t MAX_KIND = static_cast<uint8_t>(TxKind::RegistryUpdate);
constexpr uint8_t MAX_MODE = static_cast<uint8_t>(contract::SettlementMode::BondAllowed);

std::vector<Address> SortedUnique(std::vector<Address> values)
{
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

void EncodeAddressSet(Writer &out, std::vector<Address> const &values)
{
  auto const sorted = SortedUnique(values);
  out.Count(sorted.size());
  for (auto const &address : sorted)
  {
    out.Fixed(address);
  }
}

std::vector<Address> DecodeAddressSet(Reader &in)
{
  uint32_t const       count = in.Count();
  std::vector<Address> out;
  out.reserve(count);
  for (uint32_t i = 0; i < count; ++i)
  {
    auto address = in.FixedValue<Address>();
    if (!out.empty() && !(out.back() < address))
    {
      in.Fail("address set is not strictly ascending");
    }
    out.push_back(address);
  }
  return out;
}

struct PayloadEncoder
{
  Writer &out;

  void operator()(Transfer const &p) const
  {
    out.Fixed(p.to);
    out.U64(p.amount);
  }
  void operator()(OpenAuction const &p) const
  {
    out.Fixed(p.lot);
    out.U64(p.base_price);
    out.U64(p.min_increment);
    out.U64(p.duration_blocks);
    out.Tag(static_cast<uint8_t>(p.mode));
  }
  void operator()(PlaceBid const &p) const
  {
    out.Fixed(p.auction);
    out.U64(p.amount);
  }
  void operator()(MintLot const &p) const
  {
    out.U64(p.kwh);
  }
  void operator()(TransferLot const &p) const
  {
    out.Fixed(p.lot);
    out.Fixed(p.to);
  }
  void operator()(TransferBond const &p) const
  {
    out.Fixed(p.bond);
    out.Fixed(p.to);
  }
  void operator()(RedeemBond const &p) const
  {
    out.Fixed(p.bond);
  }
  void operator()(RegistryUpdate const &p) const
  {
    EncodeAddressSet(out, p.add);
    EncodeAddressSet(out, p.remove);
  }
};

Payload DecodePayload(Reader &in, TxKind kind)
{
  switch (kind)
  {
  case TxKind::Transfer:
  {
    Transfer p;
    p.to     = in.FixedValue<Address>();
    p.amount = in.U64();
    return p;
  }
  case TxKind::OpenAuction:
  {
    OpenAuction p;
    p.lot             = in.FixedValue<LotId>();
    p.base_price      = in.U64();
    p.min_increment   = in.U64();
    p.duration_blocks = in.U64();
    p.mode            = static_cast<contract::SettlementMode>(in.Tag(MAX_MODE));
    return p;
  }
  case TxKind::PlaceBid:
  {
    PlaceBid p;
    p.auction = in.FixedValue<AuctionId>();
    p.amount  = in.U64();
    return p;
  }
  case TxKind::MintLot:
    return MintLot{in.U64()};
  case TxKind::TransferLot:
  {
    TransferLot p;
    p.lot = in.FixedValue<LotId>();
    p.to  = in.FixedValue<Address>();
    return p;
  }
  case TxKind::TransferBond:
  {
    TransferBond p;
    p.bond = in.FixedValue<BondId>();
    p.to   = in.FixedValue<Address>();
    return p;
  }
  case TxKind::RedeemBond:
    return RedeemBond{in.FixedValue<BondId>()};
  case TxKind::RegistryUpdate:
  {
    RegistryUpdate p;
    p.add    = DecodeAddressSet(in);
    p.remove = DecodeAddressSet(in);
    return p;
  }
  }
  in.Fail("unknown transaction kind");
}

}  // namespace

RegistryUpdate MakeRegistryUpdate(std::vector<Address> add, std::vector<Address> remove)
{
  return {SortedUnique(std::move(add)), SortedUnique(std::move(remove))};
}

char const *ToString(TxKind kind)
{
  switch (kind)
  {
  case TxKind::Transfer:
    return "transfer";
  case TxKind::OpenAuction:
    return "open_auction";
  case TxKind::PlaceBid:
    return "place_bid";
  case TxKind::MintLot:
    return "mint_lot";
  case TxKind::TransferLot:
    return "transfer_lot";
  case TxKind::TransferBond:
    return "transfer_bond";
  case TxKind::RedeemBond:
    return "redeem_bond";
  case TxKind::RegistryUpdate:
    return "registry_update";
  }
  return "unknown";
}

void Encode(Writer &out, Transaction const &tx)
{
  out.Fixed(tx.sender);
  out.U64(tx.nonce);
  out.Tag(static_cast<uint8_t>(tx.kind()));
  std::visit(PayloadEncoder{out}, tx.payload);
}

void Encode(Writer &out, SignedTransaction const &stx)
{
  Encode(out, stx.tx);
  out.Count(stx.signatures.size());
  for (auto const &sig : stx.signatures)
  {
    out.Fixed(sig.address);
    out.Fixed(sig.public_key);
    out.Fixed(sig.signature);
  }
}

Transaction DecodeTransaction(Reader &in)
{
  Transaction tx;
  tx.sender  = in.FixedValue<Address>();
  tx.nonce   = in.U64();
  auto kind  = static_cast<TxKind>(in.Tag(MAX_KIND));
  tx.payload = DecodePayload(in, kind);
  return tx;
}

SignedTransaction DecodeSignedTransaction(Reader &in)
{
  SignedTransaction stx;
  stx.tx               = DecodeTransaction(in);
  uint32_t const count = in.Count();
  stx.signatures.reserve(count);
  for (uint32_t i = 0; i < count; ++i)
  {
    crypto::Endorsement sig;
    sig.address    = in.FixedValue<Address>();
    sig.public_key = in.FixedValue<PublicKey>();
    sig.signature  = in.FixedValue<Signature>();
    stx.signatures.push_back(sig);
  }
  return stx;
}

Bytes EncodeTransaction(Transaction const &tx)
{
  Writer out;
  Encode(out, tx);
  return std::move(out).Take();
}

Bytes EncodeSignedTransaction(SignedTransaction const &stx)
{
  Writer out;
  Encode(out, stx);
  return std::move(out).Take();
}

SignedTransaction DecodeSignedTransaction(ByteSpan bytes)
{
  Reader in{bytes};
  auto   stx = DecodeSignedTransaction(in);
  in.ExpectEnd();
  return stx;
}

Digest32 TxId(Transaction const &tx)
{
  return crypto::Hash(EncodeTransaction(tx));
}

Digest32 TxId(SignedTransaction const &stx)
{
  return TxId(stx.tx);
}

SignedTransaction SignTransaction(Transaction tx, crypto::KeyPair const &keys)
{
  auto const message = EncodeTransaction(tx);
  return {std::move(tx), {crypto::Endorse(keys, message)}};
}

SignedTransaction SignTransaction(Transaction tx, std::span<crypto::KeyPair const> keys)
{
  auto const        message = EncodeTransaction(tx);
  SignedTransaction stx{std::move(tx), {}};
  for (auto const &key : keys)
  {
    stx.signatures.push_back(crypto::Endorse(key, message));
  }
  return stx;
}

}  // namespace ledger
}  // namespace gridex
