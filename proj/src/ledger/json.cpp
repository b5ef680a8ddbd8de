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

#include "gridex/ledger/json.hpp"

namespace gridex {
namespace ledger {

using nlohmann::json;

namespace {

template <typename T>
T HexField(json const &doc, char const *key)
{
  return T::FromHex(doc.at(key).get<std::string>());
}

contract::SettlementMode ModeFromString(std::string const &mode)
{
  if (mode == "cash")
  {
    return contract::SettlementMode::Cash;
  }
  if (mode == "bond_allowed" || mode == "bond")
  {
    return contract::SettlementMode::BondAllowed;
  }
  throw std::invalid_argument("unknown settlement mode: " + mode);
}

std::vector<Address> AddressList(json const &doc, char const *key)
{
  std::vector<Address> out;
  if (doc.contains(key))
  {
    for (auto const &entry : doc.at(key))
    {
      out.push_back(Address::FromHex(entry.get<std::string>()));
    }
  }
  return out;
}

}  // namespace

json ToJson(Event const &event)
{
  json doc{{"kind", ToString(event.kind)}, {"amount", event.amount}};
  if (!event.from.IsZero())
  {
    doc["from"] = event.from.ToHex();
  }
  if (!event.to.IsZero())
  {
    doc["to"] = event.to.ToHex();
  }
  if (event.auction)
  {
    doc["auction"] = event.auction->ToHex();
  }
  if (event.lot)
  {
    doc["lot"] = event.lot->ToHex();
  }
  if (event.bond)
  {
    doc["bond"] = event.bond->ToHex();
  }
  return doc;
}

json ToJson(Receipt const &receipt)
{
  json doc{{"tx_id", receipt.tx_id.ToHex()},
           {"height", receipt.height},
           {"origin", receipt.origin == ReceiptOrigin::Transaction ? "transaction" : "finalization"},
           {"status", receipt.status.accepted() ? "accepted" : "rejected"}};
  if (!receipt.status.accepted())
  {
    doc["reason"] = ReasonCode(*receipt.status.reason());
  }
  doc["events"] = json::array();
  for (auto const &event : receipt.events)
  {
    doc["events"].push_back(ToJson(event));
  }
  return doc;
}

json ToJson(contract::Auction const &auction)
{
  json doc{{"id", auction.id.ToHex()},
           {"seller", auction.seller.ToHex()},
           {"lot", auction.lot.ToHex()},
           {"base_price", auction.base_price},
           {"min_increment", auction.min_increment},
           {"opened_height", auction.opened_height},
           {"deadline_height", auction.deadline_height},
           {"settlement_mode", contract::ToString(auction.mode)},
           {"status", contract::ToString(auction.status)}};
  if (auction.best_bid)
  {
    doc["best_bid"] = {{"bidder", auction.best_bid->bidder.ToHex()},
                       {"amount", auction.best_bid->amount},
                       {"escrowed", auction.best_bid->escrowed}};
  }
  else
  {
    doc["best_bid"] = nullptr;
  }
  return doc;
}

json ToJson(contract::EnergyLot const &lot)
{
  json doc{{"id", lot.id.ToHex()},
           {"kwh", lot.kwh},
           {"origin", lot.origin.ToHex()},
           {"owner", lot.owner.ToHex()}};
  doc["locked_in"] = lot.locked_in ? json(lot.locked_in->ToHex()) : json(nullptr);
  return doc;
}

json ToJson(contract::Bond const &bond)
{
  return {{"id", bond.id.ToHex()},
          {"auction", bond.auction.ToHex()},
          {"face_value", bond.face_value},
          {"issuer", bond.issuer.ToHex()},
          {"holder", bond.holder.ToHex()},
          {"maturity_height", bond.maturity_height},
          {"state", contract::ToString(bond.state)}};
}

json ToJson(Transaction const &tx)
{
  json doc{{"kind", ToString(tx.kind())}, {"sender", tx.sender.ToHex()}, {"nonce", tx.nonce}};
  std::visit(
      [&doc](auto const &p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Transfer>)
        {
          doc["to"]     = p.to.ToHex();
          doc["amount"] = p.amount;
        }
        else if constexpr (std::is_same_v<T, OpenAuction>)
        {
          doc["lot"]             = p.lot.ToHex();
          doc["base_price"]      = p.base_price;
          doc["min_increment"]   = p.min_increment;
          doc["duration_blocks"] = p.duration_blocks;
          doc["mode"]            = contract::ToString(p.mode);
        }
        else if constexpr (std::is_same_v<T, PlaceBid>)
        {
          doc["auction"] = p.auction.ToHex();
          doc["amount"]  = p.amount;
        }
        else if constexpr (std::is_same_v<T, MintLot>)
        {
          doc["kwh"] = p.kwh;
        }
        else if constexpr (std::is_same_v<T, TransferLot>)
        {
          doc["lot"] = p.lot.ToHex();
          doc["to"]  = p.to.ToHex();
        }
        else if constexpr (std::is_same_v<T, TransferBond>)
        {
          doc["bond"] = p.bond.ToHex();
          doc["to"]   = p.to.ToHex();
        }
        else if constexpr (std::is_same_v<T, RedeemBond>)
        {
          doc["bond"] = p.bond.ToHex();
        }
        else
        {
          doc["add"]    = json::array();
          doc["remove"] = json::array();
          for (auto const &a : p.add)
          {
            doc["add"].push_back(a.ToHex());
          }
          for (auto const &a : p.remove)
          {
            doc["remove"].push_back(a.ToHex());
          }
        }
      },
      tx.payload);
  return doc;
}

json ToJson(SignedTransaction const &stx)
{
  json doc{{"tx_id", TxId(stx).ToHex()}, {"tx", ToJson(stx.tx)}, {"hex", ToHex(EncodeSignedTransaction(stx))}};
  doc["signatures"] = json::array();
  for (auto const &sig : stx.signatures)
  {
    doc["signatures"].push_back({{"address", sig.address.ToHex()},
                                 {"public_key", sig.public_key.ToHex()},
                                 {"signature", sig.signature.ToHex()}});
  }
  return doc;
}

json ToJson(BlockHeader const &header)
{
  return {{"height", header.height},
          {"hash", HeaderHash(header).ToHex()},
          {"prev_hash", header.prev_hash.ToHex()},
          {"producer", header.producer.ToHex()},
          {"tick", header.tick},
          {"body_hash", header.body_hash.ToHex()}};
}

json ToJson(Block const &block)
{
  json doc{{"header", ToJson(block.header)}, {"producer_signature", block.producer_signature.ToHex()}};
  doc["txs"] = json::array();
  for (auto const &stx : block.txs)
  {
    doc["txs"].push_back(ToJson(stx));
  }
  return doc;
}

json ToJson(ProvenanceEntry const &entry)
{
  return {{"height", entry.height}, {"tx_id", entry.tx_id.ToHex()}, {"event", ToJson(entry.event)}};
}

Transaction TransactionFromJson(json const &doc, Address const &sender)
{
  Transaction tx;
  tx.sender = sender;
  tx.nonce  = doc.value("nonce", uint64_t{0});

  auto const kind = doc.at("kind").get<std::string>();
  if (kind == "transfer")
  {
    tx.payload = Transfer{HexField<Address>(doc, "to"), doc.at("amount").get<uint64_t>()};
  }
  else if (kind == "open_auction")
  {
    OpenAuction p;
    p.lot             = HexField<LotId>(doc, "lot");
    p.base_price      = doc.at("base_price").get<uint64_t>();
    p.min_increment   = doc.value("min_increment", uint64_t{0});
    p.duration_blocks = doc.value("duration_blocks", uint64_t{0});
    p.mode            = ModeFromString(doc.value("mode", std::string("cash")));
    tx.payload        = p;
  }
  else if (kind == "place_bid" || kind == "bid")
  {
    tx.payload = PlaceBid{HexField<AuctionId>(doc, "auction"), doc.at("amount").get<uint64_t>()};
  }
  else if (kind == "mint_lot")
  {
    tx.payload = MintLot{doc.at("kwh").get<uint64_t>()};
  }
  else if (kind == "transfer_lot")
  {
    tx.payload = TransferLot{HexField<LotId>(doc, "lot"), HexField<Address>(doc, "to")};
  }
  else if (kind == "transfer_bond")
  {
    tx.payload = TransferBond{HexField<BondId>(doc, "bond"), HexField<Address>(doc, "to")};
  }
  else if (kind == "redeem_bond")
  {
    tx.payload = RedeemBond{HexField<BondId>(doc, "bond")};
  }
  else if (kind == "registry_update")
  {
    tx.payload = MakeRegistryUpdate(AddressList(doc, "add"), AddressList(doc, "remove"));
  }
  else
  {
    throw std::invalid_argument("unknown transaction kind: " + kind);
  }
  return tx;
}

}  // namespace ledger
}  // namespace gridex
