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

#include "gridex/crypto/bytes.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace gridex {
namespace ledger {

/// Closed set of rejection reasons, in no particular order.
enum class RejectReason : uint8_t
{
  BadSignature      = 0,
  BadNonce          = 1,
  NotQualified      = 2,
  InsufficientFunds = 3,
  NotOwner          = 4,
  LotLocked         = 5,
  BadParams         = 6,
  UnknownAuction    = 7,
  AuctionClosed     = 8,
  SelfBid           = 9,
  BidTooLow         = 10,
  UnknownLot        = 11,
  UnknownBond       = 12,
  NotHolder         = 13,
  BondClosed        = 14,
  NotMature         = 15,
  BadMultisig       = 16,
};

/// Machine code such as "BAD_NONCE".
char const *ReasonCode(RejectReason reason);
std::optional<RejectReason> ReasonFromCode(std::string_view code);

class TxStatus
{
public:
  static TxStatus Accepted()
  {
    return TxStatus{};
  }
  static TxStatus Rejected(RejectReason reason)
  {
    TxStatus status;
    status.reason_ = reason;
    return status;
  }

  bool accepted() const
  {
    return !reason_.has_value();
  }
  std::optional<RejectReason> const &reason() const
  {
    return reason_;
  }

  friend bool operator==(TxStatus const &, TxStatus const &) = default;

private:
  std::optional<RejectReason> reason_;
};

enum class EventKind : uint8_t
{
  Transferred,
  GasCharged,
  LotMinted,
  LotTransferred,
  AuctionOpened,
  BidAccepted,
  BidRefunded,
  AuctionSettled,
  AuctionDiscarded,
  BondMinted,
  BondTransferred,
  BondRedeemed,
  BondDefaulted,
  QualificationAdded,
  QualificationRemoved,
};

char const *ToString(EventKind kind);

/**
 * Structured contract event. Field use per kind:
 *
 *  Transferred            from -> to, amount
 *  GasCharged             from = payer, to = block producer, amount
 *  LotMinted              to = producer, lot, amount = kWh
 *  LotTransferred         from -> to, lot
 *  AuctionOpened          from = seller, auction, lot, amount = base price
 *  BidAccepted            from = bidder, auction, amount
 *  BidRefunded            to = refunded bidder, auction, amount
 *  AuctionSettled         from = seller, to = winner, auction, lot, amount = price
 *  AuctionDiscarded       from = seller, auction, lot
 *  BondMinted             from = issuer, to = holder, bond, auction, amount = face value
 *  BondTransferred        from -> to, bond
 *  BondRedeemed           from = issuer, to = holder, bond, amount
 *  BondDefaulted          from = issuer, to = holder, bond, amount
 *  QualificationAdded     to
 *  QualificationRemoved   to
 */
struct Event
{
  EventKind                kind{EventKind::Transferred};
  Address                  from;
  Address                  to;
  uint64_t                 amount{0};
  std::optional<AuctionId> auction;
  std::optional<LotId>     lot;
  std::optional<BondId>    bond;

  friend bool operator==(Event const &, Event const &) = default;
};

enum class ReceiptOrigin : uint8_t
{
  Transaction  = 0,
  Finalization = 1,
};

/// One per transaction in a block, plus one per auction finalized at the end of it.
/// Finalization receipts carry the auction id in tx_id.
struct Receipt
{
  Digest32           tx_id;
  uint64_t           height{0};
  ReceiptOrigin      origin{ReceiptOrigin::Transaction};
  TxStatus           status;
  std::vector<Event> events;

  friend bool operator==(Receipt const &, Receipt const &) = default;
};

}  // namespace ledger
}  // namespace gridex
