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

#include "gridex/ledger/receipt.hpp"

#include <array>
#include <utility>

namespace gridex {
namespace ledger {
namespace {

constexpr std::array<std::pair<RejectReason, char const *>, 17> REASON_CODES{{
    {RejectReason::BadSignature, "BAD_SIGNATURE"},
    {RejectReason::BadNonce, "BAD_NONCE"},
    {RejectReason::NotQualified, "NOT_QUALIFIED"},
    {RejectReason::InsufficientFunds, "INSUFFICIENT_FUNDS"},
    {RejectReason::NotOwner, "NOT_OWNER"},
    {RejectReason::LotLocked, "LOT_LOCKED"},
    {RejectReason::BadParams, "BAD_PARAMS"},
    {RejectReason::UnknownAuction, "UNKNOWN_AUCTION"},
    {RejectReason::AuctionClosed, "AUCTION_CLOSED"},
    {RejectReason::SelfBid, "SELF_BID"},
    {RejectReason::BidTooLow, "BID_TOO_LOW"},
    {RejectReason::UnknownLot, "UNKNOWN_LOT"},
    {RejectReason::UnknownBond, "UNKNOWN_BOND"},
    {RejectReason::NotHolder, "NOT_HOLDER"},
    {RejectReason::BondClosed, "BOND_CLOSED"},
    {RejectReason::NotMature, "NOT_MATURE"},
    {RejectReason::BadMultisig, "BAD_MULTISIG"},
}};

}  // namespace

char const *ReasonCode(RejectReason reason)
{
  for (auto const &[value, code] : REASON_CODES)
  {
    if (value == reason)
    {
      return code;
    }
  }
  return "INTERNAL";
}

std::optional<RejectReason> ReasonFromCode(std::string_view code)
{
  for (auto const &[value, name] : REASON_CODES)
  {
    if (code == name)
    {
      return value;
    }
  }
  return std::nullopt;
}

char const *ToString(EventKind kind)
{
  switch (kind)
  {
  case EventKind::Transferred:
    return "Transferred";
  case EventKind::GasCharged:
    return "GasCharged";
  case EventKind::LotMinted:
    return "LotMinted";
  case EventKind::LotTransferred:
    return "LotTransferred";
  case EventKind::AuctionOpened:
    return "AuctionOpened";
  case EventKind::BidAccepted:
    return "BidAccepted";
  case EventKind::BidRefunded:
    return "BidRefunded";
  case EventKind::AuctionSettled:
    return "AuctionSettled";
  case EventKind::AuctionDiscarded:
    return "AuctionDiscarded";
  case EventKind::BondMinted:
    return "BondMinted";
  case EventKind::BondTransferred:
    return "BondTransferred";
  case EventKind::BondRedeemed:
    return "BondRedeemed";
  case EventKind::BondDefaulted:
    return "BondDefaulted";
  case EventKind::QualificationAdded:
    return "QualificationAdded";
  case EventKind::QualificationRemoved:
    return "QualificationRemoved";
  }
  return "Unknown";
}

}  // namespace ledger
}  // namespace gridex
