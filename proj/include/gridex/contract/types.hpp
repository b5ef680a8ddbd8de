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

#include "gridex/consensus/schedule.hpp"
#include "gridex/crypto/multisig.hpp"

#include <optional>

namespace gridex {
namespace contract {

enum class SettlementMode : uint8_t
{
  Cash        = 0,
  BondAllowed = 1,
};

enum class AuctionStatus : uint8_t
{
  Open      = 0,
  Settled   = 1,
  Discarded = 2,
};

enum class BondState : uint8_t
{
  Outstanding = 0,
  Redeemed    = 1,
  Defaulted   = 2,
};

struct BestBid
{
  Address  bidder;
  uint64_t amount{0};
  uint64_t escrowed{0};

  friend bool operator==(BestBid const &, BestBid const &) = default;
};

/// On-chain English auction. Its id is the id of the transaction that opened it.
struct Auction
{
  AuctionId              id;
  Address                seller;
  LotId                  lot;
  uint64_t               base_price{0};
  uint64_t               min_increment{0};
  uint64_t               opened_height{0};
  uint64_t               deadline_height{0};
  SettlementMode         mode{SettlementMode::Cash};
  std::optional<BestBid> best_bid;
  AuctionStatus          status{AuctionStatus::Open};

  bool IsOpen() const
  {
    return status == AuctionStatus::Open;
  }

  friend bool operator==(Auction const &, Auction const &) = default;
};

/// Indivisible quantity of energy with a single owner.
struct EnergyLot
{
  LotId                    id;
  uint64_t                 kwh{0};
  Address                  origin;
  Address                  owner;
  std::optional<AuctionId> locked_in;

  friend bool operator==(EnergyLot const &, EnergyLot const &) = default;
};

/// Non-fungible debt token minted when a bond-mode auction settles.
struct Bond
{
  BondId    id;
  AuctionId auction;
  uint64_t  face_value{0};
  Address   issuer;
  Address   holder;
  uint64_t  maturity_height{0};
  BondState state{BondState::Outstanding};

  friend bool operator==(Bond const &, Bond const &) = default;
};

struct ProtocolParams
{
  uint64_t                     gas_fee{10};
  uint64_t                     default_min_increment{1};
  uint64_t                     default_auction_duration{20};
  uint64_t                     bond_maturity_delta{100};
  crypto::MultisigAccount      authority_account;
  consensus::AuthoritySchedule schedule;

  friend bool operator==(ProtocolParams const &, ProtocolParams const &) = default;
};

char const *ToString(SettlementMode mode);
char const *ToString(AuctionStatus status);
char const *ToString(BondState state);

}  // namespace contract
}  // namespace gridex
