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
#include "gridex/ledger/codec.hpp"

#include <map>
#include <set>

namespace gridex {
namespace ledger {

struct Account
{
  uint64_t balance{0};
  uint64_t nonce{0};

  bool IsEmpty() const
  {
    return balance == 0 && nonce == 0;
  }

  friend bool operator==(Account const &, Account const &) = default;
};

/**
 * Complete ledger state after the block at `height`. Treated as a value: block
 * application copies it and returns the successor.
 */
struct ChainState
{
  uint64_t height{0};
  Digest32 head_hash;
  uint64_t head_tick{0};
  uint64_t supply{0};

  contract::ProtocolParams params;

  std::map<Address, Account>             accounts;
  std::map<AuctionId, contract::Auction> auctions;
  std::map<LotId, contract::EnergyLot>   lots;
  std::map<BondId, contract::Bond>       bonds;
  std::set<Address>                      qualified;

  /// Returns an empty account for unknown addresses.
  Account const &account(Address const &address) const;
  Account       &MutableAccount(Address const &address);

  bool IsQualified(Address const &address) const
  {
    return qualified.count(address) != 0;
  }

  uint64_t TotalBalances() const;
  uint64_t TotalEscrow() const;

  /// sum(balances) + sum(open-auction escrow) == supply
  bool IsConserved() const
  {
    return TotalBalances() + TotalEscrow() == supply;
  }

  friend bool operator==(ChainState const &, ChainState const &) = default;
};

void       Encode(Writer &out, ChainState const &state);
ChainState DecodeChainState(Reader &in);
Bytes      EncodeChainState(ChainState const &state);

/// Hash of the canonical state encoding. Accounts that are entirely zero are
/// omitted so that a touched-but-empty account does not change the root.
Digest32 ComputeStateRoot(ChainState const &state);

}  // namespace ledger
}  // namespace gridex
