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

#include "gridex/crypto/multisig.hpp"
#include "gridex/crypto/hash.hpp"

#include <set>

namespace gridex {
namespace crypto {

Endorsement Endorse(KeyPair const &keys, ByteSpan message)
{
  return {keys.address(), keys.public_key(), keys.Sign(message)};
}

bool VerifyEndorsement(Endorsement const &endorsement, ByteSpan message)
{
  return DeriveAddress(endorsement.public_key) == endorsement.address &&
         Verify(endorsement.public_key, message, endorsement.signature);
}

MultisigAccount::MultisigAccount(std::vector<Address> members, std::size_t threshold)
  : members_(std::move(members))
  , threshold_(threshold)
{
  if (members_.size() < MULTISIG_MIN_MEMBERS || members_.size() > MULTISIG_MAX_MEMBERS)
  {
    throw std::invalid_argument("multisig account needs 2..16 members");
  }
  if (std::set<Address>(members_.begin(), members_.end()).size() != members_.size())
  {
    throw std::invalid_argument("multisig members must be distinct");
  }
  if (threshold_ < 1 || threshold_ > members_.size())
  {
    throw std::invalid_argument("multisig threshold must be within 1..members");
  }
}

bool MultisigAccount::IsMember(Address const &address) const
{
  return std::find(members_.begin(), members_.end(), address) != members_.end();
}

Address MultisigAccount::address() const
{
  static constexpr std::string_view DOMAIN = "gridex.multisig";

  Bytes buffer(DOMAIN.begin(), DOMAIN.end());
  for (int shift = 0; shift < 64; shift += 8)
  {
    buffer.push_back(static_cast<uint8_t>(static_cast<uint64_t>(threshold_) >> shift));
  }
  for (auto const &member : members_)
  {
    buffer.insert(buffer.end(), member.begin(), member.end());
  }

  Digest32 const digest = Hash(Hash(buffer).span());
  return Address::FromSpan(digest.span().first(Address::SIZE));
}

std::size_t CountValidMembers(MultisigAccount const &account, ByteSpan message,
                              std::span<Endorsement const> endorsements)
{
  std::set<Address> counted;
  for (auto const &endorsement : endorsements)
  {
    if (!account.IsMember(endorsement.address) || counted.count(endorsement.address) != 0)
    {
      continue;
    }
    if (VerifyEndorsement(endorsement, message))
    {
      counted.insert(endorsement.address);
    }
  }
  return counted.size();
}

bool VerifyMultisig(MultisigAccount const &account, ByteSpan message,
                    std::span<Endorsement const> endorsements)
{
  if (account.threshold() == 0)
  {
    return false;
  }
  return CountValidMembers(account, message, endorsements) >= account.threshold();
}

}  // namespace crypto
}  // namespace gridex
