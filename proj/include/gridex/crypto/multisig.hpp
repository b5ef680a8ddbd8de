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

#include "gridex/crypto/keys.hpp"

#include <vector>

namespace gridex {
namespace crypto {

/**
 * A signature paired with the signer's identity. Ed25519 has no public key
 * recovery, so the public key travels with the signature and must hash to the
 * claimed address.
 */
struct Endorsement
{
  Address   address;
  PublicKey public_key;
  Signature signature;

  friend bool operator==(Endorsement const &, Endorsement const &) = default;
};

Endorsement Endorse(KeyPair const &keys, ByteSpan message);

/// True iff the public key hashes to the address and the signature verifies.
bool VerifyEndorsement(Endorsement const &endorsement, ByteSpan message);

constexpr std::size_t MULTISIG_MIN_MEMBERS = 2;
constexpr std::size_t MULTISIG_MAX_MEMBERS = 16;

class MultisigAccount
{
public:
  MultisigAccount() = default;

  /// Throws std::invalid_argument on duplicate members, a member count outside
  /// 2..16 or a threshold outside 1..members.
  MultisigAccount(std::vector<Address> members, std::size_t threshold);

  std::vector<Address> const &members() const
  {
    return members_;
  }
  std::size_t threshold() const
  {
    return threshold_;
  }
  bool IsMember(Address const &address) const;

  /// Account address: first 20 bytes of a double hash over a domain tag,
  /// the threshold and the member list.
  Address address() const;

  friend bool operator==(MultisigAccount const &, MultisigAccount const &) = default;

private:
  std::vector<Address> members_;
  std::size_t          threshold_{0};
};

/// Counts distinct members with a valid endorsement over the message. Non-member
/// and repeated endorsements are ignored.
std::size_t CountValidMembers(MultisigAccount const &account, ByteSpan message,
                              std::span<Endorsement const> endorsements);

bool VerifyMultisig(MultisigAccount const &account, ByteSpan message,
                    std::span<Endorsement const> endorsements);

}  // namespace crypto
}  // namespace gridex
