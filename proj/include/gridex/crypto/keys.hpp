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

namespace gridex {
namespace crypto {

/// Number of hash rounds applied to a public key to form its address.
constexpr std::size_t ADDRESS_HASH_ROUNDS = 2;

/**
 * Ed25519 key pair derived deterministically from a 32-byte seed. The seed is
 * the private key; the expanded signing key is cached alongside it.
 */
class KeyPair
{
public:
  static KeyPair FromSeed(ByteSpan seed);

  PrivateKey const &private_key() const
  {
    return seed_;
  }
  PublicKey const &public_key() const
  {
    return public_key_;
  }
  Address address() const;

  Signature Sign(ByteSpan message) const;

private:
  KeyPair() = default;

  PrivateKey               seed_;
  PublicKey                public_key_;
  std::array<uint8_t, 64>  expanded_{};
};

/// Throws std::invalid_argument unless the entropy is exactly 32 bytes.
KeyPair GenerateKeyPair(ByteSpan entropy);

/// Convenience for tests and simulations: the seed is the hash of a label.
KeyPair KeyPairFromLabel(std::string_view label);

/// First 20 bytes of Hash(Hash(public_key)).
Address DeriveAddress(PublicKey const &public_key);

Signature Sign(PrivateKey const &private_key, ByteSpan message);

/// Never throws; malformed keys or signatures simply fail verification.
bool Verify(PublicKey const &public_key, ByteSpan message, Signature const &signature);

}  // namespace crypto
}  // namespace gridex
