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

#include "gridex/crypto/keys.hpp"
#include "gridex/crypto/hash.hpp"

#include <sodium.h>

namespace gridex {
namespace crypto {

KeyPair KeyPair::FromSeed(ByteSpan seed)
{
  EnsureInitialised();

  if (seed.size() != crypto_sign_SEEDBYTES)
  {
    throw std::invalid_argument("key seed must be 32 bytes, got " + std::to_string(seed.size()));
  }

  KeyPair pair;
  pair.seed_ = PrivateKey::FromSpan(seed);
  crypto_sign_seed_keypair(pair.public_key_.data(), pair.expanded_.data(), pair.seed_.data());
  return pair;
}

Address KeyPair::address() const
{
  return DeriveAddress(public_key_);
}

Signature KeyPair::Sign(ByteSpan message) const
{
  Signature sig;
  crypto_sign_detached(sig.data(), nullptr, message.data(), message.size(), expanded_.data());
  return sig;
}

KeyPair GenerateKeyPair(ByteSpan entropy)
{
  return KeyPair::FromSeed(entropy);
}

KeyPair KeyPairFromLabel(std::string_view label)
{
  return KeyPair::FromSeed(Hash(AsBytes(label)).span());
}

Address DeriveAddress(PublicKey const &public_key)
{
  Digest32 digest = Hash(public_key.span());
  for (std::size_t round = 1; round < ADDRESS_HASH_ROUNDS; ++round)
  {
    digest = Hash(digest.span());
  }
  return Address::FromSpan(digest.span().first(Address::SIZE));
}

Signature Sign(PrivateKey const &private_key, ByteSpan message)
{
  return KeyPair::FromSeed(private_key.span()).Sign(message);
}

bool Verify(PublicKey const &public_key, ByteSpan message, Signature const &signature)
{
  EnsureInitialised();
  return crypto_sign_verify_detached(signature.data(), message.data(), message.size(),
                                     public_key.data()) == 0;
}

}  // namespace crypto
}  // namespace gridex
