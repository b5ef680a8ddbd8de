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

#include "gridex/crypto/hash.hpp"

#include <sodium.h>

namespace gridex {
namespace crypto {

void EnsureInitialised()
{
  static bool const ready = [] {
    if (sodium_init() < 0)
    {
      throw std::runtime_error("libsodium failed to initialise");
    }
    return true;
  }();
  (void)ready;
}

Digest32 Hash(ByteSpan data)
{
  EnsureInitialised();

  Digest32 out;
  crypto_hash_sha256(out.data(), data.data(), data.size());
  return out;
}

Digest32 HashConcat(std::initializer_list<ByteSpan> parts)
{
  EnsureInitialised();

  crypto_hash_sha256_state state;
  crypto_hash_sha256_init(&state);
  for (auto const &part : parts)
  {
    crypto_hash_sha256_update(&state, part.data(), part.size());
  }

  Digest32 out;
  crypto_hash_sha256_final(&state, out.data());
  return out;
}

}  // namespace crypto
}  // namespace gridex
