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

#include <initializer_list>

namespace gridex {
namespace crypto {

/// SHA-256 of the input.
Digest32 Hash(ByteSpan data);

/// SHA-256 over the concatenation of the parts.
Digest32 HashConcat(std::initializer_list<ByteSpan> parts);

/// Initialises libsodium once per process. Every entry point in this module calls it.
void EnsureInitialised();

}  // namespace crypto
}  // namespace gridex
