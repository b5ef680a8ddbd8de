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

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gridex {

using Bytes    = std::vector<uint8_t>;
using ByteSpan = std::span<uint8_t const>;

std::string ToHex(ByteSpan bytes);

/// Parses lowercase or uppercase hex without prefix. Throws std::invalid_argument.
Bytes FromHex(std::string_view hex);

inline ByteSpan AsBytes(std::string_view text)
{
  return {reinterpret_cast<uint8_t const *>(text.data()), text.size()};
}

/**
 * Fixed-width byte string. The tag parameter keeps digests, addresses, keys and
 * the various asset identifiers from being mixed up at compile time.
 */
template <std::size_t N, typename Tag>
class FixedBytes
{
public:
  static constexpr std::size_t SIZE = N;
  using Array                       = std::array<uint8_t, N>;

  constexpr FixedBytes() = default;
  constexpr explicit FixedBytes(Array const &bytes)
    : bytes_(bytes)
  {}

  static FixedBytes FromSpan(ByteSpan bytes)
  {
    if (bytes.size() != N)
    {
      throw std::invalid_argument("expected " + std::to_string(N) + " bytes, got " +
                                  std::to_string(bytes.size()));
    }
    FixedBytes out;
    std::copy(bytes.begin(), bytes.end(), out.bytes_.begin());
    return out;
  }

  static FixedBytes FromHex(std::string_view hex)
  {
    auto const raw = gridex::FromHex(hex);
    return FromSpan(raw);
  }

  /// Reinterprets another fixed-width value of the same size (e.g. a digest as a lot id).
  template <typename OtherTag>
  static FixedBytes From(FixedBytes<N, OtherTag> const &other)
  {
    return FixedBytes{other.array()};
  }

  std::string ToHex() const
  {
    return gridex::ToHex(span());
  }

  Array const &array() const
  {
    return bytes_;
  }
  Array &array()
  {
    return bytes_;
  }
  ByteSpan span() const
  {
    return {bytes_.data(), N};
  }
  uint8_t const *data() const
  {
    return bytes_.data();
  }
  uint8_t *data()
  {
    return bytes_.data();
  }
  static constexpr std::size_t size()
  {
    return N;
  }
  auto begin() const
  {
    return bytes_.begin();
  }
  auto end() const
  {
    return bytes_.end();
  }

  bool IsZero() const
  {
    return std::all_of(bytes_.begin(), bytes_.end(), [](uint8_t b) { return b == 0; });
  }

  friend auto operator<=>(FixedBytes const &, FixedBytes const &) = default;
  friend bool operator==(FixedBytes const &, FixedBytes const &)  = default;

private:
  Array bytes_{};
};

struct DigestTag;
struct AddressTag;
struct PublicKeyTag;
struct PrivateKeyTag;
struct SignatureTag;
struct LotTag;
struct AuctionTag;
struct BondTag;

using Digest32   = FixedBytes<32, DigestTag>;
using Address    = FixedBytes<20, AddressTag>;
using PublicKey  = FixedBytes<32, PublicKeyTag>;
using PrivateKey = FixedBytes<32, PrivateKeyTag>;
using Signature  = FixedBytes<64, SignatureTag>;
using LotId      = FixedBytes<32, LotTag>;
using AuctionId  = FixedBytes<32, AuctionTag>;
using BondId     = FixedBytes<32, BondTag>;

}  // namespace gridex
