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

#include <stdexcept>

namespace gridex {
namespace ledger {

/**
 * Canonical binary encoding.
 *
 *  - unsigned integers: 64-bit little-endian
 *  - byte strings (including fixed-width ids): u32 little-endian length, then bytes
 *  - enums and optionals: one tag byte, then the payload fields in order
 *  - lists: u32 little-endian count, then elements
 *  - maps and sets: lists sorted by key bytes ascending
 */
class Writer
{
public:
  void Tag(uint8_t value);
  void U32(uint32_t value);
  void U64(uint64_t value);
  void Blob(ByteSpan bytes);
  void Count(std::size_t count);

  template <std::size_t N, typename T>
  void Fixed(FixedBytes<N, T> const &value)
  {
    Blob(value.span());
  }

  Bytes const &bytes() const &
  {
    return buffer_;
  }
  Bytes Take() &&
  {
    return std::move(buffer_);
  }

private:
  Bytes buffer_;
};

class DecodeError : public std::runtime_error
{
public:
  DecodeError(std::string const &what, std::size_t offset);

  std::size_t offset() const
  {
    return offset_;
  }

private:
  std::size_t offset_;
};

class Reader
{
public:
  explicit Reader(ByteSpan bytes)
    : bytes_(bytes)
  {}

  uint8_t  Tag();
  uint8_t  Tag(uint8_t max_value);
  uint32_t U32();
  uint64_t U64();
  Bytes    Blob();
  /// List length; bounded by the remaining input so corrupt counts cannot force huge allocations.
  uint32_t Count();

  template <typename Fixed>
  Fixed FixedValue()
  {
    std::size_t const at  = offset_;
    uint32_t const    len = U32();
    if (len != Fixed::SIZE)
    {
      throw DecodeError("fixed-width field has wrong length", at);
    }
    auto const raw = Take(len);
    return Fixed::FromSpan(raw);
  }

  std::size_t offset() const
  {
    return offset_;
  }
  bool AtEnd() const
  {
    return offset_ == bytes_.size();
  }
  void ExpectEnd() const;
  [[noreturn]] void Fail(std::string const &what) const;

private:
  ByteSpan Take(std::size_t count);

  ByteSpan    bytes_;
  std::size_t offset_{0};
};

}  // namespace ledger
}  // namespace gridex
