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

#include "gridex/ledger/codec.hpp"

#include <limits>

namespace gridex {
namespace ledger {

void Writer::Tag(uint8_t value)
{
  buffer_.push_back(value);
}

void Writer::U32(uint32_t value)
{
  for (int shift = 0; shift < 32; shift += 8)
  {
    buffer_.push_back(static_cast<uint8_t>(value >> shift));
  }
}

void Writer::U64(uint64_t value)
{
  for (int shift = 0; shift < 64; shift += 8)
  {
    buffer_.push_back(static_cast<uint8_t>(value >> shift));
  }
}

void Writer::Blob(ByteSpan bytes)
{
  Count(bytes.size());
  buffer_.insert(buffer_.end(), bytes.begin(), bytes.end());
}

void Writer::Count(std::size_t count)
{
  if (count > std::numeric_limits<uint32_t>::max())
  {
    throw std::length_error("sequence too long for canonical encoding");
  }
  U32(static_cast<uint32_t>(count));
}

DecodeError::DecodeError(std::string const &what, std::size_t offset)
  : std::runtime_error(what + " at offset " + std::to_string(offset))
  , offset_(offset)
{}

ByteSpan Reader::Take(std::size_t count)
{
  if (count > bytes_.size() - offset_)
  {
    Fail("unexpected end of input");
  }
  auto out = bytes_.subspan(offset_, count);
  offset_ += count;
  return out;
}

uint8_t Reader::Tag()
{
  return Take(1)[0];
}

uint8_t Reader::Tag(uint8_t max_value)
{
  std::size_t const at    = offset_;
  uint8_t const     value = Tag();
  if (value > max_value)
  {
    throw DecodeError("unknown tag " + std::to_string(value), at);
  }
  return value;
}

uint32_t Reader::U32()
{
  auto const raw = Take(4);
  uint32_t   out = 0;
  for (int i = 3; i >= 0; --i)
  {
    out = (out << 8) | raw[static_cast<std::size_t>(i)];
  }
  return out;
}

uint64_t Reader::U64()
{
  auto const raw = Take(8);
  uint64_t   out = 0;
  for (int i = 7; i >= 0; --i)
  {
    out = (out << 8) | raw[static_cast<std::size_t>(i)];
  }
  return out;
}

Bytes Reader::Blob()
{
  uint32_t const len = U32();
  auto const     raw = Take(len);
  return {raw.begin(), raw.end()};
}

uint32_t Reader::Count()
{
  std::size_t const at    = offset_;
  uint32_t const    count = U32();
  if (count > bytes_.size() - offset_)
  {
    throw DecodeError("list count exceeds remaining input", at);
  }
  return count;
}

void Reader::ExpectEnd() const
{
  if (!AtEnd())
  {
    Fail("trailing bytes");
  }
}

void Reader::Fail(std::string const &what) const
{
  throw DecodeError(what, offset_);
}

}  // namespace ledger
}  // namespace gridex
