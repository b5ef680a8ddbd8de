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

#include "gridex/crypto/bytes.hpp"

namespace gridex {
namespace {

int HexValue(char c)
{
  if (c >= '0' && c <= '9')
  {
    return c - '0';
  }
  if (c >= 'a' && c <= 'f')
  {
    return c - 'a' + 10;
  }
  if (c >= 'A' && c <= 'F')
  {
    return c - 'A' + 10;
  }
  return -1;
}

}  // namespace

std::string ToHex(ByteSpan bytes)
{
  static constexpr char DIGITS[] = "0123456789abcdef";

  std::string out;
  out.reserve(bytes.size() * 2);
  for (uint8_t b : bytes)
  {
    out.push_back(DIGITS[b >> 4]);
    out.push_back(DIGITS[b & 0x0f]);
  }
  return out;
}

Bytes FromHex(std::string_view hex)
{
  if (hex.size() % 2 != 0)
  {
    throw std::invalid_argument("hex string has odd length");
  }

  Bytes out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2)
  {
    int const hi = HexValue(hex[i]);
    int const lo = HexValue(hex[i + 1]);
    if (hi < 0 || lo < 0)
    {
      throw std::invalid_argument("invalid hex character");
    }
    out.push_back(static_cast<uint8_t>((hi << 4) | lo));
  }
  return out;
}

}  // namespace gridex
