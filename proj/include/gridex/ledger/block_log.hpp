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

#include "gridex/ledger/block.hpp"
#include "gridex/ledger/chain.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace gridex {
namespace ledger {

/// "GXB1"
constexpr std::array<uint8_t, 4> BLOCK_LOG_MAGIC{0x47, 0x58, 0x42, 0x31};

class LogCorruption : public std::runtime_error
{
public:
  LogCorruption(std::string const &what, std::size_t offset);

  std::size_t offset() const
  {
    return offset_;
  }

private:
  std::size_t offset_;
};

struct LoadedChain
{
  std::vector<Block> blocks;
  std::size_t        valid_bytes{0};      ///< magic plus every complete record
  std::size_t        truncated_bytes{0};  ///< trailing partial record, if any
};

/**
 * Parses a log image: magic, then [u32 LE length][canonical block] records. A
 * trailing partial record is dropped and reported in truncated_bytes. A bad
 * magic or a complete record that does not decode throws LogCorruption with
 * the record's offset.
 */
LoadedChain ParseBlockLog(ByteSpan bytes);

LoadedChain LoadChainFromLog(std::filesystem::path const &path);

Bytes SerializeBlockLog(std::span<Block const> blocks);

/// Strict check of a log image: exact framing with no partial tail, then
/// VerifyChain from the genesis state. Never throws.
VerifyResult VerifyBlockLog(ByteSpan bytes, ChainState const &genesis);

/// Append-only writer. Opening a log truncates any trailing partial record first.
class BlockLogWriter
{
public:
  explicit BlockLogWriter(std::filesystem::path path);

  void Append(Block const &block);

private:
  std::filesystem::path path_;
  std::ofstream         out_;
};

/// One-shot append; creates the file with its magic when missing.
void AppendBlockToLog(std::filesystem::path const &path, Block const &block);

}  // namespace ledger
}  // namespace gridex
