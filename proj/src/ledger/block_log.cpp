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

#include "gridex/ledger/block_log.hpp"

#include <iterator>

namespace gridex {
namespace ledger {
namespace {

void AppendRecord(Bytes &out, Block const &block)
{
  auto const body = EncodeBlock(block);
  auto const len  = static_cast<uint32_t>(body.size());
  for (int shift = 0; shift < 32; shift += 8)
  {
    out.push_back(static_cast<uint8_t>(len >> shift));
  }
  out.insert(out.end(), body.begin(), body.end());
}

Bytes ReadFile(std::filesystem::path const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    throw std::runtime_error("cannot open block log " + path.string());
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

LogCorruption::LogCorruption(std::string const &what, std::size_t offset)
  : std::runtime_error(what + " at offset " + std::to_string(offset))
  , offset_(offset)
{}

LoadedChain ParseBlockLog(ByteSpan bytes)
{
  if (bytes.size() < BLOCK_LOG_MAGIC.size() ||
      !std::equal(BLOCK_LOG_MAGIC.begin(), BLOCK_LOG_MAGIC.end(), bytes.begin()))
  {
    throw LogCorruption("bad block log magic", 0);
  }

  LoadedChain loaded;
  std::size_t offset = BLOCK_LOG_MAGIC.size();
  while (offset < bytes.size())
  {
    std::size_t const remaining = bytes.size() - offset;
    if (remaining < 4)
    {
      break;
    }
    uint32_t len = 0;
    for (int i = 3; i >= 0; --i)
    {
      len = (len << 8) | bytes[offset + static_cast<std::size_t>(i)];
    }
    if (len > remaining - 4)
    {
      break;
    }

    try
    {
      loaded.blocks.push_back(DecodeBlock(bytes.subspan(offset + 4, len)));
    }
    catch (DecodeError const &err)
    {
      throw LogCorruption(std::string("undecodable record (") + err.what() + ")", offset);
    }
    offset += 4 + len;
  }

  loaded.valid_bytes     = offset;
  loaded.truncated_bytes = bytes.size() - offset;
  return loaded;
}

LoadedChain LoadChainFromLog(std::filesystem::path const &path)
{
  auto const bytes = ReadFile(path);
  return ParseBlockLog(bytes);
}

Bytes SerializeBlockLog(std::span<Block const> blocks)
{
  Bytes out(BLOCK_LOG_MAGIC.begin(), BLOCK_LOG_MAGIC.end());
  for (auto const &block : blocks)
  {
    AppendRecord(out, block);
  }
  return out;
}

BlockLogWriter::BlockLogWriter(std::filesystem::path path)
  : path_(std::move(path))
{
  if (std::filesystem::exists(path_) && std::filesystem::file_size(path_) > 0)
  {
    auto const loaded = LoadChainFromLog(path_);
    if (loaded.truncated_bytes > 0)
    {
      std::filesystem::resize_file(path_, loaded.valid_bytes);
    }
    out_.open(path_, std::ios::binary | std::ios::app);
  }
  else
  {
    out_.open(path_, std::ios::binary | std::ios::trunc);
    out_.write(reinterpret_cast<char const *>(BLOCK_LOG_MAGIC.data()), BLOCK_LOG_MAGIC.size());
    out_.flush();
  }
  if (!out_)
  {
    throw std::runtime_error("cannot open block log " + path_.string() + " for writing");
  }
}

void BlockLogWriter::Append(Block const &block)
{
  Bytes record;
  AppendRecord(record, block);
  out_.write(reinterpret_cast<char const *>(record.data()), static_cast<std::streamsize>(record.size()));
  out_.flush();
  if (!out_)
  {
    throw std::runtime_error("write to block log " + path_.string() + " failed");
  }
}

VerifyResult VerifyBlockLog(ByteSpan bytes, ChainState const &genesis)
{
  LoadedChain loaded;
  try
  {
    loaded = ParseBlockLog(bytes);
  }
  catch (LogCorruption const &err)
  {
    return {false, err.what(), std::nullopt};
  }
  if (loaded.truncated_bytes > 0)
  {
    return {false, "log ends with a partial record of " + std::to_string(loaded.truncated_bytes) + " bytes",
            std::nullopt};
  }
  return VerifyChain(loaded.blocks, genesis);
}

void AppendBlockToLog(std::filesystem::path const &path, Block const &block)
{
  BlockLogWriter writer(path);
  writer.Append(block);
}

}  // namespace ledger
}  // namespace gridex
