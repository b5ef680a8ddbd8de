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

#include "gridex/ledger/block.hpp"
#include "gridex/crypto/hash.hpp"

namespace gridex {
namespace ledger {
namespace {

void EncodeTxList(Writer &out, std::span<SignedTransaction const> txs)
{
  out.Count(txs.size());
  for (auto const &stx : txs)
  {
    Encode(out, stx);
  }
}

}  // namespace

void Encode(Writer &out, BlockHeader const &header)
{
  out.U64(header.height);
  out.Fixed(header.prev_hash);
  out.Fixed(header.producer);
  out.U64(header.tick);
  out.Fixed(header.body_hash);
}

void Encode(Writer &out, Block const &block)
{
  Encode(out, block.header);
  EncodeTxList(out, block.txs);
  out.Fixed(block.producer_signature);
}

BlockHeader DecodeBlockHeader(Reader &in)
{
  BlockHeader header;
  header.height    = in.U64();
  header.prev_hash = in.FixedValue<Digest32>();
  header.producer  = in.FixedValue<Address>();
  header.tick      = in.U64();
  header.body_hash = in.FixedValue<Digest32>();
  return header;
}

Block DecodeBlock(Reader &in)
{
  Block block;
  block.header         = DecodeBlockHeader(in);
  uint32_t const count = in.Count();
  block.txs.reserve(count);
  for (uint32_t i = 0; i < count; ++i)
  {
    block.txs.push_back(DecodeSignedTransaction(in));
  }
  block.producer_signature = in.FixedValue<Signature>();
  return block;
}

Bytes EncodeBlockHeader(BlockHeader const &header)
{
  Writer out;
  Encode(out, header);
  return std::move(out).Take();
}

Bytes EncodeBlock(Block const &block)
{
  Writer out;
  Encode(out, block);
  return std::move(out).Take();
}

Block DecodeBlock(ByteSpan bytes)
{
  Reader in{bytes};
  auto   block = DecodeBlock(in);
  in.ExpectEnd();
  return block;
}

Digest32 HeaderHash(BlockHeader const &header)
{
  return crypto::Hash(EncodeBlockHeader(header));
}

Digest32 BodyHash(std::span<SignedTransaction const> txs)
{
  Writer out;
  EncodeTxList(out, txs);
  return crypto::Hash(out.bytes());
}

Block SealBlock(BlockHeader header, std::vector<SignedTransaction> txs, crypto::KeyPair const &producer)
{
  header.body_hash = BodyHash(txs);
  Block block{header, std::move(txs), {}};
  block.producer_signature = producer.Sign(EncodeBlockHeader(block.header));
  return block;
}

}  // namespace ledger
}  // namespace gridex
