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

#include "gridex/ledger/transaction.hpp"

namespace gridex {
namespace ledger {

struct BlockHeader
{
  uint64_t height{0};
  Digest32 prev_hash;
  Address  producer;
  uint64_t tick{0};
  Digest32 body_hash;

  friend bool operator==(BlockHeader const &, BlockHeader const &) = default;
};

struct Block
{
  BlockHeader                    header;
  std::vector<SignedTransaction> txs;
  Signature                      producer_signature;

  friend bool operator==(Block const &, Block const &) = default;
};

void        Encode(Writer &out, BlockHeader const &header);
void        Encode(Writer &out, Block const &block);
BlockHeader DecodeBlockHeader(Reader &in);
Block       DecodeBlock(Reader &in);

Bytes EncodeBlockHeader(BlockHeader const &header);
Bytes EncodeBlock(Block const &block);
Block DecodeBlock(ByteSpan bytes);

/// Block hash: hash of the canonical header.
Digest32 HeaderHash(BlockHeader const &header);

/// Flat hash over the canonical encoding of the transaction list.
Digest32 BodyHash(std::span<SignedTransaction const> txs);

/// Fills in the body hash and the producer signature over the canonical header.
Block SealBlock(BlockHeader header, std::vector<SignedTransaction> txs, crypto::KeyPair const &producer);

}  // namespace ledger
}  // namespace gridex
