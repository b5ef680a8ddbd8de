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

#include "../support/chain_driver.hpp"
#include "../support/workload.hpp"

#include "gridex/ledger/block_log.hpp"
#include "gridex/ledger/json.hpp"
#include "gridex/ledger/provenance.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

namespace gridex {
namespace ledger {
namespace {

using testing::ChainDriver;
using testing::Key;
using testing::Workload;

TEST(CodecTest, IntegerIsLittleEndian)
{
  Writer out;
  out.U64(1);
  EXPECT_EQ(ToHex(out.bytes()), "0100000000000000");
}

TEST(CodecTest, FixedValuesCarryLengthPrefix)
{
  Writer out;
  out.Fixed(Address{});
  EXPECT_EQ(out.bytes().size(), 4u + 20u);
  EXPECT_EQ(ToHex(ByteSpan(out.bytes()).first(4)), "14000000");
}

TEST(CodecTest, ReaderRejectsShortAndTrailingInput)
{
  Bytes const short_input{1, 2, 3};
  Reader      in(short_input);
  EXPECT_THROW(in.U64(), DecodeError);

  Writer out;
  out.U64(7);
  out.Tag(0);
  Reader trailing(out.bytes());
  EXPECT_EQ(trailing.U64(), 7u);
  EXPECT_THROW(trailing.ExpectEnd(), DecodeError);
}

TEST(CodecTest, SignedTransactionsRoundTrip)
{
  Workload    workload(11);
  ChainDriver driver(workload.config());
  for (int round = 0; round < 30; ++round)
  {
    auto txs = workload.Batch(driver, 20);
    for (auto const &stx : txs)
    {
      auto const bytes = EncodeSignedTransaction(stx);
      auto const back  = DecodeSignedTransaction(ByteSpan(bytes));
      ASSERT_EQ(back, stx);
      ASSERT_EQ(EncodeSignedTransaction(back), bytes);
    }
    driver.Produce(std::move(txs));
  }

  for (auto const &block : driver.blocks())
  {
    auto const bytes = EncodeBlock(block);
    ASSERT_EQ(EncodeBlock(DecodeBlock(ByteSpan(bytes))), bytes);
  }

  auto const state_bytes = EncodeChainState(driver.state());
  Reader     in(state_bytes);
  auto const state = DecodeChainState(in);
  in.ExpectEnd();
  EXPECT_EQ(state, driver.state());
  EXPECT_EQ(EncodeChainState(state), state_bytes);
}

TEST(CodecTest, DecodeRejectsTrailingBytes)
{
  auto const key   = Key("codec");
  auto       bytes = EncodeSignedTransaction(SignTransaction({key.address(), 0, MintLot{5}}, key));
  bytes.push_back(0);
  EXPECT_THROW(DecodeSignedTransaction(ByteSpan(bytes)), DecodeError);
}

TEST(StateRootTest, InsertionOrderDoesNotMatter)
{
  ChainState a;
  ChainState b;
  std::vector<Address> addresses;
  for (int i = 0; i < 10; ++i)
  {
    addresses.push_back(Key("root" + std::to_string(i)).address());
  }
  for (std::size_t i = 0; i < addresses.size(); ++i)
  {
    a.accounts[addresses[i]]                        = {i + 1, i};
    b.accounts[addresses[addresses.size() - 1 - i]] = {addresses.size() - i, addresses.size() - 1 - i};
  }
  EXPECT_EQ(EncodeChainState(a), EncodeChainState(b));
  EXPECT_EQ(ComputeStateRoot(a), ComputeStateRoot(b));

  b.accounts[Key("untouched").address()] = {};
  EXPECT_EQ(ComputeStateRoot(a), ComputeStateRoot(b));
  b.accounts[addresses[0]].balance += 1;
  EXPECT_NE(ComputeStateRoot(a), ComputeStateRoot(b));
}

TEST(TransactionTest, IdCoversEverySignedField)
{
  auto const key = Key("id");
  Transaction tx{key.address(), 4, Transfer{Key("to").address(), 9}};
  auto const  id = TxId(tx);
  EXPECT_EQ(id, TxId(SignTransaction(tx, key)));
  EXPECT_EQ(id, crypto::Hash(EncodeTransaction(tx)));
  tx.nonce = 5;
  EXPECT_NE(id, TxId(tx));
}

TEST(TransactionTest, RegistryUpdateIsSortedAndUnique)
{
  auto const a      = Key("a").address();
  auto const b      = Key("b").address();
  auto const update = MakeRegistryUpdate({b, a, b}, {a});
  ASSERT_EQ(update.add.size(), 2u);
  EXPECT_LT(update.add[0], update.add[1]);
  EXPECT_EQ(update.remove.size(), 1u);
}

class ValidationTest : public ::testing::Test
{
protected:
  ValidationTest()
    : alice_(Key("alice"))
    , bob_(Key("bob"))
    , driver_([&] {
      auto config = ChainDriver::Config({{alice_, 100}});
      config.balances[bob_.address()] = 50;  // funded but never qualified
      return config;
    }())
  {}

  crypto::KeyPair alice_;
  crypto::KeyPair bob_;
  ChainDriver     driver_;
};

TEST_F(ValidationTest, WrongNonceIsBadNonce)
{
  auto stx = SignTransaction({alice_.address(), 3, Transfer{bob_.address(), 1}}, alice_);
  EXPECT_EQ(ValidateTransaction(driver_.state(), stx), TxStatus::Rejected(RejectReason::BadNonce));
}

TEST_F(ValidationTest, UnqualifiedCannotOpenAuction)
{
  OpenAuction open;
  open.base_price = 5;
  auto stx        = SignTransaction({bob_.address(), 0, open}, bob_);
  EXPECT_EQ(ValidateTransaction(driver_.state(), stx), TxStatus::Rejected(RejectReason::NotQualified));
}

TEST_F(ValidationTest, AffordableTransferIsAccepted)
{
  auto stx = SignTransaction({alice_.address(), 0, Transfer{bob_.address(), 100}}, alice_);
  EXPECT_EQ(ValidateTransaction(driver_.state(), stx), TxStatus::Accepted());
}

TEST_F(ValidationTest, SignatureFromAnotherKeyIsBadSignature)
{
  auto stx = SignTransaction({alice_.address(), 0, Transfer{bob_.address(), 1}}, bob_);
  EXPECT_EQ(ValidateTransaction(driver_.state(), stx), TxStatus::Rejected(RejectReason::BadSignature));
  stx.signatures.clear();
  EXPECT_EQ(ValidateTransaction(driver_.state(), stx), TxStatus::Rejected(RejectReason::BadSignature));
}

TEST_F(ValidationTest, RejectedAfterNonceCheckStillConsumesNonce)
{
  auto const &receipts = driver_.Produce(driver_.Sign(alice_, Transfer{bob_.address(), 1000}));
  EXPECT_EQ(receipts[0].status, TxStatus::Rejected(RejectReason::InsufficientFunds));
  EXPECT_EQ(driver_.state().account(alice_.address()).nonce, 1u);

  auto forged          = SignTransaction({alice_.address(), 1, Transfer{bob_.address(), 1}}, bob_);
  auto const &rejected = driver_.Produce(forged);
  EXPECT_EQ(rejected[0].status, TxStatus::Rejected(RejectReason::BadSignature));
  EXPECT_EQ(driver_.state().account(alice_.address()).nonce, 1u);
}

class ApplyBlockTest : public ::testing::Test
{
protected:
  ApplyBlockTest()
    : alice_(Key("alice"))
    , bob_(Key("bob"))
    , driver_(ChainDriver::Config({{alice_, 100}, {bob_, 10}}))
  {}

  crypto::KeyPair alice_;
  crypto::KeyPair bob_;
  ChainDriver     driver_;
};

TEST_F(ApplyBlockTest, EmptyBlockOnlyAdvancesHead)
{
  auto const before = driver_.state();
  driver_.Produce();
  auto const &after = driver_.state();
  EXPECT_EQ(after.height, before.height + 1);
  EXPECT_EQ(after.head_hash, HeaderHash(driver_.blocks().back().header));
  EXPECT_EQ(after.accounts, before.accounts);
  EXPECT_EQ(after.lots, before.lots);
}

TEST_F(ApplyBlockTest, TransferMovesFundsAndKeepsSupply)
{
  driver_.Produce(driver_.Sign(alice_, Transfer{bob_.address(), 5}));
  EXPECT_EQ(driver_.state().account(alice_.address()).balance, 95u);
  EXPECT_EQ(driver_.state().account(bob_.address()).balance, 15u);
  EXPECT_EQ(driver_.state().supply, 110u);
  EXPECT_TRUE(driver_.state().IsConserved());
}

TEST_F(ApplyBlockTest, WrongProducerIsInvalid)
{
  auto config = ChainDriver::Config({{alice_, 100}});
  config.params.schedule.authorities.push_back({bob_.address(), bob_.public_key()});
  ChainDriver two(config);
  // Height 1 belongs to bob; the driver seals as the default producer.
  EXPECT_THROW(two.Produce(), InvalidBlock);
}

TEST_F(ApplyBlockTest, SealedHeaderChecks)
{
  auto block = driver_.Seal({});
  block.header.height += 1;
  EXPECT_THROW(ApplyBlock(driver_.state(), block), InvalidBlock);

  block = driver_.Seal({});
  block.header.prev_hash.array()[0] ^= 1;
  EXPECT_THROW(ApplyBlock(driver_.state(), block), InvalidBlock);

  block = driver_.Seal({driver_.Sign(alice_, MintLot{3})});
  block.txs.clear();
  EXPECT_THROW(ApplyBlock(driver_.state(), block), InvalidBlock);

  block = driver_.Seal({});
  block.producer_signature.array()[5] ^= 1;
  EXPECT_THROW(ApplyBlock(driver_.state(), block), InvalidBlock);

  block = driver_.Seal({});
  EXPECT_NO_THROW(ApplyBlock(driver_.state(), block));
}

TEST(GenesisTest, GenesisBlockIsDeterministicAndUnsigned)
{
  auto const config = ChainDriver::Config({{Key("g"), 10}});
  auto const a      = BuildGenesis(config);
  auto const b      = BuildGenesis(config);
  EXPECT_EQ(EncodeBlock(a.block), EncodeBlock(b.block));
  EXPECT_TRUE(a.block.producer_signature.IsZero());
  EXPECT_TRUE(a.block.txs.empty());
  EXPECT_EQ(a.state.head_hash, HeaderHash(a.block.header));
  EXPECT_EQ(a.state.supply, 10u);
}

TEST(GenesisTest, JsonRoundTrip)
{
  Workload   workload(4);
  auto const doc    = GenesisToJson(workload.config());
  auto const config = GenesisFromJson(nlohmann::json::parse(doc.dump()));
  EXPECT_EQ(config.params, workload.config().params);
  EXPECT_EQ(config.balances, workload.config().balances);
  EXPECT_EQ(config.qualified, workload.config().qualified);
}

TEST(GenesisTest, RejectsEmptySchedule)
{
  GenesisConfig config;
  EXPECT_THROW(BuildGenesis(config), std::invalid_argument);
}

class ChainFixture : public ::testing::Test
{
protected:
  static void SetUpTestSuite()
  {
    workload_ = new Workload(21);
    driver_   = new ChainDriver(workload_->config());
    while (driver_->state().height < 50)
    {
      driver_->Produce(workload_->Batch(*driver_, 4));
    }
  }
  static void TearDownTestSuite()
  {
    delete driver_;
    delete workload_;
  }

  static Workload    *workload_;
  static ChainDriver *driver_;
};

Workload    *ChainFixture::workload_ = nullptr;
ChainDriver *ChainFixture::driver_   = nullptr;

TEST_F(ChainFixture, HonestChainVerifies)
{
  auto const result = VerifyChain(driver_->blocks(), driver_->genesis().state);
  EXPECT_TRUE(result.ok) << result.reason;
}

TEST_F(ChainFixture, ReplayReproducesState)
{
  auto const replay = ReplayChain(driver_->blocks(), driver_->genesis().state);
  EXPECT_EQ(replay.state, driver_->state());
  EXPECT_EQ(replay.receipts, driver_->receipts());
}

TEST_F(ChainFixture, EveryByteOfBlockTenMatters)
{
  auto blocks = driver_->blocks();
  auto bytes  = EncodeBlock(blocks[10]);
  ASSERT_GT(blocks[10].txs.size(), 0u);
  for (std::size_t offset = 0; offset < bytes.size(); ++offset)
  {
    bytes[offset] ^= 0xFF;
    bool rejected = false;
    try
    {
      blocks[10] = DecodeBlock(ByteSpan(bytes));
      rejected   = !VerifyChain(blocks, driver_->genesis().state).ok;
    }
    catch (DecodeError const &)
    {
      rejected = true;
    }
    ASSERT_TRUE(rejected) << "offset " << offset;
    bytes[offset] ^= 0xFF;
  }
}

TEST_F(ChainFixture, DuplicateHeightFails)
{
  auto blocks = driver_->blocks();
  blocks.insert(blocks.begin() + 5, blocks[5]);
  EXPECT_FALSE(VerifyChain(blocks, driver_->genesis().state).ok);
}

TEST_F(ChainFixture, ReorderedTransactionsFail)
{
  auto blocks = driver_->blocks();
  auto &txs   = blocks[7].txs;
  ASSERT_GE(txs.size(), 2u);
  std::swap(txs[0], txs[1]);
  EXPECT_FALSE(VerifyChain(blocks, driver_->genesis().state).ok);
}

TEST_F(ChainFixture, WrongGenesisFails)
{
  auto other = workload_->config();
  other.balances.begin()->second += 1;
  EXPECT_FALSE(VerifyChain(driver_->blocks(), BuildGenesis(other).state).ok);
}

TEST_F(ChainFixture, LogRoundTripsThroughFile)
{
  auto const path = std::filesystem::temp_directory_path() / "gridex_log_roundtrip.bin";
  std::filesystem::remove(path);
  for (auto const &block : driver_->blocks())
  {
    AppendBlockToLog(path, block);
  }
  auto const loaded = LoadChainFromLog(path);
  EXPECT_EQ(loaded.blocks, driver_->blocks());
  EXPECT_EQ(loaded.truncated_bytes, 0u);
  std::filesystem::remove(path);
}

TEST_F(ChainFixture, PartialTailIsDroppedOnLoadButFailsStrictVerify)
{
  auto       log   = SerializeBlockLog(driver_->blocks());
  auto const whole = log.size();
  log.resize(whole - 7);
  auto const parsed = ParseBlockLog(log);
  EXPECT_EQ(parsed.blocks.size(), driver_->blocks().size() - 1);
  EXPECT_GT(parsed.truncated_bytes, 0u);
  EXPECT_EQ(parsed.valid_bytes + parsed.truncated_bytes, log.size());
  EXPECT_FALSE(VerifyBlockLog(log, driver_->genesis().state).ok);
}

TEST_F(ChainFixture, WriterTruncatesPartialTail)
{
  auto const path = std::filesystem::temp_directory_path() / "gridex_log_tail.bin";
  auto       log  = SerializeBlockLog(std::span(driver_->blocks()).first(10));
  log.resize(log.size() - 3);
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<char const *>(log.data()), static_cast<std::streamsize>(log.size()));
  }
  {
    BlockLogWriter writer(path);
    writer.Append(driver_->blocks()[9]);
  }
  auto const loaded = LoadChainFromLog(path);
  EXPECT_EQ(loaded.truncated_bytes, 0u);
  EXPECT_EQ(loaded.blocks, std::vector<Block>(driver_->blocks().begin(), driver_->blocks().begin() + 10));
  std::filesystem::remove(path);
}

TEST_F(ChainFixture, InteriorCorruptionReportsOffset)
{
  auto log = SerializeBlockLog(driver_->blocks());
  log[4]   = 0xFF;  // first record length
  log[5]   = 0xFF;
  log[6]   = 0xFF;
  log[7]   = 0x7F;
  try
  {
    auto const parsed = ParseBlockLog(log);
    EXPECT_GT(parsed.truncated_bytes, 0u);
  }
  catch (LogCorruption const &err)
  {
    EXPECT_EQ(err.offset(), 4u);
  }

  log = SerializeBlockLog(driver_->blocks());
  log[0] ^= 1;
  EXPECT_THROW(ParseBlockLog(log), LogCorruption);
}

TEST_F(ChainFixture, TraceMatchesLinearScan)
{
  std::size_t traced = 0;
  for (auto const &[id, lot] : driver_->state().lots)
  {
    std::vector<ProvenanceEntry> scan;
    for (auto const &batch : driver_->receipts())
    {
      for (auto const &receipt : batch)
      {
        for (auto const &event : receipt.events)
        {
          bool const moves = event.kind == EventKind::LotMinted || event.kind == EventKind::LotTransferred ||
                             event.kind == EventKind::AuctionSettled;
          if (moves && event.lot == id)
          {
            scan.push_back({receipt.height, receipt.tx_id, event});
          }
        }
      }
    }
    auto const trace = TraceLot(driver_->blocks(), driver_->genesis().state, id);
    ASSERT_EQ(trace, scan);
    ASSERT_EQ(trace.front().event.kind, EventKind::LotMinted);
    for (std::size_t i = 1; i < trace.size(); ++i)
    {
      ASSERT_EQ(trace[i].event.from, trace[i - 1].event.to);
    }
    EXPECT_EQ(trace.back().event.to, lot.owner);
    traced += trace.size() > 1 ? 1 : 0;
  }
  EXPECT_GT(traced, 0u);
}

TEST(ProvenanceTest, BaseCases)
{
  auto const  seller = Key("seller");
  auto const  buyer  = Key("buyer");
  ChainDriver driver(ChainDriver::Config({{seller, 100}, {buyer, 100}}));

  auto mint = driver.Sign(seller, MintLot{10});
  driver.Produce(mint);
  auto const lot = LotId::From(TxId(mint));
  auto       trace = TraceLot(driver.blocks(), driver.genesis().state, lot);
  ASSERT_EQ(trace.size(), 1u);
  EXPECT_EQ(trace[0].event.kind, EventKind::LotMinted);

  OpenAuction open;
  open.lot             = lot;
  open.base_price      = 8;
  open.duration_blocks = 2;
  auto opened          = driver.Sign(seller, open);
  driver.Produce(opened);
  driver.Produce(driver.Sign(buyer, PlaceBid{AuctionId::From(TxId(opened)), 8}));
  driver.AdvanceTo(driver.state().height + 2);

  trace = TraceLot(driver.blocks(), driver.genesis().state, lot);
  ASSERT_EQ(trace.size(), 2u);
  EXPECT_EQ(trace[1].event.kind, EventKind::AuctionSettled);
  EXPECT_EQ(trace[1].event.to, buyer.address());

  EXPECT_THROW(TraceLot(driver.blocks(), driver.genesis().state, LotId{}), UnknownLotError);
}

TEST(JsonTest, SignedTransactionCarriesIdAndHex)
{
  auto const key = Key("json");
  auto const stx = SignTransaction({key.address(), 2, PlaceBid{AuctionId{}, 12}}, key);
  auto const doc = ToJson(stx);
  EXPECT_EQ(doc.at("tx_id"), TxId(stx).ToHex());
  EXPECT_EQ(doc.at("hex"), ToHex(EncodeSignedTransaction(stx)));
}

TEST(JsonTest, TransactionDocumentRoundTrip)
{
  auto const key = Key("json");
  nlohmann::json doc{{"kind", "place_bid"}, {"nonce", 3}, {"auction", AuctionId{}.ToHex()}, {"amount", 12}};
  auto const tx = TransactionFromJson(doc, key.address());
  EXPECT_EQ(tx.nonce, 3u);
  ASSERT_EQ(tx.kind(), TxKind::PlaceBid);
  EXPECT_EQ(std::get<PlaceBid>(tx.payload).amount, 12u);

  doc["kind"] = "teleport";
  EXPECT_ANY_THROW(TransactionFromJson(doc, key.address()));
}

}  // namespace
}  // namespace ledger
}  // namespace gridex
