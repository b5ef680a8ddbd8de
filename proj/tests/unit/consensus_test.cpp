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

#include "gridex/consensus/node.hpp"
#include "gridex/consensus/simulator.hpp"

#include <gtest/gtest.h>

namespace gridex {
namespace consensus {
namespace {

using testing::Key;

AuthoritySchedule ScheduleOf(std::vector<crypto::KeyPair> const &keys)
{
  AuthoritySchedule schedule;
  for (auto const &key : keys)
  {
    schedule.authorities.push_back({key.address(), key.public_key()});
  }
  return schedule;
}

TEST(ScheduleTest, ProducerFor)
{
  std::vector<crypto::KeyPair> keys{Key("p0"), Key("p1"), Key("p2")};
  auto const schedule = ScheduleOf(keys);
  EXPECT_EQ(ProducerFor(schedule, 0), keys[0].address());
  EXPECT_EQ(ProducerFor(schedule, 4), keys[1].address());
  EXPECT_EQ(ScheduleIndex(schedule, keys[2].address()), 2u);
  EXPECT_FALSE(ScheduleIndex(schedule, Key("nobody").address()).has_value());

  auto const single = ScheduleOf({keys[0]});
  for (uint64_t h : {0u, 1u, 77u})
  {
    EXPECT_EQ(ProducerFor(single, h), keys[0].address());
  }
  EXPECT_THROW(ProducerFor(AuthoritySchedule{}, 0), std::logic_error);
}

TEST(ForkChoiceTest, Examples)
{
  std::vector<crypto::KeyPair> keys{Key("p0"), Key("p1"), Key("p2")};
  auto const schedule = ScheduleOf(keys);
  Digest32   low;
  Digest32   high;
  high.array()[0] = 1;

  ChainTip const ten{low, 10, keys[1].address()};
  ChainTip const nine{high, 9, keys[0].address()};
  EXPECT_EQ(ForkChoice(schedule, ten, nine), ten);
  EXPECT_EQ(ForkChoice(schedule, nine, ten), ten);

  ChainTip const first{high, 5, keys[0].address()};
  ChainTip const third{low, 5, keys[2].address()};
  EXPECT_EQ(ForkChoice(schedule, first, third), first);
  EXPECT_EQ(ForkChoice(schedule, third, first), first);

  ChainTip const same_a{high, 5, keys[0].address()};
  ChainTip const same_b{low, 5, keys[0].address()};
  EXPECT_EQ(ForkChoice(schedule, same_a, same_b), same_b);
  EXPECT_EQ(ForkChoice(schedule, ten, ten), ten);
}

class NodeTest : public ::testing::Test
{
protected:
  NodeTest()
    : a_(Key("auth-a"))
    , b_(Key("auth-b"))
    , user_(Key("user"))
  {
    auto config = testing::ChainDriver::Config({{user_, 100}}, a_);
    config.params.schedule.authorities.push_back({b_.address(), b_.public_key()});
    genesis_ = ledger::BuildGenesis(config);
  }

  ledger::SignedTransaction Transfer(uint64_t nonce, uint64_t amount)
  {
    return ledger::SignTransaction({user_.address(), nonce, ledger::Transfer{a_.address(), amount}}, user_);
  }

  crypto::KeyPair a_;
  crypto::KeyPair b_;
  crypto::KeyPair user_;
  ledger::Genesis genesis_;
};

TEST_F(NodeTest, ProducesOnlyWhenScheduled)
{
  Node a("a", genesis_, a_);
  Node b("b", genesis_, b_);
  EXPECT_EQ(a.TryProduce(1), nullptr);  // height 1 belongs to b
  auto block = b.TryProduce(1);
  ASSERT_NE(block, nullptr);
  EXPECT_EQ(b.TryProduce(1), nullptr);
  EXPECT_EQ(a.OnReceiveBlock(block).verdict, BlockVerdict::Attached);
  EXPECT_EQ(a.head().block->header.height, 1u);
  EXPECT_EQ(a.OnReceiveBlock(block).verdict, BlockVerdict::Known);
  EXPECT_NE(a.TryProduce(2), nullptr);
}

TEST_F(NodeTest, MempoolFeedsBlocksAndNonces)
{
  Node b("b", genesis_, b_);
  EXPECT_TRUE(b.OnReceiveTx(Transfer(0, 5), 0));
  EXPECT_FALSE(b.OnReceiveTx(Transfer(0, 5), 0));
  EXPECT_TRUE(b.OnReceiveTx(Transfer(1, 7), 0));
  EXPECT_EQ(b.NextNonce(user_.address()), 2u);

  auto block = b.TryProduce(1);
  ASSERT_NE(block, nullptr);
  EXPECT_EQ(block->txs.size(), 2u);
  EXPECT_EQ(b.mempool_size(), 0u);
  EXPECT_EQ(b.head_state().account(a_.address()).balance, 12u);
}

TEST_F(NodeTest, RejectedTransactionsAreStillIncluded)
{
  Node b("b", genesis_, b_);
  b.OnReceiveTx(Transfer(0, 1000), 0);
  auto block = b.TryProduce(1);
  ASSERT_NE(block, nullptr);
  ASSERT_EQ(block->txs.size(), 1u);
  EXPECT_EQ(b.head().receipts[0].status, ledger::TxStatus::Rejected(ledger::RejectReason::InsufficientFunds));
  EXPECT_EQ(b.head_state().account(user_.address()).nonce, 1u);
}

TEST_F(NodeTest, OrphanAttachesWhenParentArrives)
{
  Node a("a", genesis_, a_);
  Node b("b", genesis_, b_);
  Node watcher("w", genesis_);

  auto first = b.TryProduce(1);
  a.OnReceiveBlock(first);
  auto second = a.TryProduce(2);
  ASSERT_NE(second, nullptr);

  auto const orphan = watcher.OnReceiveBlock(second);
  EXPECT_EQ(orphan.verdict, BlockVerdict::Orphan);
  EXPECT_EQ(orphan.missing_parent, ledger::HeaderHash(first->header));
  EXPECT_EQ(watcher.head().block->header.height, 0u);

  auto const attached = watcher.OnReceiveBlock(first);
  EXPECT_EQ(attached.verdict, BlockVerdict::Attached);
  EXPECT_TRUE(attached.head_changed);
  EXPECT_EQ(watcher.head().hash, ledger::HeaderHash(second->header));
  EXPECT_EQ(watcher.CanonicalChain().size(), 3u);
}

TEST_F(NodeTest, TamperedBlockIsInvalid)
{
  Node b("b", genesis_, b_);
  Node watcher("w", genesis_);
  b.OnReceiveTx(Transfer(0, 5), 0);
  auto block    = b.TryProduce(1);
  auto tampered = std::make_shared<ledger::Block>(*block);
  std::get<ledger::Transfer>(tampered->txs[0].tx.payload).amount = 6;
  EXPECT_EQ(watcher.OnReceiveBlock(tampered).verdict, BlockVerdict::Invalid);
  EXPECT_EQ(watcher.invalid_blocks(), 1u);
  EXPECT_EQ(watcher.OnReceiveBlock(block).verdict, BlockVerdict::Attached);
}

TEST_F(NodeTest, ReorgDropsConflictingTransactions)
{
  // One producer key, two diverging replicas: an equivocation at height 1.
  Node left("left", genesis_, b_);
  Node right("right", genesis_, b_);
  auto const x = Transfer(0, 5);
  auto const y = Transfer(0, 6);
  left.OnReceiveTx(x, 0);
  right.OnReceiveTx(y, 0);
  auto block_x = left.TryProduce(1);
  auto block_y = right.TryProduce(1);
  ASSERT_NE(block_x, nullptr);
  ASSERT_NE(block_y, nullptr);

  bool const y_wins = ledger::HeaderHash(block_y->header) < ledger::HeaderHash(block_x->header);
  auto const &loser  = y_wins ? block_x : block_y;
  auto const &winner = y_wins ? block_y : block_x;
  auto const &lost   = y_wins ? x : y;

  Node watcher("w", genesis_);
  watcher.OnReceiveBlock(loser);
  auto const result = watcher.OnReceiveBlock(winner);
  EXPECT_TRUE(result.head_changed);
  EXPECT_EQ(watcher.head().hash, ledger::HeaderHash(winner->header));
  // Both spend nonce 0, so the abandoned one is stale on the new head.
  EXPECT_EQ(watcher.mempool_size(), 0u);
  EXPECT_EQ(watcher.head_state().account(a_.address()).balance, y_wins ? 6u : 5u);
  (void)lost;
}

TEST_F(NodeTest, ReorgKeepsStillValidTransactions)
{
  Node left("left", genesis_, b_);
  Node right("right", genesis_, b_);
  auto const carried = ledger::SignTransaction({a_.address(), 0, ledger::MintLot{5}}, a_);
  left.OnReceiveTx(carried, 0);
  auto with_tx = left.TryProduce(1);
  auto empty   = right.TryProduce(2);
  ASSERT_NE(with_tx, nullptr);
  ASSERT_NE(empty, nullptr);
  ASSERT_NE(ledger::HeaderHash(with_tx->header), ledger::HeaderHash(empty->header));

  bool const empty_wins = ledger::HeaderHash(empty->header) < ledger::HeaderHash(with_tx->header);
  Node       watcher("w", genesis_);
  watcher.OnReceiveBlock(empty_wins ? with_tx : empty);
  watcher.OnReceiveBlock(empty_wins ? empty : with_tx);
  if (empty_wins)
  {
    EXPECT_TRUE(watcher.KnowsTransaction(ledger::TxId(carried)));
    EXPECT_EQ(watcher.mempool_size(), 1u);
  }
  else
  {
    EXPECT_EQ(watcher.mempool_size(), 0u);
    EXPECT_EQ(watcher.head_state().lots.size(), 1u);
  }
}

SimConfig ThreeNodes(uint64_t seed)
{
  SimConfig config;
  config.seed = seed;
  NodeSpec seller;
  seller.name      = "seller";
  seller.authority = true;
  seller.strategy  = Strategy::Seller;
  seller.balance   = 500;
  NodeSpec buyer;
  buyer.name      = "buyer";
  buyer.authority = true;
  buyer.strategy  = Strategy::Buyer;
  buyer.balance   = 500;
  buyer.buyer     = BuyerProfile{60, 30};
  NodeSpec idle;
  idle.name                  = "idle";
  idle.authority             = true;
  config.nodes               = {seller, buyer, idle};
  config.params.default_auction_duration = 5;
  config.production_end_tick = 120;
  config.until_tick          = 160;
  return config;
}

TEST(SimulatorTest, LosslessNetworkConverges)
{
  Simulator  sim(ThreeNodes(5));
  auto const report = sim.Run();
  EXPECT_TRUE(report.converged);
  EXPECT_TRUE(sim.Converged());
  EXPECT_GT(report.nodes[0].head_height, 30u);
  for (auto const &node : report.nodes)
  {
    EXPECT_EQ(node.head_hash, report.nodes[0].head_hash);
    EXPECT_EQ(node.state_root, report.nodes[0].state_root);
  }
  EXPECT_GT(report.satisfaction.settled, 0u);
  EXPECT_EQ(report.messages[0].dropped, 0u);
}

TEST(SimulatorTest, SameSeedSameReport)
{
  auto const a = ToJson(Simulator(ThreeNodes(9)).Run()).dump();
  auto const b = ToJson(Simulator(ThreeNodes(9)).Run()).dump();
  EXPECT_EQ(a, b);
  auto other = ToJson(Simulator(ThreeNodes(10)).Run());
  auto same  = nlohmann::json::parse(a);
  other.erase("seed");
  same.erase("seed");
  EXPECT_NE(other.dump(), same.dump());
}

TEST(SimulatorTest, PartitionHealsAndConverges)
{
  auto config = ThreeNodes(3);
  config.network.partitions.push_back({20, 50, {"seller"}});
  config.network.drop_probability = 0.1;
  config.network.drop_end_tick    = 50;
  config.production_end_tick      = 200;
  config.until_tick               = 250;
  Simulator sim(config);
  for (uint64_t t = 0; t < 49; ++t)
  {
    sim.Step();
  }
  EXPECT_FALSE(sim.Converged());
  EXPECT_TRUE(sim.Run().converged);
}

TEST(SimulatorTest, ScriptActionsRun)
{
  auto config = ThreeNodes(1);
  config.nodes[0].strategy = Strategy::Idle;
  config.nodes[1].strategy = Strategy::Idle;
  config.script.push_back({2, "seller", "mint_lot", {{"kwh", 42}}});
  config.script.push_back({8, "seller", "open_auction", {{"base_price", 7}, {"duration", 6}}});
  config.script.push_back({14, "buyer", "bid", nlohmann::json::object()});
  Simulator  sim(config);
  auto const report = sim.Run();
  EXPECT_TRUE(sim.script_errors().empty());
  ASSERT_EQ(report.satisfaction.settled, 1u);
  auto const &state = sim.node(2).head_state();
  ASSERT_EQ(state.lots.size(), 1u);
  EXPECT_EQ(state.lots.begin()->second.owner, SimulatedKey("buyer").address());
  EXPECT_EQ(state.lots.begin()->second.kwh, 42u);
}

TEST(ScenarioTest, JsonRoundTrip)
{
  auto config = ThreeNodes(4);
  config.network.partitions.push_back({10, 20, {"idle"}});
  config.script.push_back({3, "buyer", "transfer", {{"to", "seller"}, {"amount", 4}}});
  auto const doc  = ScenarioToJson(config);
  auto const back = ScenarioFromJson(nlohmann::json::parse(doc.dump()));
  EXPECT_EQ(ScenarioToJson(back), doc);
  EXPECT_EQ(ToJson(Simulator(back).Run()), ToJson(Simulator(config).Run()));
}

TEST(ScenarioTest, Validation)
{
  auto doc = ScenarioToJson(ThreeNodes(1));
  auto bad = doc;
  bad["nodes"] = nlohmann::json::array();
  EXPECT_THROW(ScenarioFromJson(bad), std::invalid_argument);

  bad = doc;
  bad["network"]["drop_probability"] = 1.5;
  EXPECT_THROW(ScenarioFromJson(bad), std::invalid_argument);

  bad = doc;
  bad["nodes"][1]["name"] = "seller";
  EXPECT_THROW(ScenarioFromJson(bad), std::invalid_argument);

  bad = doc;
  for (auto &node : bad["nodes"])
  {
    node["authority"] = false;
  }
  EXPECT_THROW(ScenarioFromJson(bad), std::invalid_argument);
}

TEST(ScenarioTest, GenesisUsesAuthorityMultisig)
{
  auto const genesis = GenesisFor(ThreeNodes(1));
  EXPECT_EQ(genesis.params.schedule.authorities.size(), 3u);
  EXPECT_EQ(genesis.params.authority_account.threshold(), 2u);
  EXPECT_EQ(genesis.balances.at(SimulatedKey("seller").address()), 500u);
}

}  // namespace
}  // namespace consensus
}  // namespace gridex
