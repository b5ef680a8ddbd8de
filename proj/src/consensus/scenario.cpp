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

#include "gridex/consensus/scenario.hpp"

#include <fstream>

namespace gridex {
namespace consensus {

using nlohmann::json;

namespace {

Strategy StrategyFromString(std::string const &name)
{
  if (name == "idle")
  {
    return Strategy::Idle;
  }
  if (name == "seller")
  {
    return Strategy::Seller;
  }
  if (name == "buyer")
  {
    return Strategy::Buyer;
  }
  throw std::invalid_argument("unknown agent strategy: " + name);
}

char const *ToString(Strategy strategy)
{
  switch (strategy)
  {
  case Strategy::Idle:
    return "idle";
  case Strategy::Seller:
    return "seller";
  case Strategy::Buyer:
    return "buyer";
  }
  return "idle";
}

contract::SettlementMode ModeFromString(std::string const &mode)
{
  if (mode == "cash")
  {
    return contract::SettlementMode::Cash;
  }
  if (mode == "bond" || mode == "bond_allowed")
  {
    return contract::SettlementMode::BondAllowed;
  }
  throw std::invalid_argument("unknown settlement mode: " + mode);
}

void Validate(SimConfig const &config)
{
  if (config.nodes.empty())
  {
    throw std::invalid_argument("scenario has no nodes");
  }
  std::set<std::string> names;
  bool                  any_authority = false;
  for (auto const &node : config.nodes)
  {
    if (!names.insert(node.name).second)
    {
      throw std::invalid_argument("duplicate node name: " + node.name);
    }
    any_authority = any_authority || node.authority;
    if (node.activity < 0.0 || node.activity > 1.0)
    {
      throw std::invalid_argument("activity must be within 0..1");
    }
    if (node.seller.kwh_min < 1 || node.seller.kwh_min > node.seller.kwh_max ||
        node.seller.base_price_min < 1 || node.seller.base_price_min > node.seller.base_price_max)
    {
      throw std::invalid_argument("seller ranges of " + node.name + " are malformed");
    }
  }
  if (!any_authority)
  {
    throw std::invalid_argument("scenario needs at least one authority");
  }

  auto const &net = config.network;
  if (net.latency_min > net.latency_max)
  {
    throw std::invalid_argument("latency_min exceeds latency_max");
  }
  if (net.drop_probability < 0.0 || net.drop_probability > 1.0)
  {
    throw std::invalid_argument("drop_probability must be within 0..1");
  }
  for (auto const &window : net.partitions)
  {
    if (window.start_tick > window.end_tick)
    {
      throw std::invalid_argument("partition window ends before it starts");
    }
    for (auto const &name : window.side)
    {
      if (names.count(name) == 0)
      {
        throw std::invalid_argument("partition names unknown node " + name);
      }
    }
  }
  for (auto const &action : config.script)
  {
    if (names.count(action.node) == 0)
    {
      throw std::invalid_argument("script names unknown node " + action.node);
    }
  }
  if (config.block_interval_ticks < 1 || config.announce_interval_ticks < 1)
  {
    throw std::invalid_argument("block and announce intervals must be at least 1");
  }
}

}  // namespace

SimConfig ScenarioFromJson(json const &doc)
{
  SimConfig config;
  config.seed                    = doc.value("seed", uint64_t{0});
  config.until_tick              = doc.value("until_tick", config.until_tick);
  config.block_interval_ticks    = doc.value("block_interval_ticks", config.block_interval_ticks);
  config.announce_interval_ticks = doc.value("announce_interval_ticks", config.announce_interval_ticks);
  config.authority_threshold     = doc.value("authority_threshold", std::size_t{0});
  if (doc.contains("production_end_tick") && !doc.at("production_end_tick").is_null())
  {
    config.production_end_tick = doc.at("production_end_tick").get<uint64_t>();
  }

  if (doc.contains("params"))
  {
    auto const &p                          = doc.at("params");
    config.params.gas_fee                  = p.value("gas_fee", config.params.gas_fee);
    config.params.default_min_increment    = p.value("default_min_increment", config.params.default_min_increment);
    config.params.default_auction_duration = p.value("default_auction_duration", config.params.default_auction_duration);
    config.params.bond_maturity_delta      = p.value("bond_maturity_delta", config.params.bond_maturity_delta);
  }

  if (doc.contains("network"))
  {
    auto const &n                  = doc.at("network");
    config.network.latency_min     = n.value("latency_min", config.network.latency_min);
    config.network.latency_max     = n.value("latency_max", config.network.latency_max);
    config.network.drop_probability = n.value("drop_probability", 0.0);
    if (n.contains("drop_end_tick") && !n.at("drop_end_tick").is_null())
    {
      config.network.drop_end_tick = n.at("drop_end_tick").get<uint64_t>();
    }
    for (auto const &w : n.value("partitions", json::array()))
    {
      PartitionWindow window;
      window.start_tick = w.at("start_tick").get<uint64_t>();
      window.end_tick   = w.at("end_tick").get<uint64_t>();
      for (auto const &name : w.at("side"))
      {
        window.side.insert(name.get<std::string>());
      }
      config.network.partitions.push_back(std::move(window));
    }
  }

  for (auto const &n : doc.at("nodes"))
  {
    NodeSpec node;
    node.name      = n.at("name").get<std::string>();
    node.authority = n.value("authority", false);
    node.strategy  = StrategyFromString(n.value("strategy", std::string("idle")));
    node.balance   = n.value("balance", uint64_t{0});
    node.qualified = n.value("qualified", true);
    node.activity  = n.value("activity", node.activity);
    if (n.contains("seller"))
    {
      auto const &s               = n.at("seller");
      node.seller.kwh_min         = s.value("kwh_min", node.seller.kwh_min);
      node.seller.kwh_max         = s.value("kwh_max", node.seller.kwh_max);
      node.seller.base_price_min  = s.value("base_price_min", node.seller.base_price_min);
      node.seller.base_price_max  = s.value("base_price_max", node.seller.base_price_max);
      node.seller.duration_blocks = s.value("duration_blocks", node.seller.duration_blocks);
      node.seller.mode            = ModeFromString(s.value("mode", std::string("cash")));
    }
    if (n.contains("intent"))
    {
      auto const  &i = n.at("intent");
      BuyerProfile buyer;
      buyer.kwh_needed = i.at("kwh").get<uint64_t>();
      buyer.max_price  = i.at("max_price").get<uint64_t>();
      node.buyer       = buyer;
    }
    config.nodes.push_back(std::move(node));
  }

  for (auto const &a : doc.value("script", json::array()))
  {
    ScriptAction action;
    action.tick   = a.at("tick").get<uint64_t>();
    action.node   = a.at("node").get<std::string>();
    action.action = a.at("action").get<std::string>();
    action.args   = a;
    config.script.push_back(std::move(action));
  }

  Validate(config);
  return config;
}

json ScenarioToJson(SimConfig const &config)
{
  json doc{{"seed", config.seed},
           {"until_tick", config.until_tick},
           {"block_interval_ticks", config.block_interval_ticks},
           {"announce_interval_ticks", config.announce_interval_ticks},
           {"authority_threshold", config.authority_threshold}};
  doc["production_end_tick"] =
      config.production_end_tick ? json(*config.production_end_tick) : json(nullptr);
  doc["params"] = {{"gas_fee", config.params.gas_fee},
                   {"default_min_increment", config.params.default_min_increment},
                   {"default_auction_duration", config.params.default_auction_duration},
                   {"bond_maturity_delta", config.params.bond_maturity_delta}};

  json partitions = json::array();
  for (auto const &window : config.network.partitions)
  {
    partitions.push_back({{"start_tick", window.start_tick}, {"end_tick", window.end_tick}, {"side", window.side}});
  }
  doc["network"] = {{"latency_min", config.network.latency_min},
                    {"latency_max", config.network.latency_max},
                    {"drop_probability", config.network.drop_probability},
                    {"partitions", partitions}};
  doc["network"]["drop_end_tick"] =
      config.network.drop_end_tick ? json(*config.network.drop_end_tick) : json(nullptr);

  doc["nodes"] = json::array();
  for (auto const &node : config.nodes)
  {
    json n{{"name", node.name},
           {"authority", node.authority},
           {"strategy", ToString(node.strategy)},
           {"balance", node.balance},
           {"qualified", node.qualified},
           {"activity", node.activity}};
    n["seller"] = {{"kwh_min", node.seller.kwh_min},
                   {"kwh_max", node.seller.kwh_max},
                   {"base_price_min", node.seller.base_price_min},
                   {"base_price_max", node.seller.base_price_max},
                   {"duration_blocks", node.seller.duration_blocks},
                   {"mode", contract::ToString(node.seller.mode)}};
    if (node.buyer)
    {
      n["intent"] = {{"kwh", node.buyer->kwh_needed}, {"max_price", node.buyer->max_price}};
    }
    doc["nodes"].push_back(std::move(n));
  }

  doc["script"] = json::array();
  for (auto const &action : config.script)
  {
    json a       = action.args.is_object() ? action.args : json::object();
    a["tick"]   = action.tick;
    a["node"]   = action.node;
    a["action"] = action.action;
    doc["script"].push_back(std::move(a));
  }
  return doc;
}

SimConfig LoadScenarioFile(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw std::runtime_error("cannot open scenario file " + path.string());
  }
  return ScenarioFromJson(json::parse(in));
}

crypto::KeyPair SimulatedKey(std::string const &node_name)
{
  return crypto::KeyPairFromLabel("gridex/sim/" + node_name);
}

ledger::GenesisConfig GenesisFor(SimConfig const &config)
{
  ledger::GenesisConfig genesis;
  genesis.params                               = config.params;
  genesis.params.schedule.block_interval_ticks = config.block_interval_ticks;

  std::vector<Address> authorities;
  for (auto const &node : config.nodes)
  {
    auto const key = SimulatedKey(node.name);
    if (node.authority)
    {
      genesis.params.schedule.authorities.push_back({key.address(), key.public_key()});
      authorities.push_back(key.address());
    }
    if (node.balance > 0)
    {
      genesis.balances[key.address()] += node.balance;
    }
    if (node.qualified)
    {
      genesis.qualified.insert(key.address());
    }
  }

  if (authorities.size() >= crypto::MULTISIG_MIN_MEMBERS)
  {
    std::size_t threshold = config.authority_threshold;
    if (threshold == 0)
    {
      threshold = authorities.size() / 2 + 1;
    }
    genesis.params.authority_account = crypto::MultisigAccount(authorities, threshold);
  }
  return genesis;
}

}  // namespace consensus
}  // namespace gridex
