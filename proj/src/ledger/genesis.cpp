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

#include "gridex/ledger/genesis.hpp"
#include "gridex/crypto/keys.hpp"
#include "gridex/ledger/chain.hpp"

#include <fstream>
#include <limits>

namespace gridex {
namespace ledger {

using nlohmann::json;

Genesis BuildGenesis(GenesisConfig const &config)
{
  auto const &params = config.params;
  if (params.schedule.authorities.empty())
  {
    throw std::invalid_argument("genesis needs at least one authority");
  }
  for (auto const &authority : params.schedule.authorities)
  {
    if (crypto::DeriveAddress(authority.public_key) != authority.address)
    {
      throw std::invalid_argument("authority address does not match its public key: " +
                                  authority.address.ToHex());
    }
  }
  if (params.schedule.block_interval_ticks < 1)
  {
    throw std::invalid_argument("block_interval_ticks must be at least 1");
  }
  if (params.default_auction_duration < 1 || params.bond_maturity_delta < 1 ||
      params.default_min_increment < 1)
  {
    throw std::invalid_argument("auction duration, bond maturity and min increment must be at least 1");
  }

  Genesis genesis;
  auto &state     = genesis.state;
  state.params    = params;
  state.qualified = config.qualified;
  for (auto const &[address, balance] : config.balances)
  {
    if (balance > std::numeric_limits<uint64_t>::max() - state.supply)
    {
      throw std::invalid_argument("genesis supply overflows");
    }
    state.supply += balance;
    if (balance > 0)
    {
      state.accounts[address].balance = balance;
    }
  }
  state.height    = 0;
  state.head_tick = 0;
  genesis.block   = MakeGenesisBlock(state);
  state.head_hash = HeaderHash(genesis.block.header);
  return genesis;
}

GenesisConfig GenesisFromJson(json const &doc)
{
  if (doc.value("address_hash_rounds", crypto::ADDRESS_HASH_ROUNDS) != crypto::ADDRESS_HASH_ROUNDS ||
      doc.value("address_bytes", Address::SIZE) != Address::SIZE)
  {
    throw std::invalid_argument("only 2 address hash rounds and 20-byte addresses are supported");
  }

  GenesisConfig config;
  auto         &params = config.params;

  for (auto const &entry : doc.at("authorities"))
  {
    consensus::Authority authority;
    authority.public_key = PublicKey::FromHex(entry.at("public_key").get<std::string>());
    authority.address    = entry.contains("address")
                               ? Address::FromHex(entry.at("address").get<std::string>())
                               : crypto::DeriveAddress(authority.public_key);
    params.schedule.authorities.push_back(authority);
  }
  params.schedule.block_interval_ticks = doc.value("block_interval_ticks", uint64_t{1});

  if (doc.contains("authority_account"))
  {
    auto const          &account = doc.at("authority_account");
    std::vector<Address> members;
    for (auto const &member : account.at("members"))
    {
      members.push_back(Address::FromHex(member.get<std::string>()));
    }
    params.authority_account = crypto::MultisigAccount(std::move(members), account.at("threshold").get<std::size_t>());
  }

  if (doc.contains("params"))
  {
    auto const &p                   = doc.at("params");
    params.gas_fee                  = p.value("gas_fee", params.gas_fee);
    params.default_min_increment    = p.value("default_min_increment", params.default_min_increment);
    params.default_auction_duration = p.value("default_auction_duration", params.default_auction_duration);
    params.bond_maturity_delta      = p.value("bond_maturity_delta", params.bond_maturity_delta);
  }

  if (doc.contains("balances"))
  {
    for (auto const &[address, balance] : doc.at("balances").items())
    {
      config.balances[Address::FromHex(address)] = balance.get<uint64_t>();
    }
  }
  if (doc.contains("qualified"))
  {
    for (auto const &address : doc.at("qualified"))
    {
      config.qualified.insert(Address::FromHex(address.get<std::string>()));
    }
  }
  return config;
}

json GenesisToJson(GenesisConfig const &config)
{
  auto const &params = config.params;

  json doc;
  doc["address_hash_rounds"] = crypto::ADDRESS_HASH_ROUNDS;
  doc["address_bytes"]       = Address::SIZE;

  doc["authorities"] = json::array();
  for (auto const &authority : params.schedule.authorities)
  {
    doc["authorities"].push_back(
        {{"address", authority.address.ToHex()}, {"public_key", authority.public_key.ToHex()}});
  }
  doc["block_interval_ticks"] = params.schedule.block_interval_ticks;

  if (params.authority_account.threshold() > 0)
  {
    json members = json::array();
    for (auto const &member : params.authority_account.members())
    {
      members.push_back(member.ToHex());
    }
    doc["authority_account"] = {{"members", members}, {"threshold", params.authority_account.threshold()}};
  }

  doc["params"] = {{"gas_fee", params.gas_fee},
                   {"default_min_increment", params.default_min_increment},
                   {"default_auction_duration", params.default_auction_duration},
                   {"bond_maturity_delta", params.bond_maturity_delta}};

  doc["balances"] = json::object();
  for (auto const &[address, balance] : config.balances)
  {
    doc["balances"][address.ToHex()] = balance;
  }
  doc["qualified"] = json::array();
  for (auto const &address : config.qualified)
  {
    doc["qualified"].push_back(address.ToHex());
  }
  return doc;
}

GenesisConfig LoadGenesisFile(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw std::runtime_error("cannot open genesis file " + path.string());
  }
  return GenesisFromJson(json::parse(in));
}

}  // namespace ledger
}  // namespace gridex
