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

#include "gridex/service/wallet.hpp"
#include "gridex/crypto/hash.hpp"

#include <json.hpp>
#include <sodium.h>

#include <algorithm>
#include <cctype>
#include <fstream>

namespace gridex {
namespace service {

using nlohmann::json;

namespace {

constexpr int WALLET_FORMAT_VERSION = 1;

Bytes HexField(json const &doc, char const *field)
{
  return FromHex(doc.at(field).get<std::string>());
}

}  // namespace

KdfLimits KdfLimits::Interactive()
{
  return {crypto_pwhash_OPSLIMIT_INTERACTIVE, crypto_pwhash_MEMLIMIT_INTERACTIVE};
}

KdfLimits KdfLimits::Minimum()
{
  return {crypto_pwhash_OPSLIMIT_MIN, crypto_pwhash_MEMLIMIT_MIN};
}

bool IsValidWalletName(std::string const &name)
{
  if (name.empty() || name.size() > 64)
  {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.';
  });
}

WalletStore::WalletStore(std::filesystem::path path, std::string passphrase, KdfLimits limits)
  : path_(std::move(path))
  , passphrase_(std::move(passphrase))
  , limits_(limits)
{
  crypto::EnsureInitialised();
  if (!std::filesystem::exists(path_))
  {
    return;
  }

  try
  {
    std::ifstream in(path_);
    auto const    doc = json::parse(in);
    if (doc.at("version").get<int>() != WALLET_FORMAT_VERSION)
    {
      throw WalletError("unsupported wallet format");
    }
    for (auto const &[name, item] : doc.at("keys").items())
    {
      Entry entry;
      entry.address    = Address::FromHex(item.at("address").get<std::string>());
      entry.public_key = PublicKey::FromHex(item.at("public_key").get<std::string>());
      entry.salt       = HexField(item, "salt");
      entry.nonce      = HexField(item, "nonce");
      entry.sealed     = HexField(item, "sealed");
      entry.ops        = item.at("opslimit").get<unsigned long long>();
      entry.mem        = item.at("memlimit").get<std::size_t>();
      if (entry.salt.size() != crypto_pwhash_SALTBYTES || entry.nonce.size() != crypto_secretbox_NONCEBYTES ||
          entry.sealed.size() != crypto_secretbox_MACBYTES + 32 ||
          crypto::DeriveAddress(entry.public_key) != entry.address)
      {
        throw WalletError("wallet entry " + name + " is malformed");
      }
      entries_.emplace(name, std::move(entry));
    }
  }
  catch (json::exception const &err)
  {
    throw WalletError(std::string("wallet file is malformed: ") + err.what());
  }
  catch (std::invalid_argument const &err)
  {
    throw WalletError(std::string("wallet file is malformed: ") + err.what());
  }
}

Address WalletStore::Create(std::string const &name)
{
  std::array<uint8_t, 32> seed{};
  randombytes_buf(seed.data(), seed.size());
  auto keys = crypto::GenerateKeyPair(seed);
  sodium_memzero(seed.data(), seed.size());
  return Store(name, keys);
}

Address WalletStore::Import(std::string const &name, PrivateKey const &seed)
{
  return Store(name, crypto::KeyPair::FromSeed(seed.span()));
}

Address WalletStore::Store(std::string const &name, crypto::KeyPair const &keys)
{
  if (!IsValidWalletName(name))
  {
    throw WalletError("invalid wallet name '" + name + "'");
  }

  std::lock_guard lock(mutex_);
  if (entries_.count(name) != 0)
  {
    throw WalletError("wallet '" + name + "' already exists");
  }

  Entry entry;
  entry.address    = keys.address();
  entry.public_key = keys.public_key();
  entry.ops        = limits_.ops;
  entry.mem        = limits_.mem;
  entry.salt.resize(crypto_pwhash_SALTBYTES);
  entry.nonce.resize(crypto_secretbox_NONCEBYTES);
  randombytes_buf(entry.salt.data(), entry.salt.size());
  randombytes_buf(entry.nonce.data(), entry.nonce.size());

  std::array<uint8_t, crypto_secretbox_KEYBYTES> key{};
  if (crypto_pwhash(key.data(), key.size(), passphrase_.data(), passphrase_.size(), entry.salt.data(),
                    entry.ops, entry.mem, crypto_pwhash_ALG_ARGON2ID13) != 0)
  {
    throw WalletError("passphrase hashing ran out of memory");
  }
  auto const &seed = keys.private_key();
  entry.sealed.resize(crypto_secretbox_MACBYTES + seed.span().size());
  crypto_secretbox_easy(entry.sealed.data(), seed.data(), seed.span().size(), entry.nonce.data(), key.data());
  sodium_memzero(key.data(), key.size());

  entries_.emplace(name, std::move(entry));
  Save();
  return keys.address();
}

crypto::KeyPair WalletStore::Unlock(Entry const &entry) const
{
  std::array<uint8_t, crypto_secretbox_KEYBYTES> key{};
  if (crypto_pwhash(key.data(), key.size(), passphrase_.data(), passphrase_.size(), entry.salt.data(),
                    entry.ops, entry.mem, crypto_pwhash_ALG_ARGON2ID13) != 0)
  {
    throw WalletError("passphrase hashing ran out of memory");
  }
  std::array<uint8_t, 32> seed{};
  int const opened = crypto_secretbox_open_easy(seed.data(), entry.sealed.data(), entry.sealed.size(),
                                                entry.nonce.data(), key.data());
  sodium_memzero(key.data(), key.size());
  if (opened != 0)
  {
    throw WalletError("wrong passphrase");
  }
  auto keys = crypto::KeyPair::FromSeed(seed);
  sodium_memzero(seed.data(), seed.size());
  if (keys.address() != entry.address)
  {
    throw WalletError("wallet entry does not match its address");
  }
  return keys;
}

void WalletStore::Save() const
{
  json keys = json::object();
  for (auto const &[name, entry] : entries_)
  {
    keys[name] = {{"address", entry.address.ToHex()},
                  {"public_key", entry.public_key.ToHex()},
                  {"salt", ToHex(entry.salt)},
                  {"nonce", ToHex(entry.nonce)},
                  {"sealed", ToHex(entry.sealed)},
                  {"opslimit", entry.ops},
                  {"memlimit", entry.mem}};
  }
  json const doc{{"version", WALLET_FORMAT_VERSION}, {"kdf", "argon2id13"}, {"cipher", "xsalsa20poly1305"},
                 {"keys", keys}};

  auto const parent = path_.parent_path();
  if (!parent.empty())
  {
    std::filesystem::create_directories(parent);
  }
  auto const    staging = path_.string() + ".tmp";
  {
    std::ofstream out(staging, std::ios::trunc);
    out << doc.dump(2) << '\n';
    if (!out)
    {
      throw WalletError("cannot write wallet file " + staging);
    }
  }
  std::filesystem::permissions(staging, std::filesystem::perms::owner_read | std::filesystem::perms::owner_write,
                               std::filesystem::perm_options::replace);
  std::filesystem::rename(staging, path_);
}

WalletStore::Entry const &WalletStore::Find(std::string const &name) const
{
  auto it = entries_.find(name);
  if (it == entries_.end())
  {
    throw WalletError("unknown wallet '" + name + "'");
  }
  return it->second;
}

bool WalletStore::Contains(std::string const &name) const
{
  std::lock_guard lock(mutex_);
  return entries_.count(name) != 0;
}

Address WalletStore::AddressOf(std::string const &name) const
{
  std::lock_guard lock(mutex_);
  return Find(name).address;
}

PublicKey WalletStore::PublicKeyOf(std::string const &name) const
{
  std::lock_guard lock(mutex_);
  return Find(name).public_key;
}

std::map<std::string, Address> WalletStore::List() const
{
  std::lock_guard                lock(mutex_);
  std::map<std::string, Address> out;
  for (auto const &[name, entry] : entries_)
  {
    out.emplace(name, entry.address);
  }
  return out;
}

crypto::KeyPair WalletStore::LoadKey(std::string const &name) const
{
  Entry entry;
  {
    std::lock_guard lock(mutex_);
    entry = Find(name);
  }
  return Unlock(entry);
}

ledger::SignedTransaction WalletStore::Sign(std::string const &name, ledger::Transaction tx) const
{
  Entry entry;
  {
    std::lock_guard lock(mutex_);
    entry = Find(name);
  }
  if (tx.sender != entry.address)
  {
    throw WalletError("transaction sender is not wallet '" + name + "'");
  }
  return ledger::SignTransaction(std::move(tx), Unlock(entry));
}

}  // namespace service
}  // namespace gridex
