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

#include "gridex/crypto/keys.hpp"
#include "gridex/ledger/transaction.hpp"

#include <filesystem>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace gridex {
namespace service {

class WalletError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Cost of the passphrase hash. Interactive limits are the default.
struct KdfLimits
{
  unsigned long long ops{0};
  std::size_t        mem{0};

  static KdfLimits Interactive();
  static KdfLimits Minimum();
};

/**
 * Named Ed25519 keys in a JSON file, each seed sealed with a key derived from
 * the store passphrase (Argon2id + XSalsa20-Poly1305). Only names, addresses
 * and public keys are ever returned; seeds stay inside the store.
 */
class WalletStore
{
public:
  /// Opens or creates the store file. Throws WalletError when the file exists
  /// but is malformed.
  WalletStore(std::filesystem::path path, std::string passphrase, KdfLimits limits = KdfLimits::Interactive());

  /// Generates a fresh key. Throws WalletError if the name is taken.
  Address Create(std::string const &name);
  Address Import(std::string const &name, PrivateKey const &seed);

  bool                           Contains(std::string const &name) const;
  Address                        AddressOf(std::string const &name) const;
  PublicKey              PublicKeyOf(std::string const &name) const;
  std::map<std::string, Address> List() const;

  /// Throws WalletError on an unknown name or a wrong passphrase.
  ledger::SignedTransaction Sign(std::string const &name, ledger::Transaction tx) const;

  /// In-process use only, e.g. a block producer key. Never serialise the result.
  crypto::KeyPair LoadKey(std::string const &name) const;

  std::filesystem::path const &path() const
  {
    return path_;
  }

private:
  struct Entry
  {
    Address           address;
    PublicKey public_key;
    Bytes             salt;
    Bytes             nonce;
    Bytes             sealed;
    unsigned long long ops{0};
    std::size_t        mem{0};
  };

  Address         Store(std::string const &name, crypto::KeyPair const &keys);
  crypto::KeyPair Unlock(Entry const &entry) const;
  void            Save() const;
  Entry const    &Find(std::string const &name) const;

  std::filesystem::path        path_;
  std::string                  passphrase_;
  KdfLimits                    limits_;
  std::map<std::string, Entry> entries_;
  mutable std::mutex           mutex_;
};

bool IsValidWalletName(std::string const &name);

}  // namespace service
}  // namespace gridex
