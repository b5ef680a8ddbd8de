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

#include "gridex/crypto/hash.hpp"
#include "gridex/crypto/keys.hpp"
#include "gridex/crypto/multisig.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

namespace gridex {
namespace crypto {
namespace {

Bytes Seed(uint8_t first, uint8_t step)
{
  Bytes seed(32);
  for (std::size_t i = 0; i < seed.size(); ++i)
  {
    seed[i] = static_cast<uint8_t>(first + step * i);
  }
  return seed;
}

TEST(HashTest, PublishedVectors)
{
  EXPECT_EQ(Hash({}).ToHex(), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(Hash(AsBytes("abc")).ToHex(), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(HashTest, Deterministic)
{
  EXPECT_EQ(Hash(AsBytes("gridex")), Hash(AsBytes("gridex")));
}

TEST(HashTest, SingleBitFlipChangesDigest)
{
  std::mt19937_64 rng(1);
  for (int round = 0; round < 1000; ++round)
  {
    Bytes data(1 + rng() % 200);
    for (auto &byte : data)
    {
      byte = static_cast<uint8_t>(rng());
    }
    Digest32 const before = Hash(data);
    std::size_t const bit = rng() % (data.size() * 8);
    data[bit / 8] ^= static_cast<uint8_t>(1u << (bit % 8));
    ASSERT_NE(before, Hash(data)) << "round " << round;
  }
}

TEST(HashTest, ConcatMatchesJoinedInput)
{
  EXPECT_EQ(HashConcat({AsBytes("ab"), AsBytes("c")}), Hash(AsBytes("abc")));
}

// Reference values computed independently from the Ed25519 and SHA-256 definitions.
TEST(KeyTest, FrozenSeedVectors)
{
  auto const keys = KeyPair::FromSeed(Seed(0, 1));
  EXPECT_EQ(keys.public_key().ToHex(), "03a107bff3ce10be1d70dd18e74bc09967e4d6309ba50d5f1ddc8664125531b8");
  EXPECT_EQ(keys.address().ToHex(), "2512453bd4bce498b37fd39d5849dcc26f3a8834");
  EXPECT_EQ(keys.Sign(AsBytes("hello")).ToHex(),
            "e1a7fca94a835127885b99e2eba733d6ee5bf5dc463ed8385eb6f1dcaa1117c0"
            "f151750a10f46f5b3796a91203578f702c85c67c334b5689a516284d499f710f");

  auto const sevens = KeyPair::FromSeed(Bytes(32, 7));
  EXPECT_EQ(sevens.public_key().ToHex(), "ea4a6c63e29c520abef5507b132ec5f9954776aebebe7b92421eea691446d22c");
  EXPECT_EQ(sevens.address().ToHex(), "c5c447a03465b236b11bd4c51d90af15eedc0e04");
  EXPECT_EQ(sevens.Sign(AsBytes("hello")).ToHex(),
            "359a315920d9541c3cc2a1dd1839f3e40bf23358a1d93a6ebd8303c0310ceb50"
            "25e679222ab016b4d822c5001e787e00c0ceaa6ac3c6e80248a944bd47104f0c");
}

TEST(KeyTest, SameSeedSameKeys)
{
  auto const a = GenerateKeyPair(Seed(9, 3));
  auto const b = GenerateKeyPair(Seed(9, 3));
  EXPECT_EQ(a.public_key(), b.public_key());
  EXPECT_EQ(a.private_key(), b.private_key());
}

TEST(KeyTest, DistinctSeedsDistinctKeys)
{
  std::mt19937_64     rng(2);
  std::set<PublicKey> seen;
  for (int i = 0; i < 1000; ++i)
  {
    Bytes seed(32);
    for (auto &byte : seed)
    {
      byte = static_cast<uint8_t>(rng());
    }
    seen.insert(GenerateKeyPair(seed).public_key());
  }
  EXPECT_EQ(seen.size(), 1000u);
}

TEST(KeyTest, WrongSeedLengthThrows)
{
  EXPECT_THROW(GenerateKeyPair(Bytes(31, 1)), std::invalid_argument);
  EXPECT_THROW(GenerateKeyPair(Bytes(33, 1)), std::invalid_argument);
}

TEST(KeyTest, AddressIsTruncatedDoubleHash)
{
  auto const keys   = KeyPairFromLabel("address");
  auto const twice  = Hash(Hash(keys.public_key().span()).span());
  auto const direct = DeriveAddress(keys.public_key());
  EXPECT_EQ(direct.size(), 20u);
  EXPECT_TRUE(std::equal(direct.begin(), direct.end(), twice.begin()));
  EXPECT_EQ(direct, keys.address());
}

TEST(SignatureTest, RoundTripAndMismatch)
{
  auto const one = KeyPairFromLabel("one");
  auto const two = KeyPairFromLabel("two");
  auto const sig = Sign(one.private_key(), AsBytes("message"));
  EXPECT_TRUE(Verify(one.public_key(), AsBytes("message"), sig));
  EXPECT_FALSE(Verify(one.public_key(), AsBytes("massage"), sig));
  EXPECT_FALSE(Verify(two.public_key(), AsBytes("message"), sig));
  EXPECT_EQ(sig, one.Sign(AsBytes("message")));
}

TEST(SignatureTest, GarbageNeverThrows)
{
  Signature junk;
  junk.array().fill(0xAB);
  EXPECT_FALSE(Verify(PublicKey{}, AsBytes("x"), junk));
}

TEST(EndorsementTest, PublicKeyMustMatchAddress)
{
  auto const  keys        = KeyPairFromLabel("endorser");
  auto        endorsement = Endorse(keys, AsBytes("payload"));
  EXPECT_TRUE(VerifyEndorsement(endorsement, AsBytes("payload")));
  endorsement.address = KeyPairFromLabel("someone else").address();
  EXPECT_FALSE(VerifyEndorsement(endorsement, AsBytes("payload")));
}

class MultisigTest : public ::testing::Test
{
protected:
  MultisigTest()
    : members_{KeyPairFromLabel("m0"), KeyPairFromLabel("m1"), KeyPairFromLabel("m2")}
    , account_({members_[0].address(), members_[1].address(), members_[2].address()}, 2)
  {}

  std::vector<Endorsement> Sigs(std::vector<KeyPair> const &keys) const
  {
    std::vector<Endorsement> out;
    for (auto const &key : keys)
    {
      out.push_back(Endorse(key, AsBytes(MESSAGE)));
    }
    return out;
  }

  static constexpr char const *MESSAGE = "registry update";
  std::vector<KeyPair> members_;
  MultisigAccount      account_;
};

TEST_F(MultisigTest, TwoOfThree)
{
  EXPECT_TRUE(VerifyMultisig(account_, AsBytes(MESSAGE), Sigs({members_[0], members_[2]})));
  EXPECT_FALSE(VerifyMultisig(account_, AsBytes(MESSAGE), Sigs({members_[1], KeyPairFromLabel("outsider")})));
  EXPECT_FALSE(VerifyMultisig(account_, AsBytes(MESSAGE), Sigs({members_[1], members_[1]})));
  EXPECT_FALSE(VerifyMultisig(account_, AsBytes("other"), Sigs({members_[0], members_[1]})));
}

TEST_F(MultisigTest, AddingSignaturesIsMonotone)
{
  std::vector<KeyPair> pool{members_[0], KeyPairFromLabel("x"), members_[1], members_[2], members_[0]};
  std::vector<KeyPair> used;
  bool                 satisfied = false;
  for (auto const &key : pool)
  {
    used.push_back(key);
    bool const now = VerifyMultisig(account_, AsBytes(MESSAGE), Sigs(used));
    EXPECT_TRUE(now || !satisfied);
    satisfied = now;
  }
  EXPECT_TRUE(satisfied);
}

TEST_F(MultisigTest, ConstructionRules)
{
  auto const a = members_[0].address();
  auto const b = members_[1].address();
  EXPECT_THROW(MultisigAccount({a}, 1), std::invalid_argument);
  EXPECT_THROW(MultisigAccount({a, a}, 1), std::invalid_argument);
  EXPECT_THROW(MultisigAccount({a, b}, 0), std::invalid_argument);
  EXPECT_THROW(MultisigAccount({a, b}, 3), std::invalid_argument);
  std::vector<Address> many;
  for (int i = 0; i < 17; ++i)
  {
    many.push_back(KeyPairFromLabel("many" + std::to_string(i)).address());
  }
  EXPECT_THROW(MultisigAccount(many, 2), std::invalid_argument);
  many.pop_back();
  EXPECT_NO_THROW(MultisigAccount(many, 16));
}

TEST_F(MultisigTest, AddressDependsOnThresholdAndMembers)
{
  MultisigAccount const three({members_[0].address(), members_[1].address(), members_[2].address()}, 3);
  MultisigAccount const pair({members_[0].address(), members_[1].address()}, 2);
  EXPECT_NE(account_.address(), three.address());
  EXPECT_NE(account_.address(), pair.address());
  EXPECT_EQ(account_.address(), MultisigAccount(account_.members(), 2).address());
  EXPECT_EQ(CountValidMembers(account_, AsBytes(MESSAGE), Sigs(members_)), 3u);
}

}  // namespace
}  // namespace crypto
}  // namespace gridex
