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

#include "gridex/consensus/node.hpp"
#include "gridex/consensus/random.hpp"
#include "gridex/consensus/scenario.hpp"
#include "gridex/market/matching.hpp"

#include <map>

namespace gridex {
namespace consensus {

/// Node names mapped to their simulated keys.
using KeyDirectory = std::map<std::string, crypto::KeyPair>;

/**
 * Scripted or strategic participant attached to one node. Agents read their
 * node's head state and return signed transactions; they never mutate the node.
 *
 *   seller  redeem a mature bond, else mint a lot, else auction an idle lot
 *   buyer   bid the recommended floor unless already leading or served
 *   idle    script actions only
 *
 * An agent with a transaction still pending in its node's mempool waits.
 */
class Agent
{
public:
  Agent(NodeSpec spec, crypto::KeyPair key);

  std::string const &name() const
  {
    return spec_.name;
  }
  Address address() const
  {
    return key_.address();
  }
  std::optional<market::DemandIntent> intent() const;

  /// Strategy step. Always draws the activity roll first, then only what the
  /// chosen action needs.
  std::optional<ledger::SignedTransaction> Act(Node const &node, SimRng &rng);

  /// Throws std::invalid_argument on an unknown action or unresolvable argument.
  std::vector<ledger::SignedTransaction> RunScript(ScriptAction const &action, Node const &node,
                                                   KeyDirectory const &keys);

private:
  std::optional<ledger::SignedTransaction> SellerStep(Node const &node, SimRng &rng);
  std::optional<ledger::SignedTransaction> BuyerStep(Node const &node);
  ledger::SignedTransaction Sign(Node const &node, ledger::Payload payload) const;

  NodeSpec        spec_;
  crypto::KeyPair key_;
};

/// Whether the buyer already owns a lot that covers the intent.
bool IsServed(ledger::ChainState const &state, market::DemandIntent const &intent);

}  // namespace consensus
}  // namespace gridex
