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

#include "gridex/crypto/bytes.hpp"

#include <optional>
#include <vector>

namespace gridex {
namespace consensus {

struct Authority
{
  Address   address;
  PublicKey public_key;

  friend bool operator==(Authority const &, Authority const &) = default;
};

/// Round-robin proof-of-authority schedule: height h is produced by authorities[h mod n].
struct AuthoritySchedule
{
  std::vector<Authority> authorities;
  uint64_t               block_interval_ticks{1};

  friend bool operator==(AuthoritySchedule const &, AuthoritySchedule const &) = default;
};

/// Throws std::logic_error on an empty schedule.
Authority const &AuthorityFor(AuthoritySchedule const &schedule, uint64_t height);
Address          ProducerFor(AuthoritySchedule const &schedule, uint64_t height);

std::optional<std::size_t> ScheduleIndex(AuthoritySchedule const &schedule, Address const &address);

}  // namespace consensus
}  // namespace gridex
