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

#include "gridex/consensus/schedule.hpp"

#include <stdexcept>

namespace gridex {
namespace consensus {

Authority const &AuthorityFor(AuthoritySchedule const &schedule, uint64_t height)
{
  if (schedule.authorities.empty())
  {
    throw std::logic_error("authority schedule is empty");
  }
  return schedule.authorities[height % schedule.authorities.size()];
}

Address ProducerFor(AuthoritySchedule const &schedule, uint64_t height)
{
  return AuthorityFor(schedule, height).address;
}

std::optional<std::size_t> ScheduleIndex(AuthoritySchedule const &schedule, Address const &address)
{
  for (std::size_t i = 0; i < schedule.authorities.size(); ++i)
  {
    if (schedule.authorities[i].address == address)
    {
      return i;
    }
  }
  return std::nullopt;
}

}  // namespace consensus
}  // namespace gridex
