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

#include <cstdint>
#include <random>

namespace gridex {
namespace consensus {

/// The single generator behind every simulated draw.
using SimRng = std::mt19937_64;

/// Uniform integer in [min, max]. Consumes exactly one draw; the mapping is
/// spelled out so results do not depend on the standard library.
inline uint64_t UniformInt(SimRng &rng, uint64_t min, uint64_t max)
{
  uint64_t const raw   = rng();
  uint64_t const range = max - min + 1;
  return range == 0 ? raw : min + raw % range;
}

/// True with probability p. Consumes exactly one draw.
inline bool Chance(SimRng &rng, double p)
{
  double const unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return unit < p;
}

}  // namespace consensus
}  // namespace gridex
