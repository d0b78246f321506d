// Copyright 2026 The ecclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ecclab/rng.hpp"

#include <cstdint>

namespace ecclab {

Rng substream(std::uint64_t seed, std::string_view stage) {
  // FNV-1a of the stage name mixed into the seed sequence.
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : stage) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return Rng(seq);
}

}  // namespace ecclab
