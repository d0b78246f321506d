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

#ifndef ECCLAB_RNG_HPP_
#define ECCLAB_RNG_HPP_

#include <cstdint>
#include <random>
#include <string_view>

namespace ecclab {

using Rng = std::mt19937_64;

// Independent generator for a named stage, derived from one run seed.
// Adding stages never perturbs the streams of existing ones.
Rng substream(std::uint64_t seed, std::string_view stage);

}  // namespace ecclab

#endif  // ECCLAB_RNG_HPP_
