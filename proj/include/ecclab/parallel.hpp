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

#ifndef ECCLAB_PARALLEL_HPP_
#define ECCLAB_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace ecclab {

// Worker count: hardware concurrency capped by ECCLAB_THREADS when set.
std::size_t worker_count();

// Runs body(i) for i in [0, count). Order of execution is unspecified; the
// first exception thrown by any body is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace ecclab

#endif  // ECCLAB_PARALLEL_HPP_
