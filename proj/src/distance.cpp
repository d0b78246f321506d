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

#include "ecclab/distance.hpp"

#include <cassert>
#include <charconv>

#include "ecclab/error.hpp"

namespace ecclab {

Distance::Value Distance::value() const {
  if (is_infinite()) throw Error("value() of an infinite distance");
  return raw_;
}

std::string Distance::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(raw_);
}

Distance Distance::parse(const std::string& text) {
  if (text == "inf") return infinite();
  Value v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw InputError("bad distance '" + text + "'");
  }
  return Distance(v);
}

std::ostream& operator<<(std::ostream& os, Distance d) { return os << d.to_string(); }

}  // namespace ecclab
