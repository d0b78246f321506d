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

#ifndef ECCLAB_REPORT_IO_HPP_
#define ECCLAB_REPORT_IO_HPP_

#include <string>

#include "ecclab/oracle.hpp"

namespace ecclab {

// {variant, radius, diameter, center, witness, ecc[]}; infinity is "inf".
std::string report_to_json(const EccentricityReport& r);
EccentricityReport report_from_json(const std::string& text);

// Header `vertex<TAB>ecc`, one row per vertex.
std::string report_to_tsv(const EccentricityReport& r);

}  // namespace ecclab

#endif  // ECCLAB_REPORT_IO_HPP_
