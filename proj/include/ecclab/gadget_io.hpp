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

#ifndef ECCLAB_GADGET_IO_HPP_
#define ECCLAB_GADGET_IO_HPP_

#include <string>

#include "ecclab/gadgets.hpp"

namespace ecclab {

// Everything in a GadgetOutput except the graph and the path decomposition,
// which travel in their own files.
std::string gadget_sidecar_to_json(const GadgetOutput& g);

// Fills every sidecar field of `into`; graph and pathwidth_witness are kept.
void gadget_sidecar_from_json(const std::string& text, GadgetOutput& into);

}  // namespace ecclab

#endif  // ECCLAB_GADGET_IO_HPP_
