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

#include "ecclab/gadget_io.hpp"

#include "ecclab/error.hpp"
#include "json.hpp"

namespace ecclab {
namespace {

using nlohmann::ordered_json;

ordered_json distance_json(Distance d) {
  if (d.is_infinite()) return "inf";
  return d.value();
}

Distance distance_from_json(const ordered_json& j) {
  if (j.is_string()) return Distance::parse(j.get<std::string>());
  if (j.is_number_unsigned()) return Distance(j.get<Distance::Value>());
  throw InputError("bad distance in sidecar");
}

}  // namespace

std::string gadget_sidecar_to_json(const GadgetOutput& g) {
  ordered_json j;
  j["kind"] = g.kind;
  j["variant"] = to_string(g.variant);
  j["quantity"] = to_string(g.quantity);
  j["yes_value"] = distance_json(g.yes_value);
  j["no_bound"] = distance_json(g.no_bound);
  j["answer"] = g.answer;
  j["exact"] = g.exact;
  j["is_dag"] = g.is_dag;
  ordered_json map = ordered_json::array();
  for (const auto& v : g.witness_map) {
    if (v) {
      map.push_back(*v);
    } else {
      map.push_back(nullptr);
    }
  }
  j["witness_map"] = map;
  ordered_json checks = ordered_json::array();
  for (const auto& c : g.vertex_checks) {
    checks.push_back({{"vertex", c.vertex}, {"ecc", distance_json(c.ecc)}});
  }
  j["vertex_checks"] = checks;
  return j.dump(2) + "\n";
}

void gadget_sidecar_from_json(const std::string& text, GadgetOutput& into) {
  try {
    auto j = ordered_json::parse(text);
    into.kind = j.at("kind").get<std::string>();
    into.variant = parse_variant(j.at("variant").get<std::string>());
    into.quantity = parse_gadget_quantity(j.at("quantity").get<std::string>());
    into.yes_value = distance_from_json(j.at("yes_value"));
    into.no_bound = distance_from_json(j.at("no_bound"));
    into.answer = j.at("answer").get<bool>();
    into.exact = j.at("exact").get<bool>();
    into.is_dag = j.at("is_dag").get<bool>();
    into.witness_map.clear();
    for (const auto& v : j.at("witness_map")) {
      if (v.is_null()) {
        into.witness_map.push_back(std::nullopt);
      } else {
        into.witness_map.push_back(v.get<Vertex>());
      }
    }
    into.vertex_checks.clear();
    for (const auto& c : j.at("vertex_checks")) {
      into.vertex_checks.push_back({c.at("vertex").get<Vertex>(), distance_from_json(c.at("ecc"))});
    }
  } catch (const ordered_json::exception& e) {
    throw InputError(std::string("bad gadget sidecar: ") + e.what());
  }
}

}  // namespace ecclab
