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

#include "ecclab/report_io.hpp"

#include <sstream>

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
  throw InputError("bad distance in report");
}

}  // namespace

std::string report_to_json(const EccentricityReport& r) {
  ordered_json j;
  j["variant"] = to_string(r.variant);
  j["radius"] = distance_json(r.radius);
  j["diameter"] = distance_json(r.diameter);
  j["center"] = r.center;
  j["witness"] = {r.witness.first, r.witness.second};
  ordered_json ecc = ordered_json::array();
  for (Distance d : r.ecc) ecc.push_back(distance_json(d));
  j["ecc"] = std::move(ecc);
  return j.dump(2) + "\n";
}

EccentricityReport report_from_json(const std::string& text) {
  try {
    auto j = ordered_json::parse(text);
    EccentricityReport r;
    r.variant = parse_variant(j.at("variant").get<std::string>());
    r.radius = distance_from_json(j.at("radius"));
    r.diameter = distance_from_json(j.at("diameter"));
    r.center = j.at("center").get<Vertex>();
    r.witness = {j.at("witness").at(0).get<Vertex>(), j.at("witness").at(1).get<Vertex>()};
    for (const auto& e : j.at("ecc")) r.ecc.push_back(distance_from_json(e));
    return r;
  } catch (const ordered_json::exception& e) {
    throw InputError(std::string("bad report JSON: ") + e.what());
  }
}

std::string report_to_tsv(const EccentricityReport& r) {
  std::ostringstream out;
  out << "vertex\tecc\n";
  for (std::size_t v = 0; v < r.ecc.size(); ++v) out << v << '\t' << r.ecc[v] << '\n';
  return out.str();
}

}  // namespace ecclab
