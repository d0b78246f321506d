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

#include "ecclab/set_system.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "ecclab/error.hpp"

namespace ecclab {

bool BitSet::intersects(const BitSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

std::size_t BitSet::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

std::string to_string(SetProblem p) {
  return p == SetProblem::kOrthogonalVectors ? "OV" : "HSE";
}

SetProblem parse_set_problem(const std::string& s) {
  if (s == "OV") return SetProblem::kOrthogonalVectors;
  if (s == "HSE") return SetProblem::kHittingSet;
  throw InputError("unknown set problem: " + s);
}

void check_set_system(const SetSystem& s) {
  for (const auto* list : {&s.a, &s.b}) {
    for (const auto& set : *list) {
      for (std::size_t i = 0; i < set.size(); ++i) {
        if (set[i] >= s.universe) throw InputError("set element out of range");
        if (i > 0 && set[i - 1] >= set[i]) throw InputError("set elements must be increasing");
      }
    }
  }
}

std::vector<BitSet> to_bitsets(const std::vector<std::vector<std::uint32_t>>& sets,
                               std::size_t universe) {
  std::vector<BitSet> out;
  out.reserve(sets.size());
  for (const auto& set : sets) {
    BitSet bits(universe);
    for (std::uint32_t e : set) bits.set(e);
    out.push_back(std::move(bits));
  }
  return out;
}

std::vector<std::size_t> hitting_indices(const std::vector<BitSet>& a,
                                         const std::vector<BitSet>& b) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::all_of(b.begin(), b.end(), [&](const BitSet& s) { return a[i].intersects(s); })) {
      out.push_back(i);
    }
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> find_disjoint_pair(
    const std::vector<BitSet>& a, const std::vector<BitSet>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!a[i].intersects(b[j])) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

SetSolution solve_set_system(const SetSystem& s) {
  check_set_system(s);
  auto a = to_bitsets(s.a, s.universe);
  auto b = to_bitsets(s.b, s.universe);
  SetSolution sol;
  if (s.problem == SetProblem::kOrthogonalVectors) {
    sol.pair = find_disjoint_pair(a, b);
    sol.answer = sol.pair.has_value();
  } else {
    for (std::size_t i = 0; i < a.size() && !sol.hitter; ++i) {
      if (std::all_of(b.begin(), b.end(), [&](const BitSet& t) { return a[i].intersects(t); })) {
        sol.hitter = i;
      }
    }
    sol.answer = sol.hitter.has_value();
  }
  return sol;
}

SetSystem random_set_system(SetProblem p, std::size_t na, std::size_t nb, std::size_t universe,
                            double density, Rng& rng) {
  std::bernoulli_distribution coin(density);
  SetSystem s;
  s.problem = p;
  s.universe = universe;
  auto fill = [&](std::size_t count, auto& list) {
    list.resize(count);
    for (auto& set : list) {
      for (std::uint32_t e = 0; e < universe; ++e) {
        if (coin(rng)) set.push_back(e);
      }
    }
  };
  fill(na, s.a);
  fill(nb, s.b);
  return s;
}

namespace {

SetSystem fixed_instance(bool yes) {
  SetSystem s;
  s.problem = SetProblem::kHittingSet;
  if (yes) {
    s.universe = 4;
    s.a = {{0, 1}, {2, 3}};
    s.b = {{0, 2}, {1, 3}};
  } else {
    s.universe = 2;
    s.a = {{0}, {1}};
    s.b = {{0}, {1}};
  }
  return s;
}

ReducedHittingSet collapse(bool yes) {
  return ReducedHittingSet{fixed_instance(yes), {}, true};
}

using Set = std::vector<std::uint32_t>;

void erase_element(std::vector<Set>& list, std::uint32_t u) {
  for (auto& set : list) {
    auto it = std::lower_bound(set.begin(), set.end(), u);
    if (it != set.end() && *it == u) set.erase(it);
  }
}

bool contains(const Set& s, std::uint32_t u) { return std::binary_search(s.begin(), s.end(), u); }

}  // namespace

ReducedHittingSet reduce_hitting_set(const SetSystem& input) {
  check_set_system(input);
  if (input.problem != SetProblem::kHittingSet) throw InputError("expected a hitting-set instance");
  std::vector<Set> a = input.a, b = input.b;
  std::vector<std::size_t> origin(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) origin[i] = i;
  std::size_t universe = input.universe;

  bool changed = true;
  while (changed) {
    changed = false;
    if (a.empty()) return collapse(false);
    if (b.empty()) return collapse(true);
    for (const auto& s : b) {
      if (s.empty()) return collapse(false);
    }
    std::vector<std::size_t> in_a(universe, 0), in_b(universe, 0);
    for (const auto& s : a) {
      for (auto u : s) ++in_a[u];
    }
    for (const auto& s : b) {
      for (auto u : s) ++in_b[u];
    }
    for (std::uint32_t u = 0; u < universe && !changed; ++u) {
      if (in_b[u] == b.size() && in_a[u] > 0) return collapse(true);
      if (in_a[u] == 0 && in_b[u] > 0) {
        erase_element(b, u);
        changed = true;
      } else if (in_a[u] == a.size()) {
        std::erase_if(b, [&](const Set& s) { return contains(s, u); });
        erase_element(a, u);
        changed = true;
      }
    }
    if (changed) continue;
    for (std::size_t i = 0; i < a.size() && !changed; ++i) {
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (i == j) continue;
        bool subset = std::includes(a[j].begin(), a[j].end(), a[i].begin(), a[i].end());
        if (subset && (a[i] != a[j] || i > j)) {
          a.erase(a.begin() + i);
          origin.erase(origin.begin() + i);
          changed = true;
          break;
        }
      }
    }
  }

  // Renumber the elements still in use.
  std::vector<std::uint32_t> rename(universe, UINT32_MAX);
  std::uint32_t next = 0;
  for (const auto* list : {&a, &b}) {
    for (const auto& s : *list) {
      for (auto u : s) rename[u] = 0;
    }
  }
  for (auto& r : rename) {
    if (r == 0) r = next++;
  }
  for (auto* list : {&a, &b}) {
    for (auto& s : *list) {
      for (auto& u : s) u = rename[u];
    }
  }
  ReducedHittingSet out;
  out.system.problem = SetProblem::kHittingSet;
  out.system.universe = next;
  out.system.a = std::move(a);
  out.system.b = std::move(b);
  out.a_origin = std::move(origin);
  return out;
}

SetSystem read_set_system(std::istream& in) {
  std::string line;
  auto next_line = [&](bool allow_eof) {
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty() && line[0] == '#') continue;
      return true;
    }
    if (!allow_eof) throw InputError("set system ended early");
    return false;
  };
  next_line(false);
  std::istringstream header(line);
  std::string tag, kind;
  std::size_t na = 0, nb = 0;
  SetSystem s;
  if (!(header >> tag >> na >> nb >> s.universe >> kind) || tag != "s") {
    throw InputError("bad set system header: " + line);
  }
  s.problem = parse_set_problem(kind);
  auto read_list = [&](std::size_t count, std::vector<Set>& list) {
    for (std::size_t i = 0; i < count; ++i) {
      next_line(false);
      std::istringstream row(line);
      Set set;
      long long e;
      while (row >> e) {
        if (e < 0) throw InputError("negative set element");
        set.push_back(static_cast<std::uint32_t>(e));
      }
      if (!row.eof()) throw InputError("bad set line: " + line);
      list.push_back(std::move(set));
    }
  };
  read_list(na, s.a);
  read_list(nb, s.b);
  while (next_line(true)) {
    if (line.find_first_not_of(" \t") != std::string::npos) {
      throw InputError("trailing data after set system");
    }
  }
  check_set_system(s);
  return s;
}

void write_set_system(std::ostream& out, const SetSystem& s) {
  out << "s " << s.a.size() << ' ' << s.b.size() << ' ' << s.universe << ' '
      << to_string(s.problem) << '\n';
  for (const auto* list : {&s.a, &s.b}) {
    for (const auto& set : *list) {
      for (std::size_t i = 0; i < set.size(); ++i) out << (i ? " " : "") << set[i];
      out << '\n';
    }
  }
}

}  // namespace ecclab
