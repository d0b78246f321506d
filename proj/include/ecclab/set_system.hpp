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

#ifndef ECCLAB_SET_SYSTEM_HPP_
#define ECCLAB_SET_SYSTEM_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecclab/rng.hpp"

namespace ecclab {

// Fixed-width bit vector with word-parallel intersection tests.
class BitSet {
 public:
  BitSet() = default;
  explicit BitSet(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

  std::size_t width() const { return width_; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const { return words_[i >> 6] >> (i & 63) & 1; }
  bool intersects(const BitSet& other) const;
  std::size_t count() const;
  bool operator==(const BitSet&) const = default;

 private:
  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

enum class SetProblem { kOrthogonalVectors, kHittingSet };

std::string to_string(SetProblem p);
SetProblem parse_set_problem(const std::string& s);

// Two lists of subsets of {0, ..., universe-1}; each set is sorted and
// duplicate free. For vectors, a set holds the coordinates equal to 1.
struct SetSystem {
  SetProblem problem = SetProblem::kOrthogonalVectors;
  std::size_t universe = 0;
  std::vector<std::vector<std::uint32_t>> a;
  std::vector<std::vector<std::uint32_t>> b;

  bool operator==(const SetSystem&) const = default;
};

// Throws InputError on out-of-range, unsorted or repeated elements.
void check_set_system(const SetSystem& s);

std::vector<BitSet> to_bitsets(const std::vector<std::vector<std::uint32_t>>& sets,
                               std::size_t universe);

struct SetSolution {
  bool answer = false;
  // Orthogonal vectors: first disjoint (a, b) pair in row-major order.
  // Hitting set: smallest index of a set meeting every b.
  std::optional<std::pair<std::size_t, std::size_t>> pair;
  std::optional<std::size_t> hitter;
};

SetSolution solve_set_system(const SetSystem& s);

// Indices i such that a[i] meets every set of b.
std::vector<std::size_t> hitting_indices(const std::vector<BitSet>& a,
                                         const std::vector<BitSet>& b);
std::optional<std::pair<std::size_t, std::size_t>> find_disjoint_pair(
    const std::vector<BitSet>& a, const std::vector<BitSet>& b);

// Each element is included independently with probability density.
SetSystem random_set_system(SetProblem p, std::size_t na, std::size_t nb, std::size_t universe,
                            double density, Rng& rng);

// Hitting-set instance with the same answer in which every element lies in
// some but not all sets of a, no element lies in every set of b, the sets of
// a are pairwise incomparable, and both lists are nonempty with nonempty b
// sets. Degenerate inputs collapse to a fixed small instance of the right
// answer; a_origin is empty in that case.
struct ReducedHittingSet {
  SetSystem system;
  std::vector<std::size_t> a_origin;  // original index of each kept a
  bool collapsed = false;
};

ReducedHittingSet reduce_hitting_set(const SetSystem& s);

// Header `s <|a|> <|b|> <universe> OV|HSE`, then one line per set listing its
// elements (an empty line is the empty set). Lines starting with # are skipped.
SetSystem read_set_system(std::istream& in);
void write_set_system(std::ostream& out, const SetSystem& s);

}  // namespace ecclab

#endif  // ECCLAB_SET_SYSTEM_HPP_
