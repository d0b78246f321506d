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

#ifndef ECCLAB_TOOLS_COMMANDS_HPP_
#define ECCLAB_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ecclab::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kCapacity = 3 };

// Every flag of every subcommand; each subcommand reads only its own.
struct RunSpec {
  std::string command;
  std::string input;
  std::vector<std::string> inputs;
  std::string output;
  std::string sidecar;
  std::string td;
  std::string variant = "undirected";
  std::string algorithm;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::size_t cap = 5000;

  std::string kind;
  std::size_t num_a = 8, num_b = 8, universe = 4;
  double density = 0.5;
  std::size_t t = 0;
  std::size_t n = 100, m = 0, k = 2, size = 8;
  double keep = 0.8;
  double orient = -1.0;
  unsigned max_weight = 1;
  bool planted = false;
  std::string epsilon = "1/2";
  std::uint32_t probe = 0;
  std::string target = "diameter";
  std::size_t delta = 0, rounds = 20;
  std::vector<std::size_t> sizes, ks;
  std::size_t reps = 1;
  bool no_timing = false;
};

int cmd_gen(const RunSpec& spec, std::ostream& out);
int cmd_exact(const RunSpec& spec, std::ostream& out);
int cmd_approx(const RunSpec& spec, std::ostream& out);
int cmd_tw(const RunSpec& spec, std::ostream& out);
int cmd_reduce(const RunSpec& spec, std::ostream& out);
int cmd_verify(const RunSpec& spec, std::ostream& out);
int cmd_bench(const RunSpec& spec, std::ostream& out);

// Parses argv and dispatches; maps library errors to exit codes.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ecclab::cli

#endif  // ECCLAB_TOOLS_COMMANDS_HPP_
