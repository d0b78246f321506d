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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "ecclab/graph_io.hpp"

namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ecclab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  Result run(const std::string& args) const {
    std::string capture = path("stdout.txt");
    std::string cmd = std::string(ECCLAB_CLI_PATH) + " " + args + " > " + capture + " 2>&1";
    int status = std::system(cmd.c_str());
    Result r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = ecclab::read_text_file(capture);
    return r;
  }

  fs::path dir_;
};

TEST_F(CliTest, GadgetGenerateAndVerify) {
  for (const char* kind : {"radius-23", "source-radius", "min-diameter-dag", "median"}) {
    std::string g = path(std::string(kind) + ".txt");
    auto gen = run(std::string("gen --kind ") + kind + " --nA 4 --nB 4 --d 3 --seed 5 --output " + g);
    ASSERT_EQ(gen.code, 0) << gen.out;
    EXPECT_TRUE(fs::exists(g + ".json"));
    EXPECT_TRUE(fs::exists(g + ".sets"));
    auto ver = run("verify --input " + g);
    EXPECT_EQ(ver.code, 0) << ver.out;
    EXPECT_EQ(ver.out.rfind("PASS", 0), 0u) << ver.out;
  }
}

TEST_F(CliTest, TamperedSidecarFails) {
  std::string g = path("g.txt");
  ASSERT_EQ(run("gen --kind undirected-diameter-23 --nA 3 --nB 3 --d 3 --seed 1 --output " + g).code, 0);
  std::string json = ecclab::read_text_file(g + ".json");
  bool low = json.find("\"exact\": true") != std::string::npos;
  std::string from = low ? "\"yes_value\": 2" : "\"no_bound\": 3";
  std::string to = low ? "\"yes_value\": 7" : "\"no_bound\": 9";
  auto pos = json.find(from);
  ASSERT_NE(pos, std::string::npos) << json;
  json.replace(pos, from.size(), to);
  ecclab::write_text_file(g + ".json", json);
  auto ver = run("verify --input " + g);
  EXPECT_EQ(ver.code, 1) << ver.out;
  EXPECT_EQ(ver.out.rfind("FAIL", 0), 0u) << ver.out;
  EXPECT_NE(ver.out.find(low ? "7" : "9"), std::string::npos) << ver.out;
}

TEST_F(CliTest, PartialKTreeSweepsVariants) {
  std::string g = path("pk.txt");
  ASSERT_EQ(run("gen --kind partial-ktree --n 80 --k 3 --orient 0.5 --max-weight 4 --seed 2 --output " + g)
                .code,
            0);
  auto ver = run("verify --input " + g);
  EXPECT_EQ(ver.code, 0) << ver.out;
  for (const char* v : {"undirected", "source", "max", "min", "roundtrip"}) {
    if (std::string(v) == "undirected") continue;
    EXPECT_NE(ver.out.find(v), std::string::npos) << ver.out;
  }
}

TEST_F(CliTest, DgFragmentVerifies) {
  std::string g = path("dg.txt");
  ASSERT_EQ(run("gen --kind dg --size 13 --t 2 --output " + g).code, 0);
  auto ver = run("verify --input " + g);
  EXPECT_EQ(ver.code, 0) << ver.out;
}

TEST_F(CliTest, ExactAndTwAgree) {
  std::string g = path("pk.txt");
  ASSERT_EQ(run("gen --kind partial-ktree --n 60 --k 2 --seed 4 --output " + g).code, 0);
  auto exact = run("exact --input " + g + " --variant undirected --output " + path("e.json"));
  auto tw = run("tw --input " + g + " --td " + g + ".td --variant undirected --output " + path("t.json"));
  ASSERT_EQ(exact.code, 0) << exact.out;
  ASSERT_EQ(tw.code, 0) << tw.out;
  EXPECT_EQ(ecclab::read_text_file(path("e.json")), ecclab::read_text_file(path("t.json")));
}

TEST_F(CliTest, ApproxAndReduceRun) {
  std::string g = path("r.txt");
  ASSERT_EQ(run("gen --kind random-digraph --n 50 --m 200 --seed 3 --output " + g).code, 0);
  EXPECT_EQ(run("approx --algorithm source-radius --input " + g).code, 0);
  EXPECT_EQ(run("approx --algorithm min-diameter --epsilon 1/3 --input " + g).code, 0);
  std::string u = path("u.txt");
  ASSERT_EQ(run("gen --kind random-undirected --n 40 --m 300 --seed 3 --output " + u).code, 0);
  auto red = run("reduce --target radius --input " + u);
  EXPECT_EQ(red.code, 0) << red.out;
  EXPECT_NE(red.out.find("\"value\""), std::string::npos) << red.out;
}

TEST_F(CliTest, BenchHeader) {
  auto empty = run("bench --algorithm source-radius --no-timing");
  EXPECT_EQ(empty.code, 0);
  EXPECT_EQ(empty.out, "algorithm\tn\tm\tk\twall_time\testimate\toracle\tratio\n");
  auto rows = run("bench --algorithm tw --variant max --sizes 40 --k 2 --no-timing --seed 3");
  EXPECT_EQ(rows.code, 0) << rows.out;
  EXPECT_NE(rows.out.find("\t-\t"), std::string::npos) << rows.out;
  EXPECT_NE(rows.out.find("1.0000"), std::string::npos) << rows.out;
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run("exact --bogus").code, 2);
  EXPECT_EQ(run("exact --input " + path("missing.txt")).code, 2);
  std::string g = path("big.txt");
  ASSERT_EQ(run("gen --kind random-digraph --n 30 --m 60 --output " + g).code, 0);
  EXPECT_EQ(run("exact --variant source --cap 10 --input " + g).code, 3);
  EXPECT_EQ(run("exact --variant undirected --input " + g).code, 2);
}

TEST_F(CliTest, SameSeedSameOutput) {
  for (int i = 0; i < 2; ++i) {
    std::string g = path("g" + std::to_string(i) + ".txt");
    ASSERT_EQ(run("gen --kind min-radius-dag --nA 5 --nB 4 --d 4 --seed 9 --output " + g).code, 0);
    ASSERT_EQ(run("approx --algorithm min-radius-dag --seed 9 --input " + g + " --output " + g + ".out")
                  .code,
              0);
  }
  for (const char* ext : {"", ".json", ".sets", ".out"}) {
    EXPECT_EQ(ecclab::read_text_file(path("g0.txt") + ext), ecclab::read_text_file(path("g1.txt") + ext))
        << ext;
  }
}

}  // namespace
