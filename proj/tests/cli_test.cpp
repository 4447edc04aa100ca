/*
 * Copyright 2026 The atlsc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "atlsc/game_io.hpp"
#include "atlsc/report.hpp"
#include "support/fixtures.hpp"

namespace atlsc {
namespace {

namespace fs = std::filesystem;
using testing::data_path;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "atlsc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("atlsc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    write_file(path(name), text);
    return path(name);
  }

  fs::path dir_;
};

const std::string kHiddenPair = data_path("hidden_pair.game");
const std::string kHiddenChoice = data_path("hidden_choice.game");

TEST_F(CliTest, ValidateHiddenPair) {
  const Outcome r = run({"validate", kHiddenPair});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "valid\n");
}

TEST_F(CliTest, ValidateReportsDiagnostics) {
  const std::string holes = write("holes.game", "agents: a\nmoves: m n\nstates: s\nedge s m -> s\n");
  Outcome r = run({"validate", holes});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("totality"), std::string::npos) << r.err;

  const std::string reserved =
      write("reserved.game", "agents: a\nmoves: m\nprops: x#y\nstates: s\nedge s m -> s\n");
  r = run({"validate", reserved});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("reserved-name"), std::string::npos) << r.err;

  r = run({"validate", path("missing.game")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST_F(CliTest, CheckDirectAndReductionAgree) {
  const Outcome d = run({"check", kHiddenPair, "<<a1>>_0 F f", "--engine", "direct"});
  const Outcome r = run({"check", kHiddenPair, "<<a1>>_0 F f", "--engine", "reduction"});
  ASSERT_EQ(d.code, 0) << d.err;
  ASSERT_EQ(r.code, 0) << r.err;
  const auto jd = nlohmann::json::parse(d.out), jr = nlohmann::json::parse(r.out);
  EXPECT_EQ(jd["verdict"], true);
  EXPECT_EQ(jr["verdict"], true);
  EXPECT_EQ(jd["engine"], "memoryless-direct");
  EXPECT_EQ(jr["engine"], "memoryless-reduction");
  EXPECT_EQ(jd["witnesses"][0], "strategy a1 memoryless: {q2 q3} -> m1");
  EXPECT_EQ(jd["inputs"]["game"], jr["inputs"]["game"]);
}

TEST_F(CliTest, ReportSchemaAndFieldOrder) {
  const Outcome d = run({"check", kHiddenPair, "<<a1>>_0 X X X f", "--engine", "direct"});
  EXPECT_EQ(d.code, 1);
  const auto j = nlohmann::ordered_json::parse(d.out);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"verdict", "engine", "witnesses", "stats", "inputs"}));
  EXPECT_EQ(j["verdict"], false);
  EXPECT_TRUE(j["witnesses"].empty());
  for (const auto& [k, v] : j["stats"].items()) EXPECT_TRUE(v.is_number_unsigned()) << k;
  EXPECT_FALSE(j["stats"].contains("wall_ms"));
  EXPECT_EQ(j["inputs"]["game"], fnv1a64_hex(read_file(kHiddenPair)));
}

TEST_F(CliTest, TimingIsOptIn) {
  const Outcome d = run({"check", kHiddenPair, "<<a1>>_0 F f", "--timing"});
  ASSERT_EQ(d.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(d.out)["stats"].contains("wall_ms"));
}

TEST_F(CliTest, ReportsAreByteIdentical) {
  for (const auto& engine : {"direct", "reduction"}) {
    const Outcome a = run({"check", kHiddenPair, "<<a1>>_0 F f", "--engine", engine});
    const Outcome b = run({"check", kHiddenPair, "<<a1>>_0 F f", "--engine", engine});
    EXPECT_EQ(a.out, b.out);
  }
  const Outcome a = run({"check", kHiddenChoice, "A X <<a1>> X f & !(<<a1>> X X f)"});
  const Outcome b = run({"check", kHiddenChoice, "A X <<a1>> X f & !(<<a1>> X X f)"});
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, WindowedHiddenChoice) {
  const Outcome r = run({"check", kHiddenChoice, "A X <<a1>> X f & !(<<a1>> X X f)", "--engine", "windowed", "--window", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["engine"], "windowed(3)");
}

TEST_F(CliTest, DefaultEngineSelection) {
  EXPECT_EQ(nlohmann::json::parse(run({"check", kHiddenPair, "<<a1>>_0 F f"}).out)["engine"], "memoryless-reduction");
  EXPECT_EQ(nlohmann::json::parse(run({"check", kHiddenPair, "<<a1>> F f"}).out)["engine"], "windowed(3)");
  EXPECT_EQ(nlohmann::json::parse(run({"check", kHiddenPair, "<<a1>> F f", "--window", "2"}).out)["engine"],
            "windowed(2)");
}

TEST_F(CliTest, ExitCodeContract) {
  EXPECT_EQ(run({"check", kHiddenPair, "<<a1>> X X X f", "--window", "3"}).code, 0);
  EXPECT_EQ(run({"check", kHiddenPair, "<<a1>> X X X f", "--window", "2"}).code, 1);
  Outcome r = run({"check", kHiddenPair, "<<a1>> F f", "--engine", "direct"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error ("), std::string::npos);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(run({"check", kHiddenPair, "<<a1>> F f", "--engine", "reduction"}).code, 2);
  EXPECT_EQ(run({"check", kHiddenPair, "F f"}).code, 2);
  EXPECT_EQ(run({"check", kHiddenPair, "<<a1>>_0 F f", "--state", "q9"}).code, 2);
  EXPECT_EQ(run({"check", kHiddenPair, "<<a1>>_0 F f", "--state", "q5"}).code, 0);
  EXPECT_EQ(run({"check", kHiddenPair, "<<a1>>_0 F f", "--engine", "bogus"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
}

TEST_F(CliTest, QctlLogic) {
  const std::string k = write("one.kripke", "props: p\nstates: s\nlabel s: p\ntrans s: s\ninit: s\n");
  const Outcome r = run({"check", k, "exists Q. (Q & A G p)", "--logic", "qctl"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["engine"], "qctl-structure");
}

TEST_F(CliTest, TranslateTree) {
  const std::string prefix = path("tree");
  const Outcome r = run({"translate", kHiddenPair, "<<a1>> F f", "--semantics", "tree", "-o", prefix});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_file(prefix + ".kripke"), read_file(std::string(ATLSC_GOLDEN_DIR) + "/hidden_pair_tree.kripke"));
  EXPECT_EQ(read_file(prefix + ".qctl"), read_file(std::string(ATLSC_GOLDEN_DIR) + "/hidden_pair_tree.qctl"));
  EXPECT_NE(r.out.find("2 states"), std::string::npos) << r.out;
}

TEST_F(CliTest, TranslateStructure) {
  const std::string prefix = path("st");
  const Outcome r = run({"translate", kHiddenPair, "<<a1>>_0 F f", "--semantics", "structure", "-o", prefix});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_file(prefix + ".kripke"),
            read_file(std::string(ATLSC_GOLDEN_DIR) + "/hidden_pair_structure.kripke"));
  EXPECT_EQ(read_file(prefix + ".qctl"), read_file(std::string(ATLSC_GOLDEN_DIR) + "/hidden_pair_structure.qctl"));
  // The emitted pair reads back and decides the original verdict.
  const Outcome c = run({"check", prefix + ".kripke", read_file(prefix + ".qctl"), "--logic", "qctl", "--state", "q0"});
  EXPECT_EQ(c.code, 0) << c.err;
}

TEST_F(CliTest, TranslateTreeRejectsNonUniform) {
  std::string text = read_file(kHiddenPair);
  text.replace(text.find("obs uniform:"), 12, "obs a1:");
  const std::string g = write("nonuniform.game", text);
  ASSERT_EQ(run({"validate", g}).code, 0);
  const Outcome r = run({"translate", g, "<<a1>> F f", "--semantics", "tree", "-o", path("x")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("not"), std::string::npos) << r.err;
}

TEST_F(CliTest, ToTurnBased) {
  const std::string out = path("tb.game");
  const std::string fout = path("tb.formula");
  const Outcome r = run({"to-turn-based", kHiddenPair, "-o", out, "--formula", "<<a1>> F f", "--formula-out", fout});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(run({"validate", out}).code, 0);
  const std::string text = read_file(out);
  EXPECT_NE(text.find("owner "), std::string::npos);
  EXPECT_EQ(read_file(fout), "<<a1>> ((mid | true) U (!mid & f))\n");

  const Outcome bad = run({"to-turn-based", kHiddenPair, "--order", "a1,a9", "-o", path("bad.game")});
  EXPECT_EQ(bad.code, 2);

  const Outcome swapped = run({"to-turn-based", kHiddenPair, "--order", "a2,a1", "-o", path("sw.game")});
  EXPECT_EQ(swapped.code, 0) << swapped.err;
  EXPECT_EQ(run({"validate", path("sw.game")}).code, 0);
}

TEST_F(CliTest, ToTurnBasedSingleAgent) {
  const std::string g = write("one.game",
                              "agents: a\nmoves: m1 m2\nprops: p\nstates: s t\nlabel t: p\n"
                              "edge s m1 -> s\nedge s m2 -> t\nedge t * -> s\n");
  const Outcome r = run({"to-turn-based", g, "-o", path("one_tb.game")});
  ASSERT_EQ(r.code, 0) << r.err;
  Cgso in = read_game(read_file(g)), out = read_game(read_file(path("one_tb.game")));
  EXPECT_EQ(out.states, in.states);
  EXPECT_EQ(out.edges, in.edges);
  EXPECT_TRUE(out.owner.has_value());
}

}  // namespace
}  // namespace atlsc
