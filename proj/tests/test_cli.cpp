// Copyright 2026 The entlab Authors
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "entlab/cli.hpp"
#include "entlab/qcore.hpp"

using namespace entlab;
using nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::vector<std::string> full = {"entlab"};
  full.insert(full.end(), args.begin(), args.end());
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(full, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string write_temp(const std::string& name, const std::string& body) {
  auto p = std::filesystem::path(testing::TempDir()) / name;
  std::ofstream(p) << body;
  return p.string();
}

}  // namespace

TEST(Cli, SingletCoherentInformation) {
  auto f = write_temp("singlet.json", R"({"state":{"kind":"constructor","name":"bell_psi_minus"}})");
  auto r = run({"entropy", "--state", f, "--split", "A|B", "--quantity", "coh"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out), json::parse(R"({"coherent": 1.0})"));
}

TEST(Cli, EntropyAllQuantities) {
  auto f = write_temp("five.json", R"({"state":{"name":"example_ch5"}})");
  auto r = run({"entropy", "--state", f, "--split", "AC1C2|B"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_NEAR(j.at("coherent").get<double>(), 0.399123963307, 1e-12);
  for (const char* k : {"svn", "cond", "mutual", "hmin", "h2"}) EXPECT_TRUE(j.contains(k)) << k;
}

TEST(Cli, TwirlPrintsExactRationals) {
  auto r = run({"twirl", "--d", "4", "--L", "2", "--samples", "20"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j.at("r"), "1/15");
  EXPECT_EQ(j.at("s"), "7/30");
  auto c = run({"--format", "csv", "twirl", "--d", "4", "--L", "2", "--samples", "20"});
  EXPECT_EQ(c.out.substr(0, c.out.find('\n')), "L,d,max_deviation,r,s,samples,swap_split_error,sym_trace_error");
}

TEST(Cli, RegionMembership) {
  auto f = write_temp("two.json", R"({"state":{"name":"two_sender_example"}})");
  auto r = run({"region", "--state", f, "--senders", "C1,C2", "--point", "0,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto m = json::parse(r.out).at("membership");
  EXPECT_TRUE(m.at("in_region").get<bool>());
  auto o = run({"region", "--state", f, "--senders", "C1,C2", "--point", "-2,0"});
  EXPECT_EQ(json::parse(o.out).at("membership").at("verdict"), "outside");
}

TEST(Cli, DeterministicAcrossRunsAndThreadCounts) {
  auto f = write_temp("two_d.json", R"({"state":{"name":"two_sender_example"}})");
  std::vector<std::string> args = {"decouple", "--state", f, "--senders", "C1:K=1:L=1,C2:K=2:L=1",
                                   "--reference", "R", "--samples", "16"};
  auto a = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(run(args).out, a.out);
  auto t = args;
  t.insert(t.begin(), {"--threads", "3"});
  EXPECT_EQ(run(t).out, a.out);
  std::vector<std::string> h = {"hash-sim", "--p", "0.9,0.05,0.03,0.02", "--n", "100", "--delta", "0.05",
                                "--trials", "4", "--decoys", "20"};
  auto h1 = run(h);
  h.insert(h.begin(), {"--threads", "2"});
  EXPECT_EQ(run(h).out, h1.out);
}

TEST(Cli, SeedFromEnvironment) {
  ::unsetenv("ENTLAB_SEED");
  EXPECT_EQ(default_seed(), kDefaultSeed);
  ::setenv("ENTLAB_SEED", "123", 1);
  EXPECT_EQ(default_seed(), 123u);
  ::setenv("ENTLAB_SEED", "junk", 1);
  EXPECT_EQ(default_seed(), kDefaultSeed);
  ::unsetenv("ENTLAB_SEED");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"twirl", "--d", "4"}).code, 2);
  EXPECT_EQ(run({"entropy", "--state", "/nonexistent.json", "--split", "A|B"}).code, 2);
  auto bad = write_temp("bad.json", R"({"state":{"kind":"mixed","matrix":[[1,0],[0]]}})");
  auto r = run({"entropy", "--state", bad, "--split", "A|B"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("matrix[1]"), std::string::npos) << r.err;
}

TEST(Cli, OutFileAndTypCheckCsv) {
  auto path = (std::filesystem::path(testing::TempDir()) / "typ.csv").string();
  auto r = run({"--out", path, "typ-check", "--p", "0.8,0.2", "--n", "12", "--delta", "0.1"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "quantity,bound,actual,holds");
  std::string line;
  while (std::getline(in, line)) EXPECT_NE(line.find(",true"), std::string::npos) << line;
}

TEST(Cli, VerifySingleCriterion) {
  auto r = run({"verify", "--only", "7"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("PASS  7", 0), 0u) << r.out;
}

TEST(Cli, PartyAndSideParsing) {
  auto p = parse_parties("C1,C2+C3");
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0], (Labels{"C1"}));
  EXPECT_EQ(p[1], (Labels{"C2", "C3"}));
  auto s = states::example_ch5();
  EXPECT_EQ(parse_side("AC1C2", s), (Labels{"A", "C1", "C2"}));
  EXPECT_EQ(parse_side("B,R", s), (Labels{"B", "R"}));
  EXPECT_THROW(parse_side("AX", s), std::exception);
  EXPECT_DOUBLE_EQ(round12(0.1234567890123456), 0.123456789012);
}
