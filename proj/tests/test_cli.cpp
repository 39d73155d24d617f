// Copyright 2026 The qss Authors
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

#include <array>
#include <cstdio>
#include <filesystem>

#include "qss/io.hpp"

namespace {

const std::string kData = QSS_TEST_DATA;

struct CliResult {
  int code;
  std::string out;
};

// Runs the CLI with stderr folded into stdout.
CliResult run(const std::string& args) {
  const std::string cmd = std::string(QSS_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::string temp(const std::string& name) {
  const auto dir = std::filesystem::path(testing::TempDir()) / "qss_cli";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

bool contains(const std::string& s, const std::string& what) { return s.find(what) != std::string::npos; }

TEST(Cli, StructureCheck) {
  const CliResult r = run("structure check " + data("t1n3.adv"));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "q2=true q2star=true selfdual=true")) << r.out;
  EXPECT_EQ(run("structure check " + data("t0n2.adv") + " --require q2star").code, 1);
  EXPECT_EQ(run("structure check " + data("nonsd.adv") + " --require q2star").code, 0);
  EXPECT_EQ(run("structure check " + data("nonsd.adv") + " --require selfdual").code, 1);
  EXPECT_EQ(run("structure check " + data("nonsd.adv") + " --require bogus").code, 2);
}

TEST(Cli, StructureDualAndExtend) {
  const CliResult d = run("structure dual " + data("nonsd.adv"));
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(d.out, "players 3\nmaximal 1\nmaximal 2\n");
  const std::string out = temp("ext.adv");
  EXPECT_EQ(run("structure extend " + data("nonsd.adv") + " --out " + out).code, 0);
  const auto ext = qss::parse_structure(qss::read_file(out));
  EXPECT_EQ(ext, qss::AdversaryStructure(4, {qss::PlayerSet{1, 2}, qss::PlayerSet{3}, qss::PlayerSet{1, 4},
                                              qss::PlayerSet{2, 4}}));
  EXPECT_EQ(run("structure extend " + data("t0n2.adv")).code, 1);
}

TEST(Cli, ParseErrorsExitTwo) {
  const std::string bad = temp("bad.adv");
  qss::write_file(bad, "players 3\nmaximal 1 9\n");
  const CliResult r = run("structure check " + bad);
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.out, "line 2")) << r.out;
  EXPECT_EQ(run("structure check " + data("missing.adv")).code, 2);
  EXPECT_EQ(run("nonsense").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(Cli, MspFromFormula) {
  const CliResult r = run("msp from-formula \"or(and(1,3),and(2,3))\" --field 5");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, qss::read_file(data("nonsd.msp")));
  EXPECT_EQ(run("msp from-formula \"thr2(1,2,3)\" --field 2").code, 2);
  EXPECT_EQ(run("msp from-formula \"and(1\" --field 5").code, 2);
}

TEST(Cli, MspEval) {
  const CliResult r = run("msp eval " + data("nonsd.msp") + " --set 2,3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n");
  EXPECT_EQ(run("msp eval " + data("nonsd.msp") + " --set 1,2").out, "0\n");
}

TEST(Cli, MspExtendAndDual) {
  const CliResult e = run("msp extend " + data("nonsd.msp"));
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(e.out, qss::read_file(data("ext.msp")));
  EXPECT_EQ(run("msp dual " + data("shamir13.msp")).code, 0);
}

TEST(Cli, ShareAndReconstruct) {
  const CliResult s = run("share " + data("shamir13.msp") + " --secret 3 --seed 7");
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out, qss::read_file(data("shares.txt")));
  const CliResult again = run("share " + data("shamir13.msp") + " --secret 3 --seed 7");
  EXPECT_EQ(again.out, s.out);
  const CliResult r = run("reconstruct " + data("shamir13.msp") + " " + data("shares.txt") + " --set 2,3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3\n");
  const CliResult bad = run("reconstruct " + data("shamir13.msp") + " " + data("shares.txt") + " --set 1");
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(contains(bad.out, "cannot reconstruct")) << bad.out;
}

TEST(Cli, ShareRoundTripThroughFile) {
  const std::string out = temp("shares.txt");
  EXPECT_EQ(run("share " + data("nonsd.msp") + " --secret 4 --seed 99 --out " + out).code, 0);
  for (const char* set : {"1,3", "2,3", "1,2,3"}) {
    const CliResult r = run("reconstruct " + data("nonsd.msp") + " " + out + " --set " + set);
    EXPECT_EQ(r.out, "4\n") << set;
  }
}

TEST(Cli, QssVerify) {
  const CliResult p = run("qss verify-pure " + data("shamir13.msp"));
  EXPECT_EQ(p.code, 0) << p.out;
  const CliResult np = run("qss verify-pure " + data("nonsd.msp"));
  EXPECT_EQ(np.code, 1);
  EXPECT_TRUE(contains(np.out, "use verify-mixed")) << np.out;
  const CliResult m = run("qss verify-mixed " + data("nonsd.msp") + " --random 5");
  EXPECT_EQ(m.code, 0) << m.out;
  EXPECT_EQ(run("qss verify-mixed " + data("shamir13.msp") + " --random 2").code, 0);
}

TEST(Cli, MachineReportIsDeterministic) {
  const std::string args = "qss verify-pure " + data("shamir13.msp") + " --format machine --seed 3";
  const CliResult a = run(args);
  const CliResult b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(contains(a.out, "seed=3")) << a.out;
  EXPECT_NE(run("qss verify-pure " + data("shamir13.msp") + " --format xml").code, 0);
}

TEST(Cli, ConditionCheck) {
  const CliResult r = run("condition check " + data("shamir.scheme") + " --set 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "eq1=true oracle=true agree=true\n");
  const CliResult c = run("condition check " + data("counterexample.scheme") + " --set 1");
  EXPECT_EQ(c.code, 0);
  EXPECT_TRUE(contains(c.out, "eq1=false oracle=false agree=true")) << c.out;
  const std::string bad = temp("bad.scheme");
  qss::write_file(bad, "scheme n=2 secrets=2\nspace 1 2\nspace 2 2\np 0 0 0 1\np 1 0 0 1\n");
  const CliResult b = run("condition check " + bad);
  EXPECT_EQ(b.code, 2);
  EXPECT_TRUE(contains(b.out, "not a valid secret-sharing table")) << b.out;
  EXPECT_EQ(run("condition check " + data("shamir.scheme") + " --set 1,2").code, 2);
}

TEST(Cli, ConditionFromMsp) {
  const CliResult r = run("condition from-msp " + data("shamir13.msp"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, qss::read_file(data("shamir.scheme")));
}

TEST(Cli, ConditionSearchWritesFixture) {
  const std::string out = temp("found.scheme");
  const CliResult r = run("condition search --secrets 2 --share-size 3 --den 8 --out " + out);
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(qss::read_file(out), qss::read_file(data("counterexample.scheme")));
  EXPECT_EQ(qss::read_file(out + ".cert"), qss::read_file(data("counterexample.scheme.cert")));
  const CliResult none = run("condition search --family function-of-yq");
  EXPECT_EQ(none.code, 0);
  EXPECT_TRUE(contains(none.out, "none family=function-of-yq")) << none.out;
  EXPECT_EQ(run("condition search --secrets 0").code, 2);
}

}  // namespace
