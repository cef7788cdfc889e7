#include <gtest/gtest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run qpart(const std::string& args) {
  const std::string cmd = std::string(QPART_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

TEST(Cli, Enumerate) {
  EXPECT_EQ(qpart("enumerate --n 3 --k 2").out, "1,2/3\n1,3/2\n1/2,3\n");
  EXPECT_EQ(qpart("enumerate --n 1 --k 1").out, "1\n");
  const auto empty = qpart("enumerate --n 2 --k 0");
  EXPECT_EQ(empty.code, 0);
  EXPECT_EQ(empty.out, "");
  EXPECT_EQ(qpart("enumerate --n 2 --k 3").code, 2);
  EXPECT_EQ(qpart("--json enumerate --n 3 --k 3").out, "[\"1/2/3\"]\n");
  EXPECT_EQ(qpart("enumerate --n 2 --k 2 --ordered").out, "1/2\n2/1\n");
}

TEST(Cli, Stats) {
  EXPECT_EQ(qpart("stats 1,4,8/2,9/3,7/5,6 --stats mak,makp,lmak,lmakp").out, "mak,makp,lmak,lmakp\n9,10,10,9\n");
  EXPECT_EQ(qpart("stats 1,2,3 --stats ros,rob,rcs,rcb,los,lob,lcs,lcb").out,
            "ros,rob,rcs,rcb,los,lob,lcs,lcb\n0,0,0,0,0,0,0,0\n");
  EXPECT_EQ(qpart("stats 1,4,8/2/3,7,9/5,6 --stats mak_l --l 2").out, "mak_l\n10\n");
  EXPECT_EQ(qpart("--json stats 1,4,8/2,9/3,7/5,6 --stats mak").out,
            "{\"mak\":9,\"partition\":\"1,4,8/2,9/3,7/5,6\"}\n");
  EXPECT_EQ(qpart("stats 1,2/2").code, 1);
  EXPECT_EQ(qpart("stats 1,2 --stats bogus").code, 2);
}

TEST(Cli, PerElementRows) {
  const auto r = qpart("stats 1,4,8/2,9/3,7/5,6 --per-element --stats ros,lcb");
  EXPECT_EQ(r.out,
            "pi   1 4 8 / 2 9 / 3 7 / 5 6\n"
            "ros  0 2 3 / 0 2 / 0 1 / 0 0\n"
            "lcb  0 0 0 / 1 0 / 2 2 / 3 3\n");
}

TEST(Cli, Genfun) {
  EXPECT_EQ(qpart("genfun --n 4 --k 2 --stat mak --compare qstirling").out, "3*q + 3*q^2 + q^3\nEQUAL\n");
  EXPECT_EQ(qpart("genfun --n 4 --k 4 --stat mak --compare qstirling").out, "q^6\nEQUAL\n");
  EXPECT_EQ(qpart("genfun --n 3 --k 2 --stat mak+bmaj --ordered --compare qstirling-times-qfact").out,
            "2*q + 3*q^2 + q^3\nEQUAL\n");
  const auto differ = qpart("genfun --n 4 --k 2 --stat ros --compare qstirling");
  EXPECT_EQ(differ.code, 1);
  EXPECT_NE(differ.out.find("DIFFER at q^"), std::string::npos);
  EXPECT_EQ(qpart("genfun --n 4 --k 2 --threads 3").out, "3*q + 3*q^2 + q^3\n");
  EXPECT_EQ(qpart("genfun --n 2 --k 3").code, 2);
}

TEST(Cli, QStirling) {
  EXPECT_EQ(qpart("qstirling --n 4 --k 2").out, "3*q + 3*q^2 + q^3\n");
  EXPECT_EQ(qpart("qstirling --n 4 --k 2 --shifted").out, "3 + 3*q + q^2\n");
  EXPECT_EQ(qpart("--json qstirling --n 4 --k 4").out,
            "{\"k\":4,\"n\":4,\"polynomial\":{\"6\":1},\"shifted\":false}\n");
}

TEST(Cli, Bijections) {
  EXPECT_EQ(qpart("phi 1,4,8/2/3,7,9/5,6").out, "1,6,7/2,3,9/4,5/8\n");
  EXPECT_EQ(qpart("phi 1,6,7/2,3,9/4,5/8").out, "1,4,8/2/3,7,9/5,6\n");
  EXPECT_EQ(qpart("phi-i --i 3 1,4,8/2/3/5,6,7,9").out, "1,4,8/2/3,9/5,6,7\n");
  EXPECT_EQ(qpart("phi-i --i 9 1,4,8/2/3/5,6,7,9").code, 1);
  EXPECT_NE(qpart("phi --certificate 1,4,8/2/3,7,9/5,6").out.find("\"values\":[3,6]"), std::string::npos);
  EXPECT_EQ(qpart("phi 1,,2").code, 1);
}

TEST(Cli, Motzkin) {
  EXPECT_EQ(qpart("motzkin 1,2").out, "NE(1) SE(1)\n");
  EXPECT_EQ(qpart("motzkin --reflect 1,4,8/2/3,7,9/5,6").out,
            "NE(1) NE(1) E(2) NE(1) SE(3) E(1) SE(1) E(1*) SE(1)\n");
  EXPECT_EQ(qpart("motzkin --decode \"NE(1) E(1*) NE(1) E(1) NE(1) SE(3) E(2) SE(1) SE(1)\"").out,
            "1,4,8/2/3,7,9/5,6\n");
  EXPECT_EQ(qpart("motzkin --decode --reflect \"NE(1) E(1*) NE(1) E(1) NE(1) SE(3) E(2) SE(1) SE(1)\"").out,
            "1,6,7/2,3,9/4,5/8\n");
  EXPECT_EQ(qpart("--json motzkin 1").out, "{\"steps\":[{\"kind\":\"E\",\"label\":1,\"starred\":true}]}\n");
  EXPECT_EQ(qpart("motzkin --decode \"SE(1)\"").code, 1);
}

TEST(Cli, Verify) {
  const auto ok = qpart("verify theorem2 --n-max 5");
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out.rfind("theorem2: PASS", 0), 0u);
  EXPECT_EQ(qpart("verify nope").code, 2);
  EXPECT_EQ(qpart("verify all --n-max 4").code, 0);
  EXPECT_NE(qpart("--json verify theorem1 --n-max 4").out.find("\"passed\":true"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(qpart("").code, 2);
  EXPECT_EQ(qpart("frobnicate").code, 2);
  EXPECT_EQ(qpart("enumerate --n 3").code, 2);
  EXPECT_EQ(qpart("--threads 0 verify theorem1").code, 2);
}

}  // namespace
