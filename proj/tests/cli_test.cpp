#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <gtest/gtest.h>

namespace {

struct Result {
  int status;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Result goi(const std::string& args) {
  const std::string cmd = "GOI_COLOR=0 " + quote(GOI_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 512> buf;
  while (std::fgets(buf.data(), buf.size(), p)) out += buf.data();
  const int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

}  // namespace

TEST(Cli, PrincipalTypeOfCounterexample) {
  const Result p = goi("ptype " + quote("\\x.\\y.\\z. (\\w. x)(y z)"));
  EXPECT_EQ(p.status, 0);
  EXPECT_EQ(p.out, "t0 -> (t1 -> t2) -> t1 -> t0\n");
}

TEST(Cli, PrincipalTypesOfCombinators) {
  EXPECT_EQ(goi("ptype B").out, "(t0 -> t1) -> (t2 -> t0) -> t2 -> t1\n");
  EXPECT_EQ(goi("ptype C").out, "(t0 -> t1 -> t2) -> t1 -> t0 -> t2\n");
  EXPECT_EQ(goi("ptype I").out, "t0 -> t0\n");
  EXPECT_EQ(goi("ptype K").out, "t0 -> t1 -> t0\n");
  EXPECT_EQ(goi("ptype 'C x y'").out, "x: t0 -> t1 -> t2, y: t1 |- C x y : t0 -> t2\n");
}

TEST(Cli, Denotation) {
  const Result r = goi("goi 'C I I'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "lll <-> llr\nlr <-> r\n");
  EXPECT_EQ(goi("goi " + quote("\\x.\\y. x")).out, "l <-> rr\n");
  EXPECT_EQ(goi("goi 'K x'").status, 1);
}

TEST(Cli, Check) {
  const Result r = goi("check " + quote("\\x. x"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.substr(0, 5), "PASS\n");
}

TEST(Cli, ParseAndAbstract) {
  EXPECT_EQ(goi("parse " + quote("\\x.\\y. x y")).out, "\\x.\\y. x y\nclosed: yes, affine: yes, linear: yes\n");
  EXPECT_EQ(goi("abstract " + quote("\\x.\\y. x y")).out, "C (B B I) I\n");
  const Result bad = goi("parse " + quote("\\x. (x"));
  EXPECT_EQ(bad.status, 2);
}

TEST(Cli, Unify) {
  const Result ok = goi("unify 'a -> a' '(b -> b) -> g'");
  EXPECT_EQ(ok.status, 0);
  EXPECT_EQ(ok.out, "a := b -> b\ng := b -> b\n");
  const Result fail = goi("unify 'a' 'a -> b'");
  EXPECT_EQ(fail.status, 1);
  EXPECT_EQ(fail.out, "FAIL\n");
}

TEST(Cli, GoiUnify) {
  EXPECT_EQ(goi("goi-unify 'a -> a' '(b -> c) -> b -> c'").status, 0);
  const Result r = goi("goi-unify 'a -> a' '((b -> b) -> c) -> c'");
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out, "not unifiable (diverged)\n");
}

TEST(Cli, Trajectories) {
  const Result r = goi("traj 'C I I' I");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("output: l <-> r\n"), std::string::npos);
  EXPECT_NE(r.out.find("output: r <-> l\n"), std::string::npos);
}

TEST(Cli, Fuzz) {
  const Result r = goi("fuzz --property main-theorem --seed 42 --count 50 --depth 6");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "PASS main-theorem (50 samples, 0 failures)\n");
  EXPECT_EQ(goi("fuzz --property main-theorem --seed 42 --count 50 --depth 6").out, r.out);
  const Result bad = goi("fuzz --property affine-full-reduction --count 1");
  EXPECT_EQ(bad.status, 1);
  EXPECT_EQ(goi("fuzz --property nope").status, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(goi("").status, 2);
  EXPECT_EQ(goi("frobnicate").status, 2);
  EXPECT_EQ(goi("unify 'a'").status, 2);
  EXPECT_EQ(goi("--help").status, 0);
}
