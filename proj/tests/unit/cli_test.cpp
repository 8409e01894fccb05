#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <json.hpp>
#include <string>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + BINDLOG_CLI " " + args + " 2>&1";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

const std::string data = BINDLOG_TEST_DATA;
const std::string logic = "--sig " + data + "/logic.sig ";

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, DemoExtensionality) {
  CliRun r = run("demo extensionality");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "⟦Λx f(x)⟧ = l0\n"));
  EXPECT_TRUE(contains(r.out, "⟦Λx x⟧ = k0\n"));
  EXPECT_TRUE(contains(r.out, "scheme instance NOT valid\n"));
}

TEST(Cli, DemoDisjointSum) {
  CliRun r = run("demo disjoint-sum");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "⟦delta(a, x. a, y. a)⟧ = 0\n"));
  EXPECT_TRUE(contains(r.out, "⟦a⟧ = 1\n"));
  EXPECT_TRUE(contains(r.out, "not valid"));
  EXPECT_EQ(run("demo frobnicate").code, 2);
}

TEST(Cli, Normalize) {
  CliRun r = run("normalize --term '1_1[t . id_0]'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "t\nsteps 1\n");
  CliRun bad = run("normalize --term 'x[x . id_0]'");
  EXPECT_EQ(bad.code, 2);
  EXPECT_TRUE(contains(bad.out, "SortMismatch"));
  CliRun arith = run("--sig " + data + "/arith.sig normalize --system " + data + "/arith.rw --term 'times(S(S(0)), S(S(0)))'");
  EXPECT_EQ(arith.code, 0) << arith.out;
  EXPECT_TRUE(contains(arith.out, "S_0(S_0(S_0(S_0(0_0()))))\n")) << arith.out;
}

TEST(Cli, CheckProof) {
  EXPECT_EQ(run(logic + "check-proof " + data + "/proofs/equality.prf").code, 0);
  CliRun bad = run(logic + "check-proof " + data + "/invalid/eigenvariable.prf");
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(contains(bad.out, "SideConditionViolated")) << bad.out;
  CliRun missing = run(logic + "check-proof " + data + "/nope.prf");
  EXPECT_EQ(missing.code, 2);
  EXPECT_TRUE(contains(missing.out, "nope.prf"));
  const std::string arith = "--sig " + data + "/arith.sig check-proof " + data + "/even4.lprf --modulo ";
  EXPECT_EQ(run(arith + data + "/arith.rw").code, 0);
  EXPECT_EQ(run(arith + "none").code, 1);
}

TEST(Cli, ParseErrorsNameTheLine) {
  auto tmp = std::filesystem::temp_directory_path() / "bindlog_cli_bad.prf";
  {
    FILE* f = fopen(tmp.c_str(), "w");
    fputs("rule axiom P(c) |- P(c)\n  rule axiom P(c |- P(c)\n", f);
    fclose(f);
  }
  CliRun r = run(logic + "check-proof " + tmp.string());
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.out, "line 2")) << r.out;
  std::filesystem::remove(tmp);
}

TEST(Cli, TranslateThenCheckModuloSigma) {
  auto tmp = std::filesystem::temp_directory_path() / "bindlog_cli_tr.lprf";
  CliRun t = run(logic + "translate-proof " + data + "/proofs/equality.prf -o " + tmp.string());
  ASSERT_EQ(t.code, 0) << t.out;
  CliRun c = run(logic + "check-proof --modulo sigma " + tmp.string());
  EXPECT_EQ(c.code, 0) << c.out;
  EXPECT_TRUE(contains(c.out, "height 5")) << c.out;
  std::filesystem::remove(tmp);
}

TEST(Cli, PrecookAndParse) {
  CliRun r = run("--sig " + data + "/logic.sig precook --prop 'forall x. P(L(y. g(x)))'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "forall x. P(L_0(g_1(x[up_0])))\n");
  EXPECT_EQ(run(logic + "parse --term 'g(x, y)'").code, 2);
  auto tmp = std::filesystem::temp_directory_path() / "bindlog_cli.prop";
  {
    FILE* f = fopen(tmp.c_str(), "w");
    fputs("forall x. P(x)\n", f);
    fclose(f);
  }
  CliRun at = run(logic + "parse --prop @" + tmp.string());
  EXPECT_EQ(at.code, 0);
  EXPECT_TRUE(contains(at.out, "forall x. P(x)"));
  std::filesystem::remove(tmp);
}

TEST(Cli, Eval) {
  EXPECT_EQ(run("eval --model ext --prop 'forall x. f(x) = x'").code, 0);
  CliRun inv = run("eval --model ext --exact --prop '(forall x. f(x) = x) => Lambda(x. f(x)) = Lambda(x. x)'");
  EXPECT_EQ(inv.code, 1);
  EXPECT_TRUE(contains(inv.out, ": invalid"));
  CliRun fn = run("eval --model fullfn:2 --exact --prop '(forall x. f(f(x)) = x) => Lambda(x. f(f(x))) = Lambda(x. x)'");
  EXPECT_EQ(fn.code, 0) << fn.out;
  CliRun d = run("eval --model delta --term 'delta(a, x. a, y. a)'");
  EXPECT_EQ(d.code, 0);
  EXPECT_TRUE(contains(d.out, "= 0"));
  EXPECT_EQ(run("eval --model delta --exact --prop 'forall x. x = x'").code, 2);
  EXPECT_EQ(run("eval --model nosuch --prop 'forall x. x = x'").code, 2);
  EXPECT_EQ(run("eval --model " + data + "/unit.mdl --exact --prop '(forall x. f(x) = x) => Lambda(x. f(x)) = Lambda(x. x)'").code, 0);
}

TEST(Cli, VerifyModel) {
  CliRun e = run("verify-model --model ext --bounds 2,2,2");
  EXPECT_EQ(e.code, 0) << e.out;
  EXPECT_TRUE(contains(e.out, "absorption Lambda"));
  CliRun u = run("verify-model --model " + data + "/unit.mdl --bounds 2,2,2");
  EXPECT_EQ(u.code, 0) << u.out;
  EXPECT_EQ(run("verify-model --model ext --bounds 2,x,2").code, 2);
}

TEST(Cli, SeedReproducibility) {
  const std::string probe = "--samples 200 --seed 5 probe";
  CliRun a = run(probe), b = run(probe);
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  CliRun env = run("--samples 200 --seed 7 probe", "BINDLOG_SEED=5");
  EXPECT_EQ(env.out, a.out);
  CliRun d1 = run("--samples 300 --seed 3 demo disjoint-sum"), d2 = run("demo disjoint-sum --samples 300 --seed 3");
  EXPECT_EQ(d1.out, d2.out);
}

TEST(Cli, Json) {
  CliRun r = run("--json demo extensionality");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("command"), "demo");
  EXPECT_EQ(j.at("ok"), true);
  CliRun e = run("--json --sig " + data + "/logic.sig parse --term 'h(x)'");
  EXPECT_EQ(e.code, 2);
  auto je = nlohmann::json::parse(e.out);
  EXPECT_EQ(je.at("ok"), false);
  EXPECT_TRUE(contains(je.at("error").get<std::string>(), "UnknownSymbol"));
}
