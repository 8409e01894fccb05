#include <gtest/gtest.h>

#include <algorithm>

#include "bindlog/precook.hpp"
#include "bindlog/probes.hpp"
#include "bindlog/sigma.hpp"
#include "bindlog/syntax_io.hpp"

using namespace bindlog;

namespace {

Signature sig() { return parse_signature("fun f : <0,0>\nfun h : <0,1>\nfun L : <1>\nfun g : <0>\nfun c : <>\npred = : <0,0>\n"); }
LTerm L(const std::string& s) { return parse_lterm(sig(), s); }
const RewriteSystem& sigma() {
  static const RewriteSystem rs = sigma_system(sig());
  return rs;
}

}  // namespace

TEST(Sigma, RuleSet) {
  const auto& rules = sigma().rules();
  ASSERT_EQ(rules.size(), 11u + sig().functions().size());
  for (const char* r : {"Index", "VarCons", "Id", "Clos", "IdL", "ShiftCons", "AssEnv", "MapEnv", "IdR", "VarId",
                        "SCons", "App[f]", "App[L]", "App[g]", "App[c]"})
    EXPECT_NE(sigma().find(r), nullptr) << r;
  EXPECT_EQ(sigma().find("VarCons")->display, "1[t . s] -> t");
}

TEST(Sigma, OneStepExamples) {
  Normalized n = normalize_counted(sigma(), L("1_1[t . id_0]"));
  EXPECT_EQ(n.term, L("t"));
  EXPECT_EQ(n.steps, 1u);
  EXPECT_EQ(normalize(sigma(), L("2_3")), L("1_2[up_2]"));
  EXPECT_EQ(normalize(sigma(), L("L_0(x[up_0])[id_0]")), L("L_0(x[up_0])"));
  EXPECT_EQ(normalize(sigma(), L("x[up_0 o up_1]")), L("x[up_0 o up_1]"));
}

TEST(Sigma, BinderSchemaAtArityOne) {
  LTerm t = L("g_1(1_1)");
  LTerm s = L("up_0");
  LTerm redex = LTerm::closure(LTerm::fapp("L", 0, {t}), s);
  ASSERT_EQ(sort_of(sig(), redex), Sort::term(1));
  auto it = std::find_if(sigma().rules().begin(), sigma().rules().end(),
                         [](const Rule& r) { return r.name == "App[L]"; });
  auto out = it->apply(redex);
  ASSERT_TRUE(out.has_value());
  LTerm expect = LTerm::fapp("L", 1, {LTerm::closure(t, LTerm::cons(LTerm::index(1, 2), LTerm::comp(s, LTerm::shift(1))))});
  EXPECT_EQ(*out, expect) << print(*out);
  EXPECT_EQ(sort_of(sig(), *out), Sort::term(1));
}

TEST(Sigma, BinderSchemaAtArityZeroIsPlainPropagation) {
  LTerm redex = L("g_0(x)[up_0]");
  EXPECT_EQ(normalize(sigma(), redex), L("g_1(x[up_0])"));
}

TEST(Sigma, FTerms) {
  EXPECT_TRUE(is_F_term(sig(), L("x[up_0 o up_1 o up_2]")));
  EXPECT_TRUE(is_F_term(sig(), L("L_0(f_1(x[up_0], 1_1))")));
  EXPECT_FALSE(is_F_term(sig(), L("1_1[t . id_0]")));
  EXPECT_FALSE(is_F_term(sig(), L("2_2")));
  EXPECT_TRUE(is_F_term(sig(), L("h_1(x[up_0], 1_2)")));
  EXPECT_FALSE(is_F_term(sig(), LTerm::fapp("h", 0, {L("x"), L("x")})));
  EXPECT_TRUE(is_F_prop(sig(), parse_lprop(sig(), "forall x. x = L_0(x[up_0])")));
}

TEST(Sigma, StrategiesAndBudget) {
  LTerm t = L("L_0(g_1(1_1))[up_0][y . id_0]");
  ASSERT_EQ(sort_of(sig(), t), Sort::term(0));
  NormalizeOptions inner, outer;
  outer.strategy = Strategy::Outermost;
  inner.check_sorts = outer.check_sorts = true;
  EXPECT_EQ(normalize(sigma(), t, inner), normalize(sigma(), t, outer));
  EXPECT_EQ(normalize(sigma(), t), L("L_0(g_1(1_1))"));
  NormalizeOptions tight;
  tight.budget = 1;
  try {
    normalize(sigma(), t, tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::StepBudgetExceeded);
  }
}

TEST(Sigma, Redexes) {
  LTerm t = L("1_1[t . id_0]");
  auto rs = redexes(sigma(), t);
  ASSERT_FALSE(rs.empty());
  EXPECT_TRUE(rs[0].path.empty());
  EXPECT_EQ(rewrite_at(sigma(), t, rs[0]), L("t"));
  EXPECT_TRUE(redexes(sigma(), L("x")).empty());
  EXPECT_TRUE(is_normal(sigma(), L("g_0(x)")));
}

TEST(Sigma, ClosedBinderInstance) {
  // a one-variable context instantiated by t . id reproduces the substituted pre-cooked term
  Signature s = sig();
  BindingTermGenerator gen(s, 21);
  for (int k = 0; k < 300; ++k) {
    Term u = gen.term(), t = gen.term(8);
    LTerm open = precook(s, u, {"x"});
    LTerm inst = normalize(sigma(), LTerm::closure(open, LTerm::cons(precook(s, t), LTerm::id(0))));
    EXPECT_EQ(inst, precook(s, substitute({{"x", t}}, u))) << print(u) << " / " << print(t);
  }
}

TEST(SigmaProperty, RandomFirstStepKeepsNormalForm) {
  GenOptions o;
  LTermGenerator gen(sig(), 5, o);
  for (int k = 0; k < 2000; ++k) {
    LTerm u = gen.any();
    auto rs = redexes(sigma(), u);
    if (rs.empty()) continue;
    const Redex& r = rs[gen.rng()() % rs.size()];
    EXPECT_EQ(normalize(sigma(), u), normalize(sigma(), rewrite_at(sigma(), u, r))) << print(u);
  }
}

TEST(SigmaProperty, NormalFormsAreNormalAndSorted) {
  LTermGenerator gen(sig(), 6);
  NormalizeOptions opts;
  opts.check_sorts = true;
  for (int k = 0; k < 2000; ++k) {
    LTerm u = gen.any();
    LTerm n = normalize(sigma(), u, opts);
    EXPECT_TRUE(is_normal(sigma(), n));
    EXPECT_EQ(sort_of(sig(), n), sort_of(sig(), u));
  }
}

TEST(SigmaProperty, Probes) {
  ProbeOptions po;
  po.samples = 500;
  EXPECT_TRUE(termination_probe(sigma(), po).ok());
  ConfluenceReport c = local_confluence_probe(sigma(), po);
  EXPECT_TRUE(c.ok()) << c.str();
  EXPECT_GT(c.peaks, 0u);
  EXPECT_TRUE(sigma_rule_sort_check(sig(), 50, 9).ok());
}

TEST(SigmaProperty, RootRedexGenerator) {
  LTermGenerator gen(sig(), 8);
  for (const Rule& r : sigma().rules())
    for (int k = 0; k < 30; ++k) {
      LTerm t = gen.redex(r.name);
      EXPECT_TRUE(r.apply(t).has_value()) << r.name << ": " << print(t);
    }
}

TEST(Rewrite, PatternRules) {
  Signature a = load_signature(BINDLOG_TEST_DATA "/arith.sig");
  RewriteSystem rs = load_rules(a, BINDLOG_TEST_DATA "/arith.rw");
  EXPECT_EQ(rs.rules().size(), 4u);
  LTerm four = parse_lterm(a, "S(S(S(S(0))))");
  EXPECT_EQ(normalize(rs, parse_lterm(a, "times(S(S(0)), S(S(0)))")), four);
  EXPECT_TRUE(congruence_closure_check(Congruence(rs), parse_lprop(a, "S(S(S(S(0)))) = S(S(S(S(0))))"),
                                       parse_lprop(a, "times(S(S(0)), S(S(0))) = S(S(S(S(0))))")));
  EXPECT_FALSE(congruence_closure_check(Congruence(), parse_lprop(a, "S(S(S(S(0)))) = S(S(S(S(0))))"),
                                        parse_lprop(a, "times(S(S(0)), S(S(0))) = S(S(S(S(0))))")));
}

TEST(Rewrite, InvalidRules) {
  Signature a = load_signature(BINDLOG_TEST_DATA "/arith.sig");
  for (const char* text : {"r: ?x -> 0", "r: plus(?x, 0) -> ?y", "r: plus(0, 0) -> 1_1"}) {
    try {
      parse_rules(a, text);
      FAIL() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidRule) << text;
    }
  }
}

TEST(Rewrite, LoopingSystemHitsBudget) {
  Signature a = load_signature(BINDLOG_TEST_DATA "/arith.sig");
  RewriteSystem rs = parse_rules(a, "loop: S(?x) -> S(S(?x))");
  NormalizeOptions o;
  o.budget = 100;
  EXPECT_THROW(normalize(rs, parse_lterm(a, "S(0)"), o), Error);
  Congruence c(rs, 50);
  try {
    congruence_closure_check(c, parse_lprop(a, "S(0) = 0"), parse_lprop(a, "0 = 0"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CongruenceBudgetExceeded);
  }
}

TEST(Rewrite, CongruenceUnderSigma) {
  Signature s = sig();
  Congruence c(sigma_system(s));
  EXPECT_TRUE(congruence_closure_check(c, parse_lprop(s, "1_1[t . id_0] = u"), parse_lprop(s, "t = u")));
  EXPECT_TRUE(congruence_closure_check(c, parse_lprop(s, "t = u"), parse_lprop(s, "t = u")));
  EXPECT_FALSE(congruence_closure_check(c, parse_lprop(s, "t = u"), parse_lprop(s, "u = t")));
}
