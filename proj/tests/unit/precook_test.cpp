#include <gtest/gtest.h>

#include <filesystem>

#include "bindlog/precook.hpp"
#include "bindlog/proof_io.hpp"
#include "bindlog/probes.hpp"
#include "bindlog/sigma.hpp"
#include "bindlog/syntax_io.hpp"
#include "oracles.hpp"

using namespace bindlog;
namespace fs = std::filesystem;

namespace {

Signature sig() {
  return parse_signature("fun f : <0,0>\nfun g : <0>\nfun L : <1>\nfun K : <2,0>\nfun c : <>\npred = : <0,0>\npred P : <0>\n");
}
Term T(const std::string& s) { return parse_term(sig(), s); }
Prop A(const std::string& s) { return parse_prop(sig(), s); }

}  // namespace

TEST(Precook, WorkedExample) {
  LProp p = precook_prop(sig(), A("forall x. forall y. f(x, y) = L(z. f(x, z))"));
  EXPECT_EQ(print(p), "forall x. forall y. f_0(x, y) = L_0(f_1(x[up_0], 1_1))");
  EXPECT_TRUE(is_F_prop(sig(), p));
  LTerm t = parse_lterm(sig(), "L_0(f_1(x[up_0], 1_1))");
  EXPECT_EQ(sort_of(sig(), t), Sort::term(0));
  EXPECT_TRUE(oracle::alpha(uncook(sig(), t), T("L(z. f(x, z))")));
}

TEST(Precook, Contexts) {
  EXPECT_EQ(precook(sig(), T("x"), {"y", "x"}), LTerm::closure(LTerm::index(1, 1), LTerm::shift(1)));
  EXPECT_EQ(precook(sig(), T("x"), {"y", "x"}), index_nf(1, 2));
  EXPECT_EQ(precook(sig(), T("x"), {"x", "x"}), LTerm::index(1, 2));
  EXPECT_EQ(precook(sig(), T("w"), {"y", "x"}), shifted_var("w", 2));
  EXPECT_EQ(print(precook(sig(), T("K(a b. f(a, b), c)"))), "K_0(f_2(1_1[up_1], 1_2), c_0())");
}

TEST(Precook, UncookRejectsNonFTerms) {
  for (const char* s : {"1_1[t . id_0]", "x[up_0]", "g_1(1_1)"}) {
    try {
      uncook(sig(), parse_lterm(sig(), s));
      FAIL() << s;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotAnFTerm) << s;
    }
  }
}

TEST(Precook, SubstitutionExample) {
  // u = L(z. x), t = g(z): the bound z must not capture the substituted z
  Term u = T("L(z. x)"), t = T("g(z)");
  LTerm left = precook(sig(), substitute({{"x", t}}, u));
  LTerm right = normalize(sigma_system(sig()), graft({{"x", precook(sig(), t)}}, precook(sig(), u)));
  EXPECT_EQ(left, right);
  EXPECT_EQ(print(left), "L_0(g_1(z[up_0]))");
  EXPECT_TRUE(subst_commutes(sig(), t, u, "x"));
}

TEST(Precook, TheoryTranslation) {
  TheoryModulo th = translate_theory(sig(), {A("forall x. x = x"), A("forall x. P(L(y. f(x, y)))")});
  ASSERT_EQ(th.axioms.size(), 2u);
  EXPECT_EQ(print(th.axioms[1]), "forall x. P(L_0(f_1(x[up_0], 1_1)))");
  EXPECT_NE(th.congruence.find("VarCons"), nullptr);
}

TEST(Precook, SchemeExpansionGrafts) {
  auto inst = expand_scheme(A("L(x. u) = L(x. v)"), {{{"u", T("x")}, {"v", T("g(x)")}}});
  ASSERT_EQ(inst.size(), 1u);
  EXPECT_EQ(inst[0], A("L(x. x) = L(x. g(x))"));
}

TEST(Precook, ProofTranslationKeepsShape) {
  Signature logic = load_signature(BINDLOG_TEST_DATA "/logic.sig");
  Congruence sigma(sigma_system(logic));
  for (const auto& e : fs::directory_iterator(fs::path(BINDLOG_TEST_DATA) / "proofs")) {
    ProofTree p = load_proof(logic, e.path().string());
    LProofTree q = translate_proof(logic, p);
    EXPECT_EQ(q.height(), p.height()) << e.path();
    EXPECT_EQ(q.node_count(), p.node_count()) << e.path();
    CheckResult r = check_modulo_proof(logic, sigma, q);
    EXPECT_TRUE(r) << e.path() << ": " << (r ? "" : r.error().str());
    EXPECT_EQ(parse_lproof(logic, print(q)), q);
  }
  try {
    translate_proof(logic, load_proof(logic, BINDLOG_TEST_DATA "/invalid/mismatch.prf"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidSourceProof);
  }
}

TEST(PrecookProperty, SortAndRoundTrip) {
  BindingTermGenerator gen(sig(), 31);
  for (int k = 0; k < 1000; ++k) {
    Term t = gen.term();
    LTerm p = precook(sig(), t);
    ASSERT_EQ(sort_of(sig(), p), Sort::term(0)) << print(t);
    EXPECT_TRUE(is_F_term(sig(), p)) << print(t);
    EXPECT_TRUE(oracle::alpha(uncook(sig(), p), t)) << print(t);
    Prop a = gen.prop();
    LProp ap = precook_prop(sig(), a);
    EXPECT_TRUE(sort_check(sig(), ap));
    EXPECT_TRUE(oracle::alpha(uncook(sig(), ap), a)) << print(a);
  }
}

TEST(PrecookProperty, AlphaInvariance) {
  BindingTermGenerator gen(sig(), 32);
  for (int k = 0; k < 500; ++k) {
    Term t = gen.term();
    Term u = substitute({{"unused", T("c")}}, t);
    EXPECT_EQ(precook(sig(), t), precook(sig(), u));
  }
}

TEST(PrecookProperty, SubstitutionCommutes) {
  BindingTermGenerator gen(sig(), 33);
  const RewriteSystem rs = sigma_system(sig());
  const char* xs[] = {"x", "y", "z"};
  for (int k = 0; k < 1000; ++k) {
    Term t = gen.term(10);
    Prop a = gen.prop();
    std::string x = xs[k % 3];
    EXPECT_TRUE(subst_commutes(sig(), t, a, x)) << print(t) << " / " << x << " in " << print(a);
    // independent route back through uncook
    LProp lhs = normalize(rs, substitute({{x, precook(sig(), t)}}, precook_prop(sig(), a)));
    EXPECT_TRUE(oracle::alpha(uncook(sig(), lhs), substitute({{x, t}}, a))) << print(a);
    Term u = gen.term();
    EXPECT_TRUE(subst_commutes(sig(), t, u, x));
  }
}
