#include <gtest/gtest.h>

#include "bindlog/probes.hpp"
#include "bindlog/syntax.hpp"
#include "bindlog/syntax_io.hpp"
#include "oracles.hpp"

using namespace bindlog;

namespace {

Signature sig() {
  return parse_signature(
      "fun c : <>\nfun g : <0>\nfun h : <0,0>\nfun L : <1>\nfun F : <1>\nfun K : <2,0>\n"
      "fun delta : <0,1,1>\nfun i : <0>\nfun j : <0>\npred P : <0,0>\npred Q : <1>\npred = : <0,0>\n");
}

Term T(const std::string& s) { return parse_term(sig(), s); }
Prop A(const std::string& s) { return parse_prop(sig(), s); }

// Renames every binder to a fresh b<k>, then grafts: capture-free by construction.
struct Freshener {
  unsigned next = 0;

  std::string fresh() { return "b" + std::to_string(next++); }

  Term term(const Term& t, const SubstMap& ren) {
    if (t.is_var()) {
      auto it = ren.find(t.name());
      return it == ren.end() ? t : it->second;
    }
    std::vector<Arg> args;
    for (const Arg& a : t.args()) {
      SubstMap inner = ren;
      std::vector<std::string> bs;
      for (const auto& b : a.binders) {
        std::string n = fresh();
        bs.push_back(n);
        inner.insert_or_assign(b, Term::var(n));
      }
      args.push_back(Arg{std::move(bs), term(a.body, inner)});
    }
    return Term::app(t.name(), std::move(args));
  }
};

}  // namespace

TEST(Syntax, FreeVariables) {
  EXPECT_EQ(free_vars(T("x")), (std::set<std::string>{"x"}));
  EXPECT_TRUE(free_vars(T("L(x. x)")).empty());
  EXPECT_EQ(free_vars(T("L(x. h(x, y))")), (std::set<std::string>{"y"}));
  EXPECT_EQ(free_vars(A("forall x. P(x, y)")), (std::set<std::string>{"y"}));
}

TEST(Syntax, GraftCaptures) {
  EXPECT_EQ(graft({{"y", T("x")}}, T("L(x. y)")), T("L(x. x)"));
  EXPECT_EQ(graft({{"x", T("c")}}, T("x")), T("c"));
  EXPECT_EQ(graft({{"x", T("c")}}, T("L(x. g(x))")), T("L(x. g(x))"));
}

TEST(Syntax, SubstituteAvoidsCapture) {
  Term r = substitute({{"y", T("x")}}, T("L(x. y)"));
  EXPECT_NE(r, T("L(x. x)"));
  EXPECT_TRUE(alpha_eq(r, T("L(z. x)")));
  EXPECT_EQ(r.args()[0].binders[0], "x'1");
  Prop q = substitute({{"x", T("c")}}, A("forall x. P(x, x)"));
  EXPECT_TRUE(alpha_eq(q, A("forall x. P(x, x)")));
}

TEST(Syntax, AlphaEquivalence) {
  EXPECT_TRUE(alpha_eq(T("L(x. x)"), T("L(y. y)")));
  EXPECT_TRUE(alpha_eq(T("L(x. y)"), T("L(z. y)")));
  EXPECT_FALSE(alpha_eq(T("L(x. y)"), T("L(x. x)")));
  EXPECT_TRUE(alpha_eq(A("forall x. P(x, y)"), A("forall z. P(z, y)")));
  EXPECT_FALSE(alpha_eq(A("forall x. P(x, y)"), A("forall y. P(y, y)")));
  EXPECT_TRUE(alpha_eq(T("K(x y. x, y)"), T("K(a b. a, y)")));
  EXPECT_FALSE(alpha_eq(T("K(x y. x, y)"), T("K(a b. b, y)")));
}

TEST(Syntax, Nameless) {
  EXPECT_EQ(to_debruijn(T("L(x. x)")).str(), "L(•. #1)");
  EXPECT_EQ(to_debruijn(T("L(x. L(y. x))")).str(), "L(•. L(•. #2))");
}

TEST(Syntax, WellFormedness) {
  EXPECT_TRUE(well_formed(sig(), Term::app("L", {Arg{{"x"}, Term::var("x")}})));
  auto bad = well_formed(sig(), Term::app("L", {Arg{{"x", "y"}, Term::var("x")}}));
  ASSERT_FALSE(bad);
  EXPECT_EQ(bad.error().code, ErrorCode::BinderCountMismatch);
  EXPECT_TRUE(well_formed(sig(), T("delta(i(x), x. u, y. v)")));
  auto dup = well_formed(sig(), Term::app("K", {Arg{{"x", "x"}, Term::var("x")}, Arg{{}, Term::var("y")}}));
  ASSERT_FALSE(dup);
  EXPECT_EQ(dup.error().code, ErrorCode::DuplicateBinder);
  auto unk = well_formed(sig(), Term::app("nope", {}));
  ASSERT_FALSE(unk);
  EXPECT_EQ(unk.error().code, ErrorCode::UnknownSymbol);
  auto ar = well_formed(sig(), Term::app("g", {}));
  ASSERT_FALSE(ar);
  EXPECT_EQ(ar.error().code, ErrorCode::ArityMismatch);
}

TEST(Syntax, SignatureErrors) {
  Signature s;
  s.add_function("f", {0});
  EXPECT_THROW(s.add_predicate("f", {0}), Error);
  EXPECT_THROW(s.add_function("", {}), Error);
  try {
    parse_signature("fun f : <0>\nfun f : <1>\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidSignature);
  }
}

TEST(Syntax, ParseErrorsAreLocated) {
  try {
    parse_term(sig(), "g(x");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(e.detail().find("line 1"), std::string::npos);
  }
}

TEST(Syntax, PrintParseRoundTrip) {
  BindingTermGenerator gen(sig(), 7);
  for (int k = 0; k < 500; ++k) {
    Prop a = gen.prop();
    Prop b = parse_prop(sig(), print(a));
    EXPECT_EQ(a, b) << print(a);
  }
}

TEST(SyntaxProperty, NamelessAgreesWithRecursiveAlpha) {
  BindingGenOptions o;
  o.max_size = 8;
  o.names = {"x", "y"};
  BindingTermGenerator gen(sig(), 11, o);
  std::size_t equal = 0;
  for (int k = 0; k < 1000; ++k) {
    Term t = gen.term(), u = gen.term();
    if (k % 3 == 0) u = Freshener{}.term(t, {});
    const bool ref = oracle::alpha(t, u);
    equal += ref;
    EXPECT_EQ(alpha_eq(t, u), ref) << print(t) << " vs " << print(u);
    EXPECT_EQ(to_debruijn(t) == to_debruijn(u), ref);
  }
  EXPECT_GT(equal, 300u);
}

TEST(SyntaxProperty, SubstituteIsGraftAfterFreshening) {
  BindingTermGenerator gen(sig(), 12);
  for (int k = 0; k < 1000; ++k) {
    Term t = gen.term();
    SubstMap theta{{"x", gen.term(6)}, {"y", gen.term(6)}};
    Term fresh = Freshener{}.term(t, {});
    Term ref = graft(theta, fresh);
    EXPECT_TRUE(oracle::alpha(substitute(theta, t), ref)) << print(t);
  }
}

TEST(SyntaxProperty, GraftIdentityOffDomain) {
  BindingTermGenerator gen(sig(), 13);
  for (int k = 0; k < 500; ++k) {
    Prop a = gen.prop();
    SubstMap theta{{"unused", gen.term(5)}};
    EXPECT_EQ(graft(theta, a), a);
    EXPECT_TRUE(alpha_eq(substitute(theta, a), a));
  }
}

TEST(SyntaxProperty, SubstitutionPreservesWellFormedness) {
  BindingTermGenerator gen(sig(), 14);
  for (int k = 0; k < 500; ++k) {
    Prop a = gen.prop();
    Prop b = substitute({{"x", gen.term(6)}}, a);
    EXPECT_TRUE(well_formed(sig(), b)) << print(b);
  }
}
