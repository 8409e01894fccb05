#include <gtest/gtest.h>

#include "bindlog/lterm.hpp"
#include "bindlog/lterm_io.hpp"
#include "bindlog/probes.hpp"
#include "bindlog/syntax_io.hpp"

using namespace bindlog;

namespace {

Signature sig() { return parse_signature("fun f : <0,0>\nfun h : <0,1>\nfun L : <1>\nfun g : <0>\nfun c : <>\npred = : <0,0>\n"); }
LTerm L(const std::string& s) { return parse_lterm(sig(), s); }

ErrorCode sort_error(const LTerm& t) {
  try {
    sort_of(sig(), t);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

}  // namespace

TEST(LTerm, Sorts) {
  EXPECT_EQ(sort_of(sig(), L("L_0(f_1(x[up_0], 1_1))")), Sort::term(0));
  EXPECT_EQ(sort_of(sig(), L("x[up_0 o up_1]")), Sort::term(2));
  EXPECT_EQ(sort_of(sig(), L("up_0 o up_1")), Sort::substitution(2, 0));
  EXPECT_EQ(sort_of(sig(), L("c_0() . id_0")), Sort::substitution(0, 1));
  EXPECT_EQ(sort_of(sig(), L("x")), Sort::term(0));
  EXPECT_EQ(sort_of(sig(), L("2_3")), Sort::term(3));
}

TEST(LTerm, SortErrors) {
  EXPECT_EQ(sort_error(LTerm::index(3, 2)), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(sort_error(LTerm::index(0, 2)), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(sort_error(L("x[c_0() . id_0]")), ErrorCode::SortMismatch);
  EXPECT_EQ(sort_error(L("up_0 o up_0")), ErrorCode::SortMismatch);
  EXPECT_EQ(sort_error(LTerm::fapp("g", 0, {})), ErrorCode::ArityMismatch);
  EXPECT_EQ(sort_error(LTerm::fapp("nope", 0, {})), ErrorCode::UnknownSymbol);
  EXPECT_FALSE(try_sort_of(sig(), L("g_0(1_1)")).has_value());
  EXPECT_TRUE(try_sort_of(sig(), L("g_1(1_1)")).has_value());
}

TEST(LTerm, ShiftChains) {
  EXPECT_EQ(shifts(0, 1), LTerm::shift(0));
  EXPECT_EQ(print(shifts(0, 3)), "up_0 o up_1 o up_2");
  EXPECT_EQ(sort_of(sig(), shifts(1, 3)), Sort::substitution(4, 1));
  EXPECT_EQ(shifted_var("x", 0), LTerm::var("x"));
  EXPECT_EQ(sort_of(sig(), shifted_var("x", 3)), Sort::term(3));
  EXPECT_EQ(sort_of(sig(), index_nf(2, 4)), Sort::term(4));
  EXPECT_EQ(index_nf(0, 4), LTerm::index(1, 4));
}

TEST(LTerm, PropositionsAndRenaming) {
  LProp a = parse_lprop(sig(), "forall x. x = L_0(x[up_0])");
  LProp b = parse_lprop(sig(), "forall y. y = L_0(y[up_0])");
  EXPECT_TRUE(sort_check(sig(), a));
  EXPECT_TRUE(alpha_eq(a, b));
  EXPECT_EQ(canonical(a), canonical(b));
  LProp c = substitute({{"z", L("x")}}, parse_lprop(sig(), "forall x. x = z"));
  EXPECT_FALSE(alpha_eq(c, parse_lprop(sig(), "forall x. x = x")));
  EXPECT_TRUE(free_vars(c).count("x"));
  EXPECT_FALSE(sort_check(sig(), parse_lprop(sig(), "1_1 = x")));
}

TEST(LTerm, PrintParseRoundTrip) {
  LTermGenerator gen(sig(), 3);
  for (int k = 0; k < 2000; ++k) {
    LTerm t = gen.any();
    LTerm u = parse_lterm(sig(), print(t));
    ASSERT_EQ(t, u) << print(t);
  }
}

TEST(LTerm, GeneratorIsSortCorrect) {
  LTermGenerator gen(sig(), 4);
  for (int k = 0; k < 2000; ++k) {
    LTerm t = gen.term(k % 4, 30);
    ASSERT_EQ(sort_of(sig(), t), Sort::term(k % 4)) << print(t);
    LTerm s = gen.subst(k % 3, k % 4, 20);
    ASSERT_EQ(sort_of(sig(), s), Sort::substitution(k % 3, k % 4)) << print(s);
  }
}
