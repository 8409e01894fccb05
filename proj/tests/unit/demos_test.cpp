#include <gtest/gtest.h>

#include <algorithm>

#include "bindlog/demos.hpp"
#include "bindlog/syntax_io.hpp"

using namespace bindlog;

namespace {

bool has_line(const DemoReport& r, const std::string& l) {
  return std::find(r.lines.begin(), r.lines.end(), l) != r.lines.end();
}

template <class F>
bool fails(F&& run) {
  try {
    return !run().ok;
  } catch (const Error&) {
    return true;
  }
}

}  // namespace

TEST(Demos, Extensionality) {
  DemoReport r = extensionality_demo(ext_counter_model());
  EXPECT_TRUE(r.ok) << r.str();
  EXPECT_TRUE(has_line(r, "⟦Λx f(x)⟧ = l0"));
  EXPECT_TRUE(has_line(r, "⟦Λx x⟧ = k0"));
  EXPECT_TRUE(has_line(r, "scheme instance NOT valid"));
  EXPECT_EQ(ext_equality_axioms(ext_counter_model().sig).size(), 5u);
}

TEST(Demos, ExtensionalityIsRecomputed) {
  EXPECT_TRUE(fails([] {
    BindingModel m = ext_counter_model();
    m.fhat.erase("Lambda");
    return extensionality_demo(m);
  }));
  EXPECT_TRUE(fails([] {
    BindingModel m = ext_counter_model();
    m.fhat["f"] = [](unsigned, std::span<const Element> a) { return a[0]; };
    return extensionality_demo(m);
  }));
  EXPECT_TRUE(fails([] {
    BindingModel m = ext_counter_model();
    m.phat["="] = [](std::span<const Element>) { return true; };
    return extensionality_demo(m);
  }));
  // an extensional model validates the scheme
  EXPECT_TRUE(fails([] { return extensionality_demo(full_function_model(2)); }));
}

TEST(Demos, DisjointSum) {
  DemoReport r = disjoint_sum_demo(delta_model(), 1000, 1);
  EXPECT_TRUE(r.ok) << r.str();
  EXPECT_TRUE(has_line(r, "⟦delta(a, x. a, y. a)⟧ = 0"));
  EXPECT_TRUE(has_line(r, "⟦a⟧ = 1"));
  EXPECT_TRUE(has_line(r, "delta(a, x. a, y. a) = a: not valid"));
  EXPECT_TRUE(has_line(r, "scheme delta(i(x), x. u, y. v) = u: 1000/1000 sampled instances hold"));
  EXPECT_TRUE(has_line(r, "scheme delta(j(y), x. u, y. v) = v: 1000/1000 sampled instances hold"));
  EXPECT_EQ(disjoint_sum_demo(delta_model(), 200, 9).str(), disjoint_sum_demo(delta_model(), 200, 9).str());
}

TEST(Demos, DisjointSumIsRecomputed) {
  EXPECT_TRUE(fails([] {
    BindingModel m = delta_model();
    m.fhat.erase("delta");
    return disjoint_sum_demo(m, 50, 1);
  }));
  EXPECT_TRUE(fails([] {
    BindingModel m = delta_model();
    auto a = m.fhat.at("a");
    m.fhat["a"] = [a](unsigned p, std::span<const Element> args) { return p == 0 ? Element{0, nullptr} : a(p, args); };
    return disjoint_sum_demo(m, 50, 1);
  }));
  EXPECT_TRUE(fails([] { return disjoint_sum_demo(delta_model(300, DeltaCoding::Doubling), 500, 1); }));
}
