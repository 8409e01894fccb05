#include <gtest/gtest.h>

#include "bindlog/demos.hpp"
#include "bindlog/precook.hpp"
#include "bindlog/probes.hpp"
#include "bindlog/sigma.hpp"
#include "bindlog/sigma_model.hpp"
#include "bindlog/syntax_io.hpp"

using namespace bindlog;

namespace {

const BindingModel& ext() {
  static const BindingModel m = ext_counter_model();
  return m;
}

// Forwards everything but shift, which drops the last projection.
class BadShift : public SigmaModel {
 public:
  explicit BadShift(std::shared_ptr<const SigmaModel> b) : b_(std::move(b)) {}
  std::string name() const override { return "bad"; }
  const Signature& signature() const override { return b_->signature(); }
  Element index(unsigned i, unsigned n) const override { return b_->index(i, n); }
  Element fapp(const std::string& f, unsigned p, std::span<const Element> a) const override { return b_->fapp(f, p, a); }
  bool pred(const std::string& P, std::span<const Element> a) const override { return b_->pred(P, a); }
  Element closure(const Element& t, const SubstValue& s, unsigned n, unsigned p) const override {
    return b_->closure(t, s, n, p);
  }
  SubstValue id(unsigned n) const override { return b_->id(n); }
  SubstValue cons(const Element& t, const SubstValue& s, unsigned n, unsigned p) const override {
    return b_->cons(t, s, n, p);
  }
  SubstValue shift(unsigned n) const override {
    SubstValue s;
    for (unsigned i = 1; i <= n; ++i) s.items.push_back(b_->index(i, n + 1));
    return s;
  }
  SubstValue comp(const SubstValue& a, const SubstValue& b, unsigned n, unsigned p, unsigned q) const override {
    return b_->comp(a, b, n, p, q);
  }
  bool equal(const Element& a, const Element& b, unsigned n) const override { return b_->equal(a, b, n); }
  bool equal(const SubstValue& a, const SubstValue& b, unsigned n, unsigned p) const override {
    return b_->equal(a, b, n, p);
  }
  bool exact_equality(unsigned n) const override { return b_->exact_equality(n); }
  std::optional<Elements> carrier(unsigned n) const override { return b_->carrier(n); }
  Element sample(unsigned n, std::mt19937_64& rng) const override { return b_->sample(n, rng); }
  Elements samples0() const override { return b_->samples0(); }
  std::string show(const Element& a, unsigned n) const override { return b_->show(a, n); }

 private:
  std::shared_ptr<const SigmaModel> b_;
};

Assignment random_phi(const BindingModel& m, std::mt19937_64& rng) {
  Assignment phi;
  for (const char* v : {"x", "y", "z", "w"}) phi[v] = m.ifs->sample(0, rng);
  return phi;
}

}  // namespace

TEST(SigmaModel, Basics) {
  auto n = sigma_model_from_binding(ext());
  EXPECT_EQ(n->show(n->index(2, 3), 3), "2_3");
  SubstValue id = n->id(2);
  ASSERT_EQ(id.items.size(), 2u);
  EXPECT_EQ(n->show(id.items[1], 2), "2_2");
  SubstValue up = n->shift(1);
  ASSERT_EQ(up.items.size(), 1u);
  EXPECT_EQ(n->show(up.items[0], 2), "2_2");
  LValue v = eval_lterm(*n, parse_lterm(ext().sig, "Lambda_0(f_1(1_1))"), {});
  EXPECT_EQ(n->show(std::get<Element>(v), 0), "l0");
  EXPECT_THROW(eval_lterm(*n, parse_lterm(ext().sig, "x[x . id_0]"), {}), Error);
}

TEST(SigmaModel, RulesHoldInBuiltinModels) {
  SweepReport r = check_sigma_rules(*sigma_model_from_binding(ext()), 100, 1);
  EXPECT_TRUE(r.ok()) << r.str();
  EXPECT_TRUE(r.exact);
  EXPECT_GE(r.instances, 1000u);
  EXPECT_TRUE(check_sigma_rules(*sigma_model_from_binding(full_function_model(2)), 50, 2).ok());
  SweepReport d = check_sigma_rules(*sigma_model_from_binding(delta_model(100)), 20, 3);
  EXPECT_TRUE(d.ok()) << d.str();
  EXPECT_FALSE(d.exact);
}

TEST(SigmaModel, BrokenShiftIsCaught) {
  BadShift bad(sigma_model_from_binding(ext()));
  EXPECT_FALSE(check_sigma_rules(bad, 50, 1).ok());
}

TEST(SigmaModel, RoundTripModelIsAnIfs) {
  BindingModel back = binding_model_from_sigma(sigma_model_from_binding(ext()));
  EXPECT_TRUE(check_ifs(*back.ifs, 2, 2, 2).ok());
  EXPECT_TRUE(check_coherence(back, "Lambda", 1, 1).ok());
  EXPECT_TRUE(check_absorption(back, "Lambda", 2).ok());
  EXPECT_EQ(back.ifs->show(eval_term(back, parse_term(back.sig, "Lambda(x. f(x))"), {}, {}), 0), "l0");
  DemoReport r = extensionality_demo(back);
  EXPECT_TRUE(r.ok) << r.str();
}

TEST(SigmaModelProperty, DenotationTransport) {
  std::mt19937_64 rng(5);
  for (const BindingModel& m : {ext(), full_function_model(2)}) {
    auto n = sigma_model_from_binding(m);
    BindingModel back = binding_model_from_sigma(n);
    BindingTermGenerator gen(m.sig, 6);
    for (int k = 0; k < 500; ++k) {
      Term t = gen.term();
      Assignment phi = random_phi(m, rng);
      Element direct = eval_term(m, t, {}, phi);
      LValue via = eval_lterm(*n, precook(m.sig, t), phi);
      EXPECT_TRUE(m.ifs->equal(direct, std::get<Element>(via), 0)) << print(t);
      EXPECT_TRUE(m.ifs->equal(direct, eval_term(back, t, {}, phi), 0)) << print(t);
      Prop a = gen.prop();
      EXPECT_EQ(eval_prop(m, a, phi).value, eval_lprop(*n, precook_prop(m.sig, a), phi).value) << print(a);
      EXPECT_EQ(eval_prop(m, a, phi).value, eval_prop(back, a, phi).value) << print(a);
    }
  }
}

TEST(SigmaModelProperty, NormalizationPreservesDenotation) {
  auto n = sigma_model_from_binding(ext());
  LTermGenerator gen(ext().sig, 9);
  const RewriteSystem rs = sigma_system(ext().sig);
  std::mt19937_64 rng(10);
  for (int k = 0; k < 500; ++k) {
    LTerm t = gen.any();
    Sort s = sort_of(ext().sig, t);
    Assignment phi = random_phi(ext(), rng);
    EXPECT_TRUE(values_equal(*n, eval_lterm(*n, t, phi), eval_lterm(*n, normalize(rs, t), phi), s)) << print(t);
  }
}
