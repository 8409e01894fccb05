#include "bindlog/demos.hpp"

#include <algorithm>

#include "bindlog/precook.hpp"
#include "bindlog/probes.hpp"
#include "bindlog/syntax_io.hpp"

namespace bindlog {

std::string DemoReport::str() const {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

std::vector<Prop> ext_equality_axioms(const Signature& sig) {
  std::vector<Prop> out;
  for (const char* s : {"forall x. x = x", "forall x. forall y. (x = y => y = x)",
                        "forall x. forall y. forall z. (x = y => (y = z => x = z))",
                        "forall x. forall y. (x = y => f(x) = f(y))",
                        "forall x. forall y. (x = y => Lambda(z. x) = Lambda(z. y))"})
    out.push_back(parse_prop(sig, s));
  return out;
}

Prop ext_scheme_instance(const Signature& sig) {
  return parse_prop(sig, "(forall x. f(x) = x) => Lambda(x. f(x)) = Lambda(x. x)");
}

DemoReport extensionality_demo(const BindingModel& m) {
  DemoReport r;
  r.ok = true;
  const Ifs& ifs = *m.ifs;
  if (auto c = ifs.carrier(0)) {
    std::string dom;
    for (const Element& e : *c) dom += (dom.empty() ? "" : ", ") + ifs.show(e, 0);
    r.lines.push_back("model " + m.name + ", M_0 = {" + dom + "}");
  }
  for (const Prop& a : ext_equality_axioms(m.sig)) {
    Truth t = eval_prop(m, a, {}, {.require_exact = true});
    r.ok = r.ok && t.value;
    r.lines.push_back("axiom " + print(a) + ": " + t.str());
  }
  Prop fx = parse_prop(m.sig, "forall x. f(x) = x");
  Truth t = eval_prop(m, fx, {}, {.require_exact = true});
  r.ok = r.ok && t.value;
  r.lines.push_back(print(fx) + ": " + t.str());
  Element lf = eval_term(m, parse_term(m.sig, "Lambda(x. f(x))"), {}, {});
  Element lx = eval_term(m, parse_term(m.sig, "Lambda(x. x)"), {}, {});
  r.lines.push_back("⟦Λx f(x)⟧ = " + ifs.show(lf, 0));
  r.lines.push_back("⟦Λx x⟧ = " + ifs.show(lx, 0));
  Prop inst = ext_scheme_instance(m.sig);
  Truth s = eval_prop(m, inst, {}, {.require_exact = true});
  r.ok = r.ok && !s.value && s.exact;
  r.lines.push_back(print(inst) + ": " + s.str());
  r.lines.push_back(s.value ? "scheme instance valid" : "scheme instance NOT valid");
  return r;
}

std::vector<Prop> delta_schemes(const Signature& sig) {
  return {parse_prop(sig, "delta(i(x), x. u, y. v) = u"), parse_prop(sig, "delta(j(y), x. u, y. v) = v")};
}

DemoReport disjoint_sum_demo(const BindingModel& m, std::size_t samples, std::uint64_t seed) {
  DemoReport r;
  const Ifs& ifs = *m.ifs;
  Element d = eval_term(m, parse_term(m.sig, "delta(a, x. a, y. a)"), {}, {});
  Element a = eval_term(m, parse_term(m.sig, "a"), {}, {});
  r.lines.push_back("⟦delta(a, x. a, y. a)⟧ = " + ifs.show(d, 0));
  r.lines.push_back("⟦a⟧ = " + ifs.show(a, 0));
  Prop eq = parse_prop(m.sig, "delta(a, x. a, y. a) = a");
  Truth t = eval_prop(m, eq, {});
  r.ok = !t.value && t.exact;
  r.lines.push_back(print(eq) + ": " + (t.value ? "valid" : "not valid"));

  BindingGenOptions g;
  g.max_size = 16;
  BindingTermGenerator gen(m.sig, seed, g);
  const Elements& dom = m.samples0;
  for (const Prop& scheme : delta_schemes(m.sig)) {
    std::size_t held = 0;
    std::string witness;
    for (std::size_t k = 0; k < samples; ++k) {
      Prop inst = expand_scheme(scheme, {SubstMap{{"u", gen.term()}, {"v", gen.term()}}}).front();
      Assignment phi;
      for (const auto& x : free_vars(inst)) {
        if (dom.empty()) {
          phi[x] = ifs.sample(0, gen.rng());
          continue;
        }
        // a quarter of the draws come from the first few values
        const std::size_t hi = gen.rng()() % 4 == 0 ? std::min<std::size_t>(dom.size(), 4) : dom.size();
        phi[x] = dom[std::uniform_int_distribution<std::size_t>(0, hi - 1)(gen.rng())];
      }
      if (eval_prop(m, inst, phi).value) ++held;
      else if (witness.empty()) witness = print(inst);
    }
    r.ok = r.ok && held == samples;
    r.lines.push_back("scheme " + print(scheme) + ": " + std::to_string(held) + "/" + std::to_string(samples) +
                      " sampled instances hold");
    if (!witness.empty()) r.lines.push_back("  fails on " + witness);
  }
  r.lines.push_back(r.ok ? "verdict: delta(a, x. a, y. a) = a not valid, schemes hold"
                         : "verdict: demonstration failed");
  return r;
}

}  // namespace bindlog
