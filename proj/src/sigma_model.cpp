#include "bindlog/sigma_model.hpp"

#include <algorithm>

#include "bindlog/lterm_io.hpp"
#include "bindlog/probes.hpp"
#include "bindlog/sigma.hpp"
#include "truth_eval.hpp"

namespace bindlog {

namespace {

using K = LTerm::Kind;

class BindingSigma final : public SigmaModel {
 public:
  explicit BindingSigma(BindingModel m) : m_(std::move(m)) {}

  std::string name() const override { return "sigma(" + m_.name + ")"; }
  const Signature& signature() const override { return m_.sig; }

  Element index(unsigned i, unsigned n) const override { return m_.ifs->proj(i, n); }
  Element fapp(const std::string& f, unsigned p, std::span<const Element> args) const override {
    auto it = m_.fhat.find(f);
    if (it == m_.fhat.end()) throw Error(ErrorCode::UninterpretedSymbol, m_.name + " has no denotation for " + f);
    return it->second(p, args);
  }
  bool pred(const std::string& P, std::span<const Element> args) const override {
    auto it = m_.phat.find(P);
    if (it == m_.phat.end()) throw Error(ErrorCode::UninterpretedSymbol, m_.name + " has no denotation for " + P);
    return it->second(args);
  }
  Element closure(const Element& t, const SubstValue& s, unsigned n, unsigned p) const override {
    return m_.ifs->box(t, p, n, s.items);
  }
  SubstValue id(unsigned n) const override { return {m_.ifs->projections(n)}; }
  SubstValue cons(const Element& t, const SubstValue& s, unsigned, unsigned) const override {
    SubstValue out{{t}};
    out.items.insert(out.items.end(), s.items.begin(), s.items.end());
    return out;
  }
  SubstValue shift(unsigned n) const override {
    SubstValue out;
    for (unsigned i = 2; i <= n + 1; ++i) out.items.push_back(m_.ifs->proj(i, n + 1));
    return out;
  }
  SubstValue comp(const SubstValue& s1, const SubstValue& s2, unsigned, unsigned p, unsigned q) const override {
    SubstValue out;
    for (const Element& a : s1.items) out.items.push_back(m_.ifs->box(a, p, q, s2.items));
    return out;
  }

  bool equal(const Element& a, const Element& b, unsigned n) const override { return m_.ifs->equal(a, b, n); }
  bool equal(const SubstValue& a, const SubstValue& b, unsigned n, unsigned) const override {
    if (a.items.size() != b.items.size()) return false;
    for (std::size_t i = 0; i < a.items.size(); ++i)
      if (!m_.ifs->equal(a.items[i], b.items[i], n)) return false;
    return true;
  }
  bool exact_equality(unsigned n) const override { return m_.ifs->exact_equality(n); }
  std::optional<Elements> carrier(unsigned n) const override { return m_.ifs->carrier(n); }
  Element sample(unsigned n, std::mt19937_64& rng) const override { return m_.ifs->sample(n, rng); }
  Elements samples0() const override { return m_.samples0; }
  std::string show(const Element& a, unsigned n) const override { return m_.ifs->show(a, n); }

 private:
  BindingModel m_;
};

class SigmaIfs final : public Ifs {
 public:
  explicit SigmaIfs(std::shared_ptr<const SigmaModel> n) : n_(std::move(n)) {}

  std::string name() const override { return "ifs(" + n_->name() + ")"; }
  Element proj(unsigned i, unsigned n) const override { return n_->index(i, n); }
  Element box(const Element& a, unsigned n, unsigned p, std::span<const Element> b) const override {
    SubstValue s = up(p);
    for (unsigned k = n; k-- > 0;) s = n_->cons(b[k], s, p, n - k - 1);
    return n_->closure(a, s, p, n);
  }
  bool equal(const Element& a, const Element& b, unsigned n) const override { return n_->equal(a, b, n); }
  bool exact_equality(unsigned n) const override { return n_->exact_equality(n); }
  std::optional<Elements> carrier(unsigned n) const override { return n_->carrier(n); }
  Element sample(unsigned n, std::mt19937_64& rng) const override { return n_->sample(n, rng); }
  std::string show(const Element& a, unsigned n) const override { return n_->show(a, n); }

 private:
  /// up^p : <p,0>, i.e. up_0 o (up_1 o ... up_{p-1}), or id_0.
  SubstValue up(unsigned p) const {
    if (p == 0) return n_->id(0);
    SubstValue s = n_->shift(p - 1);
    for (unsigned b = p - 1; b-- > 0;) s = n_->comp(n_->shift(b), s, b, b + 1, p);
    return s;
  }

  std::shared_ptr<const SigmaModel> n_;
};

[[noreturn]] void sort_error(const LTerm& t) {
  throw Error(ErrorCode::SortMismatch, "ill-sorted term " + print(t));
}

struct Evaluated {
  LValue value;
  Sort sort;
};

Evaluated eval(const SigmaModel& m, const LTerm& t, const Assignment& phi) {
  switch (t.kind()) {
    case K::Var: {
      auto it = phi.find(t.name());
      if (it == phi.end()) throw Error(ErrorCode::UnboundVariable, "no value for " + t.name());
      return {it->second, Sort::term(0)};
    }
    case K::Index: return {m.index(t.index_pos(), t.level()), Sort::term(t.level())};
    case K::FApp: {
      const BindingArity* ar = m.signature().function(t.name());
      if (!ar) throw Error(ErrorCode::UnknownSymbol, "unknown function symbol " + t.name());
      if (ar->size() != t.children().size()) throw Error(ErrorCode::ArityMismatch, "wrong argument count in " + print(t));
      Elements args;
      for (std::size_t i = 0; i < t.children().size(); ++i) {
        Evaluated a = eval(m, t.child(i), phi);
        if (a.sort != Sort::term(t.level() + (*ar)[i])) sort_error(t);
        args.push_back(std::get<Element>(a.value));
      }
      return {m.fapp(t.name(), t.level(), args), Sort::term(t.level())};
    }
    case K::Closure: {
      Evaluated a = eval(m, t.child(0), phi);
      Evaluated s = eval(m, t.child(1), phi);
      if (!a.sort.is_term() || s.sort.is_term() || s.sort.p != a.sort.n) sort_error(t);
      return {m.closure(std::get<Element>(a.value), std::get<SubstValue>(s.value), s.sort.n, s.sort.p),
              Sort::term(s.sort.n)};
    }
    case K::Id: return {m.id(t.level()), Sort::substitution(t.level(), t.level())};
    case K::Cons: {
      Evaluated a = eval(m, t.child(0), phi);
      Evaluated s = eval(m, t.child(1), phi);
      if (!a.sort.is_term() || s.sort.is_term() || s.sort.n != a.sort.n) sort_error(t);
      return {m.cons(std::get<Element>(a.value), std::get<SubstValue>(s.value), s.sort.n, s.sort.p),
              Sort::substitution(s.sort.n, s.sort.p + 1)};
    }
    case K::Shift: return {m.shift(t.level()), Sort::substitution(t.level() + 1, t.level())};
    case K::Comp: {
      Evaluated s1 = eval(m, t.child(0), phi);
      Evaluated s2 = eval(m, t.child(1), phi);
      if (s1.sort.is_term() || s2.sort.is_term() || s2.sort.p != s1.sort.n) sort_error(t);
      return {m.comp(std::get<SubstValue>(s1.value), std::get<SubstValue>(s2.value), s1.sort.p, s1.sort.n,
                     s2.sort.n),
              Sort::substitution(s2.sort.n, s1.sort.p)};
    }
  }
  sort_error(t);
}

void closed_sort0(const SigmaModel& m, const LTerm& t, std::vector<LTerm>& out) {
  if (free_vars(t).empty()) {
    auto s = try_sort_of(m.signature(), t);
    if (s && *s == Sort::term(0)) out.push_back(t);
  }
  for (const LTerm& c : t.children()) closed_sort0(m, c, out);
}

void closed_sort0(const SigmaModel& m, const LProp& a, std::vector<LTerm>& out) {
  using PK = Prop::Kind;
  switch (a.kind()) {
    case PK::Atom:
      for (const LTerm& t : a.args()) closed_sort0(m, t, out);
      return;
    case PK::Bottom: return;
    case PK::Forall:
    case PK::Exists: closed_sort0(m, a.body(), out); return;
    default:
      closed_sort0(m, a.lhs(), out);
      closed_sort0(m, a.rhs(), out);
  }
}

}  // namespace

std::shared_ptr<const SigmaModel> sigma_model_from_binding(const BindingModel& m) {
  return std::make_shared<BindingSigma>(m);
}

BindingModel binding_model_from_sigma(std::shared_ptr<const SigmaModel> n) {
  BindingModel m;
  m.name = "binding(" + n->name() + ")";
  m.ifs = std::make_shared<SigmaIfs>(n);
  m.sig = n->signature();
  for (const auto& [f, ar] : m.sig.functions())
    m.fhat[f] = [n, f](unsigned p, std::span<const Element> args) { return n->fapp(f, p, args); };
  for (const auto& [P, ar] : m.sig.predicates())
    m.phat[P] = [n, P](std::span<const Element> args) { return n->pred(P, args); };
  m.samples0 = n->samples0();
  return m;
}

LValue eval_lterm(const SigmaModel& n, const LTerm& t, const Assignment& phi) { return eval(n, t, phi).value; }

bool values_equal(const SigmaModel& n, const LValue& a, const LValue& b, const Sort& s) {
  if (a.index() != b.index()) return false;
  if (s.is_term()) return n.equal(std::get<Element>(a), std::get<Element>(b), s.n);
  return n.equal(std::get<SubstValue>(a), std::get<SubstValue>(b), s.n, s.p);
}

Truth eval_lprop(const SigmaModel& n, const LProp& a, const Assignment& phi, const EvalOptions& opts) {
  std::optional<Elements> domain;
  bool domain_exact = true;
  detail::TruthEval<LProp> ev{
      [&](const LProp& atom, const Assignment& env) -> Truth {
        const BindingArity* ar = n.signature().predicate(atom.name());
        if (!ar) throw Error(ErrorCode::UnknownSymbol, "unknown predicate " + atom.name());
        if (ar->size() != atom.args().size()) throw Error(ErrorCode::ArityMismatch, "wrong argument count in " + print(atom));
        Elements args;
        bool exact = true;
        for (std::size_t i = 0; i < atom.args().size(); ++i) {
          Evaluated v = eval(n, atom.args()[i], env);
          if (v.sort != Sort::term((*ar)[i])) sort_error(atom.args()[i]);
          args.push_back(std::get<Element>(v.value));
          exact = exact && n.exact_equality((*ar)[i]);
        }
        return {n.pred(atom.name(), args), exact};
      },
      [&]() -> const Elements& {
        if (domain) return *domain;
        if (auto c = n.carrier(0)) {
          domain = *c;
          return *domain;
        }
        if (opts.require_exact)
          throw Error(ErrorCode::InfiniteDomainExhaustionRequested, "N_0 of " + n.name() + " cannot be enumerated");
        domain_exact = false;
        domain = n.samples0();
        std::vector<LTerm> closed;
        closed_sort0(n, a, closed);
        for (const LTerm& t : closed) {
          Element e = std::get<Element>(eval(n, t, {}).value);
          if (std::none_of(domain->begin(), domain->end(), [&](const Element& x) { return n.equal(x, e, 0); }))
            domain->push_back(e);
        }
        if (domain->empty())
          throw Error(ErrorCode::InfiniteDomainExhaustionRequested, n.name() + " declares no samples of N_0");
        return *domain;
      },
      &domain_exact};
  Assignment env = phi;
  return ev.run(a, env);
}

SweepReport check_sigma_rules(const SigmaModel& n, std::size_t per_rule, std::uint64_t seed, unsigned max_level) {
  SweepReport rep;
  const Signature& sig = n.signature();
  RewriteSystem rs = sigma_system(sig);
  GenOptions g;
  g.max_size = 24;
  g.max_level = max_level;
  LTermGenerator gen(sig, seed, g);
  for (const Rule& r : rs.rules()) {
    for (std::size_t i = 0; i < per_rule; ++i) {
      LTerm lhs = gen.redex(r.name);
      auto rhs = r.apply(lhs);
      ++rep.instances;
      if (!rhs) {
        ++rep.violation_count;
        rep.violations.push_back(r.name + " did not fire on " + print(lhs));
        continue;
      }
      Assignment phi;
      for (const auto& x : g.var_names) phi[x] = n.sample(0, gen.rng());
      Sort s = sort_of(sig, lhs);
      rep.exact = rep.exact && n.exact_equality(s.n);
      LValue a = eval_lterm(n, lhs, phi);
      LValue b = eval_lterm(n, *rhs, phi);
      if (!values_equal(n, a, b, s)) {
        ++rep.violation_count;
        if (rep.violations.size() < 10) rep.violations.push_back(r.name + ": " + print(lhs) + " and " + print(*rhs));
      }
    }
  }
  return rep;
}

}  // namespace bindlog
