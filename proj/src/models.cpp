#include "bindlog/models.hpp"

#include <algorithm>
#include <sstream>

#include "bindlog/syntax_io.hpp"
#include "truth_eval.hpp"

namespace bindlog {

Element Ifs::sample(unsigned n, std::mt19937_64& rng) const {
  auto c = carrier(n);
  if (!c || c->empty()) throw Error(ErrorCode::InfiniteDomainExhaustionRequested, name() + ": no sampler for M_" + std::to_string(n));
  return (*c)[std::uniform_int_distribution<std::size_t>(0, c->size() - 1)(rng)];
}

Elements Ifs::projections(unsigned n) const {
  Elements out;
  out.reserve(n);
  for (unsigned i = 1; i <= n; ++i) out.push_back(proj(i, n));
  return out;
}

std::string Truth::str() const {
  if (!value) return exact ? "invalid" : "invalid-on-probes";
  return exact ? "valid" : "valid-on-samples";
}

namespace {

using PK = Prop::Kind;

Element eval(const BindingModel& m, const Term& t, std::vector<std::string>& ctx, const Assignment& phi);

Elements eval_args(const BindingModel& m, const std::vector<Arg>& args, std::vector<std::string>& ctx,
                   const Assignment& phi) {
  Elements out;
  out.reserve(args.size());
  for (const Arg& a : args) {
    ctx.insert(ctx.begin(), a.binders.rbegin(), a.binders.rend());
    out.push_back(eval(m, a.body, ctx, phi));
    ctx.erase(ctx.begin(), ctx.begin() + static_cast<std::ptrdiff_t>(a.binders.size()));
  }
  return out;
}

Element eval(const BindingModel& m, const Term& t, std::vector<std::string>& ctx, const Assignment& phi) {
  const unsigned p = static_cast<unsigned>(ctx.size());
  if (t.is_var()) {
    auto it = std::find(ctx.begin(), ctx.end(), t.name());
    if (it != ctx.end()) return m.ifs->proj(static_cast<unsigned>(it - ctx.begin()) + 1, p);
    auto v = phi.find(t.name());
    if (v == phi.end()) throw Error(ErrorCode::UnboundVariable, "no value for " + t.name());
    return m.ifs->box(v->second, 0, p, {});
  }
  auto f = m.fhat.find(t.name());
  if (f == m.fhat.end()) throw Error(ErrorCode::UninterpretedSymbol, m.name + " has no denotation for " + t.name());
  Elements args = eval_args(m, t.args(), ctx, phi);
  return f->second(p, args);
}

void closed_subterms(const Term& t, std::vector<Term>& out) {
  if (free_vars(t).empty()) out.push_back(t);
  if (t.is_var()) return;
  for (const Arg& a : t.args()) closed_subterms(a.body, out);
}

void closed_subterms(const Prop& a, std::vector<Term>& out) {
  switch (a.kind()) {
    case PK::Atom:
      for (const Arg& g : a.args()) closed_subterms(g.body, out);
      return;
    case PK::Bottom: return;
    case PK::Forall:
    case PK::Exists: closed_subterms(a.body(), out); return;
    default:
      closed_subterms(a.lhs(), out);
      closed_subterms(a.rhs(), out);
  }
}

std::string show_tuple(const Ifs& ifs, std::span<const Element> b, unsigned n) {
  std::string s = "<";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? ", " : "") + ifs.show(b[i], n);
  return s + ">";
}

/// Calls f on every tuple of length len over dom (exhaustive) or on `samples`
/// random tuples drawn at level n.
template <class F>
void tuples(const Ifs& ifs, unsigned n, unsigned len, const SweepOptions& opts, std::mt19937_64& rng, F f) {
  Elements cur(len);
  if (opts.mode == SweepMode::Sampled) {
    for (std::size_t s = 0; s < opts.samples; ++s) {
      for (auto& e : cur) e = ifs.sample(n, rng);
      f(std::span<const Element>(cur));
    }
    return;
  }
  auto dom = ifs.carrier(n);
  if (!dom) throw Error(ErrorCode::InfiniteDomainExhaustionRequested, ifs.name() + ": M_" + std::to_string(n) + " is not enumerable");
  if (len == 0) {
    f(std::span<const Element>(cur));
    return;
  }
  if (dom->empty()) return;
  std::vector<std::size_t> idx(len, 0);
  for (;;) {
    for (unsigned i = 0; i < len; ++i) cur[i] = (*dom)[idx[i]];
    f(std::span<const Element>(cur));
    unsigned i = 0;
    while (i < len && ++idx[i] == dom->size()) idx[i++] = 0;
    if (i == len) return;
  }
}

/// Tuples whose i-th component ranges over M_{levels[i]}.
template <class F>
void mixed_tuples(const Ifs& ifs, const std::vector<unsigned>& levels, const SweepOptions& opts, std::mt19937_64& rng,
                  F f) {
  Elements cur(levels.size());
  if (opts.mode == SweepMode::Sampled) {
    for (std::size_t s = 0; s < opts.samples; ++s) {
      for (std::size_t i = 0; i < levels.size(); ++i) cur[i] = ifs.sample(levels[i], rng);
      f(std::span<const Element>(cur));
    }
    return;
  }
  std::vector<Elements> doms;
  for (unsigned l : levels) {
    auto d = ifs.carrier(l);
    if (!d) throw Error(ErrorCode::InfiniteDomainExhaustionRequested, ifs.name() + ": M_" + std::to_string(l) + " is not enumerable");
    if (d->empty()) return;
    doms.push_back(std::move(*d));
  }
  std::vector<std::size_t> idx(levels.size(), 0);
  for (;;) {
    for (std::size_t i = 0; i < levels.size(); ++i) cur[i] = doms[i][idx[i]];
    f(std::span<const Element>(cur));
    std::size_t i = 0;
    while (i < levels.size() && ++idx[i] == doms[i].size()) idx[i++] = 0;
    if (i == levels.size()) return;
  }
}

void record(SweepReport& rep, bool ok, const std::function<std::string()>& what) {
  ++rep.instances;
  if (ok) return;
  ++rep.violation_count;
  if (rep.violations.size() < 10) rep.violations.push_back(what());
}

}  // namespace

Element eval_term(const BindingModel& m, const Term& t, const std::vector<std::string>& ctx, const Assignment& phi) {
  std::vector<std::string> c = ctx;
  return eval(m, t, c, phi);
}

Elements quantifier_domain(const BindingModel& m, const Prop& a, bool* exact) {
  if (auto c = m.ifs->carrier(0)) {
    if (exact) *exact = true;
    return *c;
  }
  if (exact) *exact = false;
  Elements out = m.samples0;
  std::vector<Term> closed;
  closed_subterms(a, closed);
  for (const Term& t : closed) {
    Element e = eval_term(m, t, {}, {});
    bool seen = std::any_of(out.begin(), out.end(), [&](const Element& x) { return m.ifs->equal(x, e, 0); });
    if (!seen) out.push_back(e);
  }
  if (out.empty())
    throw Error(ErrorCode::InfiniteDomainExhaustionRequested, m.name + " declares no samples of M_0");
  return out;
}

Truth eval_prop(const BindingModel& m, const Prop& a, const Assignment& phi, const EvalOptions& opts) {
  std::optional<Elements> domain;
  bool domain_exact = true;
  detail::TruthEval<Prop> ev{
      [&](const Prop& atom, const Assignment& env) -> Truth {
        auto pr = m.phat.find(atom.name());
        if (pr == m.phat.end())
          throw Error(ErrorCode::UninterpretedSymbol, m.name + " has no denotation for " + atom.name());
        std::vector<std::string> ctx;
        Elements args = eval_args(m, atom.args(), ctx, env);
        bool exact = true;
        for (const Arg& g : atom.args()) exact = exact && m.ifs->exact_equality(static_cast<unsigned>(g.binders.size()));
        return {pr->second(args), exact};
      },
      [&]() -> const Elements& {
        if (!domain) {
          if (opts.require_exact && !m.ifs->carrier(0))
            throw Error(ErrorCode::InfiniteDomainExhaustionRequested, "M_0 of " + m.name + " cannot be enumerated");
          domain = quantifier_domain(m, a, &domain_exact);
        }
        return *domain;
      },
      &domain_exact};
  Assignment env = phi;
  return ev.run(a, env);
}

std::string SweepReport::str() const {
  std::ostringstream os;
  os << instances << " instances, " << violation_count << " violations" << (exact ? "" : " (probe-based)") << '\n';
  for (const auto& v : violations) os << "  " << v << '\n';
  return os.str();
}

void SweepReport::merge(const SweepReport& o) {
  instances += o.instances;
  violation_count += o.violation_count;
  exact = exact && o.exact;
  for (const auto& v : o.violations)
    if (violations.size() < 10) violations.push_back(v);
}

Elements lift(const Ifs& ifs, unsigned q, unsigned k, std::span<const Element> b) {
  Elements out;
  out.reserve(k + b.size());
  for (unsigned i = 1; i <= k; ++i) out.push_back(ifs.proj(i, q + k));
  Elements S;
  for (unsigned i = 1 + k; i <= q + k; ++i) S.push_back(ifs.proj(i, q + k));
  for (const Element& bj : b) out.push_back(ifs.box(bj, q, q + k, S));
  return out;
}

SweepReport check_ifs(const Ifs& ifs, unsigned n_max, unsigned p_max, unsigned q_max, const SweepOptions& opts) {
  SweepReport rep;
  rep.exact = opts.mode == SweepMode::Exhaustive;
  std::mt19937_64 rng(opts.seed);
  for (unsigned n = 1; n <= n_max; ++n) {
    for (unsigned p = 0; p <= p_max; ++p) {
      rep.exact = rep.exact && ifs.exact_equality(p);
      for (unsigned i = 1; i <= n; ++i) {
        Element pi = ifs.proj(i, n);
        tuples(ifs, p, n, opts, rng, [&](std::span<const Element> a) {
          Element r = ifs.box(pi, n, p, a);
          record(rep, ifs.equal(r, a[i - 1], p), [&] {
            return "projection i=" + std::to_string(i) + " n=" + std::to_string(n) + " p=" + std::to_string(p) +
                   ": " + ifs.show(pi, n) + " box " + show_tuple(ifs, a, p) + " = " + ifs.show(r, p);
          });
        });
      }
    }
  }
  for (unsigned n = 0; n <= n_max; ++n) {
    rep.exact = rep.exact && ifs.exact_equality(n);
    Elements ids = ifs.projections(n);
    tuples(ifs, n, 1, opts, rng, [&](std::span<const Element> a) {
      Element r = ifs.box(a[0], n, n, ids);
      record(rep, ifs.equal(r, a[0], n), [&] {
        return "identity n=" + std::to_string(n) + ": " + ifs.show(a[0], n) + " box ids = " + ifs.show(r, n);
      });
    });
  }
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned p = 0; p <= p_max; ++p) {
      for (unsigned q = 0; q <= q_max; ++q) {
        rep.exact = rep.exact && ifs.exact_equality(q);
        SweepOptions inner = opts;
        if (opts.mode == SweepMode::Sampled) inner.samples = 1;
        std::size_t outer = opts.mode == SweepMode::Sampled ? opts.samples : 1;
        for (std::size_t s = 0; s < outer; ++s) {
          tuples(ifs, n, 1, inner, rng, [&](std::span<const Element> a1) {
            Element a = a1[0];
            tuples(ifs, p, n, inner, rng, [&](std::span<const Element> b) {
              Element ab = ifs.box(a, n, p, b);
              Elements bv(b.begin(), b.end());
              tuples(ifs, q, p, inner, rng, [&](std::span<const Element> c) {
                Element lhs = ifs.box(ab, p, q, c);
                Elements bc;
                bc.reserve(n);
                for (const Element& bi : bv) bc.push_back(ifs.box(bi, p, q, c));
                Element rhs = ifs.box(a, n, q, bc);
                record(rep, ifs.equal(lhs, rhs, q), [&] {
                  return "associativity n=" + std::to_string(n) + " p=" + std::to_string(p) + " q=" +
                         std::to_string(q) + ": a=" + ifs.show(a, n) + " b=" + show_tuple(ifs, bv, p) +
                         " c=" + show_tuple(ifs, c, q) + ": " + ifs.show(lhs, q) + " vs " + ifs.show(rhs, q);
                });
              });
            });
          });
        }
      }
    }
  }
  return rep;
}

namespace {

const FunctionFamily& family(const BindingModel& m, const std::string& f, const BindingArity** ar) {
  *ar = m.sig.function(f);
  auto it = m.fhat.find(f);
  if (!*ar || it == m.fhat.end()) throw Error(ErrorCode::UninterpretedSymbol, m.name + " has no function symbol " + f);
  return it->second;
}

}  // namespace

SweepReport check_coherence(const BindingModel& m, const std::string& f, unsigned p_max, unsigned q_max,
                            const SweepOptions& opts) {
  const BindingArity* ar = nullptr;
  const FunctionFamily& F = family(m, f, &ar);
  const Ifs& ifs = *m.ifs;
  SweepReport rep;
  rep.exact = opts.mode == SweepMode::Exhaustive;
  std::mt19937_64 rng(opts.seed);
  for (unsigned p = 0; p <= p_max; ++p) {
    for (unsigned q = 0; q <= q_max; ++q) {
      rep.exact = rep.exact && ifs.exact_equality(q);
      std::vector<unsigned> levels;
      for (unsigned k : *ar) levels.push_back(p + k);
      for (unsigned i = 0; i < p; ++i) levels.push_back(q);
      mixed_tuples(ifs, levels, opts, rng, [&](std::span<const Element> all) {
        auto a = all.subspan(0, ar->size());
        auto b = all.subspan(ar->size());
        Element lhs = ifs.box(F(p, a), p, q, b);
        Elements moved;
        for (std::size_t i = 0; i < ar->size(); ++i) {
          unsigned k = (*ar)[i];
          Elements up = lift(ifs, q, k, b);
          moved.push_back(ifs.box(a[i], p + k, q + k, up));
        }
        Element rhs = F(q, moved);
        record(rep, ifs.equal(lhs, rhs, q), [&] {
          std::string args;
          for (std::size_t i = 0; i < a.size(); ++i) args += (i ? ", " : "") + ifs.show(a[i], p + (*ar)[i]);
          return "coherence " + f + " p=" + std::to_string(p) + " q=" + std::to_string(q) + ": args (" + args +
                 ") b=" + show_tuple(ifs, b, q) + ": " + ifs.show(lhs, q) + " vs " + ifs.show(rhs, q);
        });
      });
    }
  }
  if (*ar == BindingArity{1}) {
    for (unsigned p = 1; p <= p_max; ++p) {
      rep.exact = rep.exact && ifs.exact_equality(p);
      Elements inc{ifs.proj(1, p + 2)};
      for (unsigned i = 3; i <= p + 2; ++i) inc.push_back(ifs.proj(i, p + 2));
      Elements dup{ifs.proj(1, p)};
      for (unsigned i = 1; i <= p; ++i) dup.push_back(ifs.proj(i, p));
      tuples(ifs, p + 1, 1, opts, rng, [&](std::span<const Element> a) {
        Element lhs = F(p, a);
        Element ia = ifs.box(a[0], p + 1, p + 2, inc);
        Element up = F(p + 1, std::span<const Element>(&ia, 1));
        Element rhs = ifs.box(up, p + 1, p, dup);
        record(rep, ifs.equal(lhs, rhs, p), [&] {
          return "descent " + f + " p=" + std::to_string(p) + ": a=" + ifs.show(a[0], p + 1) + ": " +
                 ifs.show(lhs, p) + " vs " + ifs.show(rhs, p);
        });
      });
    }
  }
  return rep;
}

SweepReport check_absorption(const BindingModel& m, const std::string& f, unsigned q_max, const SweepOptions& opts) {
  const BindingArity* ar = nullptr;
  const FunctionFamily& F = family(m, f, &ar);
  if (*ar != BindingArity{1}) throw Error(ErrorCode::ArityMismatch, f + " does not have binding arity <1>");
  const Ifs& ifs = *m.ifs;
  SweepReport rep;
  rep.exact = opts.mode == SweepMode::Exhaustive;
  std::mt19937_64 rng(opts.seed);
  for (unsigned q = 0; q <= q_max; ++q) {
    rep.exact = rep.exact && ifs.exact_equality(q);
    Elements S;
    for (unsigned i = 2; i <= q + 1; ++i) S.push_back(ifs.proj(i, q + 1));
    tuples(ifs, q, 1, opts, rng, [&](std::span<const Element> b) {
      Element bs = ifs.box(b[0], q, q + 1, S);
      Element r = F(q, std::span<const Element>(&bs, 1));
      record(rep, ifs.equal(r, b[0], q), [&] {
        return "absorption " + f + " q=" + std::to_string(q) + ": b=" + ifs.show(b[0], q) + " gives " + ifs.show(r, q);
      });
    });
  }
  return rep;
}

}  // namespace bindlog
