#include "oracles.hpp"

#include <stdexcept>
#include <utility>

namespace oracle {

using bindlog::Prop;
using bindlog::Term;

std::vector<Ext> ext_carrier(unsigned n) {
  std::vector<Ext> out{{'k', 0}, {'l', 0}};
  for (unsigned i = 1; i <= n; ++i) {
    out.push_back({'p', i});
    out.push_back({'b', i});
  }
  return out;
}

Ext ext_neg(Ext a) {
  if (a.kind == 'p') return {'b', a.i};
  if (a.kind == 'b') return {'p', a.i};
  return a;
}

Ext ext_box(Ext a, const std::vector<Ext>& b, unsigned) {
  switch (a.kind) {
    case 'p': return b.at(a.i - 1);
    case 'b': return ext_neg(b.at(a.i - 1));
    default: return {a.kind, 0};
  }
}

Ext ext_lambda(Ext a) {
  if (a.kind == 'k' || a.kind == 'l') return a;
  if (a.i == 1) return {a.kind == 'p' ? 'k' : 'l', 0};
  return {a.kind, a.i - 1};
}

std::string ext_show(Ext a, unsigned n) {
  const std::string lvl = std::to_string(n);
  switch (a.kind) {
    case 'k': return "k" + lvl;
    case 'l': return "l" + lvl;
    case 'p': return std::to_string(a.i) + "_" + lvl;
    default: return "-" + std::to_string(a.i) + "_" + lvl;
  }
}

Ext ext_eval(const Term& t, const std::vector<std::string>& ctx, const std::map<std::string, Ext>& phi) {
  if (t.is_var()) {
    for (std::size_t i = 0; i < ctx.size(); ++i)
      if (ctx[i] == t.name()) return {'p', static_cast<unsigned>(i + 1)};
    return phi.at(t.name());
  }
  const auto& args = t.args();
  if (t.name() == "f") return ext_neg(ext_eval(args.at(0).body, ctx, phi));
  if (t.name() == "Lambda") {
    std::vector<std::string> inner{args.at(0).binders.at(0)};
    inner.insert(inner.end(), ctx.begin(), ctx.end());
    return ext_lambda(ext_eval(args.at(0).body, inner, phi));
  }
  throw std::logic_error("ext oracle: unknown symbol " + t.name());
}

bool ext_holds(const Prop& a, const std::map<std::string, Ext>& phi) {
  switch (a.kind()) {
    case Prop::Kind::Atom:
      return ext_eval(a.args().at(0).body, {}, phi) == ext_eval(a.args().at(1).body, {}, phi);
    case Prop::Kind::Imp: return !ext_holds(a.lhs(), phi) || ext_holds(a.rhs(), phi);
    case Prop::Kind::And: return ext_holds(a.lhs(), phi) && ext_holds(a.rhs(), phi);
    case Prop::Kind::Or: return ext_holds(a.lhs(), phi) || ext_holds(a.rhs(), phi);
    case Prop::Kind::Bottom: return false;
    case Prop::Kind::Forall:
    case Prop::Kind::Exists: {
      const bool all = a.kind() == Prop::Kind::Forall;
      for (Ext v : {Ext{'k', 0}, Ext{'l', 0}}) {
        auto psi = phi;
        psi[a.name()] = v;
        if (ext_holds(a.body(), psi) != all) return !all;
      }
      return all;
    }
  }
  return false;
}

namespace {

std::size_t power(unsigned m, unsigned n) {
  std::size_t r = 1;
  for (unsigned i = 0; i < n; ++i) r *= m;
  return r;
}

std::vector<unsigned> row_args(unsigned m, unsigned n, std::size_t row) {
  std::vector<unsigned> a(n);
  for (unsigned i = 0; i < n; ++i, row /= m) a[i] = static_cast<unsigned>(row % m);
  return a;
}

}  // namespace

std::vector<Table> fn_carrier(unsigned m, unsigned n) {
  const std::size_t rows = power(m, n), count = power(m, static_cast<unsigned>(rows));
  std::vector<Table> out;
  for (std::size_t c = 0; c < count; ++c) {
    Table t;
    std::size_t k = c;
    for (std::size_t r = 0; r < rows; ++r, k /= m) t.v.push_back(static_cast<unsigned>(k % m));
    out.push_back(t);
  }
  return out;
}

Table fn_proj(unsigned m, unsigned i, unsigned n) {
  Table t;
  for (std::size_t r = 0; r < power(m, n); ++r) t.v.push_back(row_args(m, n, r)[i - 1]);
  return t;
}

Table fn_box(unsigned m, const Table& a, unsigned n, const std::vector<Table>& b, unsigned p) {
  Table t;
  for (std::size_t r = 0; r < power(m, p); ++r) {
    std::size_t inner = 0, w = 1;
    for (unsigned i = 0; i < n; ++i, w *= m) inner += b[i].v[r] * w;
    t.v.push_back(a.v[inner]);
  }
  return t;
}

std::string fn_show(const Table& t, unsigned n) {
  if (n == 0) return std::to_string(t.v[0]);
  std::string s = "[";
  for (std::size_t r = 0; r < t.v.size(); ++r) s += (r ? " " : "") + std::to_string(t.v[r]);
  return s + "]";
}

namespace {

using Env = std::vector<std::string>;

int depth_of(const Env& env, const std::string& x) {
  for (std::size_t i = env.size(); i-- > 0;)
    if (env[i] == x) return static_cast<int>(env.size() - i);
  return -1;
}

bool alpha_t(const Term& a, const Term& b, Env& ea, Env& eb) {
  if (a.is_var() != b.is_var()) return false;
  if (a.is_var()) {
    const int da = depth_of(ea, a.name()), db = depth_of(eb, b.name());
    return da == db && (da >= 0 || a.name() == b.name());
  }
  if (a.name() != b.name() || a.args().size() != b.args().size()) return false;
  for (std::size_t i = 0; i < a.args().size(); ++i) {
    const auto& x = a.args()[i];
    const auto& y = b.args()[i];
    if (x.binders.size() != y.binders.size()) return false;
    ea.insert(ea.end(), x.binders.begin(), x.binders.end());
    eb.insert(eb.end(), y.binders.begin(), y.binders.end());
    const bool ok = alpha_t(x.body, y.body, ea, eb);
    ea.resize(ea.size() - x.binders.size());
    eb.resize(eb.size() - y.binders.size());
    if (!ok) return false;
  }
  return true;
}

bool alpha_p(const Prop& a, const Prop& b, Env& ea, Env& eb) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Prop::Kind::Atom: {
      if (a.name() != b.name() || a.args().size() != b.args().size()) return false;
      for (std::size_t i = 0; i < a.args().size(); ++i) {
        const auto& x = a.args()[i];
        const auto& y = b.args()[i];
        if (x.binders.size() != y.binders.size()) return false;
        ea.insert(ea.end(), x.binders.begin(), x.binders.end());
        eb.insert(eb.end(), y.binders.begin(), y.binders.end());
        const bool ok = alpha_t(x.body, y.body, ea, eb);
        ea.resize(ea.size() - x.binders.size());
        eb.resize(eb.size() - y.binders.size());
        if (!ok) return false;
      }
      return true;
    }
    case Prop::Kind::Bottom: return true;
    case Prop::Kind::Forall:
    case Prop::Kind::Exists: {
      ea.push_back(a.name());
      eb.push_back(b.name());
      const bool ok = alpha_p(a.body(), b.body(), ea, eb);
      ea.pop_back();
      eb.pop_back();
      return ok;
    }
    default: return alpha_p(a.lhs(), b.lhs(), ea, eb) && alpha_p(a.rhs(), b.rhs(), ea, eb);
  }
}

}  // namespace

bool alpha(const Term& a, const Term& b) {
  Env ea, eb;
  return alpha_t(a, b, ea, eb);
}

bool alpha(const Prop& a, const Prop& b) {
  Env ea, eb;
  return alpha_p(a, b, ea, eb);
}

std::string ExtGen::var() {
  static const char* names[] = {"x", "y", "z"};
  return names[rng_() % 3];
}

Term ExtGen::term(int depth) {
  const unsigned r = depth <= 0 ? 0 : static_cast<unsigned>(rng_() % 3);
  if (r == 0) return Term::var(var());
  if (r == 1) return Term::app("f", {bindlog::Arg{{}, term(depth - 1)}});
  return Term::app("Lambda", {bindlog::Arg{{var()}, term(depth - 1)}});
}

Prop ExtGen::prop(int depth) {
  const unsigned r = depth <= 0 ? 0 : static_cast<unsigned>(rng_() % 7);
  switch (r) {
    case 1: return Prop::imp(prop(depth - 1), prop(depth - 1));
    case 2: return Prop::conj(prop(depth - 1), prop(depth - 1));
    case 3: return Prop::disj(prop(depth - 1), prop(depth - 1));
    case 4: return Prop::forall(var(), prop(depth - 1));
    case 5: return Prop::exists(var(), prop(depth - 1));
    case 6: return Prop::bottom();
    default: return Prop::eq(term(3), term(3));
  }
}

}  // namespace oracle
