#include "bindlog/precook.hpp"

#include <algorithm>

#include "bindlog/lterm_io.hpp"
#include "bindlog/sigma.hpp"
#include "bindlog/syntax_io.hpp"

namespace bindlog {

namespace {

using K = LTerm::Kind;
using PK = Prop::Kind;

void require_wf(const CheckResult& r) {
  if (!r) throw Error(r.error().code, r.error().detail, r.error().path);
}

LTerm cook(const Term& t, VarContext& l);

std::vector<LTerm> cook_args(const std::vector<Arg>& args, VarContext& l) {
  std::vector<LTerm> out;
  out.reserve(args.size());
  for (const Arg& a : args) {
    l.insert(l.begin(), a.binders.begin(), a.binders.end());
    std::reverse(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(a.binders.size()));
    out.push_back(cook(a.body, l));
    l.erase(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(a.binders.size()));
  }
  return out;
}

LTerm cook(const Term& t, VarContext& l) {
  const unsigned n = static_cast<unsigned>(l.size());
  if (t.is_var()) {
    auto it = std::find(l.begin(), l.end(), t.name());
    if (it == l.end()) return shifted_var(t.name(), n);
    return index_nf(static_cast<unsigned>(it - l.begin()), n);
  }
  return LTerm::fapp(t.name(), n, cook_args(t.args(), l));
}

LProp cook_prop(const Prop& a) {
  switch (a.kind()) {
    case PK::Atom: {
      VarContext l;
      return LProp::atom(a.name(), cook_args(a.args(), l));
    }
    case PK::Imp: return LProp::imp(cook_prop(a.lhs()), cook_prop(a.rhs()));
    case PK::And: return LProp::conj(cook_prop(a.lhs()), cook_prop(a.rhs()));
    case PK::Or: return LProp::disj(cook_prop(a.lhs()), cook_prop(a.rhs()));
    case PK::Bottom: return LProp::bottom();
    case PK::Forall: return LProp::forall(a.name(), cook_prop(a.body()));
    case PK::Exists: return LProp::exists(a.name(), cook_prop(a.body()));
  }
  return LProp::bottom();
}

/// Recognizes up_b o (up_{b+1} o ... up_{b+c-1}) and returns c.
std::optional<unsigned> shift_chain(const LTerm& s, unsigned b) {
  unsigned c = 0;
  const LTerm* cur = &s;
  for (;;) {
    if (cur->is(K::Shift)) return cur->level() == b + c ? std::optional<unsigned>(c + 1) : std::nullopt;
    if (!cur->is(K::Comp) || !cur->child(0).is(K::Shift) || cur->child(0).level() != b + c) return std::nullopt;
    ++c;
    cur = &cur->child(1);
  }
}

class Uncooker {
 public:
  Uncooker(const Signature& sig, std::set<std::string> taken) : sig_(sig), taken_(std::move(taken)) {}

  Term term(const LTerm& t, std::vector<std::string>& l) {
    const unsigned n = static_cast<unsigned>(l.size());
    switch (t.kind()) {
      case K::Var:
        if (n == 0) return Term::var(t.name());
        break;
      case K::Index:
        if (t.index_pos() == 1 && t.level() == n && n >= 1) return Term::var(l[0]);
        break;
      case K::Closure: {
        const LTerm& h = t.child(0);
        if (h.is(K::Var)) {
          auto c = shift_chain(t.child(1), 0);
          if (c && *c == n) return Term::var(h.name());
        } else if (h.is(K::Index) && h.index_pos() == 1 && h.level() >= 1) {
          auto c = shift_chain(t.child(1), h.level());
          if (c && h.level() + *c == n) return Term::var(l[*c]);
        }
        break;
      }
      case K::FApp: {
        const BindingArity* ar = sig_.function(t.name());
        if (!ar || ar->size() != t.children().size() || t.level() != n) break;
        return Term::app(t.name(), args(*ar, t.children(), l));
      }
      default:
        break;
    }
    throw Error(ErrorCode::NotAnFTerm, "not an F-term of sort " + std::to_string(n) + ": " + print(t));
  }

  std::vector<Arg> args(const BindingArity& ar, const std::vector<LTerm>& kids, std::vector<std::string>& l) {
    std::vector<Arg> out;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      Arg a{{}, Term::var("")};
      for (unsigned j = 0; j < ar[i]; ++j) a.binders.push_back(fresh());
      l.insert(l.begin(), a.binders.rbegin(), a.binders.rend());
      a.body = term(kids[i], l);
      l.erase(l.begin(), l.begin() + ar[i]);
      out.push_back(std::move(a));
    }
    return out;
  }

  Prop prop(const LProp& a) {
    switch (a.kind()) {
      case PK::Atom: {
        const BindingArity* ar = sig_.predicate(a.name());
        if (!ar || ar->size() != a.args().size())
          throw Error(ErrorCode::NotAnFTerm, "atom does not match the signature: " + print(a));
        std::vector<std::string> l;
        return Prop::atom(a.name(), args(*ar, a.args(), l));
      }
      case PK::Imp: return Prop::imp(prop(a.lhs()), prop(a.rhs()));
      case PK::And: return Prop::conj(prop(a.lhs()), prop(a.rhs()));
      case PK::Or: return Prop::disj(prop(a.lhs()), prop(a.rhs()));
      case PK::Bottom: return Prop::bottom();
      case PK::Forall: return Prop::forall(a.name(), prop(a.body()));
      case PK::Exists: return Prop::exists(a.name(), prop(a.body()));
    }
    return Prop::bottom();
  }

 private:
  std::string fresh() {
    for (;;) {
      std::string c = default_fresh_name("y", ++counter_);
      if (taken_.insert(c).second) return c;
    }
  }

  const Signature& sig_;
  std::set<std::string> taken_;
  unsigned counter_ = 0;
};

void names(const LProp& a, std::set<std::string>& out) {
  switch (a.kind()) {
    case PK::Atom:
      for (const auto& t : a.args())
        for (auto& v : free_vars(t)) out.insert(v);
      return;
    case PK::Bottom: return;
    case PK::Forall:
    case PK::Exists:
      out.insert(a.name());
      names(a.body(), out);
      return;
    default:
      names(a.lhs(), out);
      names(a.rhs(), out);
  }
}

template <class P, class T, class FP, class FT>
BasicProofTree<LProp, LTerm> map_tree(const BasicProofTree<P, T>& p, FP fp, FT ft) {
  BasicProofTree<LProp, LTerm> out;
  for (const auto& a : p.conclusion.left) out.conclusion.left.push_back(fp(a));
  for (const auto& a : p.conclusion.right) out.conclusion.right.push_back(fp(a));
  out.rule = p.rule;
  out.principal = p.principal;
  out.params.x = p.params.x;
  if (p.params.A) out.params.A = fp(*p.params.A);
  if (p.params.t) out.params.t = ft(*p.params.t);
  for (const auto& c : p.premises) out.premises.push_back(map_tree(c, fp, ft));
  return out;
}

}  // namespace

LTerm precook(const Signature& sig, const Term& t, const VarContext& l) {
  require_wf(well_formed(sig, t));
  VarContext ctx = l;
  return cook(t, ctx);
}

LProp precook_prop(const Signature& sig, const Prop& a) {
  require_wf(well_formed(sig, a));
  return cook_prop(a);
}

Term uncook(const Signature& sig, const LTerm& t) {
  std::vector<std::string> l;
  return Uncooker(sig, free_vars(t)).term(t, l);
}

Prop uncook(const Signature& sig, const LProp& a) {
  std::set<std::string> taken;
  names(a, taken);
  return Uncooker(sig, std::move(taken)).prop(a);
}

bool subst_commutes(const Signature& sig, const Term& t, const Term& u, const std::string& x) {
  RewriteSystem rs = sigma_system(sig);
  LTerm lhs = precook(sig, substitute(SubstMap{{x, t}}, u));
  LTerm rhs = graft(LSubstMap{{x, precook(sig, t)}}, precook(sig, u));
  return normalize(rs, lhs) == normalize(rs, rhs);
}

bool subst_commutes(const Signature& sig, const Term& t, const Prop& a, const std::string& x) {
  RewriteSystem rs = sigma_system(sig);
  LProp lhs = precook_prop(sig, substitute(SubstMap{{x, t}}, a));
  LProp rhs = substitute(LSubstMap{{x, precook(sig, t)}}, precook_prop(sig, a));
  return alpha_eq(normalize(rs, lhs), normalize(rs, rhs));
}

TheoryModulo translate_theory(const Signature& sig, const std::vector<Prop>& axioms) {
  TheoryModulo th{{}, sigma_system(sig)};
  for (const auto& a : axioms) th.axioms.push_back(precook_prop(sig, a));
  return th;
}

LProofTree translate_proof(const Signature& sig, const ProofTree& p) {
  ProofTree full;
  try {
    full = elaborate_binding_proof(sig, p);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidSourceProof, e.diagnostic().str(), e.path());
  }
  return map_tree(
      full, [&](const Prop& a) { return cook_prop(a); },
      [&](const Term& t) {
        VarContext l;
        return cook(t, l);
      });
}

std::vector<Prop> expand_scheme(const Prop& scheme, const std::vector<SubstMap>& instances) {
  std::vector<Prop> out;
  out.reserve(instances.size());
  for (const auto& theta : instances) out.push_back(graft(theta, scheme));
  return out;
}

}  // namespace bindlog
