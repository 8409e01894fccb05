#include "bindlog/proofs.hpp"

#include <array>
#include <map>
#include <unordered_map>

#include "bindlog/lterm_io.hpp"
#include "bindlog/syntax_io.hpp"

namespace bindlog {

namespace {

struct RuleInfo {
  RuleKind rule;
  std::string_view name;
  std::size_t premises;
};

constexpr std::array<RuleInfo, 17> kRules{{
    {RuleKind::Axiom, "axiom", 0},         {RuleKind::Cut, "cut", 2},
    {RuleKind::ContrL, "contr-left", 1},   {RuleKind::ContrR, "contr-right", 1},
    {RuleKind::WeakL, "weak-left", 1},     {RuleKind::WeakR, "weak-right", 1},
    {RuleKind::ImpL, "imp-left", 2},       {RuleKind::ImpR, "imp-right", 1},
    {RuleKind::AndL, "and-left", 1},       {RuleKind::AndR, "and-right", 2},
    {RuleKind::OrL, "or-left", 2},         {RuleKind::OrR, "or-right", 1},
    {RuleKind::BotL, "bot-left", 0},       {RuleKind::AllL, "forall-left", 1},
    {RuleKind::AllR, "forall-right", 1},   {RuleKind::ExL, "exists-left", 1},
    {RuleKind::ExR, "exists-right", 1},
}};

const RuleInfo& info(RuleKind r) { return kRules[static_cast<std::size_t>(r)]; }

}  // namespace

std::string_view to_string(RuleKind r) { return info(r).name; }

std::optional<RuleKind> rule_from_string(std::string_view name) {
  for (const auto& ri : kRules)
    if (ri.name == name) return ri.rule;
  static const std::map<std::string_view, RuleKind> aliases{
      {"=>-left", RuleKind::ImpL},  {"=>-right", RuleKind::ImpR}, {"/\\-left", RuleKind::AndL},
      {"/\\-right", RuleKind::AndR}, {"\\/-left", RuleKind::OrL},  {"\\/-right", RuleKind::OrR},
      {"false-left", RuleKind::BotL}, {"all-left", RuleKind::AllL}, {"all-right", RuleKind::AllR},
      {"ex-left", RuleKind::ExL},   {"ex-right", RuleKind::ExR},
  };
  auto it = aliases.find(name);
  if (it == aliases.end()) return std::nullopt;
  return it->second;
}

std::size_t premise_count(RuleKind r) { return info(r).premises; }

bool principal_on_left(RuleKind r) {
  switch (r) {
    case RuleKind::ContrL: case RuleKind::WeakL: case RuleKind::ImpL: case RuleKind::AndL:
    case RuleKind::OrL: case RuleKind::BotL: case RuleKind::AllL: case RuleKind::ExL:
      return true;
    default:
      return false;
  }
}

bool takes_witness(RuleKind r) { return r == RuleKind::AllL || r == RuleKind::ExR; }
bool takes_eigenvariable(RuleKind r) { return r == RuleKind::AllR || r == RuleKind::ExL; }

LProp Congruence::normal_form(const LProp& a) const {
  if (syntactic()) return a;
  NormalizeOptions o;
  o.budget = budget_;
  try {
    return normalize(*rules_, a, o);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::StepBudgetExceeded) throw;
    throw Error(ErrorCode::CongruenceBudgetExceeded, "normalizing " + print(a) + ": " + e.detail());
  }
}

LTerm Congruence::normal_form(const LTerm& t) const {
  if (syntactic()) return t;
  NormalizeOptions o;
  o.budget = budget_;
  try {
    return normalize(*rules_, t, o);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::StepBudgetExceeded) throw;
    throw Error(ErrorCode::CongruenceBudgetExceeded, "normalizing " + print(t) + ": " + e.detail());
  }
}

std::string Congruence::key(const LProp& a) const { return canonical(normal_form(a)); }

bool congruence_closure_check(const Congruence& cong, const LProp& a, const LProp& b) {
  return cong.key(a) == cong.key(b);
}

namespace {

using PK = Prop::Kind;
using Keys = std::vector<std::string>;

[[noreturn]] void mismatch(const std::string& msg) { throw Error(ErrorCode::RuleMismatch, msg); }

std::optional<PK> expected_head(RuleKind r) {
  switch (r) {
    case RuleKind::ImpL: case RuleKind::ImpR: return PK::Imp;
    case RuleKind::AndL: case RuleKind::AndR: return PK::And;
    case RuleKind::OrL: case RuleKind::OrR: return PK::Or;
    case RuleKind::BotL: return PK::Bottom;
    case RuleKind::AllL: case RuleKind::AllR: return PK::Forall;
    case RuleKind::ExL: case RuleKind::ExR: return PK::Exists;
    default: return std::nullopt;
  }
}

bool same_multiset(Keys a, Keys b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

/// Indices of prem left over once ctx is consumed, or nullopt if ctx is not contained in prem.
std::optional<std::vector<std::size_t>> leftover(const Keys& prem, const Keys& ctx) {
  std::map<std::string_view, std::size_t> want;
  for (const auto& k : ctx) ++want[k];
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < prem.size(); ++i) {
    auto it = want.find(prem[i]);
    if (it != want.end() && it->second > 0) {
      --it->second;
    } else {
      rest.push_back(i);
    }
  }
  for (const auto& [k, n] : want)
    if (n) return std::nullopt;
  return rest;
}

template <class Lang>
class ProofChecker {
 public:
  using P = typename Lang::P;
  using T = typename Lang::T;
  using Tree = BasicProofTree<P, T>;
  using Seq = BasicSequent<P>;

  explicit ProofChecker(Lang lang) : lang_(std::move(lang)) {}

  Tree run(const Tree& p) {
    std::vector<std::size_t> path;
    return node(p, path);
  }

 private:
  Tree node(const Tree& p, std::vector<std::size_t>& path) {
    Tree out;
    try {
      out = check_node(p);
    } catch (const Error& e) {
      if (!e.path().empty()) throw;
      throw Error(e.code(), e.detail(), format_path(path));
    }
    for (std::size_t i = 0; i < p.premises.size(); ++i) {
      path.push_back(i);
      out.premises.push_back(node(p.premises[i], path));
      path.pop_back();
    }
    return out;
  }

  Keys keys(const std::vector<P>& v) {
    Keys k;
    k.reserve(v.size());
    for (const auto& a : v) k.push_back(lang_.key(a));
    return k;
  }

  static Keys drop(Keys k, std::size_t i) {
    k.erase(k.begin() + static_cast<std::ptrdiff_t>(i));
    return k;
  }

  static std::vector<P> drop(std::vector<P> v, std::size_t i) {
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
    return v;
  }

  void formulas_ok(const Seq& s) {
    for (int side = 0; side < 2; ++side) {
      const auto& v = side == 0 ? s.left : s.right;
      for (std::size_t i = 0; i < v.size(); ++i) {
        CheckResult r = lang_.formula_ok(v[i]);
        if (!r)
          throw Error(r.error().code, std::string(side == 0 ? "left" : "right") + " formula " +
                                          std::to_string(i) + " at " + r.error().path + ": " +
                                          r.error().detail);
      }
    }
  }

  Tree check_node(const Tree& p) {
    const std::size_t want = premise_count(p.rule);
    if (p.premises.size() != want)
      mismatch(std::string(to_string(p.rule)) + " takes " + std::to_string(want) + " premise(s), found " +
               std::to_string(p.premises.size()));
    formulas_ok(p.conclusion);
    const bool quant = takes_witness(p.rule) || takes_eigenvariable(p.rule);
    if (!quant && !p.params.empty()) mismatch(std::string(to_string(p.rule)) + " takes no parameters");
    if (takes_eigenvariable(p.rule) && p.params.t) mismatch(std::string(to_string(p.rule)) + " takes no witness term");
    if (quant && lang_.params_required) {
      if (!p.params.x || !p.params.A) mismatch("missing (x, A) parameters");
      if (takes_witness(p.rule) && !p.params.t) mismatch("missing witness parameter t");
    }

    Tree out;
    out.conclusion = p.conclusion;
    out.rule = p.rule;
    out.params = p.params;

    if (p.rule == RuleKind::Axiom) {
      const Seq& s = p.conclusion;
      if (s.left.size() != 1 || s.right.size() != 1) mismatch("axiom needs exactly one formula on each side");
      if (lang_.key(s.left[0]) != lang_.key(s.right[0])) mismatch("axiom sides differ");
      return out;
    }
    if (p.rule == RuleKind::Cut) {
      cut(p);
      return out;
    }

    const auto& side = principal_on_left(p.rule) ? p.conclusion.left : p.conclusion.right;
    const char* where = principal_on_left(p.rule) ? "left" : "right";
    if (p.principal) {
      if (*p.principal >= side.size())
        throw Error(ErrorCode::PrincipalFormulaMissing,
                    "no formula " + std::to_string(*p.principal) + " on the " + where);
      out.params = principal(p, *p.principal);
      out.principal = p.principal;
      return out;
    }
    if (side.empty())
      throw Error(ErrorCode::PrincipalFormulaMissing, std::string("no formula on the ") + where);
    std::optional<Error> first, first_headed;
    auto head = expected_head(p.rule);
    for (std::size_t k = 0; k < side.size(); ++k) {
      try {
        out.params = principal(p, k);
        out.principal = k;
        return out;
      } catch (const Error& e) {
        if (e.code() == ErrorCode::CongruenceBudgetExceeded) throw;
        if (!first) first = e;
        if (!first_headed && head && lang_.kind(side[k]) == *head) first_headed = e;
      }
    }
    if (first_headed) throw *first_headed;
    if (head)
      throw Error(ErrorCode::PrincipalFormulaMissing,
                  std::string("no formula of the required shape on the ") + where);
    throw *first;
  }

  void cut(const Tree& p) {
    const Seq& c = p.conclusion;
    const Seq& p1 = p.premises[0].conclusion;
    const Seq& p2 = p.premises[1].conclusion;
    Keys L = keys(c.left), R = keys(c.right);
    if (!same_multiset(keys(p1.right), R)) mismatch("premise 0 right side differs from the conclusion");
    auto a = leftover(keys(p1.left), L);
    if (!a || a->size() != 1) mismatch("premise 0 must add exactly one formula on the left");
    if (!same_multiset(keys(p2.left), L)) mismatch("premise 1 left side differs from the conclusion");
    auto b = leftover(keys(p2.right), R);
    if (!b || b->size() != 1) mismatch("premise 1 must add exactly one formula on the right");
    if (lang_.key(p1.left[(*a)[0]]) != lang_.key(p2.right[(*b)[0]])) mismatch("cut formulas differ");
  }

  /// One formula extra on the given premise side, relative to ctx.
  const P& one_extra(const std::vector<P>& prem, const Keys& ctx, const char* what) {
    auto rest = leftover(keys(prem), ctx);
    if (!rest || rest->size() != 1) mismatch(std::string(what) + " must add exactly one formula");
    return prem[(*rest)[0]];
  }

  std::pair<const P*, const P*> two_extra(const std::vector<P>& prem, const Keys& ctx, const char* what) {
    auto rest = leftover(keys(prem), ctx);
    if (!rest || rest->size() != 2) mismatch(std::string(what) + " must add exactly two formulas");
    return {&prem[(*rest)[0]], &prem[(*rest)[1]]};
  }

  void expect_same(const std::vector<P>& prem, const Keys& ctx, const char* what) {
    if (!same_multiset(keys(prem), ctx)) mismatch(std::string(what) + " differs from the conclusion context");
  }

  void expect_binary(const P& c, PK kind, const P& a, const P& b, bool either_order) {
    std::string kc = lang_.key(c);
    if (kc == lang_.key(lang_.binary(kind, a, b))) return;
    if (either_order && kc == lang_.key(lang_.binary(kind, b, a))) return;
    mismatch("principal formula does not match the premises");
  }

  BasicRuleParams<P, T> principal(const Tree& p, std::size_t k) {
    const Seq& c = p.conclusion;
    const bool left = principal_on_left(p.rule);
    const P& C = left ? c.left[k] : c.right[k];
    Keys L = keys(c.left), R = keys(c.right);
    Keys G = left ? drop(L, k) : L;
    Keys D = left ? R : drop(R, k);
    auto prem = [&](std::size_t i) -> const Seq& { return p.premises[i].conclusion; };

    switch (p.rule) {
      case RuleKind::ContrL:
      case RuleKind::ContrR: {
        const Seq& s = prem(0);
        if (left) expect_same(s.right, R, "premise right side");
        else expect_same(s.left, L, "premise left side");
        auto [b1, b2] = two_extra(left ? s.left : s.right, left ? G : D, "premise");
        std::string kc = lang_.key(C);
        if (lang_.key(*b1) != kc || lang_.key(*b2) != kc) mismatch("contracted formulas differ from the principal formula");
        return {};
      }
      case RuleKind::WeakL:
      case RuleKind::WeakR:
        expect_same(prem(0).left, G, "premise left side");
        expect_same(prem(0).right, D, "premise right side");
        return {};
      case RuleKind::ImpL: {
        expect_same(prem(0).left, G, "premise 0 left side");
        const P& a = one_extra(prem(0).right, R, "premise 0 right side");
        expect_same(prem(1).right, R, "premise 1 right side");
        const P& b = one_extra(prem(1).left, G, "premise 1 left side");
        expect_binary(C, PK::Imp, a, b, false);
        return {};
      }
      case RuleKind::ImpR: {
        const P& a = one_extra(prem(0).left, L, "premise left side");
        const P& b = one_extra(prem(0).right, D, "premise right side");
        expect_binary(C, PK::Imp, a, b, false);
        return {};
      }
      case RuleKind::AndL: {
        expect_same(prem(0).right, R, "premise right side");
        auto [a, b] = two_extra(prem(0).left, G, "premise left side");
        expect_binary(C, PK::And, *a, *b, true);
        return {};
      }
      case RuleKind::AndR:
      case RuleKind::OrL: {
        const bool and_r = p.rule == RuleKind::AndR;
        const P* parts[2];
        for (std::size_t i = 0; i < 2; ++i) {
          const Seq& s = prem(i);
          if (and_r) {
            expect_same(s.left, L, "premise left side");
            parts[i] = &one_extra(s.right, D, "premise right side");
          } else {
            expect_same(s.right, R, "premise right side");
            parts[i] = &one_extra(s.left, G, "premise left side");
          }
        }
        expect_binary(C, and_r ? PK::And : PK::Or, *parts[0], *parts[1], false);
        return {};
      }
      case RuleKind::OrR: {
        expect_same(prem(0).left, L, "premise left side");
        auto [a, b] = two_extra(prem(0).right, D, "premise right side");
        expect_binary(C, PK::Or, *a, *b, true);
        return {};
      }
      case RuleKind::BotL:
        if (lang_.key(C) != lang_.key(lang_.bottom())) mismatch("principal formula is not false");
        return {};
      case RuleKind::AllL:
      case RuleKind::ExR: {
        const PK q = p.rule == RuleKind::AllL ? PK::Forall : PK::Exists;
        const Seq& s = prem(0);
        if (left) expect_same(s.right, R, "premise right side");
        else expect_same(s.left, L, "premise left side");
        const P& inst = one_extra(left ? s.left : s.right, left ? G : D, "premise");
        return witness_rule(p.params, q, C, inst);
      }
      case RuleKind::AllR:
      case RuleKind::ExL: {
        const PK q = p.rule == RuleKind::AllR ? PK::Forall : PK::Exists;
        const Seq& s = prem(0);
        if (left) expect_same(s.right, R, "premise right side");
        else expect_same(s.left, L, "premise left side");
        const P& body = one_extra(left ? s.left : s.right, left ? G : D, "premise");
        auto params = eigen_rule(p.params, q, C, body);
        std::vector<P> ctx = left ? drop(c.left, k) : c.left;
        const std::vector<P>& rest = left ? c.right : drop(c.right, k);
        ctx.insert(ctx.end(), rest.begin(), rest.end());
        for (const P& f : ctx)
          if (lang_.fv(f).count(*params.x))
            throw Error(ErrorCode::SideConditionViolated, *params.x + " occurs free in context");
        return params;
      }
      default:
        mismatch("unexpected rule");
    }
  }

  BasicRuleParams<P, T> witness_rule(const BasicRuleParams<P, T>& given, PK q, const P& B, const P& inst) {
    BasicRuleParams<P, T> out = given;
    const char* qname = q == PK::Forall ? "universal" : "existential";
    if (!out.A) {
      if (lang_.kind(B) != q) mismatch(std::string("principal formula is not ") + qname);
      if (out.x) {
        out.A = lang_.subst(lang_.name(B), lang_.var(*out.x), lang_.body(B));
      } else {
        out.x = lang_.name(B);
        out.A = lang_.body(B);
      }
    } else if (!out.x) {
      mismatch("parameter A given without x");
    }
    if (lang_.key(B) != lang_.key(lang_.quant(q, *out.x, *out.A)))
      mismatch(std::string("principal formula is not the ") + qname + " over " + *out.x + " of A");
    if (!out.t) {
      out.t = lang_.infer_witness(*out.x, *out.A, inst);
      if (!out.t) mismatch("cannot infer the witness term");
    }
    CheckResult w = lang_.witness_ok(*out.t);
    if (!w) throw Error(w.error().code, "witness: " + w.error().detail);
    if (lang_.key(inst) != lang_.key(lang_.subst(*out.x, *out.t, *out.A)))
      mismatch("premise formula is not the instance of A at the witness");
    return out;
  }

  BasicRuleParams<P, T> eigen_rule(const BasicRuleParams<P, T>& given, PK q, const P& B, const P& body) {
    BasicRuleParams<P, T> out = given;
    const std::string kb = lang_.key(B);
    if (out.A && lang_.key(*out.A) != lang_.key(body)) mismatch("premise formula differs from parameter A");
    const P& A = out.A ? *out.A : body;
    if (out.x) {
      if (kb != lang_.key(lang_.quant(q, *out.x, A))) mismatch("principal formula is not Q " + *out.x + ". A");
    } else {
      std::vector<std::string> cands;
      if (lang_.kind(B) == q) cands.push_back(lang_.name(B));
      auto fb = lang_.fv(B);
      for (const auto& v : lang_.fv(A))
        if (!fb.count(v)) cands.push_back(v);
      for (const auto& v : cands) {
        if (kb == lang_.key(lang_.quant(q, v, A))) {
          out.x = v;
          break;
        }
      }
      if (!out.x) mismatch("principal formula does not quantify the premise formula");
    }
    if (!out.A) out.A = body;
    return out;
  }

  Lang lang_;
};

struct BindingLang {
  using P = Prop;
  using T = Term;

  const Signature* sig;
  bool params_required = false;

  std::string key(const Prop& a) { return to_debruijn(a).repr; }
  CheckResult formula_ok(const Prop& a) { return well_formed(*sig, a); }
  CheckResult witness_ok(const Term& t) { return well_formed(*sig, t); }
  PK kind(const Prop& a) { return a.kind(); }
  const std::string& name(const Prop& a) { return a.name(); }
  const Prop& body(const Prop& a) { return a.body(); }
  Prop bottom() { return Prop::bottom(); }
  Term var(const std::string& x) { return Term::var(x); }
  Prop binary(PK k, Prop a, Prop b) {
    if (k == PK::Imp) return Prop::imp(std::move(a), std::move(b));
    if (k == PK::And) return Prop::conj(std::move(a), std::move(b));
    return Prop::disj(std::move(a), std::move(b));
  }
  Prop quant(PK k, const std::string& x, Prop a) {
    return k == PK::Forall ? Prop::forall(x, std::move(a)) : Prop::exists(x, std::move(a));
  }
  Prop subst(const std::string& x, const Term& t, const Prop& a) { return substitute(SubstMap{{x, t}}, a); }
  std::set<std::string> fv(const Prop& a) { return free_vars(a); }

  std::optional<Term> infer_witness(const std::string& x, const Prop& a, const Prop& c) {
    if (!free_vars(a).count(x)) return Term::var(x);
    return walk(x, a, c);
  }

  static std::optional<Term> walk(const std::string& x, const Term& a, const Term& c) {
    if (a.is_var()) {
      if (a.name() == x) return c;
      return std::nullopt;
    }
    if (c.is_var() || c.name() != a.name() || c.args().size() != a.args().size()) return std::nullopt;
    return walk_args(x, a.args(), c.args());
  }

  static std::optional<Term> walk_args(const std::string& x, const std::vector<Arg>& a, const std::vector<Arg>& c) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto& bs = a[i].binders;
      if (std::find(bs.begin(), bs.end(), x) != bs.end()) continue;
      if (c[i].binders.size() != bs.size()) return std::nullopt;
      if (auto r = walk(x, a[i].body, c[i].body)) return r;
    }
    return std::nullopt;
  }

  static std::optional<Term> walk(const std::string& x, const Prop& a, const Prop& c) {
    if (a.kind() != c.kind()) return std::nullopt;
    switch (a.kind()) {
      case PK::Atom:
        if (a.name() != c.name() || a.args().size() != c.args().size()) return std::nullopt;
        return walk_args(x, a.args(), c.args());
      case PK::Bottom:
        return std::nullopt;
      case PK::Forall:
      case PK::Exists:
        if (a.name() == x) return std::nullopt;
        return walk(x, a.body(), c.body());
      default:
        if (auto r = walk(x, a.lhs(), c.lhs())) return r;
        return walk(x, a.rhs(), c.rhs());
    }
  }
};

struct ModuloLang {
  using P = LProp;
  using T = LTerm;

  const Signature* sig;
  const Congruence* cong;
  bool params_required = true;
  std::unordered_map<std::string, std::string> cache;

  std::string key(const LProp& a) {
    std::string raw = canonical(a);
    auto it = cache.find(raw);
    if (it != cache.end()) return it->second;
    std::string k = cong->key(a);
    cache.emplace(std::move(raw), k);
    return k;
  }
  CheckResult formula_ok(const LProp& a) { return sort_check(*sig, a); }
  CheckResult witness_ok(const LTerm& t) {
    auto s = try_sort_of(*sig, t);
    if (!s) return CheckResult::failure(ErrorCode::SortMismatch, "/", "ill-sorted term " + print(t));
    if (*s != Sort::term(0))
      return CheckResult::failure(ErrorCode::SortMismatch, "/", "expected sort 0, found " + s->str());
    return CheckResult::success();
  }
  PK kind(const LProp& a) { return a.kind(); }
  const std::string& name(const LProp& a) { return a.name(); }
  const LProp& body(const LProp& a) { return a.body(); }
  LProp bottom() { return LProp::bottom(); }
  LTerm var(const std::string& x) { return LTerm::var(x); }
  LProp binary(PK k, LProp a, LProp b) {
    if (k == PK::Imp) return LProp::imp(std::move(a), std::move(b));
    if (k == PK::And) return LProp::conj(std::move(a), std::move(b));
    return LProp::disj(std::move(a), std::move(b));
  }
  LProp quant(PK k, const std::string& x, LProp a) {
    return k == PK::Forall ? LProp::forall(x, std::move(a)) : LProp::exists(x, std::move(a));
  }
  LProp subst(const std::string& x, const LTerm& t, const LProp& a) { return substitute(LSubstMap{{x, t}}, a); }
  std::set<std::string> fv(const LProp& a) { return free_vars(a); }
  std::optional<LTerm> infer_witness(const std::string&, const LProp&, const LProp&) { return std::nullopt; }
};

template <class Lang, class Tree>
CheckResult run_check(Lang lang, const Tree& p) {
  try {
    ProofChecker<Lang>(std::move(lang)).run(p);
    return CheckResult::success();
  } catch (const Error& e) {
    return CheckResult::failure(e.diagnostic());
  }
}

template <class P>
std::string print_sequent(const BasicSequent<P>& s) {
  std::string out;
  for (std::size_t i = 0; i < s.left.size(); ++i) out += (i ? ", " : "") + print(s.left[i]);
  out += out.empty() ? "|-" : " |-";
  for (std::size_t i = 0; i < s.right.size(); ++i) out += (i ? ", " : " ") + print(s.right[i]);
  return out;
}

}  // namespace

CheckResult check_binding_proof(const Signature& sig, const ProofTree& p) {
  return run_check(BindingLang{&sig, false}, p);
}

ProofTree elaborate_binding_proof(const Signature& sig, const ProofTree& p) {
  return ProofChecker<BindingLang>(BindingLang{&sig, false}).run(p);
}

CheckResult check_modulo_proof(const Signature& sig, const Congruence& cong, const LProofTree& p) {
  return run_check(ModuloLang{&sig, &cong, true, {}}, p);
}

CheckResult check_modulo_proof(const Signature& sig, const ProofTree& p) {
  return run_check(BindingLang{&sig, true}, p);
}

std::string print(const Sequent& s) { return print_sequent(s); }
std::string print(const LSequent& s) { return print_sequent(s); }

}  // namespace bindlog
