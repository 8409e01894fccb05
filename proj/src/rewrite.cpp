#include "bindlog/rewrite.hpp"

#include <set>

#include "bindlog/syntax_io.hpp"
#include "lterm_parse.hpp"

namespace bindlog {

const Rule* RewriteSystem::find(std::string_view name) const {
  for (const auto& r : rules_)
    if (r.name == name) return &r;
  return nullptr;
}

// ---------------------------------------------------------------- normalization

namespace {

class Normalizer {
 public:
  Normalizer(const RewriteSystem& rs, const NormalizeOptions& opts) : rs_(rs), opts_(opts) {}

  LTerm innermost(const LTerm& t) {
    LTerm cur = t;
    if (!t.children().empty()) {
      std::vector<LTerm> kids;
      kids.reserve(t.children().size());
      bool changed = false;
      for (const auto& c : t.children()) {
        kids.push_back(innermost(c));
        changed = changed || !(kids.back() == c);
      }
      if (changed) cur = t.with_children(std::move(kids));
    }
    for (const auto& rule : rs_.rules()) {
      if (auto r = rule.apply(cur)) {
        step(rule, cur, *r);
        return innermost(*r);
      }
    }
    return cur;
  }

  std::optional<LTerm> outermost_step(const LTerm& t) {
    for (const auto& rule : rs_.rules()) {
      if (auto r = rule.apply(t)) {
        step(rule, t, *r);
        return r;
      }
    }
    const auto& kids = t.children();
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (auto c = outermost_step(kids[i])) {
        std::vector<LTerm> next = kids;
        next[i] = std::move(*c);
        return t.with_children(std::move(next));
      }
    }
    return std::nullopt;
  }

  LTerm run(const LTerm& t) {
    if (opts_.strategy == Strategy::Innermost) return innermost(t);
    LTerm cur = t;
    while (auto n = outermost_step(cur)) cur = std::move(*n);
    return cur;
  }

  std::size_t steps() const { return steps_; }

 private:
  void step(const Rule& rule, const LTerm& from, const LTerm& to) {
    if (++steps_ > opts_.budget)
      throw Error(ErrorCode::StepBudgetExceeded,
                  "normalization exceeded the budget of " + std::to_string(opts_.budget) + " steps");
    if (opts_.check_sorts) {
      auto before = try_sort_of(rs_.signature(), from);
      auto after = try_sort_of(rs_.signature(), to);
      if (before != after)
        throw Error(ErrorCode::SortMismatch, "rule " + rule.name + " changed the sort of " + print(from) +
                                                 " (" + (before ? before->str() : "ill-sorted") + " -> " +
                                                 (after ? after->str() : "ill-sorted") + ")");
    }
  }

  const RewriteSystem& rs_;
  const NormalizeOptions& opts_;
  std::size_t steps_ = 0;
};

LProp normalize_prop(Normalizer& n, const LProp& a) {
  switch (a.kind()) {
    case Prop::Kind::Atom: {
      std::vector<LTerm> args;
      for (const auto& t : a.args()) args.push_back(n.run(t));
      return LProp::atom(a.name(), std::move(args));
    }
    case Prop::Kind::Imp: return LProp::imp(normalize_prop(n, a.lhs()), normalize_prop(n, a.rhs()));
    case Prop::Kind::And: return LProp::conj(normalize_prop(n, a.lhs()), normalize_prop(n, a.rhs()));
    case Prop::Kind::Or: return LProp::disj(normalize_prop(n, a.lhs()), normalize_prop(n, a.rhs()));
    case Prop::Kind::Bottom: return a;
    case Prop::Kind::Forall: return LProp::forall(a.name(), normalize_prop(n, a.body()));
    case Prop::Kind::Exists: return LProp::exists(a.name(), normalize_prop(n, a.body()));
  }
  return a;
}

}  // namespace

Normalized normalize_counted(const RewriteSystem& rs, const LTerm& t, const NormalizeOptions& opts) {
  Normalizer n(rs, opts);
  LTerm out = n.run(t);
  return Normalized{std::move(out), n.steps()};
}

LTerm normalize(const RewriteSystem& rs, const LTerm& t, const NormalizeOptions& opts) {
  return normalize_counted(rs, t, opts).term;
}

LProp normalize(const RewriteSystem& rs, const LProp& a, const NormalizeOptions& opts) {
  Normalizer n(rs, opts);
  return normalize_prop(n, a);
}

// ---------------------------------------------------------------- redexes

namespace {

void collect_redexes(const RewriteSystem& rs, const LTerm& t, std::vector<std::size_t>& path,
                     std::vector<Redex>& out) {
  for (std::size_t r = 0; r < rs.rules().size(); ++r)
    if (rs.rules()[r].apply(t)) out.push_back(Redex{path, r});
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    path.push_back(i);
    collect_redexes(rs, t.child(i), path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<Redex> redexes(const RewriteSystem& rs, const LTerm& t) {
  std::vector<Redex> out;
  std::vector<std::size_t> path;
  collect_redexes(rs, t, path, out);
  return out;
}

const LTerm& subterm(const LTerm& t, const std::vector<std::size_t>& path) {
  const LTerm* cur = &t;
  for (std::size_t i : path) cur = &cur->child(i);
  return *cur;
}

LTerm replace_at(const LTerm& t, const std::vector<std::size_t>& path, std::size_t depth, const LTerm& with) {
  if (depth == path.size()) return with;
  std::vector<LTerm> kids = t.children();
  kids.at(path[depth]) = replace_at(kids[path[depth]], path, depth + 1, with);
  return t.with_children(std::move(kids));
}

LTerm rewrite_at(const RewriteSystem& rs, const LTerm& t, const Redex& r) {
  auto res = rs.rules().at(r.rule).apply(subterm(t, r.path));
  if (!res) throw Error(ErrorCode::InvalidRule, "rule " + rs.rules()[r.rule].name + " does not apply here",
                        format_path(r.path));
  return replace_at(t, r.path, 0, *res);
}

bool is_normal(const RewriteSystem& rs, const LTerm& t) {
  for (const auto& rule : rs.rules())
    if (rule.apply(t)) return false;
  for (const auto& c : t.children())
    if (!is_normal(rs, c)) return false;
  return true;
}

bool is_normal(const RewriteSystem& rs, const LProp& a) {
  switch (a.kind()) {
    case Prop::Kind::Atom:
      for (const auto& t : a.args())
        if (!is_normal(rs, t)) return false;
      return true;
    case Prop::Kind::Bottom: return true;
    case Prop::Kind::Forall:
    case Prop::Kind::Exists: return is_normal(rs, a.body());
    default: return is_normal(rs, a.lhs()) && is_normal(rs, a.rhs());
  }
}

// ---------------------------------------------------------------- patterns

namespace {

bool match_level(const Level& l, unsigned v, Bindings& b) {
  if (!l.meta) return l.value == v;
  auto [it, fresh] = b.levels.emplace(*l.meta, v);
  return fresh || it->second == v;
}

unsigned level_value(const Level& l, const Bindings& b) {
  if (!l.meta) return l.value;
  auto it = b.levels.find(*l.meta);
  if (it == b.levels.end()) throw Error(ErrorCode::InvalidRule, "unbound level metavariable ?" + *l.meta);
  return it->second;
}

LTerm::Kind lkind(Pattern::Kind k) {
  switch (k) {
    case Pattern::Kind::Index: return LTerm::Kind::Index;
    case Pattern::Kind::Var: return LTerm::Kind::Var;
    case Pattern::Kind::FApp: return LTerm::Kind::FApp;
    case Pattern::Kind::Closure: return LTerm::Kind::Closure;
    case Pattern::Kind::Id: return LTerm::Kind::Id;
    case Pattern::Kind::Cons: return LTerm::Kind::Cons;
    case Pattern::Kind::Shift: return LTerm::Kind::Shift;
    case Pattern::Kind::Comp: return LTerm::Kind::Comp;
    case Pattern::Kind::Meta: break;
  }
  return LTerm::Kind::Var;
}

void collect_metas(const Pattern& p, std::set<std::string>& terms, std::set<std::string>& levels) {
  if (p.kind == Pattern::Kind::Meta) terms.insert(p.name);
  if (p.a.meta) levels.insert(*p.a.meta);
  if (p.b.meta) levels.insert(*p.b.meta);
  for (const auto& k : p.kids) collect_metas(k, terms, levels);
}

// Sort of a pattern when it does not depend on metavariables.
std::optional<Sort> pattern_sort(const Signature& sig, const Pattern& p) {
  using K = Pattern::Kind;
  switch (p.kind) {
    case K::Meta: return std::nullopt;
    case K::Var: return Sort::term(0);
    case K::Index: return p.b.meta ? std::nullopt : std::optional<Sort>(Sort::term(p.b.value));
    case K::FApp: return p.a.meta ? std::nullopt : std::optional<Sort>(Sort::term(p.a.value));
    case K::Id: return p.a.meta ? std::nullopt : std::optional<Sort>(Sort::substitution(p.a.value, p.a.value));
    case K::Shift:
      return p.a.meta ? std::nullopt : std::optional<Sort>(Sort::substitution(p.a.value + 1, p.a.value));
    case K::Closure: {
      auto s = pattern_sort(sig, p.kids[1]);
      if (!s) return std::nullopt;
      return Sort::term(s->n);
    }
    case K::Cons: {
      auto s = pattern_sort(sig, p.kids[1]);
      if (!s) return std::nullopt;
      return Sort::substitution(s->n, s->p + 1);
    }
    case K::Comp: {
      auto s1 = pattern_sort(sig, p.kids[0]);
      auto s2 = pattern_sort(sig, p.kids[1]);
      if (!s1 || !s2) return std::nullopt;
      return Sort::substitution(s2->n, s1->p);
    }
  }
  return std::nullopt;
}

}  // namespace

bool match(const Pattern& p, const LTerm& t, Bindings& b) {
  if (p.kind == Pattern::Kind::Meta) {
    auto [it, fresh] = b.terms.emplace(p.name, t);
    return fresh || it->second == t;
  }
  if (t.kind() != lkind(p.kind)) return false;
  switch (p.kind) {
    case Pattern::Kind::Index:
      if (!match_level(p.a, t.index_pos(), b) || !match_level(p.b, t.level(), b)) return false;
      break;
    case Pattern::Kind::Var:
      if (p.name != t.name()) return false;
      break;
    case Pattern::Kind::FApp:
      if (p.name != t.name() || !match_level(p.a, t.level(), b)) return false;
      break;
    case Pattern::Kind::Id:
    case Pattern::Kind::Shift:
      if (!match_level(p.a, t.level(), b)) return false;
      break;
    default:
      break;
  }
  if (p.kids.size() != t.children().size()) return false;
  for (std::size_t i = 0; i < p.kids.size(); ++i)
    if (!match(p.kids[i], t.child(i), b)) return false;
  return true;
}

LTerm instantiate(const Pattern& p, const Bindings& b) {
  using K = Pattern::Kind;
  if (p.kind == K::Meta) {
    auto it = b.terms.find(p.name);
    if (it == b.terms.end()) throw Error(ErrorCode::InvalidRule, "unbound metavariable ?" + p.name);
    return it->second;
  }
  std::vector<LTerm> kids;
  for (const auto& k : p.kids) kids.push_back(instantiate(k, b));
  switch (p.kind) {
    case K::Index: return LTerm::index(level_value(p.a, b), level_value(p.b, b));
    case K::Var: return LTerm::var(p.name);
    case K::FApp: return LTerm::fapp(p.name, level_value(p.a, b), std::move(kids));
    case K::Closure: return LTerm::closure(kids[0], kids[1]);
    case K::Id: return LTerm::id(level_value(p.a, b));
    case K::Cons: return LTerm::cons(kids[0], kids[1]);
    case K::Shift: return LTerm::shift(level_value(p.a, b));
    case K::Comp: return LTerm::comp(kids[0], kids[1]);
    case K::Meta: break;
  }
  throw Error(ErrorCode::InvalidRule, "bad pattern");
}

Rule pattern_rule(const Signature& sig, std::string name, Pattern lhs, Pattern rhs) {
  if (lhs.kind == Pattern::Kind::Meta)
    throw Error(ErrorCode::InvalidRule, "rule " + name + ": left side is a lone metavariable");
  std::set<std::string> lt, ll, rt, rl;
  collect_metas(lhs, lt, ll);
  collect_metas(rhs, rt, rl);
  for (const auto& m : rt)
    if (!lt.count(m)) throw Error(ErrorCode::InvalidRule, "rule " + name + ": ?" + m + " is not bound on the left");
  for (const auto& m : rl)
    if (!ll.count(m)) throw Error(ErrorCode::InvalidRule, "rule " + name + ": ?" + m + " is not bound on the left");
  for (const Pattern* side : {&lhs, &rhs}) {
    if (side->ground()) {
      try {
        sort_of(sig, side->to_lterm());
      } catch (const Error& e) {
        throw Error(ErrorCode::InvalidRule, "rule " + name + ": " + e.detail(), e.path());
      }
    }
  }
  auto ls = pattern_sort(sig, lhs);
  auto rsort = pattern_sort(sig, rhs);
  if (ls && rsort && *ls != *rsort)
    throw Error(ErrorCode::InvalidRule,
                "rule " + name + ": sides have sorts " + ls->str() + " and " + rsort->str());
  std::string display = print(lhs) + " -> " + print(rhs);
  return Rule{std::move(name), std::move(display),
              [lhs = std::move(lhs), rhs = std::move(rhs)](const LTerm& t) -> std::optional<LTerm> {
                Bindings b;
                if (!match(lhs, t, b)) return std::nullopt;
                return instantiate(rhs, b);
              }};
}

RewriteSystem parse_rules(const Signature& sig, std::string_view text) {
  RewriteSystem rs(sig);
  detail::TokenStream ts(text);
  std::set<std::string> names;
  while (!ts.at_end()) {
    std::string name = ts.ident("rule name");
    ts.expect(":");
    Pattern lhs = detail::parse_pattern(ts, sig);
    ts.expect("->");
    Pattern rhs = detail::parse_pattern(ts, sig);
    if (!names.insert(name).second) throw Error(ErrorCode::InvalidRule, "rule " + name + " defined twice");
    rs.add(pattern_rule(sig, name, std::move(lhs), std::move(rhs)));
  }
  return rs;
}

RewriteSystem load_rules(const Signature& sig, const std::string& path) {
  try {
    return parse_rules(sig, read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.detail(), e.path());
  }
}

}  // namespace bindlog
