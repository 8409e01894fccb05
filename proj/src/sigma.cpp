#include "bindlog/sigma.hpp"

namespace bindlog {

using K = LTerm::Kind;

unsigned subst_target(const LTerm& s) {
  const LTerm* cur = &s;
  for (;;) {
    switch (cur->kind()) {
      case K::Id: return cur->level();
      case K::Shift: return cur->level() + 1;
      case K::Cons: cur = &cur->child(1); break;
      case K::Comp: cur = &cur->child(1); break;
      default: throw Error(ErrorCode::SortMismatch, "not a substitution: " + print(*cur));
    }
  }
}

namespace {

using Result = std::optional<LTerm>;

Result rule_index(const LTerm& t) {
  if (!t.is(K::Index) || t.index_pos() < 2 || t.index_pos() > t.level()) return std::nullopt;
  return index_nf(t.index_pos() - 1, t.level());
}

Result rule_var_cons(const LTerm& t) {
  if (!t.is(K::Closure)) return std::nullopt;
  const LTerm& h = t.child(0);
  const LTerm& s = t.child(1);
  if (h.is(K::Index) && h.index_pos() == 1 && s.is(K::Cons)) return s.child(0);
  return std::nullopt;
}

Result rule_id(const LTerm& t) {
  if (t.is(K::Closure) && t.child(1).is(K::Id)) return t.child(0);
  return std::nullopt;
}

Result rule_clos(const LTerm& t) {
  if (t.is(K::Closure) && t.child(0).is(K::Closure))
    return LTerm::closure(t.child(0).child(0), LTerm::comp(t.child(0).child(1), t.child(1)));
  return std::nullopt;
}

Result rule_id_l(const LTerm& t) {
  if (t.is(K::Comp) && t.child(0).is(K::Id)) return t.child(1);
  return std::nullopt;
}

Result rule_shift_cons(const LTerm& t) {
  if (t.is(K::Comp) && t.child(0).is(K::Shift) && t.child(1).is(K::Cons)) return t.child(1).child(1);
  return std::nullopt;
}

Result rule_ass_env(const LTerm& t) {
  if (t.is(K::Comp) && t.child(0).is(K::Comp))
    return LTerm::comp(t.child(0).child(0), LTerm::comp(t.child(0).child(1), t.child(1)));
  return std::nullopt;
}

Result rule_map_env(const LTerm& t) {
  if (t.is(K::Comp) && t.child(0).is(K::Cons)) {
    const LTerm& c = t.child(0);
    return LTerm::cons(LTerm::closure(c.child(0), t.child(1)), LTerm::comp(c.child(1), t.child(1)));
  }
  return std::nullopt;
}

Result rule_id_r(const LTerm& t) {
  if (t.is(K::Comp) && t.child(1).is(K::Id)) return t.child(0);
  return std::nullopt;
}

Result rule_var_id(const LTerm& t) {
  if (!t.is(K::Cons)) return std::nullopt;
  const LTerm& h = t.child(0);
  const LTerm& s = t.child(1);
  if (h.is(K::Index) && h.index_pos() == 1 && s.is(K::Shift) && h.level() == s.level() + 1)
    return LTerm::id(h.level());
  return std::nullopt;
}

Result rule_scons(const LTerm& t) {
  if (!t.is(K::Cons)) return std::nullopt;
  const LTerm& h = t.child(0);
  const LTerm& tail = t.child(1);
  if (!h.is(K::Closure) || !tail.is(K::Comp)) return std::nullopt;
  const LTerm& one = h.child(0);
  const LTerm& up = tail.child(0);
  if (!one.is(K::Index) || one.index_pos() != 1 || !up.is(K::Shift) || one.level() != up.level() + 1)
    return std::nullopt;
  if (!(h.child(1) == tail.child(1))) return std::nullopt;
  return h.child(1);
}

std::string app_display(const std::string& f, const BindingArity& ar) {
  std::string lhs = f + "_p(", rhs = f + "_q(";
  for (std::size_t i = 0; i < ar.size(); ++i) {
    std::string t = "t" + std::to_string(i + 1);
    if (i) {
      lhs += ", ";
      rhs += ", ";
    }
    lhs += t;
    unsigned k = ar[i];
    if (k == 0) {
      rhs += t + "[s]";
      continue;
    }
    rhs += t + "[";
    for (unsigned j = 0; j < k; ++j) rhs += j == 0 ? "1 . " : "1[up^" + std::to_string(j) + "] . ";
    rhs += "s o up^" + std::to_string(k) + "]";
  }
  return lhs + ")[s] -> " + rhs + ")";
}

Result rule_app(const std::string& f, const BindingArity& ar, const LTerm& t) {
  if (!t.is(K::Closure)) return std::nullopt;
  const LTerm& h = t.child(0);
  if (!h.is(K::FApp) || h.name() != f || h.children().size() != ar.size()) return std::nullopt;
  const LTerm& s = t.child(1);
  if (!s.is_substitution()) return std::nullopt;
  unsigned q = subst_target(s);
  std::vector<LTerm> args;
  args.reserve(ar.size());
  for (std::size_t i = 0; i < ar.size(); ++i) {
    unsigned k = ar[i];
    if (k == 0) {
      args.push_back(LTerm::closure(h.child(i), s));
      continue;
    }
    LTerm env = LTerm::comp(s, shifts(q, k));
    for (unsigned j = k; j-- > 0;) env = LTerm::cons(index_nf(j, q + k), std::move(env));
    args.push_back(LTerm::closure(h.child(i), std::move(env)));
  }
  return LTerm::fapp(f, q, std::move(args));
}

}  // namespace

RewriteSystem sigma_system(const Signature& sig) {
  RewriteSystem rs(sig);
  rs.add({"Index", "n+1 -> 1[up^n]", rule_index});
  rs.add({"VarCons", "1[t . s] -> t", rule_var_cons});
  rs.add({"Id", "t[id] -> t", rule_id});
  rs.add({"Clos", "(t[s])[s'] -> t[s o s']", rule_clos});
  rs.add({"IdL", "id o s -> s", rule_id_l});
  rs.add({"ShiftCons", "up o (t . s) -> s", rule_shift_cons});
  rs.add({"AssEnv", "(s1 o s2) o s3 -> s1 o (s2 o s3)", rule_ass_env});
  rs.add({"MapEnv", "(t . s) o s' -> t[s'] . (s o s')", rule_map_env});
  rs.add({"IdR", "s o id -> s", rule_id_r});
  rs.add({"VarId", "1 . up -> id", rule_var_id});
  rs.add({"SCons", "1[s] . (up o s) -> s", rule_scons});
  for (const auto& [f, ar] : sig.functions()) {
    rs.add({"App[" + f + "]", app_display(f, ar),
            [f = f, ar = ar](const LTerm& t) { return rule_app(f, ar, t); }});
  }
  return rs;
}

bool is_F_term(const Signature& sig, const LTerm& t) {
  if (!try_sort_of(sig, t)) return false;
  return is_normal(sigma_system(sig), t);
}

bool is_F_prop(const Signature& sig, const LProp& a) {
  if (!sort_check(sig, a)) return false;
  return is_normal(sigma_system(sig), a);
}

}  // namespace bindlog
