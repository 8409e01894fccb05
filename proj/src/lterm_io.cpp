#include "bindlog/lterm_io.hpp"

#include <algorithm>
#include <ostream>

#include "lterm_parse.hpp"
#include "lterm_print.hpp"

namespace bindlog {

using detail::TokenStream;

bool Pattern::ground() const {
  if (kind == Kind::Meta || a.meta || b.meta) return false;
  return std::all_of(kids.begin(), kids.end(), [](const Pattern& k) { return k.ground(); });
}

LTerm Pattern::to_lterm() const {
  if (kind == Kind::Meta || a.meta || b.meta)
    throw Error(ErrorCode::ParseError, "metavariables are only allowed in rewrite rules");
  std::vector<LTerm> ks;
  for (const auto& k : kids) ks.push_back(k.to_lterm());
  switch (kind) {
    case Kind::Index: return LTerm::index(a.value, b.value);
    case Kind::Var: return LTerm::var(name);
    case Kind::FApp: return LTerm::fapp(name, a.value, std::move(ks));
    case Kind::Closure: return LTerm::closure(ks[0], ks[1]);
    case Kind::Id: return LTerm::id(a.value);
    case Kind::Cons: return LTerm::cons(ks[0], ks[1]);
    case Kind::Shift: return LTerm::shift(a.value);
    case Kind::Comp: return LTerm::comp(ks[0], ks[1]);
    case Kind::Meta: break;
  }
  throw Error(ErrorCode::ParseError, "unexpected metavariable");
}

Pattern Pattern::from(const LTerm& t) {
  Pattern p;
  using K = LTerm::Kind;
  switch (t.kind()) {
    case K::Index: p.kind = Kind::Index; p.a.value = t.index_pos(); p.b.value = t.level(); break;
    case K::Var: p.kind = Kind::Var; p.name = t.name(); break;
    case K::FApp: p.kind = Kind::FApp; p.name = t.name(); p.a.value = t.level(); break;
    case K::Closure: p.kind = Kind::Closure; break;
    case K::Id: p.kind = Kind::Id; p.a.value = t.level(); break;
    case K::Cons: p.kind = Kind::Cons; break;
    case K::Shift: p.kind = Kind::Shift; p.a.value = t.level(); break;
    case K::Comp: p.kind = Kind::Comp; break;
  }
  for (const auto& c : t.children()) p.kids.push_back(from(c));
  return p;
}

// ---------------------------------------------------------------- parser

namespace detail {

namespace {

bool is_reserved(const std::string& s) { return s == "o" || s == "id" || s == "up"; }

std::optional<Level> as_level(const std::string& s) {
  if (all_digits(s)) return Level{std::nullopt, static_cast<unsigned>(std::stoul(s))};
  if (s.size() > 1 && s[0] == '?') return Level{s.substr(1), 0};
  return std::nullopt;
}

Pattern node(Pattern::Kind k, std::vector<Pattern> kids = {}) {
  Pattern p;
  p.kind = k;
  p.kids = std::move(kids);
  return p;
}

class PatternParser {
 public:
  PatternParser(TokenStream& ts, const Signature& sig) : ts_(ts), sig_(sig) {}

  Pattern expr() {
    Pattern left = comp();
    if (ts_.accept(".")) return node(Pattern::Kind::Cons, {std::move(left), expr()});
    return left;
  }

 private:
  Pattern comp() {
    Pattern left = postfix();
    if (ts_.is_word("o")) {
      ts_.next();
      return node(Pattern::Kind::Comp, {std::move(left), comp()});
    }
    return left;
  }

  Pattern postfix() {
    Pattern p = primary();
    while (ts_.accept("[")) {
      Pattern s = expr();
      ts_.expect("]");
      p = node(Pattern::Kind::Closure, {std::move(p), std::move(s)});
    }
    return p;
  }

  Pattern primary() {
    if (ts_.accept("(")) {
      Pattern p = expr();
      ts_.expect(")");
      return p;
    }
    std::string w = ts_.ident("L' term");
    bool call = ts_.is("(");

    auto us = w.rfind('_');
    std::optional<Level> sub;
    std::string base;
    if (us != std::string::npos && us > 0) {
      sub = as_level(w.substr(us + 1));
      base = w.substr(0, us);
    }

    if (call) {
      Pattern p = node(Pattern::Kind::FApp);
      if (sub && (sig_.function(base) || !sig_.function(w))) {
        p.name = base;
        p.a = *sub;
      } else {
        p.name = w;
      }
      if (p.name.empty() || p.name[0] == '?') ts_.fail("bad function symbol '" + w + "'");
      ts_.expect("(");
      if (!ts_.accept(")")) {
        do p.kids.push_back(expr());
        while (ts_.accept(","));
        ts_.expect(")");
      }
      return p;
    }

    if (sub) {
      if (all_digits(base) || (base.size() > 1 && base[0] == '?')) {
        Pattern p = node(Pattern::Kind::Index);
        p.a = *as_level(base);
        p.b = *sub;
        return p;
      }
      if (base == "id" || base == "up") {
        Pattern p = node(base == "id" ? Pattern::Kind::Id : Pattern::Kind::Shift);
        p.a = *sub;
        return p;
      }
      if (sig_.function(base)) {
        Pattern p = node(Pattern::Kind::FApp);
        p.name = base;
        p.a = *sub;
        return p;
      }
    }
    if (sig_.function(w)) {
      Pattern p = node(Pattern::Kind::FApp);
      p.name = w;
      return p;
    }
    if (w[0] == '?') {
      Pattern p = node(Pattern::Kind::Meta);
      p.name = w.substr(1);
      if (p.name.empty()) ts_.fail("empty metavariable name");
      return p;
    }
    if (is_reserved(w)) ts_.fail("'" + w + "' is reserved");
    Pattern p = node(Pattern::Kind::Var);
    p.name = w;
    return p;
  }

  TokenStream& ts_;
  const Signature& sig_;
};

LProp parse_lprop_q(TokenStream& ts, const Signature& sig);

bool at_quant(const TokenStream& ts) {
  return (ts.is_word("forall") || ts.is_word("exists")) && ts.is_ident(1) && ts.is(".", 2);
}

LProp parse_lunary(TokenStream& ts, const Signature& sig) {
  if (at_quant(ts)) return parse_lprop_q(ts, sig);
  if (ts.accept("(")) {
    LProp p = parse_lprop(ts, sig);
    ts.expect(")");
    return p;
  }
  if (ts.is_word("false") && !sig.predicate("false") && !sig.function("false")) {
    ts.next();
    return LProp::bottom();
  }
  if (ts.is_ident() && sig.predicate(ts.peek().text)) {
    std::string p = ts.next().text;
    std::vector<LTerm> args;
    if (ts.accept("(")) {
      if (!ts.accept(")")) {
        do args.push_back(parse_lterm(ts, sig));
        while (ts.accept(","));
        ts.expect(")");
      }
    }
    return LProp::atom(std::move(p), std::move(args));
  }
  if (!ts.is_ident()) ts.fail("expected a proposition");
  LTerm lhs = parse_lterm(ts, sig);
  ts.expect("=");
  LTerm rhs = parse_lterm(ts, sig);
  return LProp::eq(std::move(lhs), std::move(rhs));
}

LProp parse_land(TokenStream& ts, const Signature& sig) {
  LProp p = parse_lunary(ts, sig);
  while (ts.accept("/\\")) p = LProp::conj(std::move(p), parse_lunary(ts, sig));
  return p;
}

LProp parse_lor(TokenStream& ts, const Signature& sig) {
  LProp p = parse_land(ts, sig);
  while (ts.accept("\\/")) p = LProp::disj(std::move(p), parse_land(ts, sig));
  return p;
}

LProp parse_lprop_q(TokenStream& ts, const Signature& sig) {
  bool all = ts.next().text == "forall";
  std::string x = ts.ident("bound variable");
  ts.expect(".");
  LProp body = parse_lprop(ts, sig);
  return all ? LProp::forall(std::move(x), std::move(body)) : LProp::exists(std::move(x), std::move(body));
}

}  // namespace

Pattern parse_pattern(TokenStream& ts, const Signature& sig) { return PatternParser(ts, sig).expr(); }

LTerm parse_lterm(TokenStream& ts, const Signature& sig) {
  Pattern p = parse_pattern(ts, sig);
  try {
    return p.to_lterm();
  } catch (const Error& e) {
    ts.fail(e.detail());
  }
}

LProp parse_lprop(TokenStream& ts, const Signature& sig) {
  if (at_quant(ts)) return parse_lprop_q(ts, sig);
  LProp p = parse_lor(ts, sig);
  if (ts.accept("=>")) return LProp::imp(std::move(p), parse_lprop(ts, sig));
  return p;
}

}  // namespace detail

LTerm parse_lterm(const Signature& sig, std::string_view text) {
  TokenStream ts(text);
  LTerm t = detail::parse_lterm(ts, sig);
  ts.expect_end();
  return t;
}

LProp parse_lprop(const Signature& sig, std::string_view text) {
  TokenStream ts(text);
  LProp p = detail::parse_lprop(ts, sig);
  ts.expect_end();
  return p;
}

Pattern parse_pattern(const Signature& sig, std::string_view text) {
  TokenStream ts(text);
  Pattern p = detail::parse_pattern(ts, sig);
  ts.expect_end();
  return p;
}

// ---------------------------------------------------------------- printer

namespace detail {

namespace {

int prec(LTerm::Kind k) {
  switch (k) {
    case LTerm::Kind::Cons: return 0;
    case LTerm::Kind::Comp: return 1;
    default: return 2;
  }
}

void print_at(const LTerm& t, int need, std::string& out, const std::vector<std::string>* scope) {
  bool paren = prec(t.kind()) < need;
  if (paren) out += "(";
  print_lterm(t, out, scope);
  if (paren) out += ")";
}

}  // namespace

void print_lterm(const LTerm& t, std::string& out, const std::vector<std::string>* scope) {
  using K = LTerm::Kind;
  switch (t.kind()) {
    case K::Index:
      out += std::to_string(t.index_pos()) + "_" + std::to_string(t.level());
      return;
    case K::Var:
      if (scope) {
        for (std::size_t i = scope->size(); i-- > 0;) {
          if ((*scope)[i] == t.name()) {
            out += "#" + std::to_string(scope->size() - i);
            return;
          }
        }
      }
      out += t.name();
      return;
    case K::FApp:
      out += t.name() + "_" + std::to_string(t.level()) + "(";
      for (std::size_t i = 0; i < t.children().size(); ++i) {
        if (i) out += ", ";
        print_lterm(t.child(i), out, scope);
      }
      out += ")";
      return;
    case K::Closure:
      print_at(t.child(0), 2, out, scope);
      out += "[";
      print_lterm(t.child(1), out, scope);
      out += "]";
      return;
    case K::Id:
      out += "id_" + std::to_string(t.level());
      return;
    case K::Shift:
      out += "up_" + std::to_string(t.level());
      return;
    case K::Cons:
      print_at(t.child(0), 1, out, scope);
      out += " . ";
      print_at(t.child(1), 0, out, scope);
      return;
    case K::Comp:
      print_at(t.child(0), 2, out, scope);
      out += " o ";
      print_at(t.child(1), 1, out, scope);
      return;
  }
}

namespace {

int pprec(const LProp& a) {
  switch (a.kind()) {
    case Prop::Kind::Forall:
    case Prop::Kind::Exists: return 0;
    case Prop::Kind::Imp: return 1;
    case Prop::Kind::Or: return 2;
    case Prop::Kind::And: return 3;
    default: return 4;
  }
}

void print_child(const LProp& a, int need, std::string& out, std::vector<std::string>* scope) {
  bool paren = pprec(a) < need || a.is_quantifier();
  if (paren) out += "(";
  print_lprop(a, out, scope);
  if (paren) out += ")";
}

}  // namespace

void print_lprop(const LProp& a, std::string& out, std::vector<std::string>* scope) {
  switch (a.kind()) {
    case Prop::Kind::Atom:
      if (a.name() == "=" && a.args().size() == 2) {
        print_lterm(a.args()[0], out, scope);
        out += " = ";
        print_lterm(a.args()[1], out, scope);
      } else {
        out += a.name();
        if (!a.args().empty()) {
          out += "(";
          for (std::size_t i = 0; i < a.args().size(); ++i) {
            if (i) out += ", ";
            print_lterm(a.args()[i], out, scope);
          }
          out += ")";
        }
      }
      return;
    case Prop::Kind::Bottom:
      out += "false";
      return;
    case Prop::Kind::Forall:
    case Prop::Kind::Exists:
      out += a.kind() == Prop::Kind::Forall ? "forall " : "exists ";
      if (scope) {
        out += "#. ";
        scope->push_back(a.name());
        print_lprop(a.body(), out, scope);
        scope->pop_back();
      } else {
        out += a.name() + ". ";
        print_lprop(a.body(), out, scope);
      }
      return;
    case Prop::Kind::Imp:
      print_child(a.lhs(), 2, out, scope);
      out += " => ";
      print_child(a.rhs(), 1, out, scope);
      return;
    case Prop::Kind::Or:
      print_child(a.lhs(), 2, out, scope);
      out += " \\/ ";
      print_child(a.rhs(), 3, out, scope);
      return;
    case Prop::Kind::And:
      print_child(a.lhs(), 3, out, scope);
      out += " /\\ ";
      print_child(a.rhs(), 4, out, scope);
      return;
  }
}

}  // namespace detail

std::string print(const LTerm& t) {
  std::string out;
  detail::print_lterm(t, out);
  return out;
}

std::string print(const LProp& a) {
  std::string out;
  detail::print_lprop(a, out);
  return out;
}

namespace {

std::string level_str(const Level& l) { return l.meta ? "?" + *l.meta : std::to_string(l.value); }

int pat_prec(Pattern::Kind k) {
  return k == Pattern::Kind::Cons ? 0 : k == Pattern::Kind::Comp ? 1 : 2;
}

void print_pat(const Pattern& p, std::string& out);

void print_pat_at(const Pattern& p, int need, std::string& out) {
  bool paren = pat_prec(p.kind) < need;
  if (paren) out += "(";
  print_pat(p, out);
  if (paren) out += ")";
}

void print_pat(const Pattern& p, std::string& out) {
  using K = Pattern::Kind;
  switch (p.kind) {
    case K::Meta: out += "?" + p.name; return;
    case K::Index: out += level_str(p.a) + "_" + level_str(p.b); return;
    case K::Var: out += p.name; return;
    case K::FApp:
      out += p.name + "_" + level_str(p.a) + "(";
      for (std::size_t i = 0; i < p.kids.size(); ++i) {
        if (i) out += ", ";
        print_pat(p.kids[i], out);
      }
      out += ")";
      return;
    case K::Closure:
      print_pat_at(p.kids[0], 2, out);
      out += "[";
      print_pat(p.kids[1], out);
      out += "]";
      return;
    case K::Id: out += "id_" + level_str(p.a); return;
    case K::Shift: out += "up_" + level_str(p.a); return;
    case K::Cons:
      print_pat_at(p.kids[0], 1, out);
      out += " . ";
      print_pat_at(p.kids[1], 0, out);
      return;
    case K::Comp:
      print_pat_at(p.kids[0], 2, out);
      out += " o ";
      print_pat_at(p.kids[1], 1, out);
      return;
  }
}

}  // namespace

std::string print(const Pattern& p) {
  std::string out;
  print_pat(p, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const LTerm& t) { return os << print(t); }
std::ostream& operator<<(std::ostream& os, const LProp& a) { return os << print(a); }

}  // namespace bindlog
