#include "bindlog/syntax_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "syntax_parse.hpp"

namespace bindlog {

using detail::TokenStream;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------- signatures

Signature parse_signature(std::string_view text) {
  Signature sig;
  TokenStream ts(text);
  while (!ts.at_end()) {
    bool fun = ts.is_word("fun");
    if (!fun && !ts.is_word("pred")) ts.fail("expected 'fun' or 'pred'");
    int line = ts.next().line;
    std::string name;
    if (!fun && ts.is("=")) {
      ts.next();
      name = "=";
    } else {
      name = ts.ident("symbol name");
    }
    ts.expect(":");
    ts.expect("<");
    BindingArity ar;
    if (!ts.is(">")) {
      do {
        std::string k = ts.ident("binder count");
        if (!detail::all_digits(k)) ts.fail("binder count must be a natural number");
        ar.push_back(static_cast<unsigned>(std::stoul(k)));
      } while (ts.accept(","));
    }
    ts.expect(">");
    try {
      if (fun) sig.add_function(name, std::move(ar));
      else sig.add_predicate(name, std::move(ar));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line) + ": " + e.detail());
    }
  }
  return sig;
}

Signature load_signature(const std::string& path) {
  try {
    return parse_signature(read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.detail(), e.path());
  }
}

// ---------------------------------------------------------------- parser

namespace detail {

namespace {

std::vector<Arg> parse_args(TokenStream& ts, const Signature& sig) {
  std::vector<Arg> args;
  ts.expect("(");
  if (ts.accept(")")) return args;
  do {
    std::size_t n = 0;
    while (ts.is_ident(n)) ++n;
    Arg a{{}, Term::var("")};
    if (n > 0 && ts.is(".", n)) {
      for (std::size_t k = 0; k < n; ++k) a.binders.push_back(ts.next().text);
      ts.expect(".");
    }
    a.body = parse_term(ts, sig);
    args.push_back(std::move(a));
  } while (ts.accept(","));
  ts.expect(")");
  return args;
}

Prop parse_imp(TokenStream& ts, const Signature& sig);

Prop parse_quant(TokenStream& ts, const Signature& sig) {
  bool all = ts.next().text == "forall";
  std::string x = ts.ident("bound variable");
  ts.expect(".");
  Prop body = parse_prop(ts, sig);
  return all ? Prop::forall(std::move(x), std::move(body)) : Prop::exists(std::move(x), std::move(body));
}

bool at_quant(const TokenStream& ts) {
  return (ts.is_word("forall") || ts.is_word("exists")) && ts.is_ident(1) && ts.is(".", 2);
}

Prop parse_unary(TokenStream& ts, const Signature& sig) {
  if (at_quant(ts)) return parse_quant(ts, sig);
  if (ts.accept("(")) {
    Prop p = parse_prop(ts, sig);
    ts.expect(")");
    return p;
  }
  if (ts.is_word("false") && !sig.predicate("false") && !sig.function("false")) {
    ts.next();
    return Prop::bottom();
  }
  if (ts.is_ident() && sig.predicate(ts.peek().text)) {
    std::string p = ts.next().text;
    if (ts.is("(")) return Prop::atom(std::move(p), parse_args(ts, sig));
    return Prop::atom(std::move(p));
  }
  if (!ts.is_ident()) ts.fail("expected a proposition");
  Term lhs = parse_term(ts, sig);
  ts.expect("=");
  Term rhs = parse_term(ts, sig);
  return Prop::eq(std::move(lhs), std::move(rhs));
}

Prop parse_and(TokenStream& ts, const Signature& sig) {
  Prop p = parse_unary(ts, sig);
  while (ts.accept("/\\")) p = Prop::conj(std::move(p), parse_unary(ts, sig));
  return p;
}

Prop parse_or(TokenStream& ts, const Signature& sig) {
  Prop p = parse_and(ts, sig);
  while (ts.accept("\\/")) p = Prop::disj(std::move(p), parse_and(ts, sig));
  return p;
}

Prop parse_imp(TokenStream& ts, const Signature& sig) {
  Prop p = parse_or(ts, sig);
  if (ts.accept("=>")) return Prop::imp(std::move(p), parse_prop(ts, sig));
  return p;
}

}  // namespace

Term parse_term(TokenStream& ts, const Signature& sig) {
  std::string name = ts.ident("term");
  if (ts.is("(")) return Term::app(std::move(name), parse_args(ts, sig));
  if (sig.function(name)) return Term::app(std::move(name));
  return Term::var(std::move(name));
}

Prop parse_prop(TokenStream& ts, const Signature& sig) {
  if (at_quant(ts)) return parse_quant(ts, sig);
  return parse_imp(ts, sig);
}

}  // namespace detail

Term parse_term(const Signature& sig, std::string_view text) {
  TokenStream ts(text);
  Term t = detail::parse_term(ts, sig);
  ts.expect_end();
  return t;
}

Prop parse_prop(const Signature& sig, std::string_view text) {
  TokenStream ts(text);
  Prop p = detail::parse_prop(ts, sig);
  ts.expect_end();
  return p;
}

// ---------------------------------------------------------------- printer

namespace {

void print_term(const Term& t, std::string& out);

void print_args(const std::vector<Arg>& args, std::string& out) {
  out += "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    const Arg& a = args[i];
    for (std::size_t k = 0; k < a.binders.size(); ++k) {
      if (k) out += " ";
      out += a.binders[k];
    }
    if (!a.binders.empty()) out += ". ";
    print_term(a.body, out);
  }
  out += ")";
}

void print_term(const Term& t, std::string& out) {
  out += t.name();
  if (!t.is_var() && !t.args().empty()) print_args(t.args(), out);
}

int prec(const Prop& a) {
  switch (a.kind()) {
    case Prop::Kind::Forall:
    case Prop::Kind::Exists: return 0;
    case Prop::Kind::Imp: return 1;
    case Prop::Kind::Or: return 2;
    case Prop::Kind::And: return 3;
    default: return 4;
  }
}

void print_prop(const Prop& a, std::string& out);

void print_child(const Prop& a, int need, std::string& out) {
  bool paren = prec(a) < need || a.is_quantifier();
  if (paren) out += "(";
  print_prop(a, out);
  if (paren) out += ")";
}

void print_prop(const Prop& a, std::string& out) {
  switch (a.kind()) {
    case Prop::Kind::Atom:
      if (a.name() == "=" && a.args().size() == 2 && a.args()[0].binders.empty() && a.args()[1].binders.empty()) {
        print_term(a.args()[0].body, out);
        out += " = ";
        print_term(a.args()[1].body, out);
      } else {
        out += a.name();
        if (!a.args().empty()) print_args(a.args(), out);
      }
      return;
    case Prop::Kind::Bottom:
      out += "false";
      return;
    case Prop::Kind::Forall:
    case Prop::Kind::Exists:
      out += a.kind() == Prop::Kind::Forall ? "forall " : "exists ";
      out += a.name();
      out += ". ";
      print_prop(a.body(), out);
      return;
    case Prop::Kind::Imp:
      print_child(a.lhs(), 2, out);
      out += " => ";
      print_child(a.rhs(), 1, out);
      return;
    case Prop::Kind::Or:
      print_child(a.lhs(), 2, out);
      out += " \\/ ";
      print_child(a.rhs(), 3, out);
      return;
    case Prop::Kind::And:
      print_child(a.lhs(), 3, out);
      out += " /\\ ";
      print_child(a.rhs(), 4, out);
      return;
  }
}

}  // namespace

std::string print(const Term& t) {
  std::string out;
  print_term(t, out);
  return out;
}

std::string print(const Prop& a) {
  std::string out;
  print_prop(a, out);
  return out;
}

std::string print(const Signature& sig) {
  std::string out;
  for (const auto& [f, ar] : sig.functions()) out += "fun " + f + " : " + to_string(ar) + "\n";
  for (const auto& [p, ar] : sig.predicates()) out += "pred " + p + " : " + to_string(ar) + "\n";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << print(t); }
std::ostream& operator<<(std::ostream& os, const Prop& a) { return os << print(a); }

}  // namespace bindlog
