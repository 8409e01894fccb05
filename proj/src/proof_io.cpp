#include "bindlog/proof_io.hpp"

#include "bindlog/lterm_io.hpp"
#include "bindlog/syntax_io.hpp"
#include "lterm_parse.hpp"
#include "syntax_parse.hpp"

namespace bindlog {

namespace {

using detail::TokenStream;

struct BindingSyntax {
  using P = Prop;
  using T = Term;
  static Prop prop(TokenStream& ts, const Signature& sig) { return detail::parse_prop(ts, sig); }
  static Term term(TokenStream& ts, const Signature& sig) { return detail::parse_term(ts, sig); }
};

struct LSyntax {
  using P = LProp;
  using T = LTerm;
  static LProp prop(TokenStream& ts, const Signature& sig) { return detail::parse_lprop(ts, sig); }
  static LTerm term(TokenStream& ts, const Signature& sig) { return detail::parse_lterm(ts, sig); }
};

[[noreturn]] void fail_at(int line, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

template <class Syn>
BasicProofTree<typename Syn::P, typename Syn::T> parse_node(const Signature& sig, std::string line, int lineno,
                                                           std::size_t indent) {
  using P = typename Syn::P;
  BasicProofTree<P, typename Syn::T> node;
  std::size_t pos = indent;
  if (line.compare(pos, 5, "rule ") != 0) fail_at(lineno, "expected 'rule <name>'");
  pos += 5;
  while (pos < line.size() && line[pos] == ' ') ++pos;
  std::size_t end = line.find_first_of(" \t", pos);
  if (end == std::string::npos) end = line.size();
  std::string name = line.substr(pos, end - pos);
  auto rule = rule_from_string(name);
  if (!rule) fail_at(lineno, "unknown rule '" + name + "'");
  node.rule = *rule;
  for (std::size_t i = 0; i < end; ++i) line[i] = ' ';

  TokenStream ts(line, lineno);
  if (ts.accept("[")) {
    while (!ts.accept("]")) {
      std::string key = ts.ident("parameter name");
      ts.expect("=");
      if (key == "x") {
        if (node.params.x) ts.fail("duplicate parameter x");
        node.params.x = ts.ident("variable");
      } else if (key == "A") {
        if (node.params.A) ts.fail("duplicate parameter A");
        node.params.A = Syn::prop(ts, sig);
      } else if (key == "t") {
        if (node.params.t) ts.fail("duplicate parameter t");
        node.params.t = Syn::term(ts, sig);
      } else {
        ts.fail("unknown parameter '" + key + "'");
      }
      if (!ts.accept(";") && !ts.is("]")) ts.fail("expected ';' or ']'");
    }
  }
  if (ts.accept("@")) {
    std::string k = ts.ident("principal index");
    if (!detail::all_digits(k)) ts.fail("principal index must be a number");
    node.principal = std::stoul(k);
  }
  auto side = [&](std::vector<P>& out, bool left) {
    if (left ? ts.is("|-") : ts.at_end()) return;
    do out.push_back(Syn::prop(ts, sig));
    while (ts.accept(","));
  };
  side(node.conclusion.left, true);
  ts.expect("|-");
  side(node.conclusion.right, false);
  ts.expect_end();
  return node;
}

template <class Syn>
BasicProofTree<typename Syn::P, typename Syn::T> parse_tree(const Signature& sig, std::string_view text) {
  using Tree = BasicProofTree<typename Syn::P, typename Syn::T>;
  std::optional<Tree> root;
  std::vector<Tree*> stack;
  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string line(text.substr(start, nl - start));
    start = nl + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t indent = line.find_first_not_of(' ');
    if (indent == std::string::npos || line[indent] == '#') continue;
    if (line[indent] == '\t') fail_at(lineno, "tabs are not allowed in indentation");
    if (indent % 2) fail_at(lineno, "indentation must be a multiple of two spaces");
    std::size_t depth = indent / 2;
    Tree node = parse_node<Syn>(sig, line, lineno, indent);
    if (!root) {
      if (depth != 0) fail_at(lineno, "the root node must not be indented");
      root = std::move(node);
      stack.push_back(&*root);
      continue;
    }
    if (depth == 0) fail_at(lineno, "a proof file holds exactly one root node");
    if (depth > stack.size()) fail_at(lineno, "indented too deeply");
    stack.resize(depth);
    Tree* parent = stack.back();
    parent->premises.push_back(std::move(node));
    stack.push_back(&parent->premises.back());
  }
  if (!root) throw Error(ErrorCode::ParseError, "empty proof");
  return std::move(*root);
}

template <class P, class T>
void print_tree(const BasicProofTree<P, T>& p, std::size_t depth, std::string& out) {
  out.append(depth * 2, ' ');
  out += "rule ";
  out += to_string(p.rule);
  if (!p.params.empty()) {
    std::string sep = " [";
    if (p.params.x) {
      out += sep + "x=" + *p.params.x;
      sep = "; ";
    }
    if (p.params.A) {
      out += sep + "A=" + print(*p.params.A);
      sep = "; ";
    }
    if (p.params.t) out += sep + "t=" + print(*p.params.t);
    out += "]";
  }
  if (p.principal) out += " @" + std::to_string(*p.principal);
  out += " " + print(p.conclusion) + "\n";
  for (const auto& c : p.premises) print_tree(c, depth + 1, out);
}

template <class F>
auto with_path(const std::string& path, F f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.detail(), e.path());
  }
}

}  // namespace

ProofTree parse_proof(const Signature& sig, std::string_view text) { return parse_tree<BindingSyntax>(sig, text); }
LProofTree parse_lproof(const Signature& sig, std::string_view text) { return parse_tree<LSyntax>(sig, text); }

ProofTree load_proof(const Signature& sig, const std::string& path) {
  return with_path(path, [&] { return parse_proof(sig, read_file(path)); });
}

LProofTree load_lproof(const Signature& sig, const std::string& path) {
  return with_path(path, [&] { return parse_lproof(sig, read_file(path)); });
}

std::string print(const ProofTree& p) {
  std::string out;
  print_tree(p, 0, out);
  return out;
}

std::string print(const LProofTree& p) {
  std::string out;
  print_tree(p, 0, out);
  return out;
}

}  // namespace bindlog
