#include "bindlog/lterm.hpp"

#include <algorithm>
#include <functional>

#include "lterm_print.hpp"

namespace bindlog {

std::string Sort::str() const {
  if (subst) return "<" + std::to_string(n) + "," + std::to_string(p) + ">";
  return std::to_string(n);
}

struct LTerm::Node {
  Kind kind;
  unsigned a = 0;  // index position or level
  unsigned b = 0;  // index sort
  std::string name;
  std::vector<LTerm> kids;
  std::size_t size = 1;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::shared_ptr<const LTerm::Node> make_node(LTerm::Kind k, unsigned a, unsigned b, std::string name,
                                             std::vector<LTerm> kids) {
  auto n = std::make_shared<LTerm::Node>();
  n->kind = k;
  n->a = a;
  n->b = b;
  n->name = std::move(name);
  n->kids = std::move(kids);
  std::size_t h = mix(static_cast<std::size_t>(k) + 1, a);
  h = mix(h, b);
  h = mix(h, std::hash<std::string>{}(n->name));
  for (const auto& c : n->kids) {
    n->size += c.size();
    h = mix(h, c.hash());
  }
  n->hash = h;
  return n;
}

}  // namespace

LTerm LTerm::index(unsigned i, unsigned n) { return LTerm(make_node(Kind::Index, i, n, {}, {})); }
LTerm LTerm::var(std::string name) { return LTerm(make_node(Kind::Var, 0, 0, std::move(name), {})); }
LTerm LTerm::fapp(std::string symbol, unsigned level, std::vector<LTerm> args) {
  return LTerm(make_node(Kind::FApp, level, 0, std::move(symbol), std::move(args)));
}
LTerm LTerm::closure(LTerm t, LTerm s) {
  return LTerm(make_node(Kind::Closure, 0, 0, {}, {std::move(t), std::move(s)}));
}
LTerm LTerm::id(unsigned n) { return LTerm(make_node(Kind::Id, n, 0, {}, {})); }
LTerm LTerm::cons(LTerm t, LTerm s) { return LTerm(make_node(Kind::Cons, 0, 0, {}, {std::move(t), std::move(s)})); }
LTerm LTerm::shift(unsigned n) { return LTerm(make_node(Kind::Shift, n, 0, {}, {})); }
LTerm LTerm::comp(LTerm s1, LTerm s2) {
  return LTerm(make_node(Kind::Comp, 0, 0, {}, {std::move(s1), std::move(s2)}));
}

LTerm::Kind LTerm::kind() const noexcept { return node_->kind; }
unsigned LTerm::index_pos() const noexcept { return node_->a; }
unsigned LTerm::level() const noexcept { return node_->kind == Kind::Index ? node_->b : node_->a; }
const std::string& LTerm::name() const noexcept { return node_->name; }
const std::vector<LTerm>& LTerm::children() const noexcept { return node_->kids; }
std::size_t LTerm::size() const noexcept { return node_->size; }
std::size_t LTerm::hash() const noexcept { return node_->hash; }

LTerm LTerm::with_children(std::vector<LTerm> kids) const {
  return LTerm(make_node(node_->kind, node_->a, node_->b, node_->name, std::move(kids)));
}

bool operator==(const LTerm& x, const LTerm& y) {
  if (x.node_ == y.node_) return true;
  const auto& a = *x.node_;
  const auto& b = *y.node_;
  return a.hash == b.hash && a.size == b.size && a.kind == b.kind && a.a == b.a && a.b == b.b &&
         a.name == b.name && a.kids == b.kids;
}

bool operator<(const LTerm& x, const LTerm& y) {
  if (x.kind() != y.kind()) return x.kind() < y.kind();
  if (x.kind() == LTerm::Kind::Index && x.index_pos() != y.index_pos()) return x.index_pos() < y.index_pos();
  if (x.level() != y.level()) return x.level() < y.level();
  if (x.name() != y.name()) return x.name() < y.name();
  const auto& a = x.children();
  const auto& b = y.children();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const LTerm& l, const LTerm& r) { return l < r; });
}

// ---------------------------------------------------------------- LProp

struct LProp::Node {
  Kind kind;
  std::string name;
  std::vector<LTerm> args;
  std::vector<LProp> children;
};

LProp LProp::atom(std::string predicate, std::vector<LTerm> args) {
  return LProp(std::make_shared<const Node>(Node{Kind::Atom, std::move(predicate), std::move(args), {}}));
}
LProp LProp::imp(LProp a, LProp b) {
  return LProp(std::make_shared<const Node>(Node{Kind::Imp, {}, {}, {std::move(a), std::move(b)}}));
}
LProp LProp::conj(LProp a, LProp b) {
  return LProp(std::make_shared<const Node>(Node{Kind::And, {}, {}, {std::move(a), std::move(b)}}));
}
LProp LProp::disj(LProp a, LProp b) {
  return LProp(std::make_shared<const Node>(Node{Kind::Or, {}, {}, {std::move(a), std::move(b)}}));
}
LProp LProp::bottom() {
  static const LProp bot(std::make_shared<const Node>(Node{Kind::Bottom, {}, {}, {}}));
  return bot;
}
LProp LProp::forall(std::string var, LProp body) {
  return LProp(std::make_shared<const Node>(Node{Kind::Forall, std::move(var), {}, {std::move(body)}}));
}
LProp LProp::exists(std::string var, LProp body) {
  return LProp(std::make_shared<const Node>(Node{Kind::Exists, std::move(var), {}, {std::move(body)}}));
}
LProp LProp::eq(LTerm t, LTerm u) { return atom("=", {std::move(t), std::move(u)}); }

LProp::Kind LProp::kind() const noexcept { return node_->kind; }
const std::string& LProp::name() const noexcept { return node_->name; }
const std::vector<LTerm>& LProp::args() const noexcept { return node_->args; }
const LProp& LProp::lhs() const { return node_->children.at(0); }
const LProp& LProp::rhs() const { return node_->children.at(1); }
const LProp& LProp::body() const { return node_->children.at(0); }

bool operator==(const LProp& a, const LProp& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->kind == b.node_->kind && a.node_->name == b.node_->name && a.node_->args == b.node_->args &&
         a.node_->children == b.node_->children;
}

// ---------------------------------------------------------------- sorts

namespace {

class Sorter {
 public:
  explicit Sorter(const Signature& sig) : sig_(sig) {}

  Sort sort(const LTerm& t) {
    using K = LTerm::Kind;
    switch (t.kind()) {
      case K::Index:
        if (t.index_pos() < 1 || t.index_pos() > t.level())
          fail(ErrorCode::IndexOutOfRange, "index " + std::to_string(t.index_pos()) + "_" +
                                               std::to_string(t.level()) + " is out of range");
        return Sort::term(t.level());
      case K::Var:
        return Sort::term(0);
      case K::FApp: {
        const BindingArity* ar = sig_.function(t.name());
        if (!ar) fail(ErrorCode::UnknownSymbol, "function symbol '" + t.name() + "' is not declared");
        if (ar->size() != t.children().size())
          fail(ErrorCode::ArityMismatch, "'" + t.name() + "' expects " + std::to_string(ar->size()) +
                                             " arguments, got " + std::to_string(t.children().size()));
        for (std::size_t i = 0; i < ar->size(); ++i) expect(t, i, Sort::term((*ar)[i] + t.level()));
        return Sort::term(t.level());
      }
      case K::Closure: {
        Sort ts = child(t, 0);
        if (ts.subst) mismatch(t, 0, "a term sort", ts);
        Sort ss = child(t, 1);
        if (!ss.subst || ss.p != ts.n) mismatch(t, 1, "<n," + std::to_string(ts.n) + ">", ss);
        return Sort::term(ss.n);
      }
      case K::Id:
        return Sort::substitution(t.level(), t.level());
      case K::Shift:
        return Sort::substitution(t.level() + 1, t.level());
      case K::Cons: {
        Sort ts = child(t, 0);
        if (ts.subst) mismatch(t, 0, "a term sort", ts);
        Sort ss = child(t, 1);
        if (!ss.subst || ss.n != ts.n) mismatch(t, 1, "<" + std::to_string(ts.n) + ",p>", ss);
        return Sort::substitution(ts.n, ss.p + 1);
      }
      case K::Comp: {
        Sort s1 = child(t, 0);
        if (!s1.subst) mismatch(t, 0, "a substitution sort", s1);
        Sort s2 = child(t, 1);
        if (!s2.subst || s2.p != s1.n) mismatch(t, 1, "<q," + std::to_string(s1.n) + ">", s2);
        return Sort::substitution(s2.n, s1.p);
      }
    }
    return Sort{};
  }

  void expect(const LTerm& t, std::size_t i, Sort want) {
    Sort got = child(t, i);
    if (got != want) mismatch(t, i, want.str(), got);
  }

  std::vector<std::size_t> path;

 private:
  Sort child(const LTerm& t, std::size_t i) {
    path.push_back(i);
    Sort s = sort(t.child(i));
    path.pop_back();
    return s;
  }

  [[noreturn]] void mismatch(const LTerm&, std::size_t i, const std::string& want, Sort got) {
    path.push_back(i);
    fail(ErrorCode::SortMismatch, "expected " + want + ", found " + got.str());
  }

  [[noreturn]] void fail(ErrorCode code, const std::string& detail) {
    throw Error(code, detail, format_path(path));
  }

  const Signature& sig_;
};

}  // namespace

Sort sort_of(const Signature& sig, const LTerm& t) { return Sorter(sig).sort(t); }

std::optional<Sort> try_sort_of(const Signature& sig, const LTerm& t) {
  try {
    return sort_of(sig, t);
  } catch (const Error&) {
    return std::nullopt;
  }
}

CheckResult sort_check(const Signature& sig, const LProp& a) {
  std::vector<std::size_t> path;
  std::function<std::optional<Diagnostic>(const LProp&)> go = [&](const LProp& p) -> std::optional<Diagnostic> {
    switch (p.kind()) {
      case Prop::Kind::Atom: {
        const BindingArity* ar = sig.predicate(p.name());
        if (!ar)
          return Diagnostic{ErrorCode::UnknownSymbol, format_path(path),
                            "predicate symbol '" + p.name() + "' is not declared"};
        if (ar->size() != p.args().size())
          return Diagnostic{ErrorCode::ArityMismatch, format_path(path),
                            "'" + p.name() + "' expects " + std::to_string(ar->size()) + " arguments"};
        for (std::size_t i = 0; i < ar->size(); ++i) {
          path.push_back(i);
          try {
            Sort s = sort_of(sig, p.args()[i]);
            if (s != Sort::term((*ar)[i]))
              return Diagnostic{ErrorCode::SortMismatch, format_path(path),
                                "expected " + Sort::term((*ar)[i]).str() + ", found " + s.str()};
          } catch (const Error& e) {
            std::string sub = e.path() == "/" ? "" : e.path();
            return Diagnostic{e.code(), format_path(path) + sub, e.detail()};
          }
          path.pop_back();
        }
        return std::nullopt;
      }
      case Prop::Kind::Bottom:
        return std::nullopt;
      case Prop::Kind::Forall:
      case Prop::Kind::Exists: {
        path.push_back(0);
        auto d = go(p.body());
        path.pop_back();
        return d;
      }
      default: {
        path.push_back(0);
        auto d = go(p.lhs());
        path.back() = 1;
        if (!d) d = go(p.rhs());
        path.pop_back();
        return d;
      }
    }
  };
  if (auto d = go(a)) return CheckResult::failure(*d);
  return CheckResult::success();
}

// ---------------------------------------------------------------- helpers

LTerm shifts(unsigned b, unsigned c) {
  LTerm s = LTerm::shift(b + c - 1);
  for (unsigned k = c - 1; k-- > 0;) s = LTerm::comp(LTerm::shift(b + k), std::move(s));
  return s;
}

LTerm shifted_var(const std::string& x, unsigned n) {
  if (n == 0) return LTerm::var(x);
  return LTerm::closure(LTerm::var(x), shifts(0, n));
}

LTerm index_nf(unsigned j, unsigned m) {
  if (j == 0) return LTerm::index(1, m);
  return LTerm::closure(LTerm::index(1, m - j), shifts(m - j, j));
}

namespace {

void collect_free(const LTerm& t, std::set<std::string>& out) {
  if (t.is(LTerm::Kind::Var)) {
    out.insert(t.name());
    return;
  }
  for (const auto& c : t.children()) collect_free(c, out);
}

void collect_free(const LProp& p, std::vector<std::string>& bound, std::set<std::string>& out) {
  switch (p.kind()) {
    case Prop::Kind::Atom: {
      std::set<std::string> vs;
      for (const auto& a : p.args()) collect_free(a, vs);
      for (const auto& v : vs)
        if (std::find(bound.begin(), bound.end(), v) == bound.end()) out.insert(v);
      return;
    }
    case Prop::Kind::Bottom:
      return;
    case Prop::Kind::Forall:
    case Prop::Kind::Exists:
      bound.push_back(p.name());
      collect_free(p.body(), bound, out);
      bound.pop_back();
      return;
    default:
      collect_free(p.lhs(), bound, out);
      collect_free(p.rhs(), bound, out);
  }
}

void collect_names(const LProp& p, std::set<std::string>& out) {
  switch (p.kind()) {
    case Prop::Kind::Atom:
      for (const auto& a : p.args()) collect_free(a, out);
      return;
    case Prop::Kind::Bottom:
      return;
    case Prop::Kind::Forall:
    case Prop::Kind::Exists:
      out.insert(p.name());
      collect_names(p.body(), out);
      return;
    default:
      collect_names(p.lhs(), out);
      collect_names(p.rhs(), out);
  }
}

}  // namespace

std::set<std::string> free_vars(const LTerm& t) {
  std::set<std::string> out;
  collect_free(t, out);
  return out;
}

std::set<std::string> free_vars(const LProp& a) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  collect_free(a, bound, out);
  return out;
}

LTerm graft(const LSubstMap& theta, const LTerm& t) {
  if (theta.empty()) return t;
  if (t.is(LTerm::Kind::Var)) {
    auto it = theta.find(t.name());
    return it == theta.end() ? t : it->second;
  }
  if (t.children().empty()) return t;
  std::vector<LTerm> kids;
  kids.reserve(t.children().size());
  bool changed = false;
  for (const auto& c : t.children()) {
    kids.push_back(graft(theta, c));
    changed = changed || !(kids.back() == c);
  }
  return changed ? t.with_children(std::move(kids)) : t;
}

namespace {

class LSubstituter {
 public:
  LSubstituter(const LSubstMap& theta, std::set<std::string> avoid, const FreshNameScheme& scheme)
      : env_(theta), avoid_(std::move(avoid)), scheme_(scheme) {}

  LProp run(const LProp& a) {
    switch (a.kind()) {
      case Prop::Kind::Atom: {
        std::vector<LTerm> args;
        for (const auto& t : a.args()) args.push_back(graft(env_, t));
        return LProp::atom(a.name(), std::move(args));
      }
      case Prop::Kind::Imp: return LProp::imp(run(a.lhs()), run(a.rhs()));
      case Prop::Kind::And: return LProp::conj(run(a.lhs()), run(a.rhs()));
      case Prop::Kind::Or: return LProp::disj(run(a.lhs()), run(a.rhs()));
      case Prop::Kind::Bottom: return a;
      case Prop::Kind::Forall:
      case Prop::Kind::Exists: {
        std::string y;
        for (;;) {
          y = scheme_(a.name(), ++counter_);
          if (avoid_.insert(y).second) break;
        }
        auto it = env_.find(a.name());
        std::optional<LTerm> saved;
        if (it != env_.end()) saved = it->second;
        env_.insert_or_assign(a.name(), LTerm::var(y));
        LProp body = run(a.body());
        if (saved) env_.insert_or_assign(a.name(), *saved);
        else env_.erase(a.name());
        return a.kind() == Prop::Kind::Forall ? LProp::forall(y, std::move(body)) : LProp::exists(y, std::move(body));
      }
    }
    return a;
  }

 private:
  LSubstMap env_;
  std::set<std::string> avoid_;
  const FreshNameScheme& scheme_;
  unsigned counter_ = 0;
};

}  // namespace

LProp substitute(const LSubstMap& theta, const LProp& a, const FreshNameScheme& scheme) {
  std::set<std::string> avoid;
  collect_names(a, avoid);
  for (const auto& [x, t] : theta) {
    avoid.insert(x);
    collect_free(t, avoid);
  }
  return LSubstituter(theta, std::move(avoid), scheme).run(a);
}

std::string canonical(const LProp& a) {
  std::string out;
  std::vector<std::string> scope;
  detail::print_lprop(a, out, &scope);
  return out;
}

bool alpha_eq(const LProp& a, const LProp& b) { return canonical(a) == canonical(b); }

std::size_t size(const LProp& a) {
  switch (a.kind()) {
    case Prop::Kind::Atom: {
      std::size_t n = 1;
      for (const auto& t : a.args()) n += t.size();
      return n;
    }
    case Prop::Kind::Bottom: return 1;
    case Prop::Kind::Forall:
    case Prop::Kind::Exists: return 1 + size(a.body());
    default: return 1 + size(a.lhs()) + size(a.rhs());
  }
}

}  // namespace bindlog
