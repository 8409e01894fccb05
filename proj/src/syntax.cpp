#include "bindlog/syntax.hpp"

#include <algorithm>

namespace bindlog {

std::string to_string(const BindingArity& arity) {
  std::string out = "<";
  for (std::size_t i = 0; i < arity.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(arity[i]);
  }
  return out + ">";
}

namespace {

void check_new_symbol(const Signature& sig, const std::string& name) {
  if (name.empty()) throw Error(ErrorCode::InvalidSignature, "empty symbol name");
  if (sig.function(name) || sig.predicate(name))
    throw Error(ErrorCode::InvalidSignature, "symbol '" + name + "' declared twice");
}

}  // namespace

void Signature::add_function(std::string name, BindingArity arity) {
  check_new_symbol(*this, name);
  functions_.emplace(std::move(name), std::move(arity));
}

void Signature::add_predicate(std::string name, BindingArity arity) {
  check_new_symbol(*this, name);
  predicates_.emplace(std::move(name), std::move(arity));
}

const BindingArity* Signature::function(std::string_view name) const {
  auto it = functions_.find(name);
  return it == functions_.end() ? nullptr : &it->second;
}

const BindingArity* Signature::predicate(std::string_view name) const {
  auto it = predicates_.find(name);
  return it == predicates_.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------- Term

struct Term::Node {
  Kind kind;
  std::string name;
  std::vector<Arg> args;
};

Term Term::var(std::string name) {
  return Term(std::make_shared<const Node>(Node{Kind::Var, std::move(name), {}}));
}

Term Term::app(std::string symbol, std::vector<Arg> args) {
  return Term(std::make_shared<const Node>(Node{Kind::App, std::move(symbol), std::move(args)}));
}

Term::Kind Term::kind() const noexcept { return node_->kind; }
const std::string& Term::name() const noexcept { return node_->name; }
const std::vector<Arg>& Term::args() const noexcept { return node_->args; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->kind == b.node_->kind && a.node_->name == b.node_->name &&
         a.node_->args == b.node_->args;
}

// ---------------------------------------------------------------- Prop

struct Prop::Node {
  Kind kind;
  std::string name;
  std::vector<Arg> args;
  std::vector<Prop> children;
};

namespace {

template <class... Ps>
std::vector<Prop> props(Ps&&... ps) {
  std::vector<Prop> v;
  (v.push_back(std::forward<Ps>(ps)), ...);
  return v;
}

}  // namespace

Prop Prop::atom(std::string predicate, std::vector<Arg> args) {
  return Prop(std::make_shared<const Node>(Node{Kind::Atom, std::move(predicate), std::move(args), {}}));
}
Prop Prop::imp(Prop a, Prop b) {
  return Prop(std::make_shared<const Node>(Node{Kind::Imp, {}, {}, props(std::move(a), std::move(b))}));
}
Prop Prop::conj(Prop a, Prop b) {
  return Prop(std::make_shared<const Node>(Node{Kind::And, {}, {}, props(std::move(a), std::move(b))}));
}
Prop Prop::disj(Prop a, Prop b) {
  return Prop(std::make_shared<const Node>(Node{Kind::Or, {}, {}, props(std::move(a), std::move(b))}));
}
Prop Prop::bottom() {
  static const Prop bot(std::make_shared<const Node>(Node{Kind::Bottom, {}, {}, {}}));
  return bot;
}
Prop Prop::forall(std::string var, Prop body) {
  return Prop(std::make_shared<const Node>(Node{Kind::Forall, std::move(var), {}, props(std::move(body))}));
}
Prop Prop::exists(std::string var, Prop body) {
  return Prop(std::make_shared<const Node>(Node{Kind::Exists, std::move(var), {}, props(std::move(body))}));
}
Prop Prop::eq(Term t, Term u) {
  std::vector<Arg> args;
  args.push_back(Arg{{}, std::move(t)});
  args.push_back(Arg{{}, std::move(u)});
  return atom("=", std::move(args));
}

Prop::Kind Prop::kind() const noexcept { return node_->kind; }
const std::string& Prop::name() const noexcept { return node_->name; }
const std::vector<Arg>& Prop::args() const noexcept { return node_->args; }
const Prop& Prop::lhs() const { return node_->children.at(0); }
const Prop& Prop::rhs() const { return node_->children.at(1); }
const Prop& Prop::body() const { return node_->children.at(0); }

bool operator==(const Prop& a, const Prop& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->kind == b.node_->kind && a.node_->name == b.node_->name &&
         a.node_->args == b.node_->args && a.node_->children == b.node_->children;
}

// ---------------------------------------------------------------- variables

namespace {

void collect_free(const Term& t, std::vector<std::string>& bound, std::set<std::string>& out) {
  if (t.is_var()) {
    if (std::find(bound.begin(), bound.end(), t.name()) == bound.end()) out.insert(t.name());
    return;
  }
  for (const Arg& a : t.args()) {
    bound.insert(bound.end(), a.binders.begin(), a.binders.end());
    collect_free(a.body, bound, out);
    bound.resize(bound.size() - a.binders.size());
  }
}

void collect_free(const Prop& p, std::vector<std::string>& bound, std::set<std::string>& out) {
  switch (p.kind()) {
    case Prop::Kind::Atom:
      for (const Arg& a : p.args()) {
        bound.insert(bound.end(), a.binders.begin(), a.binders.end());
        collect_free(a.body, bound, out);
        bound.resize(bound.size() - a.binders.size());
      }
      return;
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

void collect_all(const Term& t, std::set<std::string>& out) {
  if (t.is_var()) {
    out.insert(t.name());
    return;
  }
  for (const Arg& a : t.args()) {
    out.insert(a.binders.begin(), a.binders.end());
    collect_all(a.body, out);
  }
}

void collect_all(const Prop& p, std::set<std::string>& out) {
  switch (p.kind()) {
    case Prop::Kind::Atom:
      for (const Arg& a : p.args()) {
        out.insert(a.binders.begin(), a.binders.end());
        collect_all(a.body, out);
      }
      return;
    case Prop::Kind::Bottom:
      return;
    case Prop::Kind::Forall:
    case Prop::Kind::Exists:
      out.insert(p.name());
      collect_all(p.body(), out);
      return;
    default:
      collect_all(p.lhs(), out);
      collect_all(p.rhs(), out);
  }
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  collect_free(t, bound, out);
  return out;
}

std::set<std::string> free_vars(const Prop& a) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  collect_free(a, bound, out);
  return out;
}

std::set<std::string> all_vars(const Term& t) {
  std::set<std::string> out;
  collect_all(t, out);
  return out;
}

std::set<std::string> all_vars(const Prop& a) {
  std::set<std::string> out;
  collect_all(a, out);
  return out;
}

// ---------------------------------------------------------------- grafting

namespace {

SubstMap restrict(const SubstMap& theta, const std::vector<std::string>& binders) {
  SubstMap out = theta;
  for (const auto& b : binders) out.erase(b);
  return out;
}

std::vector<Arg> graft_args(const SubstMap& theta, const std::vector<Arg>& args) {
  std::vector<Arg> out;
  out.reserve(args.size());
  for (const Arg& a : args) {
    if (a.binders.empty()) {
      out.push_back(Arg{a.binders, graft(theta, a.body)});
    } else {
      out.push_back(Arg{a.binders, graft(restrict(theta, a.binders), a.body)});
    }
  }
  return out;
}

}  // namespace

Term graft(const SubstMap& theta, const Term& t) {
  if (theta.empty()) return t;
  if (t.is_var()) {
    auto it = theta.find(t.name());
    return it == theta.end() ? t : it->second;
  }
  return Term::app(t.name(), graft_args(theta, t.args()));
}

Prop graft(const SubstMap& theta, const Prop& a) {
  if (theta.empty()) return a;
  switch (a.kind()) {
    case Prop::Kind::Atom: return Prop::atom(a.name(), graft_args(theta, a.args()));
    case Prop::Kind::Imp: return Prop::imp(graft(theta, a.lhs()), graft(theta, a.rhs()));
    case Prop::Kind::And: return Prop::conj(graft(theta, a.lhs()), graft(theta, a.rhs()));
    case Prop::Kind::Or: return Prop::disj(graft(theta, a.lhs()), graft(theta, a.rhs()));
    case Prop::Kind::Bottom: return a;
    case Prop::Kind::Forall: return Prop::forall(a.name(), graft(theta, a.body()));
    case Prop::Kind::Exists: return Prop::exists(a.name(), graft(theta, a.body()));
  }
  return a;
}

// ---------------------------------------------------------------- substitution

std::string default_fresh_name(std::string_view base, unsigned counter) {
  auto quote = base.find('\'');
  std::string stem(base.substr(0, quote));
  if (stem.empty()) stem = "v";
  return stem + "'" + std::to_string(counter);
}

namespace {

class Substituter {
 public:
  Substituter(const SubstMap& theta, std::set<std::string> avoid, const FreshNameScheme& scheme)
      : avoid_(std::move(avoid)), scheme_(scheme), env_(theta) {}

  Term term(const Term& t) {
    if (t.is_var()) {
      auto it = env_.find(t.name());
      return it == env_.end() ? t : it->second;
    }
    return Term::app(t.name(), args(t.args()));
  }

  Prop prop(const Prop& a) {
    switch (a.kind()) {
      case Prop::Kind::Atom: return Prop::atom(a.name(), args(a.args()));
      case Prop::Kind::Imp: return Prop::imp(prop(a.lhs()), prop(a.rhs()));
      case Prop::Kind::And: return Prop::conj(prop(a.lhs()), prop(a.rhs()));
      case Prop::Kind::Or: return Prop::disj(prop(a.lhs()), prop(a.rhs()));
      case Prop::Kind::Bottom: return a;
      case Prop::Kind::Forall:
      case Prop::Kind::Exists: {
        std::vector<std::string> binders{a.name()};
        auto saved = rebind(binders);
        Prop body = prop(a.body());
        restore(saved);
        return a.kind() == Prop::Kind::Forall ? Prop::forall(binders[0], std::move(body))
                                              : Prop::exists(binders[0], std::move(body));
      }
    }
    return a;
  }

 private:
  using Saved = std::vector<std::pair<std::string, std::optional<Term>>>;

  std::string fresh(const std::string& base) {
    for (;;) {
      std::string cand = scheme_(base, ++counter_);
      if (avoid_.insert(cand).second) return cand;
    }
  }

  // Renames binders in place and extends the environment; returns what to undo.
  Saved rebind(std::vector<std::string>& binders) {
    Saved saved;
    for (auto& b : binders) {
      std::string y = fresh(b);
      auto it = env_.find(b);
      saved.emplace_back(b, it == env_.end() ? std::nullopt : std::optional<Term>(it->second));
      env_.insert_or_assign(b, Term::var(y));
      b = std::move(y);
    }
    return saved;
  }

  void restore(const Saved& saved) {
    for (auto it = saved.rbegin(); it != saved.rend(); ++it) {
      if (it->second) env_.insert_or_assign(it->first, *it->second);
      else env_.erase(it->first);
    }
  }

  std::vector<Arg> args(const std::vector<Arg>& in) {
    std::vector<Arg> out;
    out.reserve(in.size());
    for (const Arg& a : in) {
      std::vector<std::string> binders = a.binders;
      auto saved = rebind(binders);
      Term body = term(a.body);
      restore(saved);
      out.push_back(Arg{std::move(binders), std::move(body)});
    }
    return out;
  }

  std::set<std::string> avoid_;
  const FreshNameScheme& scheme_;
  SubstMap env_;
  unsigned counter_ = 0;
};

std::set<std::string> avoid_set(const SubstMap& theta) {
  std::set<std::string> out;
  for (const auto& [x, t] : theta) {
    out.insert(x);
    collect_all(t, out);
  }
  return out;
}

}  // namespace

Term substitute(const SubstMap& theta, const Term& t, const FreshNameScheme& scheme) {
  auto avoid = avoid_set(theta);
  collect_all(t, avoid);
  return Substituter(theta, std::move(avoid), scheme).term(t);
}

Prop substitute(const SubstMap& theta, const Prop& a, const FreshNameScheme& scheme) {
  auto avoid = avoid_set(theta);
  collect_all(a, avoid);
  return Substituter(theta, std::move(avoid), scheme).prop(a);
}

// ---------------------------------------------------------------- nameless form

namespace {

const char* const kBullet = "\xE2\x80\xA2";

class Canon {
 public:
  void term(const Term& t) {
    if (t.is_var()) {
      for (std::size_t i = scope_.size(); i-- > 0;) {
        if (scope_[i] == t.name()) {
          out_ += "#" + std::to_string(scope_.size() - i);
          return;
        }
      }
      out_ += t.name();
      return;
    }
    out_ += t.name();
    args(t.args());
  }

  void prop(const Prop& a) {
    switch (a.kind()) {
      case Prop::Kind::Atom:
        out_ += a.name();
        args(a.args());
        return;
      case Prop::Kind::Bottom:
        out_ += "false";
        return;
      case Prop::Kind::Forall:
      case Prop::Kind::Exists:
        out_ += a.kind() == Prop::Kind::Forall ? "forall " : "exists ";
        out_ += kBullet;
        out_ += ". ";
        scope_.push_back(a.name());
        prop(a.body());
        scope_.pop_back();
        return;
      default: {
        const char* op = a.kind() == Prop::Kind::Imp ? " => " : a.kind() == Prop::Kind::And ? " /\\ " : " \\/ ";
        out_ += "(";
        prop(a.lhs());
        out_ += op;
        prop(a.rhs());
        out_ += ")";
      }
    }
  }

  std::string take() { return std::move(out_); }

 private:
  void args(const std::vector<Arg>& as) {
    out_ += "(";
    for (std::size_t i = 0; i < as.size(); ++i) {
      if (i) out_ += ", ";
      const Arg& a = as[i];
      for (std::size_t k = 0; k < a.binders.size(); ++k) {
        if (k) out_ += " ";
        out_ += kBullet;
      }
      if (!a.binders.empty()) out_ += ". ";
      scope_.insert(scope_.end(), a.binders.begin(), a.binders.end());
      term(a.body);
      scope_.resize(scope_.size() - a.binders.size());
    }
    out_ += ")";
  }

  std::vector<std::string> scope_;
  std::string out_;
};

}  // namespace

Nameless to_debruijn(const Term& t) {
  Canon c;
  c.term(t);
  return Nameless{c.take()};
}

Nameless to_debruijn(const Prop& a) {
  Canon c;
  c.prop(a);
  return Nameless{c.take()};
}

bool alpha_eq(const Term& t, const Term& u) { return to_debruijn(t) == to_debruijn(u); }
bool alpha_eq(const Prop& a, const Prop& b) { return to_debruijn(a) == to_debruijn(b); }

// ---------------------------------------------------------------- well-formedness

namespace {

class WellFormed {
 public:
  explicit WellFormed(const Signature& sig) : sig_(sig) {}

  std::optional<Diagnostic> term(const Term& t) {
    if (t.is_var()) return std::nullopt;
    const BindingArity* ar = sig_.function(t.name());
    if (!ar) return fail(ErrorCode::UnknownSymbol, "function symbol '" + t.name() + "' is not declared");
    return args(t.name(), *ar, t.args());
  }

  std::optional<Diagnostic> prop(const Prop& a) {
    switch (a.kind()) {
      case Prop::Kind::Atom: {
        const BindingArity* ar = sig_.predicate(a.name());
        if (!ar) return fail(ErrorCode::UnknownSymbol, "predicate symbol '" + a.name() + "' is not declared");
        return args(a.name(), *ar, a.args());
      }
      case Prop::Kind::Bottom:
        return std::nullopt;
      case Prop::Kind::Forall:
      case Prop::Kind::Exists:
        return child(0, [&] { return prop(a.body()); });
      default:
        if (auto d = child(0, [&] { return prop(a.lhs()); })) return d;
        return child(1, [&] { return prop(a.rhs()); });
    }
  }

 private:
  template <class F>
  std::optional<Diagnostic> child(std::size_t i, F&& f) {
    path_.push_back(i);
    auto d = f();
    path_.pop_back();
    return d;
  }

  std::optional<Diagnostic> fail(ErrorCode code, std::string detail) {
    return Diagnostic{code, format_path(path_), std::move(detail)};
  }

  std::optional<Diagnostic> args(const std::string& sym, const BindingArity& ar, const std::vector<Arg>& as) {
    if (as.size() != ar.size())
      return fail(ErrorCode::ArityMismatch, "'" + sym + "' expects " + std::to_string(ar.size()) +
                                                " arguments, got " + std::to_string(as.size()));
    for (std::size_t i = 0; i < as.size(); ++i) {
      const Arg& a = as[i];
      if (a.binders.size() != ar[i]) {
        path_.push_back(i);
        auto d = fail(ErrorCode::BinderCountMismatch, "argument " + std::to_string(i + 1) + " of '" + sym +
                                                          "' binds " + std::to_string(a.binders.size()) +
                                                          " variables, expected " + std::to_string(ar[i]));
        path_.pop_back();
        return d;
      }
      std::set<std::string> seen;
      for (const auto& b : a.binders) {
        if (!seen.insert(b).second) {
          path_.push_back(i);
          auto d = fail(ErrorCode::DuplicateBinder, "variable '" + b + "' bound twice");
          path_.pop_back();
          return d;
        }
      }
      if (auto d = child(i, [&] { return term(a.body); })) return d;
    }
    return std::nullopt;
  }

  const Signature& sig_;
  std::vector<std::size_t> path_;
};

}  // namespace

CheckResult well_formed(const Signature& sig, const Term& t) {
  if (auto d = WellFormed(sig).term(t)) return CheckResult::failure(*d);
  return CheckResult::success();
}

CheckResult well_formed(const Signature& sig, const Prop& a) {
  if (auto d = WellFormed(sig).prop(a)) return CheckResult::failure(*d);
  return CheckResult::success();
}

std::size_t size(const Term& t) {
  std::size_t n = 1;
  if (!t.is_var())
    for (const Arg& a : t.args()) n += size(a.body);
  return n;
}

std::size_t size(const Prop& a) {
  switch (a.kind()) {
    case Prop::Kind::Atom: {
      std::size_t n = 1;
      for (const Arg& x : a.args()) n += size(x.body);
      return n;
    }
    case Prop::Kind::Bottom: return 1;
    case Prop::Kind::Forall:
    case Prop::Kind::Exists: return 1 + size(a.body());
    default: return 1 + size(a.lhs()) + size(a.rhs());
  }
}

}  // namespace bindlog
