#pragma once

// Binding-logic syntax: signatures with binding arities, named terms and
// propositions, grafting, capture-avoiding substitution and alpha-equivalence.

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bindlog/error.hpp"

namespace bindlog {

/// Number of variables bound in each argument slot, e.g. <0,1,1> for delta.
using BindingArity = std::vector<unsigned>;

std::string to_string(const BindingArity& arity);

class Signature {
 public:
  using SymbolMap = std::map<std::string, BindingArity, std::less<>>;

  /// Throws Error(InvalidSignature) on an empty name or a name already used
  /// as a function or predicate.
  void add_function(std::string name, BindingArity arity);
  void add_predicate(std::string name, BindingArity arity);

  const BindingArity* function(std::string_view name) const;
  const BindingArity* predicate(std::string_view name) const;

  const SymbolMap& functions() const noexcept { return functions_; }
  const SymbolMap& predicates() const noexcept { return predicates_; }

  bool operator==(const Signature&) const = default;

 private:
  SymbolMap functions_;
  SymbolMap predicates_;
};

class Term;
struct Arg;

class Term {
 public:
  enum class Kind { Var, App };

  static Term var(std::string name);
  static Term app(std::string symbol, std::vector<Arg> args = {});

  Kind kind() const noexcept;
  bool is_var() const noexcept { return kind() == Kind::Var; }
  /// Variable name, or the head symbol of an application.
  const std::string& name() const noexcept;
  const std::vector<Arg>& args() const noexcept;

  /// Structural equality on the named representation; see alpha_eq.
  friend bool operator==(const Term& a, const Term& b);

  struct Node;

 private:
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// One argument slot: the variables it binds (left to right) and its body.
struct Arg {
  std::vector<std::string> binders;
  Term body;

  bool operator==(const Arg&) const = default;
};

class Prop {
 public:
  enum class Kind { Atom, Imp, And, Or, Bottom, Forall, Exists };

  static Prop atom(std::string predicate, std::vector<Arg> args = {});
  static Prop imp(Prop a, Prop b);
  static Prop conj(Prop a, Prop b);
  static Prop disj(Prop a, Prop b);
  static Prop bottom();
  static Prop forall(std::string var, Prop body);
  static Prop exists(std::string var, Prop body);
  /// Shorthand for the atom t = u.
  static Prop eq(Term t, Term u);

  Kind kind() const noexcept;
  bool is_quantifier() const noexcept {
    return kind() == Kind::Forall || kind() == Kind::Exists;
  }
  bool is_binary() const noexcept {
    return kind() == Kind::Imp || kind() == Kind::And || kind() == Kind::Or;
  }
  /// Predicate of an atom, or the variable bound by a quantifier.
  const std::string& name() const noexcept;
  const std::vector<Arg>& args() const noexcept;
  const Prop& lhs() const;
  const Prop& rhs() const;
  const Prop& body() const;

  friend bool operator==(const Prop& a, const Prop& b);

  struct Node;

 private:
  explicit Prop(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// A finite map from variables to terms (theta = t1/x1, ..., tn/xn).
using SubstMap = std::map<std::string, Term, std::less<>>;

std::set<std::string> free_vars(const Term& t);
std::set<std::string> free_vars(const Prop& a);
/// Every name occurring in t, free or in binding position.
std::set<std::string> all_vars(const Term& t);
std::set<std::string> all_vars(const Prop& a);

/// Textual replacement; captures are allowed, the map is restricted under binders.
Term graft(const SubstMap& theta, const Term& t);
Prop graft(const SubstMap& theta, const Prop& a);

/// Produces a candidate fresh name from a base name and a counter; the
/// caller keeps drawing until the candidate is unused.
using FreshNameScheme = std::function<std::string(std::string_view base, unsigned counter)>;

/// The default scheme: base name up to its first quote, then 'counter (x -> x'1).
std::string default_fresh_name(std::string_view base, unsigned counter);

/// Capture-avoiding substitution. Every binder traversed is renamed to a name
/// occurring neither in the input nor in theta.
Term substitute(const SubstMap& theta, const Term& t,
                const FreshNameScheme& scheme = default_fresh_name);
Prop substitute(const SubstMap& theta, const Prop& a,
                const FreshNameScheme& scheme = default_fresh_name);

/// Canonical nameless form: bound occurrences become #k counted outward over
/// symbol binders and quantifiers; free variables keep their names.
struct Nameless {
  std::string repr;

  const std::string& str() const noexcept { return repr; }
  auto operator<=>(const Nameless&) const = default;
};

Nameless to_debruijn(const Term& t);
Nameless to_debruijn(const Prop& a);

bool alpha_eq(const Term& t, const Term& u);
bool alpha_eq(const Prop& a, const Prop& b);

CheckResult well_formed(const Signature& sig, const Term& t);
CheckResult well_formed(const Signature& sig, const Prop& a);

/// Number of nodes, counting variables, applications and connectives.
std::size_t size(const Term& t);
std::size_t size(const Prop& a);

}  // namespace bindlog
