#pragma once

// The sorted explicit-substitution language: de Bruijn indices, closures,
// substitutions and the level-indexed symbol families f_p.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bindlog/syntax.hpp"

namespace bindlog {

struct Sort {
  bool subst = false;
  unsigned n = 0;
  unsigned p = 0;

  static Sort term(unsigned n) { return Sort{false, n, 0}; }
  static Sort substitution(unsigned n, unsigned p) { return Sort{true, n, p}; }

  bool is_term() const noexcept { return !subst; }
  std::string str() const;
  auto operator<=>(const Sort&) const = default;
};

class LTerm {
 public:
  enum class Kind { Index, Var, FApp, Closure, Id, Cons, Shift, Comp };

  static LTerm index(unsigned i, unsigned n);
  static LTerm var(std::string name);
  static LTerm fapp(std::string symbol, unsigned level, std::vector<LTerm> args = {});
  static LTerm closure(LTerm t, LTerm s);
  static LTerm id(unsigned n);
  static LTerm cons(LTerm t, LTerm s);
  static LTerm shift(unsigned n);
  static LTerm comp(LTerm s1, LTerm s2);

  Kind kind() const noexcept;
  bool is(Kind k) const noexcept { return kind() == k; }
  bool is_substitution() const noexcept {
    auto k = kind();
    return k == Kind::Id || k == Kind::Cons || k == Kind::Shift || k == Kind::Comp;
  }
  /// Position i of an index.
  unsigned index_pos() const noexcept;
  /// Subscript n of i_n, id_n, up_n; the level p of f_p.
  unsigned level() const noexcept;
  /// Variable name or function symbol.
  const std::string& name() const noexcept;
  /// Children in order: f_p arguments; (t, s) for closure and cons; (s1, s2) for composition.
  const std::vector<LTerm>& children() const noexcept;
  const LTerm& child(std::size_t i) const { return children().at(i); }
  std::size_t size() const noexcept;
  std::size_t hash() const noexcept;

  LTerm with_children(std::vector<LTerm> kids) const;

  friend bool operator==(const LTerm& a, const LTerm& b);

  struct Node;

 private:
  explicit LTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Strict total order, used for keys and deterministic reports.
bool operator<(const LTerm& a, const LTerm& b);

class LProp {
 public:
  using Kind = Prop::Kind;

  static LProp atom(std::string predicate, std::vector<LTerm> args = {});
  static LProp imp(LProp a, LProp b);
  static LProp conj(LProp a, LProp b);
  static LProp disj(LProp a, LProp b);
  static LProp bottom();
  static LProp forall(std::string var, LProp body);
  static LProp exists(std::string var, LProp body);
  static LProp eq(LTerm t, LTerm u);

  Kind kind() const noexcept;
  bool is_quantifier() const noexcept { return kind() == Kind::Forall || kind() == Kind::Exists; }
  bool is_binary() const noexcept { return kind() == Kind::Imp || kind() == Kind::And || kind() == Kind::Or; }
  const std::string& name() const noexcept;
  const std::vector<LTerm>& args() const noexcept;
  const LProp& lhs() const;
  const LProp& rhs() const;
  const LProp& body() const;

  friend bool operator==(const LProp& a, const LProp& b);

  struct Node;

 private:
  explicit LProp(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Sort of a term; throws SortMismatch, IndexOutOfRange, UnknownSymbol or
/// ArityMismatch with the offending subterm path.
Sort sort_of(const Signature& sig, const LTerm& t);
std::optional<Sort> try_sort_of(const Signature& sig, const LTerm& t);
/// Atoms must receive arguments of sorts k1..kn.
CheckResult sort_check(const Signature& sig, const LProp& a);

/// up_b o (up_{b+1} o ... up_{b+c-1}), of sort <b+c, b>; c >= 1.
LTerm shifts(unsigned b, unsigned c);
/// x[up^n] in the long form, or x itself when n = 0.
LTerm shifted_var(const std::string& x, unsigned n);
/// 1[up^j] at sort m: the normal form of index j+1 of sort m.
LTerm index_nf(unsigned j, unsigned m);

std::set<std::string> free_vars(const LTerm& t);
std::set<std::string> free_vars(const LProp& a);

using LSubstMap = std::map<std::string, LTerm, std::less<>>;

/// Replaces free variables; L' terms bind no named variables, so no renaming.
LTerm graft(const LSubstMap& theta, const LTerm& t);
/// Capture-avoiding with respect to quantifiers.
LProp substitute(const LSubstMap& theta, const LProp& a,
                 const FreshNameScheme& scheme = default_fresh_name);

/// Canonical text of a proposition up to renaming of quantified variables.
std::string canonical(const LProp& a);
bool alpha_eq(const LProp& a, const LProp& b);

std::size_t size(const LProp& a);

}  // namespace bindlog
