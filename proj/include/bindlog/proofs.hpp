#pragma once

// Sequent-calculus derivations and their checkers, both for binding logic
// proper and modulo a congruence generated by a rewrite system.

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bindlog/lterm.hpp"
#include "bindlog/rewrite.hpp"
#include "bindlog/syntax.hpp"

namespace bindlog {

enum class RuleKind {
  Axiom, Cut, ContrL, ContrR, WeakL, WeakR, ImpL, ImpR,
  AndL, AndR, OrL, OrR, BotL, AllL, AllR, ExL, ExR,
};

/// Proof-file names: axiom, cut, contr-left, ..., forall-left, exists-right.
std::string_view to_string(RuleKind r);
std::optional<RuleKind> rule_from_string(std::string_view name);
std::size_t premise_count(RuleKind r);
bool principal_on_left(RuleKind r);
bool takes_witness(RuleKind r);      // forall-left, exists-right
bool takes_eigenvariable(RuleKind r);  // forall-right, exists-left

template <class P>
struct BasicSequent {
  std::vector<P> left;
  std::vector<P> right;

  bool operator==(const BasicSequent&) const = default;
};

/// The (x, A, t) annotation of quantifier rules.
template <class P, class T>
struct BasicRuleParams {
  std::optional<std::string> x;
  std::optional<P> A;
  std::optional<T> t;

  bool empty() const noexcept { return !x && !A && !t; }
  bool operator==(const BasicRuleParams&) const = default;
};

template <class P, class T>
struct BasicProofTree {
  BasicSequent<P> conclusion;
  RuleKind rule = RuleKind::Axiom;
  BasicRuleParams<P, T> params;
  /// Index of the principal formula on its side; searched left to right when absent.
  std::optional<std::size_t> principal;
  std::vector<BasicProofTree> premises;

  std::size_t height() const {
    std::size_t h = 0;
    for (const auto& p : premises) h = std::max(h, p.height());
    return h + 1;
  }
  std::size_t node_count() const {
    std::size_t n = 1;
    for (const auto& p : premises) n += p.node_count();
    return n;
  }
  bool operator==(const BasicProofTree&) const = default;
};

using Sequent = BasicSequent<Prop>;
using RuleParams = BasicRuleParams<Prop, Term>;
using ProofTree = BasicProofTree<Prop, Term>;

using LSequent = BasicSequent<LProp>;
using LRuleParams = BasicRuleParams<LProp, LTerm>;
using LProofTree = BasicProofTree<LProp, LTerm>;

/// Equivalence decided by normalizing both sides and comparing up to renaming
/// of bound variables. No rules means syntactic identity.
class Congruence {
 public:
  Congruence() = default;
  explicit Congruence(RewriteSystem rs, std::size_t budget = 1'000'000)
      : rules_(std::make_shared<const RewriteSystem>(std::move(rs))), budget_(budget) {}

  const RewriteSystem* rules() const noexcept { return rules_.get(); }
  std::size_t budget() const noexcept { return budget_; }
  bool syntactic() const noexcept { return !rules_ || rules_->empty(); }

  /// Throws CongruenceBudgetExceeded.
  LProp normal_form(const LProp& a) const;
  LTerm normal_form(const LTerm& t) const;
  std::string key(const LProp& a) const;

 private:
  std::shared_ptr<const RewriteSystem> rules_;
  std::size_t budget_ = 1'000'000;
};

/// Throws CongruenceBudgetExceeded.
bool congruence_closure_check(const Congruence& cong, const LProp& a, const LProp& b);

/// Formula matching is up to alpha-equivalence; quantifier parameters are
/// optional and inferred when absent.
CheckResult check_binding_proof(const Signature& sig, const ProofTree& p);
/// The same tree with every principal index and quantifier parameter made
/// explicit. Throws Error carrying the first diagnostic.
ProofTree elaborate_binding_proof(const Signature& sig, const ProofTree& p);

/// Quantifier rules require their (x, A[, t]) parameters; witnesses must have sort 0.
CheckResult check_modulo_proof(const Signature& sig, const Congruence& cong, const LProofTree& p);
/// Binding-logic syntax modulo the syntactic congruence (alpha-equivalence).
CheckResult check_modulo_proof(const Signature& sig, const ProofTree& p);

std::string print(const Sequent& s);
std::string print(const LSequent& s);

}  // namespace bindlog
