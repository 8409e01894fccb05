#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bindlog/rewrite.hpp"

namespace bindlog {

struct GenOptions {
  std::size_t max_size = 40;
  unsigned max_level = 4;
  /// Free variable names drawn for sort-0 leaves.
  std::vector<std::string> var_names{"x", "y", "z"};
};

/// Random sort-correct L' terms, biased toward redexes.
class LTermGenerator {
 public:
  LTermGenerator(Signature sig, std::uint64_t seed, GenOptions opts = {});

  LTerm term(unsigned n, std::size_t budget);
  LTerm subst(unsigned n, unsigned p, std::size_t budget);
  /// A term of random sort with size at most opts.max_size.
  LTerm any();
  /// An instance of the left side of the named sigma rule (Index, VarCons, ...,
  /// SCons, App[f]); the root is always a redex of that rule.
  LTerm redex(const std::string& rule);

  std::mt19937_64& rng() noexcept { return rng_; }
  const Signature& signature() const noexcept { return sig_; }

 private:
  unsigned pick(unsigned lo, unsigned hi);
  bool coin(double p);
  LTerm small_term(unsigned n);
  LTerm small_subst(unsigned n, unsigned p);

  Signature sig_;
  std::mt19937_64 rng_;
  GenOptions opts_;
  std::vector<std::string> fnames_;
};

struct ProbeOptions {
  std::size_t samples = 10'000;
  std::size_t max_size = 40;
  std::uint64_t seed = 1;
  std::size_t budget = 1'000'000;
};

struct ConfluenceReport {
  std::size_t samples = 0;
  std::size_t peaks = 0;
  std::size_t divergent = 0;
  std::vector<std::string> witnesses;

  bool ok() const noexcept { return divergent == 0; }
  std::string str() const;
};

/// Every sampled term with two or more redexes has each one-step reduct
/// normalized; all normal forms must coincide.
ConfluenceReport local_confluence_probe(const RewriteSystem& rs, const ProbeOptions& opts = {});

struct TerminationReport {
  std::size_t samples = 0;
  std::size_t max_steps_innermost = 0;
  std::size_t max_steps_outermost = 0;
  std::size_t budget_failures = 0;
  std::size_t strategy_disagreements = 0;
  std::size_t sort_violations = 0;
  std::vector<std::string> witnesses;

  bool ok() const noexcept {
    return budget_failures == 0 && strategy_disagreements == 0 && sort_violations == 0;
  }
  std::string str() const;
};

/// Normalizes every sample innermost and outermost with per-step sort checks.
TerminationReport termination_probe(const RewriteSystem& rs, const ProbeOptions& opts = {});

struct RuleSortReport {
  std::size_t instances = 0;
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Fires every sigma rule on sampled instances and checks that the sort of the
/// reduct equals the sort of the redex.
RuleSortReport sigma_rule_sort_check(const Signature& sig, std::size_t per_rule, std::uint64_t seed);

struct BindingGenOptions {
  std::size_t max_size = 24;
  /// Names for both binders and free variables, so shadowing and capture occur.
  std::vector<std::string> names{"x", "y", "z", "w"};
};

/// Random well-formed binding-logic terms and propositions.
class BindingTermGenerator {
 public:
  BindingTermGenerator(Signature sig, std::uint64_t seed, BindingGenOptions opts = {});

  Term term();
  Term term(std::size_t budget);
  Prop prop();
  Prop prop(std::size_t budget);

  std::mt19937_64& rng() noexcept { return rng_; }

 private:
  std::vector<Arg> args(const BindingArity& ar, std::size_t budget);
  std::string name();

  Signature sig_;
  std::mt19937_64 rng_;
  BindingGenOptions opts_;
  std::vector<std::pair<std::string, BindingArity>> fns_, preds_;
};

}  // namespace bindlog
