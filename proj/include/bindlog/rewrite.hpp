#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bindlog/lterm.hpp"
#include "bindlog/lterm_io.hpp"

namespace bindlog {

/// A rewrite rule applied at the root of a term; returns the reduct if it fires.
struct Rule {
  std::string name;
  std::string display;
  std::function<std::optional<LTerm>(const LTerm&)> apply;
};

class RewriteSystem {
 public:
  explicit RewriteSystem(Signature sig = {}) : sig_(std::move(sig)) {}

  void add(Rule r) { rules_.push_back(std::move(r)); }
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  const Signature& signature() const noexcept { return sig_; }
  bool empty() const noexcept { return rules_.empty(); }
  const Rule* find(std::string_view name) const;

 private:
  Signature sig_;
  std::vector<Rule> rules_;
};

enum class Strategy { Innermost, Outermost };

struct NormalizeOptions {
  std::size_t budget = 1'000'000;
  Strategy strategy = Strategy::Innermost;
  /// Verify after every step that the rewritten subterm kept its sort.
  bool check_sorts = false;
};

struct Normalized {
  LTerm term;
  std::size_t steps = 0;
};

/// Throws StepBudgetExceeded past the budget, SortMismatch if a checked step changes a sort.
Normalized normalize_counted(const RewriteSystem& rs, const LTerm& t, const NormalizeOptions& opts = {});
LTerm normalize(const RewriteSystem& rs, const LTerm& t, const NormalizeOptions& opts = {});
LProp normalize(const RewriteSystem& rs, const LProp& a, const NormalizeOptions& opts = {});

struct Redex {
  std::vector<std::size_t> path;
  std::size_t rule = 0;

  bool operator==(const Redex&) const = default;
};

/// All redexes in pre-order (leftmost-outermost first).
std::vector<Redex> redexes(const RewriteSystem& rs, const LTerm& t);
LTerm rewrite_at(const RewriteSystem& rs, const LTerm& t, const Redex& r);
const LTerm& subterm(const LTerm& t, const std::vector<std::size_t>& path);
LTerm replace_at(const LTerm& t, const std::vector<std::size_t>& path, std::size_t depth, const LTerm& with);
bool is_normal(const RewriteSystem& rs, const LTerm& t);
bool is_normal(const RewriteSystem& rs, const LProp& a);

/// Metavariable bindings produced by pattern matching.
struct Bindings {
  std::map<std::string, LTerm> terms;
  std::map<std::string, unsigned> levels;
};

bool match(const Pattern& p, const LTerm& t, Bindings& b);
LTerm instantiate(const Pattern& p, const Bindings& b);

/// Builds a rule from patterns. Throws InvalidRule if the left side is a lone
/// metavariable, the right side uses unbound metavariables, or the two sides
/// have provably different sorts.
Rule pattern_rule(const Signature& sig, std::string name, Pattern lhs, Pattern rhs);

/// Rule files: `name: lhs -> rhs`, one rule per line, `#` comments.
RewriteSystem parse_rules(const Signature& sig, std::string_view text);
RewriteSystem load_rules(const Signature& sig, const std::string& path);

}  // namespace bindlog
