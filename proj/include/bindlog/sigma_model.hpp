#pragma once

// Models of the explicit-substitution language, and the two adapters between
// them and binding models.

#include <memory>
#include <variant>

#include "bindlog/lterm.hpp"
#include "bindlog/models.hpp"

namespace bindlog {

/// Denotation of a substitution of sort <n,p>.
struct SubstValue {
  Elements items;
};

using LValue = std::variant<Element, SubstValue>;

/// Term sorts n denote in N_n, substitution sorts <n,p> in N_{n,p}.
class SigmaModel {
 public:
  virtual ~SigmaModel() = default;

  virtual std::string name() const = 0;
  virtual const Signature& signature() const = 0;

  virtual Element index(unsigned i, unsigned n) const = 0;
  virtual Element fapp(const std::string& f, unsigned p, std::span<const Element> args) const = 0;
  virtual bool pred(const std::string& P, std::span<const Element> args) const = 0;
  /// t : p under s : <n,p>.
  virtual Element closure(const Element& t, const SubstValue& s, unsigned n, unsigned p) const = 0;
  virtual SubstValue id(unsigned n) const = 0;
  /// t : n in front of s : <n,p>.
  virtual SubstValue cons(const Element& t, const SubstValue& s, unsigned n, unsigned p) const = 0;
  virtual SubstValue shift(unsigned n) const = 0;
  /// s1 : <p,n> after s2 : <q,p>.
  virtual SubstValue comp(const SubstValue& s1, const SubstValue& s2, unsigned n, unsigned p, unsigned q) const = 0;

  virtual bool equal(const Element& a, const Element& b, unsigned n) const = 0;
  virtual bool equal(const SubstValue& a, const SubstValue& b, unsigned n, unsigned p) const = 0;
  virtual bool exact_equality(unsigned n) const = 0;
  virtual std::optional<Elements> carrier(unsigned n) const = 0;
  virtual Element sample(unsigned n, std::mt19937_64& rng) const = 0;
  virtual Elements samples0() const = 0;
  virtual std::string show(const Element& a, unsigned n) const = 0;
};

/// N_n = M_n, N_{n,p} = M_n^p; substitutions are tuples and closure is box.
std::shared_ptr<const SigmaModel> sigma_model_from_binding(const BindingModel& m);
/// a box_{p,n} <b1..bn> = a[b1 . ... . bn . up^p]; function symbols keep their denotation.
BindingModel binding_model_from_sigma(std::shared_ptr<const SigmaModel> n);

/// Throws UnboundVariable, or the sort errors of sort_of on ill-sorted input.
LValue eval_lterm(const SigmaModel& n, const LTerm& t, const Assignment& phi);
Truth eval_lprop(const SigmaModel& n, const LProp& a, const Assignment& phi, const EvalOptions& opts = {});
bool values_equal(const SigmaModel& n, const LValue& a, const LValue& b, const Sort& s);

/// Both sides of sampled root instances of every sigma rule denote equal values
/// under random assignments of x, y, z. Instances use sorts up to max_level
/// plus the largest binding arity.
SweepReport check_sigma_rules(const SigmaModel& n, std::size_t per_rule, std::uint64_t seed, unsigned max_level = 4);

}  // namespace bindlog
