#pragma once

// Intensional functional structures, binding models and denotations.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "bindlog/syntax.hpp"

namespace bindlog {

/// A total map N^arity -> N, the carrier of computable intensional functions.
struct NatFunction {
  unsigned arity = 0;
  std::function<std::uint64_t(std::span<const std::uint64_t>)> fn;

  std::uint64_t operator()(std::span<const std::uint64_t> xs) const { return fn(xs); }
};

/// An element of some M_n. Enumerated carriers use code alone; computable
/// ones carry a function (null at level 0, where code is the value).
struct Element {
  std::int64_t code = 0;
  std::shared_ptr<const NatFunction> fn;
};

using Elements = std::vector<Element>;

class Ifs {
 public:
  virtual ~Ifs() = default;

  virtual std::string name() const = 0;
  /// The projection i_n, 1 <= i <= n.
  virtual Element proj(unsigned i, unsigned n) const = 0;
  /// a box_{p,n} <b1..bn>: a in M_n, every b in M_p, result in M_p.
  virtual Element box(const Element& a, unsigned n, unsigned p, std::span<const Element> b) const = 0;
  virtual bool equal(const Element& a, const Element& b, unsigned n) const = 0;
  /// False where equality is decided on probes only.
  virtual bool exact_equality(unsigned n) const = 0;
  /// The whole of M_n when it is finite and enumerable here.
  virtual std::optional<Elements> carrier(unsigned n) const = 0;
  virtual Element sample(unsigned n, std::mt19937_64& rng) const;
  virtual std::string show(const Element& a, unsigned n) const = 0;
  /// The highest level with a defined structure; none when every level is.
  virtual std::optional<unsigned> max_level() const { return std::nullopt; }

  Elements projections(unsigned n) const;
};

/// f_p: the p-th member of a symbol's family, on arguments a_i in M_{p+k_i}.
using FunctionFamily = std::function<Element(unsigned p, std::span<const Element> args)>;
using PredicateFn = std::function<bool(std::span<const Element> args)>;

struct BindingModel {
  std::string name;
  std::shared_ptr<const Ifs> ifs;
  Signature sig;
  std::map<std::string, FunctionFamily, std::less<>> fhat;
  std::map<std::string, PredicateFn, std::less<>> phat;
  /// Quantifier range over M_0 when M_0 is infinite; ignored when the carrier is finite.
  Elements samples0;
};

using Assignment = std::map<std::string, Element, std::less<>>;

/// A truth value; exact is false when it rests on sampled quantifiers or
/// probe-based equality.
struct Truth {
  bool value = false;
  bool exact = true;

  std::string str() const;
};

struct EvalOptions {
  /// Refuse to evaluate quantifiers over a carrier that cannot be enumerated.
  bool require_exact = false;
};

/// Denotation in context x1..xp (leftmost occurrence wins), an element of M_p.
/// Throws UnboundVariable or UninterpretedSymbol.
Element eval_term(const BindingModel& m, const Term& t, const std::vector<std::string>& ctx, const Assignment& phi);
/// Throws UnboundVariable, UninterpretedSymbol or InfiniteDomainExhaustionRequested.
Truth eval_prop(const BindingModel& m, const Prop& a, const Assignment& phi, const EvalOptions& opts = {});

/// The quantifier domain used for a proposition: all of M_0 if finite, else
/// the model samples plus the values of the proposition's closed subterms.
Elements quantifier_domain(const BindingModel& m, const Prop& a, bool* exact = nullptr);

enum class SweepMode { Exhaustive, Sampled };

struct SweepOptions {
  SweepMode mode = SweepMode::Exhaustive;
  /// Instances per (n, p, q) combination in sampled mode.
  std::size_t samples = 200;
  std::uint64_t seed = 1;
};

struct SweepReport {
  std::size_t instances = 0;
  std::size_t violation_count = 0;
  std::vector<std::string> violations;  // the first few, with witnesses
  bool exact = true;

  bool ok() const noexcept { return violation_count == 0; }
  std::string str() const;
  void merge(const SweepReport& other);
};

/// Projection, identity and associativity laws for n <= n_max, p <= p_max, q <= q_max.
SweepReport check_ifs(const Ifs& ifs, unsigned n_max, unsigned p_max, unsigned q_max, const SweepOptions& opts = {});
/// The coherence equation of f for p, q <= bounds; for a symbol of arity <1>
/// also f_p(a) = D_p(f_{p+1}(I_{p+1}(a))) for 1 <= p <= p_max.
SweepReport check_coherence(const BindingModel& m, const std::string& f, unsigned p_max, unsigned q_max,
                            const SweepOptions& opts = {});
/// f_q(b box S) = b for b in M_q, S = <2_{q+1}, ..., (q+1)_{q+1}>; f of arity <1>.
SweepReport check_absorption(const BindingModel& m, const std::string& f, unsigned q_max,
                             const SweepOptions& opts = {});

/// <1_{q+k}, ..., k_{q+k}, b1 box S, ..., bp box S> with S = <(1+k)_{q+k}, ..., (q+k)_{q+k}>.
Elements lift(const Ifs& ifs, unsigned q, unsigned k, std::span<const Element> b);

// Built-in models.

/// M_n = {k_n, l_n, 1_n..n_n, bar 1_n..bar n_n}; symbols f : <0>, Lambda : <1>, = : <0,0>.
/// Carriers are enumerated for n <= n_max.
BindingModel ext_counter_model(unsigned n_max = 8);
/// The involution - of the counter-model: swaps i_n and bar i_n, fixes k_n, l_n.
Element ext_negate(const Element& a);

/// Doubling: i = 2x, j = 2x + 1, so i(0) and j(0) fall into delta's 0-or-1
/// case and the delta schemes fail at 0. Offset: i = 2x + 2, j = 2x + 3.
enum class DeltaCoding { Offset, Doubling };

/// M_0 = N, M_n = computable maps N^n -> N; symbols a, i, j, delta, =.
/// a = 1 and delta(d, f, g) = 0 for d in {0, 1}. Elements of M_n are compared
/// on probe tuples.
BindingModel delta_model(std::size_t probe_budget = 300, DeltaCoding coding = DeltaCoding::Offset);

/// M_n = all functions A^n -> A for A = {0..size-1}, as tables.
std::shared_ptr<const Ifs> full_function_ifs(unsigned size);
/// full_function_ifs with f : <0> the successor mod size, Lambda : <1>
/// evaluation of the bound variable at 0, and = equality.
BindingModel full_function_model(unsigned size);

}  // namespace bindlog
