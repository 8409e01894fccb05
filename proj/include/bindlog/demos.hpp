#pragma once

// The two independence demonstrations, recomputed from a model each time.

#include <cstdint>
#include <string>
#include <vector>

#include "bindlog/models.hpp"

namespace bindlog {

struct DemoReport {
  bool ok = false;
  std::vector<std::string> lines;

  std::string str() const;
};

/// The equality axioms for f : <0>, Lambda : <1>, = : <0,0>.
std::vector<Prop> ext_equality_axioms(const Signature& sig);
/// (forall x. f(x) = x) => Lambda(x. f(x)) = Lambda(x. x)
Prop ext_scheme_instance(const Signature& sig);

/// Succeeds when every equality axiom holds and the scheme instance fails.
DemoReport extensionality_demo(const BindingModel& m);

/// delta(i(x), x. u, y. v) = u and delta(j(y), x. u, y. v) = v
std::vector<Prop> delta_schemes(const Signature& sig);

/// Succeeds when delta(a, x. a, y. a) = a fails and both schemes hold on
/// `samples` random instances each.
DemoReport disjoint_sum_demo(const BindingModel& m, std::size_t samples, std::uint64_t seed);

}  // namespace bindlog
