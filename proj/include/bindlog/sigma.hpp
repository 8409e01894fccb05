#pragma once

#include "bindlog/rewrite.hpp"

namespace bindlog {

/// The explicit-substitution system: eleven fixed rules followed by one
/// App[f] schema per function symbol. Sort subscripts are read off the
/// matched term.
RewriteSystem sigma_system(const Signature& sig);

/// The q of a substitution of sort <q,p>, computed structurally.
unsigned subst_target(const LTerm& s);

/// Sort-correct, sigma-normal, all variables of sort 0.
bool is_F_term(const Signature& sig, const LTerm& t);
bool is_F_prop(const Signature& sig, const LProp& a);

}  // namespace bindlog
