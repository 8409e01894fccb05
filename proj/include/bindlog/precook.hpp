#pragma once

// Pre-cooking: binding-logic syntax into the explicit-substitution language,
// its inverse on F-terms, and the translation of theories and proofs.

#include <string>
#include <vector>

#include "bindlog/lterm.hpp"
#include "bindlog/proofs.hpp"
#include "bindlog/rewrite.hpp"

namespace bindlog {

/// Innermost variable first; lookup takes the leftmost occurrence.
using VarContext = std::vector<std::string>;

/// A term of sort |l|. Bound variables become normal-form indices 1[up^j];
/// other variables become x[up^|l|]. Throws on ill-formed input.
LTerm precook(const Signature& sig, const Term& t, const VarContext& l = {});
LProp precook_prop(const Signature& sig, const Prop& a);

/// Inverse of precook on F-terms of sort 0; binder names are fresh.
/// Throws NotAnFTerm.
Term uncook(const Signature& sig, const LTerm& t);
Prop uncook(const Signature& sig, const LProp& a);

/// ((t/x)u)' and <t'/x>u' have the same sigma-normal form.
bool subst_commutes(const Signature& sig, const Term& t, const Term& u, const std::string& x);
/// ((t/x)A)' and (t'/x)A' have the same sigma-normal form up to renaming.
bool subst_commutes(const Signature& sig, const Term& t, const Prop& a, const std::string& x);

struct TheoryModulo {
  std::vector<LProp> axioms;
  RewriteSystem congruence;
};

TheoryModulo translate_theory(const Signature& sig, const std::vector<Prop>& axioms);

/// Same shape, pre-cooked sequents, explicit (x, A', t') parameters.
/// Throws InvalidSourceProof if the input does not check.
LProofTree translate_proof(const Signature& sig, const ProofTree& p);

/// Instances of an axiom scheme, one per map; metavariables are ordinary
/// variables replaced by grafting, so instances may be captured by binders.
std::vector<Prop> expand_scheme(const Prop& scheme, const std::vector<SubstMap>& instances);

}  // namespace bindlog
