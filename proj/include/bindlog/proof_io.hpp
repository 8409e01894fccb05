#pragma once

#include <string>
#include <string_view>

#include "bindlog/proofs.hpp"

namespace bindlog {

/// One node per line, children indented two more spaces than their parent:
///   rule <name> [x=<var>; A=<prop>; t=<term>] @<k> <left> |- <right>
/// The bracketed parameters and the @k principal index are optional.
ProofTree parse_proof(const Signature& sig, std::string_view text);
LProofTree parse_lproof(const Signature& sig, std::string_view text);
ProofTree load_proof(const Signature& sig, const std::string& path);
LProofTree load_lproof(const Signature& sig, const std::string& path);

std::string print(const ProofTree& p);
std::string print(const LProofTree& p);

}  // namespace bindlog
