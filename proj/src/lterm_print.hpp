#pragma once

#include <string>
#include <vector>

#include "bindlog/lterm.hpp"

namespace bindlog::detail {

/// With a scope, quantified variables print as #k (innermost is #1).
void print_lterm(const LTerm& t, std::string& out, const std::vector<std::string>* scope = nullptr);
void print_lprop(const LProp& a, std::string& out, std::vector<std::string>* scope = nullptr);

}  // namespace bindlog::detail
