#pragma once

#include "bindlog/lterm_io.hpp"
#include "lexer.hpp"

namespace bindlog::detail {

Pattern parse_pattern(TokenStream& ts, const Signature& sig);
LTerm parse_lterm(TokenStream& ts, const Signature& sig);
LProp parse_lprop(TokenStream& ts, const Signature& sig);

}  // namespace bindlog::detail
