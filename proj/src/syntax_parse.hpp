#pragma once

#include "bindlog/syntax.hpp"
#include "lexer.hpp"

namespace bindlog::detail {

Term parse_term(TokenStream& ts, const Signature& sig);
Prop parse_prop(TokenStream& ts, const Signature& sig);

}  // namespace bindlog::detail
