#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "bindlog/syntax.hpp"

namespace bindlog {

/// Lines `fun f : <k1,...,kn>` and `pred P : <k1,...,kn>`; `#` starts a comment.
Signature parse_signature(std::string_view text);
Signature load_signature(const std::string& path);

/// A bare identifier declared as a constant parses as an application; any other
/// bare identifier is a variable.
Term parse_term(const Signature& sig, std::string_view text);
Prop parse_prop(const Signature& sig, std::string_view text);

std::string print(const Term& t);
std::string print(const Prop& a);
std::string print(const Signature& sig);

std::ostream& operator<<(std::ostream& os, const Term& t);
std::ostream& operator<<(std::ostream& os, const Prop& a);

/// Whole-file helper shared by the loaders; throws ParseError naming the path.
std::string read_file(const std::string& path);

}  // namespace bindlog
