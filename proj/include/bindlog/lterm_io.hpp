#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bindlog/lterm.hpp"

namespace bindlog {

/// A numeric subscript: a literal or a metavariable such as ?n.
struct Level {
  std::optional<std::string> meta;
  unsigned value = 0;

  bool operator==(const Level&) const = default;
};

/// An L' term with metavariables ?t over subterms and ?n over subscripts.
struct Pattern {
  enum class Kind { Meta, Index, Var, FApp, Closure, Id, Cons, Shift, Comp };

  Kind kind = Kind::Meta;
  std::string name;
  Level a;  // index position, or the subscript of id/up/f
  Level b;  // index sort
  std::vector<Pattern> kids;

  bool ground() const;
  LTerm to_lterm() const;
  static Pattern from(const LTerm& t);
  bool operator==(const Pattern&) const = default;
};

/// Text syntax: i_n, id_n, up_n, t[s], t . s (right-assoc, loosest), s o s'
/// (right-assoc), f_p(...) (bare f(...) is level 0); other identifiers are
/// free variables; a leading ? marks a metavariable.
LTerm parse_lterm(const Signature& sig, std::string_view text);
LProp parse_lprop(const Signature& sig, std::string_view text);
Pattern parse_pattern(const Signature& sig, std::string_view text);

std::string print(const LTerm& t);
std::string print(const LProp& a);
std::string print(const Pattern& p);

std::ostream& operator<<(std::ostream& os, const LTerm& t);
std::ostream& operator<<(std::ostream& os, const LProp& a);

}  // namespace bindlog
