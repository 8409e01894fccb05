#pragma once

// Finite binding models given by tables (.mdl files).
//
//   model <name>
//   fun f : <k1,...,kn>          signature lines, as in .sig files
//   pred P : <k1,...,kn>
//   levels N                     carriers M_0..M_N follow
//   carrier n t1 t2 ...          element tags of M_n, no whitespace inside a tag
//   proj i n = t
//   box n p a b1 ... bn = r      a in M_n, the b's and r in M_p
//   fun f p a1 ... am = r        for every p with p + k_i <= N
//   pred P a1 ... am = 0|1
//
// Every entry within the levels must be present.

#include <string>
#include <string_view>

#include "bindlog/models.hpp"

namespace bindlog {

/// Throws ParseError or ModelTableIncomplete.
BindingModel parse_model_table(std::string_view text);
BindingModel load_model_table(const std::string& path);

/// Tabulates a model whose carriers are enumerable up to the given level.
std::string dump_model_table(const BindingModel& m, unsigned levels);

}  // namespace bindlog
