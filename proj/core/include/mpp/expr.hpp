#pragma once

#include <string>
#include <vector>

#include "mpp/params.hpp"

namespace mpp {

/// Parses the parameter-expression surface syntax:
///   param := term ("+" term)* ;
///   term  := [INT "*"] "[" char "x" "S(" INT ")" "]" ;
///   char  := "1" | "sgn" | "unr(" RAT "," RAT ")" | "rho(" NAME ";" ATTRS ")" ;
/// ATTRS is a key=value list over dim, sd, eps, wm1 with sd in
/// {S, O, dual:NAME}. Syntax errors carry the offending source span;
/// semantic validation happens in normalize().
std::vector<BlockSpec> parse_param_expr(const std::string& text);

/// Canonical rendering; parse(print(phi)) == phi and printing is idempotent.
std::string print_parameter(const Parameter& phi);
std::string print_block(const SimpleBlock& b);
std::string print_label(const SupercuspidalLabel& rho);

/// "+,-" style sign vectors in canonical I+ order; empty group prints "".
std::string print_signs(const SignVector& v);
SignVector parse_signs(const std::string& text, int expected);

}  // namespace mpp
