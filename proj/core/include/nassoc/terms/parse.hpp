#pragma once

#include <string>
#include <string_view>

#include "nassoc/terms/expr.hpp"

namespace nassoc {

// Identity DSL:
//   identity := expr "=" expr
//   expr     := ["-"] term (("+" | "-") term)*
//   term     := [rational "*"] word | "0"
//   word     := var | "(" word word ")" | "[" word "," word "]"
//             | "(" word "o" word ")" | "(" word "," word "," word ")"
//   var      := "x" integer
Expr parse_expr(std::string_view text);
// "lhs = rhs" folded to lhs - rhs; a bare expression means "expr = 0".
Identity parse_identity(std::string_view text);
// One identity per line, '#' starts a comment.
IdentitySystem parse_system(std::string_view text, std::string name);

}  // namespace nassoc
