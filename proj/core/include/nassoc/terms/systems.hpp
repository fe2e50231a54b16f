#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nassoc/terms/expr.hpp"

namespace nassoc {

// Named identity systems: "sas", "cas", "as", "com-as", "a12", "a13", "a23",
// "a123", "a132", "cas-dual", plus "free" (no identities), "lie",
// "jordan", "swap", "two-step", "anti-poisson-jordan".
IdentitySystem builtin_system(std::string_view name);
std::vector<std::string> builtin_system_names();
bool is_builtin_system(std::string_view name);
// DSL text of a built-in system.
std::string builtin_system_text(std::string_view name);

// A built-in name or a path to a DSL file.
IdentitySystem load_system(std::string_view name_or_path);

}  // namespace nassoc
