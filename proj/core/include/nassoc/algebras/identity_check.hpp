#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nassoc/algebras/algebra.hpp"
#include "nassoc/terms/expr.hpp"

namespace nassoc {

enum class CheckMode {
    multilinear,  // all basis tuples of the polarized identities
    symbolic,     // generic elements with fresh coordinate indeterminates
};

struct Counterexample {
    std::string identity;                // "... = 0" form that failed
    std::vector<std::string> arguments;  // basis labels, or generic names
    std::size_t coordinate = 0;          // 0-based index of a nonzero coordinate
    PolyQ value;                         // that coordinate

    std::string to_string() const;
};

struct CheckResult {
    bool holds = true;
    std::optional<Counterexample> counterexample;

    explicit operator bool() const { return holds; }
};

// Value of a linear combination of words with x_i := args[i-1].
Element evaluate(const AlgebraStructure& a, const Expr& e, std::span<const Element> args);

// Non-multilinear identities are polarized first in multilinear mode.
// Symbolic mode raises ParameterClash when an algebra parameter is named like
// a generated coordinate ("_x<r>_<i>").
CheckResult check_identity(const AlgebraStructure& a, const Identity& id,
                           CheckMode mode = CheckMode::multilinear);
CheckResult check_identity(const AlgebraStructure& a, const IdentitySystem& sys,
                           CheckMode mode = CheckMode::multilinear);

}  // namespace nassoc
