#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nassoc/exact/rational.hpp"
#include "nassoc/terms/expr.hpp"

namespace nassoc {

enum class Variety { SAs, CAs };

std::string to_string(Variety v);
Variety parse_variety(std::string_view name);
IdentitySystem variety_system(Variety v);

// A free-algebra basis element: a plain word, or (circ == true) the
// right-normed symmetrised word x_{i1} o (x_{i2} o ( ... o x_{in})) on its leaves.
struct BasisLabel {
    Word word;
    bool circ = false;

    Expr expand() const;
    std::string to_string() const;
    friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
    friend auto operator<=>(const BasisLabel& a, const BasisLabel& b) {
        if (auto c = a.word <=> b.word; c != 0) return c;
        return a.circ <=> b.circ;
    }
};

struct NormalForm {
    std::vector<std::pair<BasisLabel, Rational>> terms;  // sorted by label

    Expr expand() const;
    bool is_zero() const { return terms.empty(); }
    // DSL text; parse_expr of it equals expand().
    std::string to_string() const;
    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// Each homogeneous component is reduced by lifting its words to multilinear
// words (generators sorted, ties by position), expressing them in the basis
// patterns modulo the consequence space, then specialising back.
NormalForm normal_form(Variety v, const Expr& e);
NormalForm sas_normal_form(const Expr& e);
NormalForm cas_normal_form(const Expr& e);

struct FreeBasis {
    std::vector<BasisLabel> labels;
    std::size_t count = 0;
};

// Degree-n basis elements in generators x1..xk; `multilinear` restricts to
// words using x1..xn once each (k is ignored then).
FreeBasis free_basis(Variety v, int n, int k, bool multilinear = false);

}  // namespace nassoc
