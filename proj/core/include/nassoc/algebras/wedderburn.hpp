#pragma once

#include <string>
#include <vector>

#include "nassoc/algebras/algebra.hpp"
#include "nassoc/algebras/linear.hpp"

namespace nassoc {

struct WedderburnSplit {
    Subspace s;                       // semisimple part, spanned by idempotents
    Subspace r;                       // radical
    std::vector<VectorQ> idempotents; // pairwise orthogonal, lifted from A/R

    bool r_ideal = false;
    bool r_nilpotent = false;
    bool s_closed = false;            // S S = S
    bool s_commutative_associative = false;
    bool direct_sum = false;          // A = S + R, S and R independent

    bool verified() const {
        return r_ideal && r_nilpotent && s_closed && s_commutative_associative && direct_sum;
    }
    // Names of the flags that are false.
    std::vector<std::string> failed_flags() const;
};

// R is the kernel of the trace form tau(x, y) = tr L+_{x o y}; S is spanned by
// a complete orthogonal system of idempotents of A/R lifted by
// e <- 3e^2 - 2e^3.  Post-verification always runs; this overload reports
// the flags without throwing.
WedderburnSplit wedderburn_report(const AlgebraStructure& a);

// As wedderburn_report, but VerificationFailed names the first failed flag.
WedderburnSplit wedderburn(const AlgebraStructure& a);

}  // namespace nassoc
