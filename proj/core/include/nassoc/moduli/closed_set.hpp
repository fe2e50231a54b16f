#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nassoc/algebras/algebra.hpp"
#include "nassoc/exact/poly.hpp"

namespace nassoc {

// "A_p A_q <= A_r" with A_m = span(e_m, ..., e_n): c_ij^k = 0 whenever
// i >= p, j >= q and k < r (1-based).
struct Containment {
    std::size_t p = 1, q = 1, r = 1;

    static Containment parse(std::string_view text);  // "A1*A1<=A3"
    std::string to_string() const;
};

// Polynomial equations in the variables c[i][j][k] (1-based), each "= 0".
class ClosedSetSpec {
public:
    ClosedSetSpec() = default;
    ClosedSetSpec(std::vector<Containment> contain, std::vector<PolyQ> equations);
    // Each equation may be "lhs = rhs" or a bare polynomial.
    static ClosedSetSpec from_strings(const std::vector<std::string>& contain,
                                      const std::vector<std::string>& equations);

    const std::vector<Containment>& containments() const { return contain_; }
    const std::vector<PolyQ>& equations() const { return equations_; }

private:
    std::vector<Containment> contain_;
    std::vector<PolyQ> equations_;
};

struct MembershipReport {
    bool member = true;
    std::vector<std::string> violations;  // failed shorthand or equation values
};

// Parameters must be specialized.
MembershipReport closed_set_report(const ClosedSetSpec& spec, const AlgebraStructure& a);
bool closed_set_membership(const ClosedSetSpec& spec, const AlgebraStructure& a);

struct BorelEvidence {
    std::size_t samples = 0;
    std::size_t agreeing = 0;  // samples whose membership matches the original
};

// Membership of A versus membership after random invertible lower-triangular
// changes of basis (E_i in span(e_i..e_n), which preserves every A_m).
// Evidence only; stability is not proved.
BorelEvidence borel_stability_evidence(const ClosedSetSpec& spec, const AlgebraStructure& a,
                                       std::size_t samples, std::uint64_t seed);

}  // namespace nassoc
