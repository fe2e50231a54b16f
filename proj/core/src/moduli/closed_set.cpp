#include "nassoc/moduli/closed_set.hpp"

#include <random>
#include <regex>

#include "nassoc/error.hpp"
#include "nassoc/moduli/transform.hpp"

namespace nassoc {

namespace {

std::size_t constant_index(const std::string& name, std::size_t n, std::size_t& i, std::size_t& j) {
    static const std::regex pattern(R"(c\[(\d+)\]\[(\d+)\]\[(\d+)\])");
    std::smatch m;
    if (!std::regex_match(name, m, pattern)) throw ParseError("unknown closed-set variable '" + name + "'", 0);
    i = std::stoul(m[1]);
    j = std::stoul(m[2]);
    std::size_t k = std::stoul(m[3]);
    if (i < 1 || j < 1 || k < 1 || i > n || j > n || k > n)
        throw IndexOutOfRange("closed-set variable '" + name + "' outside the algebra");
    return k;
}

}  // namespace

Containment Containment::parse(std::string_view text) {
    static const std::regex pattern(R"(\s*A(\d+)\s*\*?\s*A(\d+)\s*(<=|⊆)\s*A(\d+)\s*)");
    std::string s(text);
    std::smatch m;
    if (!std::regex_match(s, m, pattern)) throw ParseError("containment must look like A1*A1<=A3: " + s, 0);
    Containment c{std::stoul(m[1]), std::stoul(m[2]), std::stoul(m[4])};
    if (c.p == 0 || c.q == 0 || c.r == 0) throw ParseError("containment indices start at 1", 0);
    return c;
}

std::string Containment::to_string() const {
    return "A" + std::to_string(p) + "*A" + std::to_string(q) + "<=A" + std::to_string(r);
}

ClosedSetSpec::ClosedSetSpec(std::vector<Containment> contain, std::vector<PolyQ> equations)
    : contain_(std::move(contain)), equations_(std::move(equations)) {}

ClosedSetSpec ClosedSetSpec::from_strings(const std::vector<std::string>& contain,
                                          const std::vector<std::string>& equations) {
    std::vector<Containment> c;
    for (const auto& s : contain) c.push_back(Containment::parse(s));
    std::vector<PolyQ> eqs;
    for (const auto& s : equations) {
        auto eq = s.find('=');
        if (eq == std::string::npos) eqs.push_back(PolyQ::parse(s));
        else eqs.push_back(PolyQ::parse(s.substr(0, eq)) - PolyQ::parse(s.substr(eq + 1)));
    }
    return ClosedSetSpec(std::move(c), std::move(eqs));
}

MembershipReport closed_set_report(const ClosedSetSpec& spec, const AlgebraStructure& alg) {
    const RationalAlgebra a(alg);
    const std::size_t n = a.dim();
    MembershipReport rep;
    for (const auto& c : spec.containments())
        for (std::size_t i = c.p; i <= n; ++i)
            for (std::size_t j = c.q; j <= n; ++j)
                for (std::size_t k = 1; k < c.r && k <= n; ++k)
                    if (!a.constant(i - 1, j - 1, k - 1).is_zero()) {
                        rep.member = false;
                        rep.violations.push_back(c.to_string() + ": c[" + std::to_string(i) + "][" +
                                                 std::to_string(j) + "][" + std::to_string(k) + "] = " +
                                                 a.constant(i - 1, j - 1, k - 1).to_string());
                    }
    for (std::size_t e = 0; e < spec.equations().size(); ++e) {
        Rational v = spec.equations()[e].evaluate<Rational>([&](const std::string& name) {
            std::size_t i = 0, j = 0;
            std::size_t k = constant_index(name, n, i, j);
            return a.constant(i - 1, j - 1, k - 1);
        });
        if (!v.is_zero()) {
            rep.member = false;
            rep.violations.push_back("equation " + std::to_string(e + 1) + " evaluates to " + v.to_string());
        }
    }
    return rep;
}

bool closed_set_membership(const ClosedSetSpec& spec, const AlgebraStructure& a) {
    return closed_set_report(spec, a).member;
}

BorelEvidence borel_stability_evidence(const ClosedSetSpec& spec, const AlgebraStructure& a,
                                       std::size_t samples, std::uint64_t seed) {
    const bool original = closed_set_membership(spec, a);
    const std::size_t n = a.dim();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-3, 3), diag(1, 3);
    BorelEvidence ev;
    for (std::size_t s = 0; s < samples; ++s) {
        MatrixQ m(n, n);
        for (std::size_t col = 0; col < n; ++col) {
            m(col, col) = Rational(diag(rng) * (entry(rng) < 0 ? -1 : 1));
            for (std::size_t row = col + 1; row < n; ++row) m(row, col) = Rational(entry(rng));
        }
        ++ev.samples;
        if (closed_set_membership(spec, change_basis(a, m)) == original) ++ev.agreeing;
    }
    return ev;
}

}  // namespace nassoc
