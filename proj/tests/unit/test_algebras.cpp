#include <doctest.h>

#include "nassoc/algebras.hpp"
#include "nassoc/error.hpp"
#include "nassoc/terms.hpp"
#include "oracle.hpp"

using namespace nassoc;

namespace {

const Corpus& corpus() {
    static const Corpus c = Corpus::load(NASSOC_CORPUS_DIR);
    return c;
}

AlgebraStructure get(const char* name, std::optional<long> alpha = std::nullopt) {
    auto a = corpus().get(name);
    return alpha ? a.specialize({{"alpha", Rational(*alpha)}}) : a;
}

AlgebraStructure zero_algebra(std::size_t n) { return AlgebraStructure("zero", n); }

std::vector<std::vector<std::vector<mpq_class>>> constants(const AlgebraStructure& a) {
    RationalAlgebra r(a);
    const std::size_t n = a.dim();
    std::vector<std::vector<std::vector<mpq_class>>> c(n, std::vector<std::vector<mpq_class>>(n, std::vector<mpq_class>(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) c[i][j][k] = r.constant(i, j, k).raw();
    return c;
}

bool holds(const AlgebraStructure& a, const char* system, CheckMode mode = CheckMode::symbolic) {
    return check_identity(a, builtin_system(system), mode).holds;
}

}  // namespace

TEST_CASE("corpus loads") {
    CHECK(corpus().algebras().size() >= 48);
    CHECK(corpus().contains("a12"));
    CHECK(get("a2").is_parametric());
    CHECK(get("a2").used_parameters() == std::set<std::string>{"alpha"});
    CHECK_FALSE(get("a2", 3).is_parametric());
    CHECK_THROWS(corpus().get("nope"));
}

TEST_CASE("JSON round trip") {
    for (const char* name : {"a2", "a12", "dim5_nonassoc", "L2"}) {
        auto a = get(name);
        auto back = parse_algebra_json(algebra_to_json(a));
        CHECK(back == a);
        CHECK(back.name() == a.name());
        CHECK(back.claims() == a.claims());
    }
    CHECK_THROWS_AS(parse_algebra_json("{\"name\": \"x\", \"dim\": 2, \"products\": [{\"left\": \"e9\", \"right\": \"e1\", \"value\": []}]}"), Error);
}

TEST_CASE("elements and products") {
    auto a = get("a2");
    auto x = a.parse_element("e1 + alpha*e2");
    auto sq = a.multiply(x, x);
    // (e1 + a e2)^2 = e3 + a e3 - a e3 + a^3 e3
    auto alpha = PolyQ::variable("alpha");
    CHECK(sq[2] == PolyQ(1) + alpha * alpha * alpha);
    CHECK(sq[0].is_zero());
    CHECK(to_string(a.basis_element(1), a.basis()) == "e2");
}

TEST_CASE("check_identity on the family a2 and the 5-dimensional example") {
    CHECK(holds(get("a2"), "sas"));
    auto d5 = get("dim5_nonassoc");
    CHECK(holds(d5, "sas"));
    auto r = check_identity(d5, builtin_system("as"));
    REQUIRE_FALSE(r.holds);
    CHECK(r.counterexample->arguments == std::vector<std::string>{"e1", "e2", "e1"});
    CHECK(r.counterexample->coordinate == 4);
    CHECK(r.counterexample->value == PolyQ(1));
    CHECK_FALSE(holds(d5, "as"));
    CHECK(holds(get("A17"), "sas"));
    CHECK(holds(get("L1"), "lie"));
}

TEST_CASE("symbolic and multilinear modes agree on rational algebras") {
    for (const auto& a : corpus().algebras()) {
        if (a.is_parametric()) continue;
        for (const char* s : {"sas", "as", "cas", "com-as"})
            CHECK(holds(a, s, CheckMode::symbolic) == holds(a, s, CheckMode::multilinear));
    }
}

TEST_CASE("plus and minus algebras") {
    auto m = minus_algebra(get("a2"));
    CHECK(m == get("L1"));
    auto c = get("A16");
    CHECK(plus_algebra(c) == c);
    CHECK(minus_algebra(c) == zero_algebra(4));
    CHECK(opposite_algebra(opposite_algebra(get("dim5_nonassoc"))) == get("dim5_nonassoc"));
}

TEST_CASE("mutations and Kantor squares") {
    auto d5 = get("dim5_nonassoc");
    auto mu = mutation(d5, d5.basis_element(0), d5.basis_element(1));
    CHECK(holds(mu, "cas"));
    auto ks = kantor_square(d5, d5.basis_element(0));
    CHECK(holds(ks, "cas"));
    auto p = d5.parse_element("e1 - 2*e4");
    auto alt = mutation(d5, p, p);
    for (std::size_t i = 0; i < 5; ++i) CHECK(is_zero(alt.product(i, i)));
    CHECK(mutation(zero_algebra(3), zero_algebra(3).basis_element(0), zero_algebra(3).basis_element(1)) ==
          zero_algebra(3));
    CHECK(kantor_square(d5, d5.zero_element()) == zero_algebra(5));
    // commutative associative: x*y = -p(xy)
    auto a = get("A16");
    auto q = a.parse_element("e1 + 3*e2");
    auto k = kantor_square(a, q);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(k.product(i, j) == scaled(a.multiply(q, a.product(i, j)), PolyQ(-1)));
}

TEST_CASE("scalar mutation") {
    auto a = get("c132");
    auto alpha = PolyQ::variable("s"), beta = PolyQ::variable("r");
    CHECK(holds(scalar_mutation(a, alpha, beta), "a132"));
    CHECK(scalar_mutation(a, PolyQ(1), PolyQ(0)) == a);
    CHECK(scalar_mutation(a, PolyQ(0), PolyQ(1)) == opposite_algebra(a));
    CHECK_FALSE(holds(get("c132"), "sas"));
}

TEST_CASE("unital hull") {
    auto h = unital_hull(get("A16"));
    CHECK(h.dim() == 5);
    CHECK(holds(h, "sas"));
    CHECK_FALSE(holds(unital_hull(get("a1")), "sas"));
    auto u = h.basis_element(4);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(h.multiply(u, h.basis_element(i)) == h.basis_element(i));
        CHECK(h.multiply(h.basis_element(i), u) == h.basis_element(i));
    }
}

TEST_CASE("compatible structures") {
    CHECK(compatible_check(get("a2"), get("a2")).holds);
    CHECK(compatible_check(get("dim5_nonassoc"), zero_algebra(5)).holds);
    CHECK(compatible_check(get("L1"), zero_algebra(3)).holds);
    CHECK_FALSE(compatible_check(corpus().get("c132").specialize({{"gamma", Rational(2)}}), zero_algebra(5)).holds);
    // A04 with a rescaled copy of itself on the same space
    auto a = get("A04");
    auto b = scalar_mutation(a, PolyQ(Rational(3)), PolyQ(0));
    CHECK(compatible_check(a, b).holds);
    CHECK_THROWS_AS(compatible_check(get("a2"), zero_algebra(4)), DimensionMismatch);
}

TEST_CASE("derivation algebras against the oracle") {
    CHECK(derivation_algebra(get("A17")).dim == 0);
    CHECK(derivation_algebra(zero_algebra(4)).dim == 16);
    for (long s : {-1L, 0L, 1L, 2L}) {
        auto a = get("a12", s);
        CHECK(derivation_algebra(a).dim == oracle::derivation_dim(constants(a)));
        CHECK(derivation_algebra(a).dim == 4);
    }
    for (const auto& a : corpus().algebras()) {
        auto s = a.specialize({{"alpha", Rational(2)}, {"gamma", Rational(3)}});
        CHECK(derivation_algebra(s).dim == oracle::derivation_dim(constants(s)));
    }
    CHECK_THROWS_AS(derivation_algebra(get("a2")), ParametricNotSupported);
}

TEST_CASE("Leibniz derivations") {
    auto a1 = get("a1");
    for (const auto& d : derivation_algebra(a1).basis) CHECK(is_leibniz_derivation(a1, d, 3));
    CHECK(is_leibniz_derivation(a1, MatrixQ::identity(3), 3));
    CHECK_FALSE(is_leibniz_derivation(a1, MatrixQ::identity(3), 2));
    auto a04 = get("A04");
    MatrixQ d(2, 2);
    d(0, 0) = 1;
    CHECK_FALSE(is_leibniz_derivation(a04, d, 2));
}

TEST_CASE("powers and nilpotency") {
    auto p = powers_and_nilpotency(get("a2", 5));
    CHECK(p.nilpotent);
    CHECK(p.nilpotency_class == 2);
    CHECK(p.lower.at(1).dim() == 1);
    auto q = powers_and_nilpotency(get("A17"));
    CHECK_FALSE(q.nilpotent);
    CHECK_FALSE(q.solvable);
    auto z = powers_and_nilpotency(zero_algebra(3));
    CHECK(z.nilpotent);
    CHECK(z.nilpotency_class == 1);
    CHECK(annihilator(get("a1")).dim() == 1);
}

TEST_CASE("identities on powers of the 5-dimensional example") {
    auto d5 = get("dim5_nonassoc");
    CHECK(subalgebra_identity_check(d5, 2, builtin_system("as")).holds);
    CHECK(subalgebra_identity_check(d5, 3, builtin_system("com-as")).holds);
    CHECK_FALSE(subalgebra_identity_check(d5, 1, builtin_system("as")).holds);
}

TEST_CASE("Peirce decompositions") {
    auto a = get("A17");
    auto p = peirce(a, a.basis_element(0));
    CHECK(p.a1.dim() == 1);
    CHECK(p.a0.dim() == 3);
    CHECK(p.a_half.is_zero());
    CHECK(p.decomposes());
    auto b = get("a12", 1);
    auto q = peirce(b, b.basis_element(3));
    CHECK(q.a1 == Subspace::span(4, {to_rational(b.basis_element(3))}));
    CHECK(q.a0.dim() == 3);
    CHECK(q.decomposes());
    CHECK(q.e_commutes);
    auto z = peirce(b, b.zero_element());
    CHECK(z.a0.dim() == 4);
    CHECK_THROWS_AS(peirce(b, b.basis_element(0)), NotIdempotent);
}

TEST_CASE("Wedderburn splits") {
    auto s = wedderburn(get("A17"));
    CHECK(s.s.dim() == 4);
    CHECK(s.r.is_zero());
    CHECK(s.idempotents.size() == 4);
    auto n = wedderburn(get("a02", 1));
    CHECK(n.s.is_zero());
    CHECK(n.r.dim() == 4);
    auto w = wedderburn(get("a12", 1));
    CHECK(w.s == Subspace::span(4, {VectorQ{0, 0, 0, 1}}));
    CHECK(w.r == Subspace::span(4, {VectorQ{1, 0, 0, 0}, VectorQ{0, 1, 0, 0}, VectorQ{0, 0, 1, 0}}));
    for (const auto& a0 : corpus().algebras())
        for (long v : {-1L, 0L, 1L, 2L}) {
            auto a = a0.specialize({{"alpha", Rational(v)}, {"gamma", Rational(v)}});
            auto r = wedderburn_report(a);
            CHECK_MESSAGE(r.verified(), a.name());
            // lifted idempotents are idempotent and mutually orthogonal
            RationalAlgebra ra(a);
            for (std::size_t i = 0; i < r.idempotents.size(); ++i)
                for (std::size_t j = 0; j < r.idempotents.size(); ++j) {
                    auto prod = ra.multiply(r.idempotents[i], r.idempotents[j]);
                    if (i == j) CHECK(prod == r.idempotents[i]);
                    else CHECK(std::all_of(prod.begin(), prod.end(), [](const Rational& x) { return x.is_zero(); }));
                }
        }
}

TEST_CASE("cocycle construction") {
    CocycleSpec theta(3);
    theta.add_form(2, PolyQ::parse("D11 + alpha*D22"));
    theta.add_form(2, PolyQ::parse("0*D12"));
    CHECK(algebra_from_cocycle(get("L1"), theta) == get("a2"));
    auto plain = algebra_from_cocycle(get("L1"), CocycleSpec(3));
    CHECK(plain == get("a1"));
    CHECK(holds(plain, "sas"));
    // every sampled symmetric theta on L2 fails shift associativity
    for (const char* form : {"D11", "D22", "D12", "D11 + D22", "D11 - 2*D12 + D22"})
        for (std::size_t k : {2u, 3u}) {
            CocycleSpec t(4);
            t.add_form(k, PolyQ::parse(form));
            CHECK_FALSE(holds(algebra_from_cocycle(get("L2"), t), "sas"));
        }
    CHECK_THROWS_AS(theta.add_form(0, PolyQ::parse("alpha")), ParseError);
}

TEST_CASE("fingerprints separate non-isomorphic algebras") {
    CHECK_FALSE(fingerprint(get("A03")) == fingerprint(get("A04")));
    CHECK_FALSE(fingerprint(get("a1")) == fingerprint(get("a2", 0)));
    for (const auto& a : corpus().algebras()) {
        auto s = a.specialize({{"alpha", Rational(1)}, {"gamma", Rational(1)}});
        CHECK(fingerprint(s) == fingerprint(s));
    }
    auto f = fingerprint(get("dim5_nonassoc"));
    CHECK(f.shift_associative);
    CHECK_FALSE(f.associative);
}

TEST_CASE("properties of every shift associative corpus entry") {
    const auto two_step = builtin_system("two-step");
    const auto apj = builtin_system("anti-poisson-jordan");
    const auto swap = builtin_system("swap");
    const auto nested = parse_identity("[x1,[x2,[x3,[x4,x5]]]] = 0");
    for (const auto& a : corpus().algebras()) {
        if (std::find(a.claims().begin(), a.claims().end(), "sas") == a.claims().end()) continue;
        CHECK_MESSAGE(check_identity(a, two_step, CheckMode::symbolic).holds, a.name());
        CHECK_MESSAGE(check_identity(a, apj, CheckMode::symbolic).holds, a.name());
        CHECK_MESSAGE(check_identity(a, swap, CheckMode::symbolic).holds, a.name());
        CHECK_MESSAGE(check_identity(a, nested, CheckMode::symbolic).holds, a.name());
    }
}
