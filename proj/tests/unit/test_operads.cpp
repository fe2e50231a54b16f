#include <doctest.h>

#include <filesystem>

#include "nassoc/error.hpp"
#include "nassoc/operads.hpp"
#include "nassoc/terms.hpp"
#include "oracle.hpp"

using namespace nassoc;

namespace {

const IdentitySystem& sys(const char* name) {
    static std::map<std::string, IdentitySystem> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, builtin_system(name)).first;
    return it->second;
}

SeriesQ series(std::vector<Rational> c) { return SeriesQ(std::move(c)); }

// Oracle rank of the S_3-orbit of one degree-3 relation.
std::size_t orbit_rank(const char* identity) {
    MultilinearSpace space(3);
    auto id = parse_identity(identity);
    std::vector<oracle::Row> rows;
    for (const auto& p : Permutation::all(3)) {
        oracle::Row r(space.dim(), 0);
        for (const auto& [col, c] : space.to_vector(apply_permutation(id.expr, p))) r[col] = c.raw();
        rows.push_back(r);
    }
    return oracle::rank(rows);
}

}  // namespace

TEST_CASE("consequence spaces in degree 3") {
    CHECK(consequences(sys("as"), 3)->dim() == 6);
    CHECK(consequences(sys("sas"), 3)->dim() == 6);
    CHECK(orbit_rank("((x1 x2) x3) = (x2 (x3 x1))") == 6);
    CHECK(orbit_rank("((x1 x2) x3) = (x1 (x2 x3))") == 6);
    CHECK(consequences(sys("sas"), 3)->ambient_dim() == 12);
}

TEST_CASE("SAs consequences in degree 5 have codimension one") {
    auto c = consequences(sys("sas"), 5);
    CHECK(c->ambient_dim() == 1680);
    CHECK(c->dim() == 1679);
}

TEST_CASE("multilinear dimensions against closed forms") {
    for (int n = 1; n <= 5; ++n) {
        CHECK(multilinear_dim(sys("as"), n) == oracle::factorial(n));
        CHECK(multilinear_dim(sys("free"), n) == oracle::factorial(n) * oracle::catalan(n - 1));
        CHECK(multilinear_dim(sys("com-as"), n) == 1);
        CHECK(multilinear_dim(sys("lie"), n) == oracle::factorial(n - 1));
    }
    std::vector<std::size_t> sas;
    for (int n = 1; n <= 5; ++n) sas.push_back(multilinear_dim(sys("sas"), n));
    CHECK(sas == std::vector<std::size_t>{1, 2, 6, 12, 1});
    CHECK(multilinear_dim(sys("a23"), 5) == 20);
}

TEST_CASE("consequences and quotient add up to the free space") {
    for (const char* name : {"sas", "cas", "a12", "a132", "lie"})
        for (int n = 1; n <= 4; ++n)
            CHECK(consequences(sys(name), n)->dim() + multilinear_dim(sys(name), n) ==
                  oracle::factorial(n) * oracle::catalan(n - 1));
}

TEST_CASE("consequence spaces are stable under relabelling") {
    auto c = consequences(sys("sas"), 4);
    auto rows = c->rows_as_exprs();
    for (const auto& p : {Permutation::from_cycles("(1 2)", 4), Permutation::from_cycles("(1 2 3 4)", 4)})
        for (std::size_t i = 0; i < rows.size(); i += 7) CHECK(c->contains(apply_permutation(rows[i], p)));
}

TEST_CASE("Hilbert series") {
    CHECK(hilbert(sys("sas"), 5) == series({-1, 1, -1, Rational(1, 2), Rational(-1, 120)}));
    CHECK(hilbert(sys("a12"), 5) == series({-1, 1, -1, Rational(1, 2), Rational(-1, 6)}));
    CHECK(hilbert(sys("free"), 3) == series({-1, 1, -2}));
}

TEST_CASE("Koszulity residuals") {
    CHECK(koszulity_residual(sys("sas"), sys("sas"), 5) == series({0, 0, 0, 0, Rational(61, 60)}));
    CHECK(koszulity_residual(sys("as"), sys("as"), 5).is_zero());
    auto a23 = sys("a23");
    CHECK(koszulity_residual(a23, dual_system(a23), 5) == series({0, 0, 0, 0, Rational(7, 6)}));
}

TEST_CASE("Koszul dual table") {
    auto dual_is = [](const char* name, const char* text) {
        return koszul_dual(presentation_of(sys(name))) == presentation_of(parse_system(text, "expected"));
    };
    CHECK(dual_is("as", "((x1 x2) x3) = (x1 (x2 x3))"));
    CHECK(dual_is("sas", "((x1 x2) x3) = (x2 (x3 x1))"));
    CHECK(dual_is("a132", "((x1 x2) x3) = (x3 (x1 x2))"));
    CHECK(dual_is("a23", "((x1 x2) x3) + (x1 (x3 x2)) = 0"));
    CHECK(dual_is("a12", "((x1 x2) x3) + (x2 (x1 x3)) = 0"));
    CHECK(dual_is("a13", "((x1 x2) x3) + (x3 (x2 x1)) = 0"));
    CHECK_FALSE(dual_is("a23", "((x1 x2) x3) = (x1 (x3 x2))"));
    // dimensions: dim R + dim R! = 12 for binary quadratic operads
    for (const char* name : {"as", "sas", "cas", "a12", "a13", "a23", "a132"})
        CHECK(presentation_of(sys(name)).dim() + koszul_dual(presentation_of(sys(name))).dim() == 12);
    for (const char* name : {"as", "sas", "a132"}) {
        auto p = presentation_of(sys(name));
        CHECK(koszul_dual(koszul_dual(p)) == p);
    }
    // identities of degree 2 are outside the binary quadratic setting
    CHECK_THROWS_AS(presentation_of(sys("com-as")), NotQuadratic);
    CHECK(resolve_system("cas!").identities.size() >= 1);
    CHECK_THROWS_AS(presentation_of(sys("two-step")), NotQuadratic);
}

TEST_CASE("implications between varieties") {
    auto cas_dual = dual_system(sys("cas"));
    CHECK(presentation_of(cas_dual) == presentation_of(sys("cas-dual")));
    for (int n : {3, 4}) {
        CHECK(implies(sys("cas"), sys("sas"), n));
        CHECK(implies(sys("sas"), cas_dual, n));
        CHECK_FALSE(implies(sys("sas"), sys("cas"), n));
    }
    CHECK_FALSE(implies(sys("sas"), sys("as"), 3));
}

TEST_CASE("prove_zero") {
    CHECK(prove_zero(parse_expr("[x1,[x2,[x3,[x4,x5]]]]"), sys("sas")));
    CHECK(prove_zero(parse_expr("(x1 o (x2 o (x3 o (x4 o x5)))) - (x1 o (x2 o (x4 o (x3 o x5))))"), sys("sas")));
    CHECK_FALSE(prove_zero(parse_expr("[[x1,x2],x3]"), sys("sas")));
    // non-multilinear input is polarized first
    CHECK(prove_zero(parse_expr("((x1 x1) x1) - (x1 (x1 x1))"), sys("sas")));
    CHECK_FALSE(prove_zero(parse_expr("(x1 x2) - (x2 x1)"), sys("sas")));
}

TEST_CASE("prove_zero is monotone along implications") {
    auto file = std::filesystem::path(NASSOC_CORPUS_DIR) / "identities" / "shift_consequences.txt";
    auto ids = load_system(file.string());
    CHECK(ids.identities.size() == 17);
    for (const auto& id : ids.identities) {
        CHECK(prove_zero(id.expr, sys("sas")));
        CHECK(prove_zero(id.expr, sys("cas")));
    }
}

TEST_CASE("nice indices") {
    CHECK(nice_index(sys("sas"), 6) == 5);
    CHECK(nice_index(sys("cas"), 6) == 4);
    CHECK(nice_index(sys("com-as"), 6) == 3);
    CHECK_FALSE(nice_index(sys("as"), 6).has_value());
}

TEST_CASE("SAs normal forms") {
    CHECK(sas_normal_form(parse_expr("((x1 x2) x3)")).expand() == parse_expr("(x2 (x3 x1))"));
    auto top = parse_expr("(x1 o (x2 o (x3 o (x4 o x5))))");
    auto nf = sas_normal_form(top);
    REQUIRE(nf.terms.size() == 1);
    CHECK(nf.terms[0].second == Rational(1));
    CHECK(nf.expand() == top);
    CHECK(sas_normal_form(parse_expr("(((x1 x2) (x3 x4)) x5)")) == nf);
    CHECK(sas_normal_form(parse_expr("[x1,[x2,[x3,[x4,x5]]]]")).is_zero());
}

TEST_CASE("normal forms are sound and idempotent on all degree-4 words") {
    const auto& sas = sys("sas");
    const auto& cas = sys("cas");
    for (const auto& shape : shapes_of_degree(4))
        for (const auto& p : Permutation::all(4)) {
            Expr w(Word::from_shape(shape, p.images()));
            auto s = sas_normal_form(w);
            CHECK(prove_zero(w - s.expand(), sas));
            CHECK(sas_normal_form(s.expand()) == s);
            auto c = cas_normal_form(w);
            CHECK(prove_zero(w - c.expand(), cas));
            CHECK(cas_normal_form(c.expand()) == c);
        }
}

TEST_CASE("normal forms of repeated generators") {
    auto e = parse_expr("((x1 x1) x2)");
    auto nf = sas_normal_form(e);
    CHECK(prove_zero(e - nf.expand(), sys("sas")));
    CHECK(sas_normal_form(nf.expand()) == nf);
}

TEST_CASE("CAs normal forms") {
    CHECK(cas_normal_form(parse_expr("((x2 x3) x1)")).expand() == parse_expr("(x1 (x2 x3))"));
    CHECK(cas_normal_form(parse_expr("(x1 (x2 x3))")).expand() == parse_expr("(x1 (x2 x3))"));
    CHECK(cas_normal_form(parse_expr("((x1 x2) (x3 x4))")).expand() == parse_expr("(x1 o (x2 o (x3 o x4)))"));
}

TEST_CASE("free bases") {
    auto b4 = free_basis(Variety::SAs, 4, 4, true);
    CHECK(b4.count == 12);
    CHECK(b4.labels.size() == 12);
    CHECK(free_basis(Variety::SAs, 5, 5, true).count == 1);
    auto c3 = free_basis(Variety::CAs, 3, 3, true);
    REQUIRE(c3.count == 2);
    std::vector<Expr> got;
    for (const auto& l : c3.labels) got.push_back(l.expand());
    CHECK(std::find(got.begin(), got.end(), parse_expr("(x1 (x2 x3))")) != got.end());
    CHECK(std::find(got.begin(), got.end(), parse_expr("(x1 (x3 x2))")) != got.end());
    for (int n = 1; n <= 5; ++n) {
        CHECK(free_basis(Variety::SAs, n, n, true).count == multilinear_dim(sys("sas"), n));
        CHECK(free_basis(Variety::CAs, n, n, true).count == multilinear_dim(sys("cas"), n));
    }
    // basis labels are independent modulo the consequences
    for (const auto& l : b4.labels) CHECK_FALSE(prove_zero(l.expand(), sys("sas")));
}

TEST_CASE("degree cap") {
    CHECK(degree_cap() >= 6);
    if (degree_cap() == kDefaultDegreeCap) CHECK_THROWS_AS(consequences(sys("sas"), 7), DegreeTooLarge);
    CHECK_THROWS_AS(consequences(sys("sas"), 0), DegreeTooLarge);
}
