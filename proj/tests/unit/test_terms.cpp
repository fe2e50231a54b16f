#include <doctest.h>

#include "nassoc/error.hpp"
#include "nassoc/terms.hpp"
#include "oracle.hpp"

using namespace nassoc;

namespace {
Expr w(const char* text) { return parse_expr(text); }
}  // namespace

TEST_CASE("words and shapes") {
    for (int n = 1; n <= 6; ++n) CHECK(shapes_of_degree(n).size() == oracle::catalan(n - 1));
    auto e = w("((x1 x2) x3)");
    REQUIRE(e.size() == 1);
    const auto& word = e.terms().begin()->first;
    CHECK(word.degree() == 3);
    CHECK(word.shape() == "nnlll");
    CHECK(word.leaves() == std::vector<int>{1, 2, 3});
    // left-heavy shapes come first
    CHECK(shapes_of_degree(3).front() == "nnlll");
}

TEST_CASE("DSL sugar") {
    CHECK(w("[x1,x2]") == Rational(1, 2) * w("(x1 x2)") - Rational(1, 2) * w("(x2 x1)"));
    CHECK(w("(x1 o x2)") == Rational(1, 2) * w("(x1 x2)") + Rational(1, 2) * w("(x2 x1)"));
    CHECK(w("(x1,x2,x3)") == w("((x1 x2) x3)") - w("(x1 (x2 x3))"));
    auto e = w("((x1,x2,x3) o x4)");
    CHECK(e.size() == 4);
    CHECK(e.degree() == 4);
    CHECK_THROWS_AS(parse_expr("((x1 x2)"), ParseError);
    CHECK_THROWS_AS(parse_expr("(x1 x2 x3)"), ParseError);
}

TEST_CASE("identities parse with both sides") {
    auto id = parse_identity("((x1 x2) x3) = (x2 (x3 x1))");
    CHECK(id.expr == w("((x1 x2) x3)") - w("(x2 (x3 x1))"));
    CHECK(id.is_multilinear());
    CHECK(parse_expr(id.expr.to_string()) == id.expr);
}

TEST_CASE("print then parse is the identity") {
    for (const char* text : {"[[x1,x2],x3]", "(x1 o (x2 o (x3 o x4)))", "((x1,x2,x3),x4,x5)", "3/2*((x1 x1) x2) - x2"})
        CHECK(parse_expr(w(text).to_string()) == w(text));
}

TEST_CASE("permutation action") {
    auto swap = Permutation::from_cycles("(1 2)", 3);
    auto cycle = Permutation::from_cycles("(1 2 3)", 3);
    CHECK(apply_permutation(w("((x1 x2) x3)"), swap) == w("((x2 x1) x3)"));
    CHECK(apply_permutation(w("((x1 x2) x3)"), cycle) == w("((x3 x1) x2)"));
    CHECK(apply_permutation(w("[x1,x2]"), swap) == -w("[x1,x2]"));
    auto e = w("((x1 x2) (x3 x4)) - 2*(x4 ((x2 x1) x3))");
    for (const auto& p : Permutation::all(4))
        for (const auto& q : {Permutation::from_cycles("(1 3)(2 4)", 4), Permutation::from_cycles("(1 2 3 4)", 4)})
            CHECK(apply_permutation(apply_permutation(e, p), q) == apply_permutation(e, p * q));
}

TEST_CASE("polarization") {
    // (x,x,x) = 0 gives the sum of the associators over S3.
    auto out = multilinearize(parse_identity("(x1,x1,x1) = 0"));
    REQUIRE(out.size() == 1);
    Expr expected;
    for (const auto& p : Permutation::all(3))
        expected += apply_permutation(w("(x1,x2,x3)"), p);
    // one multilinear identity: proportional to the oracle sum
    const auto& got = out[0].expr;
    const auto& [word, c] = *got.terms().begin();
    CHECK(got * expected.coefficient(word) == expected * c);

    auto sq = multilinearize(parse_identity("((x1 x1) x1) = (x1 (x1 x1))"));
    REQUIRE(sq.size() == 1);
    const auto& s = sq[0].expr;
    const auto& [w2, c2] = *s.terms().begin();
    CHECK(s * expected.coefficient(w2) == expected * c2);

    auto already = parse_identity("((x1 x2) x3) = (x2 (x3 x1))");
    auto same = multilinearize(already);
    REQUIRE(same.size() == 1);
    CHECK(same[0].expr == already.expr);

    CHECK_THROWS_AS(multilinearize(parse_identity("((x1 x1) x1) = x1")), NotHomogeneous);
}

TEST_CASE("polarization recovers the input on the diagonal") {
    // Setting x1 = x2 = x3 = x turns the polarized identity into a multiple of the input.
    auto id = parse_identity("((x1 x1) (x1 x1)) = (x1 (x1 (x1 x1)))");
    for (const auto& m : multilinearize(id)) {
        std::vector<int> collapse = {0, 1, 1, 1, 1};
        Expr back = m.expr.relabel(collapse);
        const auto& [word, c] = *id.expr.terms().begin();
        CHECK(back * c == id.expr * back.coefficient(word));
        CHECK_FALSE(back.is_zero());
    }
}

TEST_CASE("built-in systems") {
    for (const auto& name : builtin_system_names()) CHECK(is_builtin_system(name));
    CHECK(builtin_system("sas").identities.size() == 1);
    CHECK(builtin_system("cas").identities.size() == 2);
    CHECK(builtin_system("free").identities.empty());
    CHECK_THROWS(builtin_system("no-such-system"));
}
