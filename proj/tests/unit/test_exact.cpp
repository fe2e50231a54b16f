#include <doctest.h>

#include "nassoc/exact.hpp"
#include "nassoc/error.hpp"
#include "oracle.hpp"

using namespace nassoc;

TEST_CASE("rational arithmetic is exact and canonical") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a * b == Rational(1, 18));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational::parse("-12/8").to_string() == "-3/2");
    CHECK(Rational(2, 3).inverse() == Rational(3, 2));
    CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
}

TEST_CASE("polynomials over Q") {
    auto p = PolyQ::parse("alpha^2 - 2*alpha*beta + 1/2");
    auto a = PolyQ::variable("alpha"), b = PolyQ::variable("beta");
    CHECK(p == a * a - Rational(2) * a * b + PolyQ(Rational(1, 2)));
    CHECK(p.total_degree() == 2);
    CHECK(p.substitute({{"alpha", PolyQ(1)}, {"beta", PolyQ(1)}}) == PolyQ(Rational(-1, 2)));
    CHECK(PolyQ::parse(p.to_string()) == p);
    CHECK((a - a).is_zero());
}

TEST_CASE("nullspace") {
    auto k = nullspace(MatrixQ::from_rows({{1, 1}, {1, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == -k[0][1]);
    CHECK(nullspace(MatrixQ::identity(3)).empty());
}

TEST_CASE("rank plus nullity equals the column count") {
    const std::vector<std::vector<Rational>> rows = {
        {1, 2, 3, 4, 5}, {2, 4, 6, 8, 10}, {0, 1, Rational(1, 2), 0, -1}, {1, 3, Rational(7, 2), 4, 4}};
    auto m = MatrixQ::from_rows(rows);
    std::vector<oracle::Row> o;
    for (const auto& r : rows) {
        oracle::Row orow;
        for (const auto& x : r) orow.push_back(x.raw());
        o.push_back(orow);
    }
    CHECK(rank(m) == oracle::rank(o));
    CHECK(rank(m) + nullspace(m).size() == m.cols());
    for (const auto& v : nullspace(m)) {
        auto mv = m * MatrixQ(v.size(), 1, v);
        for (std::size_t i = 0; i < mv.rows(); ++i) CHECK(mv(i, 0).is_zero());
    }
}

TEST_CASE("determinant and inverse") {
    auto m = MatrixQ::from_rows({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
    CHECK(determinant(m) == Rational(18));  // 2*11 - 1*4
    auto inv = inverse(m);
    CHECK(m * inv == MatrixQ::identity(3));
    CHECK_THROWS_AS(inverse(MatrixQ::from_rows({{1, 2}, {2, 4}})), Error);
}

TEST_CASE("limits of rational functions at zero") {
    CHECK(limit_at_zero(RatFunT::parse("(t^2 + t)/t")) == Rational(1));
    CHECK(limit_at_zero(RatFunT::parse("t^3/(1+t)")) == Rational(0));
    CHECK_THROWS_AS(limit_at_zero(RatFunT::parse("1/t")), PoleAtZero);
    auto f = RatFunT::parse("(t - 1)/(t^2 + 2)"), g = RatFunT::parse("t^3 - 1/2");
    CHECK((f * g) / g == f);
    CHECK(RatFunT::parse("alpha*t", {{"alpha", Rational(3)}}) == RatFunT::parse("3*t"));
}

namespace {
SeriesQ series(std::vector<Rational> c) { return SeriesQ(std::move(c)); }
}  // namespace

TEST_CASE("series composition") {
    auto h = series({-1, 1, -1, Rational(1, 2), Rational(-1, 120)});
    CHECK(compose_series(h, h) == series({1, 0, 0, 0, Rational(61, 60)}));
    auto h12 = series({-1, 1, -1, Rational(1, 2), Rational(-1, 6)});
    auto g = series({-1, 1, -1, Rational(1, 2), 0});
    CHECK(compose_series(h12, g) == series({1, 0, 0, 0, Rational(7, 6)}));
    CHECK(compose_series(SeriesQ::t(5), h) == h);
    auto f = series({1, 2, 0, -1, 3}), k = series({0, 1, Rational(1, 3), 0, 1});
    CHECK(compose_series(f, compose_series(h, k)) == compose_series(compose_series(f, h), k));
    CHECK(h.to_string() == "-t + t^2 - t^3 + 1/2*t^4 - 1/120*t^5");
    CHECK_THROWS_AS(compose_series(h, SeriesQ::t(4)), TruncationMismatch);
}

TEST_CASE("sparse echelon basis") {
    EchelonBasis b(4);
    CHECK(b.insert({{0, 1}, {1, 1}}));
    CHECK(b.insert({{1, 1}, {2, 1}}));
    CHECK_FALSE(b.insert({{0, 1}, {2, -1}}));
    CHECK(b.rank() == 2);
    CHECK(b.contains({{0, 2}, {2, -2}}));
    CHECK_FALSE(b.contains({{3, 1}}));
}
