#include <random>

#include "cobord/error.hpp"
#include "cobord/series.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "random_poly.hpp"

using namespace cobord;

namespace {

CoeffPoly a(int i, int j) { return CoeffPoly(CoeffGenerator::a(i, j), 6); }
CoeffPoly m(int k) { return CoeffPoly(CoeffGenerator::m(k), 6); }

const SeriesVar kT{"t", 1};
const SeriesVar kX{"x", 1};

Series T(int bound) { return Series::variable(kT, bound); }
Series X(int bound) { return Series::variable(kX, bound); }

}  // namespace

TEST_CASE("arithmetic aligns variables and truncates") {
    Series x = X(3);
    Series y = Series::variable("y", 3);
    Series s = x + y;
    CHECK(s.vars().size() == 2);
    CHECK(to_string(s * s) == "x^2 + 2*x*y + y^2");
    CHECK(pow(x + y, 4).is_zero());
    CHECK(to_string(a(1, 1) * x - x * x) == "a[1,1]*x - x^2");
    CHECK_THROWS_AS(Series::variable(SeriesVar{"x", 2}) + x, Error);
}

TEST_CASE("substitute examples") {
    Series x = X(6);
    Series f = x + a(1, 1) * x * x;
    Series g = substitute(f, {{"x", x * x}});
    CHECK(to_string(g) == "x^2 + a[1,1]*x^4");

    Series sum = X(6) + Series::variable("y", 6);
    Series renamed = substitute(sum, {{"x", Series::variable("m", 6)}, {"y", Series::variable("n", 6)}});
    CHECK(to_string(renamed) == "m + n");

    CHECK(substitute(f, {{"x", x}}) == f);
    CHECK_THROWS_AS(substitute(f, {{"x", x + Series::constant(CoeffPoly(1L))}}), Error);

    SubstituteOptions opts;
    opts.allow_constant_terms = true;
    Series exact = x * x;
    CHECK(to_string(substitute(exact, {{"x", x + Series::constant(CoeffPoly(1L), 6)}}, opts)) == "1 + 2*x + x^2");
}

TEST_CASE("substitution bound follows the order of the replacement") {
    Series f = X(3) + X(3) * X(3);
    // x -> x^2: the unknown x^4 term would land in degree 8, so degree <= 7 is determined.
    CHECK(substitute(f, {{"x", Series::variable(kX)}}).bound() == 3);
    CHECK(substitute(f, {{"x", Series::variable(kX) * Series::variable(kX)}}).bound() == 7);
    // A weight-2 variable replaced by an order-1 series halves the reach.
    Series z = Series::variable(SeriesVar{"z", 2}, 4);
    CHECK(substitute(z * z, {{"z", X(kUnbounded)}}).bound() == 2);
}

TEST_CASE("compositional inverse examples") {
    CHECK(compositional_inverse(T(5)) == T(5));

    Series f = T(3) + m(1) * T(3) * T(3) + m(2) * pow(T(3), 3);
    Series g = compositional_inverse(f);
    CHECK(to_string(g) == "t - m[1]*t^2 + (2*m[1]^2 - m[2])*t^3");

    Series h = T(4) + T(4) * T(4);
    CHECK(to_string(compositional_inverse(h)) == "t - t^2 + 2*t^3 - 5*t^4");

    CHECK_THROWS_AS(compositional_inverse(Series::constant(CoeffPoly(2L), 4) * T(4)), Error);
    CHECK_THROWS_AS(compositional_inverse(T(4) + Series::variable("u", 4)), Error);
}

TEST_CASE("compositional inverse agrees with Lagrange reversion") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const int bound = 2 + trial % 6;
        Series f = T(bound);
        for (int k = 2; k <= bound; ++k) f.add_term({k}, testing::random_poly(rng, 8, 2));
        Series g = compositional_inverse(f);
        oracle::Dense expected = oracle::lagrange_inverse(oracle::dense_of(f, bound));
        oracle::Dense got = oracle::dense_of(g, bound);
        for (int k = 0; k <= bound; ++k) CHECK(got[k] == expected[k]);
        // Two-sided inverse up to the bound.
        CHECK(substitute(f, {{"t", g}}) == T(bound));
        CHECK(substitute(g, {{"t", f}}) == T(bound));
        // Involution.
        CHECK(compositional_inverse(g) == f);
    }
}

TEST_CASE("express_in examples") {
    Series x = X(3);
    SUBCASE("zero") {
        auto r = express_in(Series({kX}, 3), {{"u", -(x * x)}});
        CHECK(r.result.is_zero());
        CHECK(r.residual.is_zero());
    }
    SUBCASE("free-model s in terms of p") {
        Series s = a(1, 1) * x * x - a(1, 1) * a(1, 1) * pow(x, 3);
        Series p = -(x * x) + a(1, 1) * pow(x, 3);
        auto r = express_in(s, {{"u", p}});
        CHECK(to_string(r.result) == "-a[1,1]*u");
        CHECK(r.result.vars()[0].weight == 2);
        CHECK(r.residual.is_zero());
    }
    SUBCASE("additive d3 is not a series in d2, d4") {
        const int D = 6;
        Series r = Series::variable("r", D), s = Series::variable("s", D), t = Series::variable("t", D);
        Series u = -(r + s + t);
        Series d2 = r * s + r * t + r * u + s * t + s * u + t * u;
        Series d3 = r * s * t + s * t * u + r * t * u + r * s * u;
        Series d4 = r * s * t * u;
        auto res = express_in(d3, {{"v2", d2}, {"v4", d4}});
        CHECK_FALSE(res.residual.is_zero());
        // Evaluation witness: both tuples share (d2, d4) = (-3, 0) but not d3.
        std::map<std::string, long> p1{{"r", 2}, {"s", -1}, {"t", 0}};
        std::map<std::string, long> p2{{"r", 1}, {"s", 1}, {"t", 0}};
        CHECK(oracle::evaluate(d2, p1) == -3);
        CHECK(oracle::evaluate(d2, p2) == -3);
        CHECK(oracle::evaluate(d4, p1) == 0);
        CHECK(oracle::evaluate(d4, p2) == 0);
        CHECK(oracle::evaluate(d3, p1) == 2);
        CHECK(oracle::evaluate(d3, p2) == -2);
    }
    SUBCASE("non-unit leading coefficient is rejected") {
        CHECK_THROWS_AS(express_in(x, {{"u", 2L * x}}), Error);
    }
}

TEST_CASE("express_in round trip on random input") {
    std::mt19937 rng(11);
    for (int bound = 2; bound <= 8; ++bound) {
        for (int trial = 0; trial < 8; ++trial) {
            Series x = X(bound);
            Series p = -(x * x);
            for (int k = 3; k <= bound; ++k) p.add_term({k}, testing::random_poly(rng, 8, 2));
            Series q = pow(x, 3);
            for (int k = 4; k <= bound; ++k) q.add_term({k}, testing::random_poly(rng, 8, 2));
            Series g = testing::random_series(rng, {kX}, bound, 8, false);
            std::vector<std::pair<std::string, Series>> targets{{"u", p}};
            if (bound >= 3) targets.emplace_back("w", q);
            auto r = express_in(g, targets);
            CHECK(expand_result(r.result, targets) + r.residual == g);
        }
    }
}

TEST_CASE("substitution is associative") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const int bound = 3 + trial % 4;
        Series f = testing::random_series(rng, {kX}, bound, 6);
        Series g = testing::random_series(rng, {kX}, bound, 6);
        Series h = testing::random_series(rng, {kX}, bound, 6);
        Series left = substitute(substitute(f, {{"x", g}}), {{"x", h}});
        Series right = substitute(f, {{"x", substitute(g, {{"x", h}})}});
        int common = std::min(left.bound(), right.bound());
        CHECK(left.truncated(common) == right.truncated(common));
    }
}

TEST_CASE("truncation coherence") {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        Series f = T(7);
        for (int k = 2; k <= 7; ++k) f.add_term({k}, testing::random_poly(rng, 8, 2));
        Series big = compositional_inverse(f);
        for (int d = 2; d < 7; ++d) CHECK(big.truncated(d) == compositional_inverse(f.truncated(d)));
        Series sq = f * f;
        CHECK(sq.truncated(4) == f.truncated(4) * f.truncated(4));
    }
}

TEST_CASE("text form round trips") {
    std::mt19937 rng(17);
    std::vector<SeriesVar> vars{{"x", 1}, {"y", 1}, {"z", 2}};
    for (int trial = 0; trial < 100; ++trial) {
        Series s = testing::random_series(rng, vars, 6, 6, false);
        std::string text = to_string(s);
        CHECK(to_string(parse_series(text, vars, 6)) == text);
    }
    CHECK(to_string(parse_series("2*x + a[1,1]*x^2 + 2*a[1,2]*x^3", {kX}, 3)) ==
          "2*x + a[1,1]*x^2 + 2*a[1,2]*x^3");
}
