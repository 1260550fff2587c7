#include <random>

#include "cobord/json_io.hpp"
#include "doctest.h"
#include "random_poly.hpp"

using namespace cobord;

namespace {

// Round trip through text, not just through the Json value.
Json reparse(const Json& j) { return Json::parse(j.dump()); }

}  // namespace

TEST_CASE("coefficient json") {
    CoeffPoly p = parse_coeff("a[1,1]^2 + 8*a[1,2] - 3*m[1] + 123456789012345678901234567890");
    Json j = coeff_to_json(p);
    CHECK(coeff_from_json(reparse(j)) == p);
    CHECK(j.dump().find("\"123456789012345678901234567890\"") != std::string::npos);
    CoeffPoly b(beta_generator());
    CHECK(coeff_from_json(reparse(coeff_to_json(b))) == b);

    std::mt19937 rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        CoeffPoly r = testing::random_poly(rng, 8, 5);
        CHECK(coeff_from_json(reparse(coeff_to_json(r))) == r);
    }
    CHECK_THROWS_AS(coeff_from_json(Json::parse(R"([{"monomial": [["q", 1, 1]], "coeff": "1"}])")), Error);
    CHECK_THROWS_AS(coeff_from_json(Json::parse(R"([{"monomial": [], "coeff": 1}])")), Error);
    CHECK_THROWS_AS(coeff_from_json(Json::parse(R"([{"monomial": [], "coeff": "1x"}])")), Error);
}

TEST_CASE("series json") {
    std::mt19937 rng(6);
    std::vector<SeriesVar> vars{{"x", 1}, {"y", 1}, {"z", 2}};
    for (int trial = 0; trial < 100; ++trial) {
        Series s = testing::random_series(rng, vars, 6, 6, false);
        Series back = series_from_json(reparse(series_to_json(s)));
        CHECK(back == s);
        CHECK(back.vars() == s.vars());
        CHECK(back.bound() == s.bound());
    }
    Series unbounded = Series::variable("t");
    CHECK(series_to_json(unbounded)["bound"].is_null());
    CHECK(series_from_json(series_to_json(unbounded)).bound() == kUnbounded);
    CHECK_THROWS_AS(series_from_json(Json::parse(R"({"vars": [], "bound": 3})")), Error);
}

TEST_CASE("presentation json") {
    FormalGroupLaw free = build_model(ModelKind::UniversalFree, 5);
    for (const char* g : {"GL(2)", "O(3)", "SO(3)", "Z/2xZ/3", "Q8", "D8"}) {
        GradedPresentation p = present(parse_group(g), free);
        Json j = presentation_to_json(p);
        GradedPresentation back = presentation_from_json(reparse(j));
        CHECK(structurally_equal(back, p));
        CHECK(back.group == p.group);
        CHECK(back.formula == p.formula);
        CHECK(presentation_to_json(back) == j);
    }
    Json j = presentation_to_json(present(parse_group("GL(2)"), free));
    CHECK(j["coefficient"] == "lazard-free");
    CHECK(j["generators"][1]["name"] == "c2");
    CHECK(j["generators"][1]["degree"] == 2);
}

TEST_CASE("component, cells, axioms json") {
    GradedComponent c{2, 0, {Integer(8)}};
    Json j = component_to_json(c);
    CHECK(j.dump() == R"({"rank":0,"torsion":["8"]})");
    CHECK(component_from_json(reparse(j), 2) == c);

    CellComplex cx = build_complex(Space::grassmannian(2, 4));
    Json cj = cells_to_json(cx);
    CHECK(cj["ranks"] == Json::array({1, 1, 2, 1, 1}));
    CellComplex back = cells_from_json(reparse(cj));
    CHECK(back.name == cx.name);
    CHECK(back.cells == cx.cells);
    CHECK(back.dimension == cx.dimension);

    Json aj = axioms_to_json(check_axioms(build_model(ModelKind::UniversalFree, 4)));
    CHECK(aj[0]["residual_degree"].is_null());
    CHECK(aj[3]["axiom"] == "associativity");
    CHECK(aj[3]["residual_degree"] == 4);
}
