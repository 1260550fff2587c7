#include <random>

#include "cobord/error.hpp"
#include "cobord/presentations.hpp"
#include "doctest.h"

using namespace cobord;

namespace {

std::vector<std::string> texts(const std::vector<Series>& series) {
    std::vector<std::string> out;
    for (const auto& s : series) out.push_back(to_string(s));
    return out;
}

std::vector<Integer> ints(std::initializer_list<long> values) {
    std::vector<Integer> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

GradedComponent component(int degree, int rank, std::initializer_list<long> torsion) {
    return GradedComponent{degree, rank, ints(torsion)};
}

// Invariant factors of a diagonalizable matrix from the determinantal-divisor
// definition: d_k = gcd of all k x k minors, invariant k = d_k / d_(k-1).
// Brute force, used only on small matrices.
Integer det(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Integer total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Integer>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Integer> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        Integer term = m[0][j] * det(minor);
        total += (j % 2 ? -term : term);
    }
    return total;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<Integer> determinantal_invariants(const std::vector<std::vector<Integer>>& m) {
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<Integer> out;
    Integer previous = 1;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        subsets(rows, k, 0, cur, rs);
        subsets(cols, k, 0, cur, cs);
        Integer g = 0;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                std::vector<std::vector<Integer>> sub;
                for (auto i : r) {
                    std::vector<Integer> row;
                    for (auto j : c) row.push_back(m[i][j]);
                    sub.push_back(row);
                }
                g = gcd(g, det(sub));
            }
        if (g == 0) break;
        out.push_back(g / previous);
        previous = g;
    }
    return out;
}

}  // namespace

TEST_CASE("group descriptors") {
    for (const char* text : {"GL(3)", "SL(2)", "Sp(4)", "O(5)", "SO(5)", "Z/2", "Z/2xZ/4xZ/3", "Q8", "D8"})
        CHECK(parse_group(text).to_string() == text);
    CHECK(parse_group("Z/2xZ/4").orders == std::vector<int>{2, 4});
    for (const char* text : {"Sp(3)", "SO(4)", "U(2)", "Z/", "GL()", "Z/0", "GL(2"})
        CHECK_THROWS_AS(parse_group(text), Error);
}

TEST_CASE("classical presentations") {
    FormalGroupLaw free = build_model(ModelKind::UniversalFree, 6);
    GradedPresentation gl = present(parse_group("GL(2)"), free);
    CHECK(gl.generators == std::vector<PresentationGenerator>{{"c1", 1}, {"c2", 2}});
    CHECK(gl.relations.empty());
    CHECK(gl.coefficients.tag == CoefficientDescriptor::Tag::LazardFree);
    CHECK(present(parse_group("SL(3)"), free).generators == std::vector<PresentationGenerator>{{"c2", 2}, {"c3", 3}});
    CHECK(present(parse_group("Sp(6)"), free).generators ==
          std::vector<PresentationGenerator>{{"c2", 2}, {"c4", 4}, {"c6", 6}});
    CHECK_THROWS_AS(present(parse_group("Sp(8)"), free), Error);

    FormalGroupLaw add = build_model(ModelKind::Additive, 6);
    GradedPresentation o2 = present(parse_group("O(2)"), add);
    CHECK(texts(o2.relations) == std::vector<std::string>{"2*c1", "0"});

    // c1 - c1* = c1 - [-1](c1) in the free model.
    GradedPresentation o1 = present(parse_group("O(1)"), build_model(ModelKind::UniversalFree, 3));
    CHECK(to_string(o1.relations[0]) == "2*c1 - a[1,1]*c1^2 + a[1,1]^2*c1^3");

    GradedPresentation so3 = present(parse_group("SO(3)"), free);
    CHECK(so3.generators == std::vector<PresentationGenerator>{{"c2", 2}, {"c3", 3}});
    CHECK(so3.relations.size() == 2);
}

TEST_CASE("chow specialization of orthogonal groups") {
    for (auto kind : {ModelKind::UniversalFree, ModelKind::UniversalLog}) {
        FormalGroupLaw F = build_model(kind, 6);
        for (int n = 1; n <= 5; ++n) {
            GradedPresentation chow = chow_specialize(present(Group{Group::Kind::O, n, {}}, F));
            std::vector<std::string> expected;
            for (int i = 1; i <= n; i += 2) expected.push_back("2*c" + std::to_string(i));
            CHECK(texts(chow.relations) == expected);
            CHECK(chow.coefficients.tag == CoefficientDescriptor::Tag::Integers);
        }
    }
}

TEST_CASE("chow specialization commutes with the additive model") {
    FormalGroupLaw free = build_model(ModelKind::UniversalFree, 6);
    FormalGroupLaw add = build_model(ModelKind::Additive, 6);
    for (const char* g : {"GL(3)", "SL(3)", "Sp(4)", "O(4)", "SO(5)", "Z/4xZ/6", "Q8"}) {
        INFO(g);
        GradedPresentation a = chow_specialize(present(parse_group(g), free));
        GradedPresentation b = chow_specialize(present(parse_group(g), add));
        CHECK(structurally_equal(a, b));
    }
}

TEST_CASE("quaternion relations") {
    FormalGroupLaw add = build_model(ModelKind::Additive, 4);
    CHECK(texts(bq_relations(add)) ==
          std::vector<std::string>{"x^2", "y^2", "2*x", "2*y", "x^2 + 3*x*y + y^2 - 4*z", "-8*z"});

    for (auto kind : {ModelKind::UniversalFree, ModelKind::UniversalLog, ModelKind::Multiplicative}) {
        GradedPresentation chow = chow_specialize(present(parse_group("Q8"), build_model(kind, 4)));
        CHECK(texts(chow.relations) ==
              std::vector<std::string>{"x^2", "y^2", "2*x", "2*y", "x^2 + 3*x*y + y^2 - 4*z", "-8*z"});
    }

    // Modulo the first four images the fifth becomes x*y - 4z.
    GradedPresentation q = chow_specialize(present(parse_group("Q8"), add));
    GradedPresentation first_four = q;
    first_four.relations.resize(4);
    CHECK(to_string(lattice_normal_form(first_four, q.relations[4])) == "x*y - 4*z");
}

TEST_CASE("quaternion relations agree between the free and log models") {
    const int D = 4;
    CoeffHom images = log_images(D);
    std::vector<Series> free = bq_relations(build_model(ModelKind::UniversalFree, D));
    std::vector<Series> log = bq_relations(build_model(ModelKind::UniversalLog, D));
    REQUIRE(free.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
        Series pushed = free[i].map_coefficients([&](const CoeffPoly& c) { return apply_hom(c, images); });
        CHECK(pushed == log[i]);
    }
}

TEST_CASE("p-series obstruction is reported") {
    FormalGroupLaw add = build_model(ModelKind::Additive, 4);
    CHECK_NOTHROW(bq_relations(add));
    Series x = Series::variable(FormalGroupLaw::kX, 4), y = Series::variable(FormalGroupLaw::kY, 4);
    // x + y + x^2*y is not a law, but it makes x + [-1](x) start in odd degree with no u-partner.
    FormalGroupLaw odd(ModelKind::Custom, x + y + x * x * y, 6);
    try {
        bq_relations(odd);
        FAIL("expected PSeriesObstructed");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PSeriesObstructed);
    }
}

TEST_CASE("graded components") {
    FormalGroupLaw add = build_model(ModelKind::Additive, 6);
    FormalGroupLaw free = build_model(ModelKind::UniversalFree, 6);
    GradedPresentation q = chow_specialize(present(parse_group("Q8"), free));
    CHECK(graded_component(q, 0) == component(0, 1, {}));
    CHECK(graded_component(q, 1) == component(1, 0, {2, 2}));
    CHECK(graded_component(q, 2) == component(2, 0, {8}));
    CHECK(graded_component(q, 3) == component(3, 0, {2, 2}));

    for (int n : {2, 3, 4, 8}) {
        GradedPresentation zn = chow_specialize(present(Group{Group::Kind::CyclicProduct, 0, {n}}, free));
        CHECK(to_string(zn.relations[0]) == std::to_string(n) + "*x");
        for (int d = 1; d <= 6; ++d) CHECK(graded_component(zn, d) == component(d, 0, {n}));
    }

    GradedPresentation d8 = dihedral_chow_fixture();
    CHECK(graded_component(d8, 1) == component(1, 0, {2, 2}));
    // Degree 2: x^2, xy, y^2, z modulo 2x^2, 2xy, 2y^2, 4z, xy - 2z.
    CHECK(graded_component(d8, 2) == component(2, 0, {2, 2, 4}));

    GradedPresentation gl = chow_specialize(present(parse_group("GL(2)"), add));
    CHECK(graded_component(gl, 4) == component(4, 3, {}));

    GradedPresentation bad = q;
    bad.relations.push_back(Series::variable("x", 6) + Series::variable(SeriesVar{"z", 2}, 6));
    CHECK_THROWS_AS(graded_component(bad, 2), Error);
    CHECK_THROWS_AS(graded_component(present(parse_group("Z/2"), free), 1), Error);
}

TEST_CASE("Smith invariants agree with determinantal divisors") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> entry(-6, 6);
    std::uniform_int_distribution<int> size(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t rows = static_cast<std::size_t>(size(rng)), cols = static_cast<std::size_t>(size(rng));
        std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
        for (auto& row : m)
            for (auto& x : row) x = (trial % 3 == 0) ? entry(rng) * 4 : entry(rng);
        CHECK(smith_invariants(m) == determinantal_invariants(m));
    }
}

TEST_CASE("kunneth products") {
    FormalGroupLaw free = build_model(ModelKind::UniversalFree, 6);
    GradedPresentation z2 = present(parse_group("Z/2"), free);
    GradedPresentation prod = kunneth(z2, z2);
    CHECK(prod.generators == std::vector<PresentationGenerator>{{"x1", 1}, {"x2", 1}});
    CHECK(structurally_equal(prod, present(parse_group("Z/2xZ/2"), free)));
    CHECK(structurally_equal(kunneth(z2, point_presentation(z2.coefficients)), z2));
    CHECK(structurally_equal(kunneth(point_presentation(z2.coefficients), z2), z2));
    CHECK(graded_component(chow_specialize(prod), 1) == component(1, 0, {2, 2}));

    std::vector<std::vector<int>> cases{{2, 4}, {3, 4, 6}, {2, 2, 2}, {4, 6}, {8, 3, 2, 5}};
    for (const auto& orders : cases) {
        GradedPresentation acc = present(Group{Group::Kind::CyclicProduct, 0, {orders[0]}}, free);
        for (std::size_t i = 1; i < orders.size(); ++i)
            acc = kunneth(acc, present(Group{Group::Kind::CyclicProduct, 0, {orders[i]}}, free));
        CHECK(structurally_equal(acc, present(Group{Group::Kind::CyclicProduct, 0, orders}, free)));
        // Expected chain from the elementary divisors, computed by the brute-force oracle.
        std::vector<std::vector<Integer>> diag(orders.size(), std::vector<Integer>(orders.size(), 0));
        for (std::size_t i = 0; i < orders.size(); ++i) diag[i][i] = orders[i];
        std::vector<Integer> expected;
        for (const auto& d : determinantal_invariants(diag))
            if (d > 1) expected.push_back(d);
        CHECK(graded_component(chow_specialize(acc), 1).torsion == expected);
    }

    // Colliding stems keep counting.
    GradedPresentation triple = kunneth(prod, z2);
    CHECK(triple.generators.back().name == "x3");
    GradedPresentation mixed = kunneth(present(parse_group("GL(1)"), free), z2);
    CHECK(mixed.generators == std::vector<PresentationGenerator>{{"c1", 1}, {"x", 1}});
}
