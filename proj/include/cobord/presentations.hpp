#pragma once

// Graded presentations of cobordism rings of classifying spaces, their Chow
// specializations, Kunneth products, and exact graded components over Z.

#include <string>
#include <string_view>
#include <vector>

#include "cobord/coeff.hpp"
#include "cobord/fgl.hpp"
#include "cobord/series.hpp"

namespace cobord {

struct CoefficientDescriptor {
    enum class Tag { LazardFree, LogModel, Integers, Custom };
    Tag tag = Tag::Integers;
    int bound = kDefaultBound;
    int coeff_bound = kDefaultCoeffBound;

    friend bool operator==(const CoefficientDescriptor&, const CoefficientDescriptor&) = default;
};

std::string_view to_string(CoefficientDescriptor::Tag tag);
CoefficientDescriptor::Tag parse_coefficient_tag(std::string_view text);
CoefficientDescriptor descriptor_for(const FormalGroupLaw& law);

struct Group {
    enum class Kind { GL, SL, Sp, O, SO, CyclicProduct, Q8, D8 };
    Kind kind = Kind::GL;
    int n = 0;                // matrix size; Sp(2m) and SO(2m+1) store the full size
    std::vector<int> orders;  // CyclicProduct only

    std::string to_string() const;
    friend bool operator==(const Group&, const Group&) = default;
};

// GL(n), SL(n), Sp(2n), O(n), SO(2n+1), Z/n1xZ/n2..., Q8, D8.
Group parse_group(std::string_view text);

struct PresentationGenerator {
    std::string name;
    int degree;

    friend bool operator==(const PresentationGenerator&, const PresentationGenerator&) = default;
};

struct GradedPresentation {
    CoefficientDescriptor coefficients;
    std::vector<PresentationGenerator> generators;  // sorted by (degree, name)
    std::vector<Series> relations;                  // over vars()
    std::string group;
    std::string formula;

    std::vector<SeriesVar> vars() const;
};

// Same coefficients, generators and relations; metadata ignored.
bool structurally_equal(const GradedPresentation& a, const GradedPresentation& b);

GradedPresentation present(const Group& group, const FormalGroupLaw& law);

// The six quaternion relations in x, y (degree 1) and z (degree 2).
std::vector<Series> bq_relations(const FormalGroupLaw& law);

// a + b + c - [2](m) - [2](n) and a*b*c, pushed through the same pipeline.
std::vector<Series> bq_auxiliary_relations(const FormalGroupLaw& law);

// Every coefficient generator sent to zero, zero relations dropped,
// homogeneity checked.
GradedPresentation chow_specialize(const GradedPresentation& p);

// Z[x_D, y_D, z_D] / (2x_D, 2y_D, 4z_D, x_D y_D - 2z_D).
GradedPresentation dihedral_chow_fixture(int bound = kDefaultBound);

GradedPresentation point_presentation(const CoefficientDescriptor& coefficients);

// Tensor product over the coefficients; colliding generator stems are renumbered.
GradedPresentation kunneth(const GradedPresentation& a, const GradedPresentation& b);

struct GradedComponent {
    int degree = 0;
    int rank = 0;
    std::vector<Integer> torsion;  // invariant factors > 1, each dividing the next

    friend bool operator==(const GradedComponent&, const GradedComponent&) = default;
};

GradedComponent graded_component(const GradedPresentation& p, int degree);

// Monomials of weighted degree d, lexicographically descending.
std::vector<Exponents> monomial_basis(const std::vector<SeriesVar>& vars, int degree);

// Canonical representative of a homogeneous integral f modulo the relation
// lattice in its degree: Hermite-reduced, each pivot entry taken in [0, pivot).
Series lattice_normal_form(const GradedPresentation& p, const Series& f);

// Invariant factors (nonzero diagonal of the Smith form) of an integer matrix.
std::vector<Integer> smith_invariants(std::vector<std::vector<Integer>> matrix);

}  // namespace cobord
