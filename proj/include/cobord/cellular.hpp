#pragma once

// Cell decompositions of projective spaces, Grassmannians and their products,
// and the free-module data (generator degrees, ranks per degree) they give.

#include <string>
#include <string_view>
#include <vector>

namespace cobord {

struct Space {
    enum class Kind { Point, Projective, Grassmannian, Product };
    Kind kind = Kind::Point;
    int k = 0;
    int n = 0;
    std::vector<Space> factors;  // Product only

    static Space point() { return {}; }
    static Space projective(int n);
    static Space grassmannian(int k, int n);
    static Space product(std::vector<Space> factors);

    std::string to_string() const;
};

// Whitespace tokens: "point", "p N", "gr K N", joined by "x" for products.
Space parse_space(std::string_view text);

struct Cell {
    std::string label;
    int dim;

    friend bool operator==(const Cell&, const Cell&) = default;
};

struct CellComplex {
    std::string name;
    std::vector<Cell> cells;
    int dimension = 0;
};

CellComplex build_complex(const Space& space);

struct ModulePresentation {
    std::vector<int> generator_degrees;  // one per cell, codimension grading
    std::vector<int> ranks;              // ranks[d] = generators in degree d, d = 0..dimension
};

ModulePresentation module_presentation(const CellComplex& c);

}  // namespace cobord
