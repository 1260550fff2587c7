#include "cobord/cellular.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cobord/error.hpp"

namespace cobord {

Space Space::projective(int n) {
    if (n < 0) throw Error(ErrorKind::InvalidParameters, "P(n) needs n >= 0");
    Space s;
    s.kind = Kind::Projective;
    s.n = n;
    return s;
}

Space Space::grassmannian(int k, int n) {
    if (k < 0 || n < k) throw Error(ErrorKind::InvalidParameters, "Gr(k,n) needs 0 <= k <= n");
    Space s;
    s.kind = Kind::Grassmannian;
    s.k = k;
    s.n = n;
    return s;
}

Space Space::product(std::vector<Space> factors) {
    if (factors.size() == 1) return factors.front();
    Space s;
    s.kind = Kind::Product;
    s.factors = std::move(factors);
    return s;
}

std::string Space::to_string() const {
    switch (kind) {
        case Kind::Point: return "point";
        case Kind::Projective: return "P(" + std::to_string(n) + ")";
        case Kind::Grassmannian: return "Gr(" + std::to_string(k) + "," + std::to_string(n) + ")";
        case Kind::Product: {
            std::string out;
            for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? " x " : "") + factors[i].to_string();
            return out;
        }
    }
    return {};
}

Space parse_space(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) tokens.push_back(t);
    auto number = [&](std::size_t i) {
        if (i >= tokens.size()) throw Error(ErrorKind::ParseError, "space description ends early");
        try {
            std::size_t used = 0;
            int v = std::stoi(tokens[i], &used);
            if (used != tokens[i].size()) throw std::invalid_argument(tokens[i]);
            return v;
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::ParseError, "expected an integer, got '" + tokens[i] + "'");
        }
    };
    std::vector<Space> factors;
    std::size_t i = 0;
    while (i < tokens.size()) {
        const std::string& head = tokens[i];
        if (head == "point") {
            factors.push_back(Space::point());
            i += 1;
        } else if (head == "p" || head == "P") {
            factors.push_back(Space::projective(number(i + 1)));
            i += 2;
        } else if (head == "gr" || head == "Gr") {
            factors.push_back(Space::grassmannian(number(i + 1), number(i + 2)));
            i += 3;
        } else {
            throw Error(ErrorKind::ParseError, "unknown space '" + head + "'");
        }
        if (i < tokens.size()) {
            if (tokens[i] != "x") throw Error(ErrorKind::ParseError, "expected 'x' between factors");
            if (++i == tokens.size()) throw Error(ErrorKind::ParseError, "space description ends early");
        }
    }
    if (factors.empty()) throw Error(ErrorKind::ParseError, "empty space description");
    return Space::product(std::move(factors));
}

namespace {

void partitions(int rows, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == rows) {
        out.push_back(current);
        return;
    }
    for (int p = 0; p <= max_part; ++p) {
        current.push_back(p);
        partitions(rows, p, current, out);
        current.pop_back();
    }
}

std::string partition_label(const std::vector<int>& lambda) {
    std::string out = "[";
    bool first = true;
    for (int p : lambda) {
        if (p == 0) continue;
        out += (first ? "" : ",") + std::to_string(p);
        first = false;
    }
    return out + "]";
}

}  // namespace

CellComplex build_complex(const Space& space) {
    CellComplex c;
    c.name = space.to_string();
    switch (space.kind) {
        case Space::Kind::Point:
            c.cells.push_back({"pt", 0});
            break;
        case Space::Kind::Projective:
            c.dimension = space.n;
            for (int d = 0; d <= space.n; ++d) c.cells.push_back({"e" + std::to_string(d), d});
            break;
        case Space::Kind::Grassmannian: {
            c.dimension = space.k * (space.n - space.k);
            std::vector<std::vector<int>> parts;
            std::vector<int> current;
            partitions(space.k, space.n - space.k, current, parts);
            for (const auto& lambda : parts) {
                int size = 0;
                for (int p : lambda) size += p;
                c.cells.push_back({partition_label(lambda), size});
            }
            std::stable_sort(c.cells.begin(), c.cells.end(), [](const Cell& a, const Cell& b) { return a.dim < b.dim; });
            break;
        }
        case Space::Kind::Product: {
            c.cells.push_back({"", 0});
            for (std::size_t f = 0; f < space.factors.size(); ++f) {
                CellComplex factor = build_complex(space.factors[f]);
                std::vector<Cell> next;
                for (const auto& a : c.cells)
                    for (const auto& b : factor.cells)
                        next.push_back({f == 0 ? b.label : a.label + "x" + b.label, a.dim + b.dim});
                c.cells = std::move(next);
                c.dimension += factor.dimension;
            }
            std::stable_sort(c.cells.begin(), c.cells.end(), [](const Cell& a, const Cell& b) { return a.dim < b.dim; });
            break;
        }
    }
    return c;
}

ModulePresentation module_presentation(const CellComplex& c) {
    ModulePresentation out;
    out.ranks.assign(static_cast<std::size_t>(c.dimension) + 1, 0);
    for (const auto& cell : c.cells) {
        const int degree = c.dimension - cell.dim;
        out.generator_degrees.push_back(degree);
        ++out.ranks[static_cast<std::size_t>(degree)];
    }
    return out;
}

}  // namespace cobord
