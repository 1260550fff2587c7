#include "cobord/presentations.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "cobord/chern.hpp"
#include "cobord/error.hpp"

namespace cobord {

std::string_view to_string(CoefficientDescriptor::Tag tag) {
    switch (tag) {
        case CoefficientDescriptor::Tag::LazardFree: return "lazard-free";
        case CoefficientDescriptor::Tag::LogModel: return "log";
        case CoefficientDescriptor::Tag::Integers: return "integers";
        case CoefficientDescriptor::Tag::Custom: return "custom";
    }
    return "custom";
}

CoefficientDescriptor::Tag parse_coefficient_tag(std::string_view text) {
    for (auto tag : {CoefficientDescriptor::Tag::LazardFree, CoefficientDescriptor::Tag::LogModel,
                     CoefficientDescriptor::Tag::Integers, CoefficientDescriptor::Tag::Custom})
        if (to_string(tag) == text) return tag;
    throw Error(ErrorKind::ParseError, "unknown coefficient tag '" + std::string(text) + "'");
}

CoefficientDescriptor descriptor_for(const FormalGroupLaw& law) {
    CoefficientDescriptor d;
    d.bound = law.bound();
    d.coeff_bound = law.coeff_bound();
    switch (law.kind()) {
        case ModelKind::UniversalFree: d.tag = CoefficientDescriptor::Tag::LazardFree; break;
        case ModelKind::UniversalLog: d.tag = CoefficientDescriptor::Tag::LogModel; break;
        case ModelKind::Additive: d.tag = CoefficientDescriptor::Tag::Integers; break;
        default: d.tag = CoefficientDescriptor::Tag::Custom; break;
    }
    return d;
}

std::string Group::to_string() const {
    switch (kind) {
        case Kind::GL: return "GL(" + std::to_string(n) + ")";
        case Kind::SL: return "SL(" + std::to_string(n) + ")";
        case Kind::Sp: return "Sp(" + std::to_string(n) + ")";
        case Kind::O: return "O(" + std::to_string(n) + ")";
        case Kind::SO: return "SO(" + std::to_string(n) + ")";
        case Kind::Q8: return "Q8";
        case Kind::D8: return "D8";
        case Kind::CyclicProduct: {
            std::string out;
            for (std::size_t i = 0; i < orders.size(); ++i) out += (i ? "xZ/" : "Z/") + std::to_string(orders[i]);
            return out;
        }
    }
    return {};
}

namespace {

int parse_positive(std::string_view digits, std::string_view whole) {
    if (digits.empty() || digits.size() > 6 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw Error(ErrorKind::UnsupportedGroup, "cannot parse group '" + std::string(whole) + "'");
    int v = std::stoi(std::string(digits));
    if (v < 1) throw Error(ErrorKind::UnsupportedGroup, "group size must be positive in '" + std::string(whole) + "'");
    return v;
}

}  // namespace

Group parse_group(std::string_view text) {
    Group g;
    if (text == "Q8") {
        g.kind = Group::Kind::Q8;
        return g;
    }
    if (text == "D8") {
        g.kind = Group::Kind::D8;
        return g;
    }
    if (text.rfind("Z/", 0) == 0) {
        g.kind = Group::Kind::CyclicProduct;
        std::string_view rest = text;
        while (!rest.empty()) {
            if (rest.rfind("Z/", 0) != 0) throw Error(ErrorKind::UnsupportedGroup, "cannot parse group '" + std::string(text) + "'");
            rest.remove_prefix(2);
            std::size_t cut = rest.find('x');
            g.orders.push_back(parse_positive(rest.substr(0, cut), text));
            if (cut == std::string_view::npos) break;
            rest.remove_prefix(cut + 1);
        }
        return g;
    }
    const std::size_t open = text.find('(');
    if (open == std::string_view::npos || text.back() != ')')
        throw Error(ErrorKind::UnsupportedGroup, "unsupported group '" + std::string(text) + "'");
    std::string_view family = text.substr(0, open);
    g.n = parse_positive(text.substr(open + 1, text.size() - open - 2), text);
    if (family == "GL") g.kind = Group::Kind::GL;
    else if (family == "SL") g.kind = Group::Kind::SL;
    else if (family == "Sp") g.kind = Group::Kind::Sp;
    else if (family == "O") g.kind = Group::Kind::O;
    else if (family == "SO") g.kind = Group::Kind::SO;
    else throw Error(ErrorKind::UnsupportedGroup, "unsupported group '" + std::string(text) + "'");
    if (g.kind == Group::Kind::Sp && g.n % 2 != 0)
        throw Error(ErrorKind::UnsupportedGroup, "Sp(n) needs even n");
    if (g.kind == Group::Kind::SO && (g.n % 2 == 0 || g.n < 3))
        throw Error(ErrorKind::UnsupportedGroup, "only odd orthogonal groups SO(2n+1), n >= 1, are supported");
    return g;
}

std::vector<SeriesVar> GradedPresentation::vars() const {
    std::vector<SeriesVar> out;
    for (const auto& g : generators) out.push_back(SeriesVar{g.name, g.degree});
    return out;
}

bool structurally_equal(const GradedPresentation& a, const GradedPresentation& b) {
    if (!(a.coefficients == b.coefficients) || a.generators != b.generators) return false;
    if (a.relations.size() != b.relations.size()) return false;
    for (std::size_t i = 0; i < a.relations.size(); ++i)
        if (!(a.relations[i] == b.relations[i])) return false;
    return true;
}

namespace {

void sort_generators(std::vector<PresentationGenerator>& gens) {
    std::stable_sort(gens.begin(), gens.end(), [](const auto& l, const auto& r) {
        return l.degree != r.degree ? l.degree < r.degree : l.name < r.name;
    });
}

GradedPresentation make_presentation(const CoefficientDescriptor& coefficients,
                                     std::vector<PresentationGenerator> gens, std::vector<Series> relations,
                                     std::string group, std::string formula) {
    GradedPresentation p;
    p.coefficients = coefficients;
    sort_generators(gens);
    p.generators = std::move(gens);
    for (const auto& g : p.generators)
        if (g.degree > coefficients.bound)
            throw Error(ErrorKind::BoundTooSmall, "bound " + std::to_string(coefficients.bound) +
                                                      " is below generator degree " + std::to_string(g.degree));
    const auto vars = p.vars();
    for (auto& r : relations) p.relations.push_back(r.with_vars(vars));
    p.group = std::move(group);
    p.formula = std::move(formula);
    return p;
}

std::vector<PresentationGenerator> chern_generators(const std::vector<int>& indices) {
    std::vector<PresentationGenerator> out;
    for (int i : indices) out.push_back({"c" + std::to_string(i), i});
    return out;
}

std::string list_names(const std::vector<PresentationGenerator>& gens) {
    std::string out;
    for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? "," : "") + gens[i].name;
    return out;
}

// a, b, m, n pipeline: reduce in (m, n), eliminate m + n through P, rename.
class QuaternionPipeline {
public:
    explicit QuaternionPipeline(const FormalGroupLaw& law) : law_(law), bound_(law.bound()) {
        ExpressResult p = p_series(law);
        if (!p.residual.is_zero())
            throw Error(ErrorKind::PSeriesObstructed,
                        "x + [-1](x) is not a series in x*[-1](x) at bound " + std::to_string(bound_) +
                            "; residual " + to_string(p.residual));
        p_of_e2_ = p.result.renamed({{"u", "e2"}});
    }

    Series var(const char* name) const { return Series::variable(name, bound_); }

    Series finish(const Series& rel) const {
        const std::vector<SeriesVar> roots{{"a", 1}, {"b", 1}, {"m", 1}, {"n", 1}};
        Series reduced = symmetric_reduce(rel.with_vars(merge_vars(roots, rel.vars())), {"m", "n"}, {"e1", "e2"});
        Series eliminated = substitute(reduced, {{"e1", p_of_e2_}});
        Series renamed = eliminated.renamed({{"a", "x"}, {"b", "y"}, {"e2", "z"}});
        return renamed.with_vars({{"x", 1}, {"y", 1}, {"z", 2}});
    }

    const FormalGroupLaw& law() const { return law_; }

private:
    const FormalGroupLaw& law_;
    int bound_;
    Series p_of_e2_;
};

}  // namespace

std::vector<Series> bq_relations(const FormalGroupLaw& law) {
    QuaternionPipeline pipe(law);
    Series a = pipe.var("a"), b = pipe.var("b"), m = pipe.var("m"), n = pipe.var("n");
    Series c = formal_sum(law, a, b);
    Series two_m = formal_sum(law, m, m), two_n = formal_sum(law, n, n);

    Bundle eta = Bundle::sum({Bundle::line("m"), Bundle::line("n")});
    Series G = chern_class(Bundle::multiple(4, eta), 2, law);
    Series H = chern_class(Bundle::tensor({eta, eta, eta}), 2, law);

    std::vector<Series> raw{
        formal_sum(law, a, m) * formal_sum(law, a, n) - m * n,
        formal_sum(law, b, m) * formal_sum(law, b, n) - m * n,
        formal_sum(law, a, a),
        formal_sum(law, b, b),
        a * b + b * c + c * a - two_m * two_n,
        G - H,
    };
    std::vector<Series> out;
    for (const auto& r : raw) out.push_back(pipe.finish(r));
    return out;
}

std::vector<Series> bq_auxiliary_relations(const FormalGroupLaw& law) {
    QuaternionPipeline pipe(law);
    Series a = pipe.var("a"), b = pipe.var("b"), m = pipe.var("m"), n = pipe.var("n");
    Series c = formal_sum(law, a, b);
    return {pipe.finish(a + b + c - formal_sum(law, m, m) - formal_sum(law, n, n)), pipe.finish(a * b * c)};
}

GradedPresentation present(const Group& group, const FormalGroupLaw& law) {
    const CoefficientDescriptor coeffs = descriptor_for(law);
    const std::string name = group.to_string();
    switch (group.kind) {
        case Group::Kind::GL: {
            std::vector<int> idx;
            for (int i = 1; i <= group.n; ++i) idx.push_back(i);
            auto gens = chern_generators(idx);
            return make_presentation(coeffs, gens, {}, name, "Omega*[[" + list_names(gens) + "]]");
        }
        case Group::Kind::SL: {
            std::vector<int> idx;
            for (int i = 2; i <= group.n; ++i) idx.push_back(i);
            auto gens = chern_generators(idx);
            return make_presentation(coeffs, gens, {}, name, "Omega*[[" + list_names(gens) + "]]");
        }
        case Group::Kind::Sp: {
            std::vector<int> idx;
            for (int i = 2; i <= group.n; i += 2) idx.push_back(i);
            auto gens = chern_generators(idx);
            return make_presentation(coeffs, gens, {}, name, "Omega*[[" + list_names(gens) + "]]");
        }
        case Group::Kind::O:
        case Group::Kind::SO: {
            const bool special = group.kind == Group::Kind::SO;
            if (law.bound() < group.n)
                throw Error(ErrorKind::BoundTooSmall, "bound is below the top chern class degree");
            std::vector<Series> duals = dual_chern_classes(group.n, law);
            std::vector<int> idx;
            std::vector<Series> relations;
            for (int i = special ? 2 : 1; i <= group.n; ++i) {
                idx.push_back(i);
                Series c = Series::variable(SeriesVar{"c" + std::to_string(i), i}, law.bound());
                Series rel = c - duals[static_cast<std::size_t>(i)];
                if (special) rel = substitute(rel, {{"c1", Series({}, law.bound())}});
                relations.push_back(rel);
            }
            auto gens = chern_generators(idx);
            return make_presentation(coeffs, gens, relations, name,
                                     "Omega*[[" + list_names(gens) + "]]/(c_i - c_i*)");
        }
        case Group::Kind::CyclicProduct: {
            std::vector<PresentationGenerator> gens;
            std::vector<Series> relations;
            std::string rels;
            const std::size_t r = group.orders.size();
            for (std::size_t i = 0; i < r; ++i) {
                std::string v = r == 1 ? "x" : "x" + std::to_string(i + 1);
                gens.push_back({v, 1});
                relations.push_back(n_series(law, group.orders[i], SeriesVar{v, 1}));
                rels += (i ? ", [" : "[") + std::to_string(group.orders[i]) + "](" + v + ")";
            }
            return make_presentation(coeffs, gens, relations, name,
                                     "Omega*[[" + list_names(gens) + "]]/(" + rels + ")");
        }
        case Group::Kind::Q8:
            return make_presentation(coeffs, {{"x", 1}, {"y", 1}, {"z", 2}}, bq_relations(law), name,
                                     "Omega*[[x,y,z]]/(R1,...,R6)");
        case Group::Kind::D8: return dihedral_chow_fixture(law.bound());
    }
    throw Error(ErrorKind::UnsupportedGroup, "unsupported group " + name);
}

GradedPresentation chow_specialize(const GradedPresentation& p) {
    std::vector<Series> relations;
    for (const auto& r : p.relations) {
        Series image = r.map_coefficients([](const CoeffPoly& c) {
            CoeffPoly constant;
            for (const auto& [mono, value] : c.terms())
                if (mono.is_one()) constant.add_term(mono, value);
            return constant;
        });
        if (image.is_zero()) continue;
        const int degree = *image.order();
        for (const auto& [e, c] : image.terms())
            if (image.weighted_degree(e) != degree)
                throw Error(ErrorKind::NonHomogeneousRelation, "chow image is not homogeneous: " + to_string(image));
        relations.push_back(image);
    }
    CoefficientDescriptor coeffs = p.coefficients;
    coeffs.tag = CoefficientDescriptor::Tag::Integers;
    return make_presentation(coeffs, p.generators, relations, p.group, "CH*: " + p.formula);
}

GradedPresentation dihedral_chow_fixture(int bound) {
    CoefficientDescriptor coeffs;
    coeffs.bound = bound;
    auto v = [&](const char* name, int w) { return Series::variable(SeriesVar{name, w}, bound); };
    Series x = v("xD", 1), y = v("yD", 1), z = v("zD", 2);
    return make_presentation(coeffs, {{"xD", 1}, {"yD", 1}, {"zD", 2}},
                             {2L * x, 2L * y, 4L * z, x * y - 2L * z}, "D8",
                             "Z[xD,yD,zD]/(2xD, 2yD, 4zD, xD*yD - 2zD)");
}

GradedPresentation point_presentation(const CoefficientDescriptor& coefficients) {
    return make_presentation(coefficients, {}, {}, "1", "Omega*");
}

namespace {

std::string stem_of(const std::string& name) {
    std::size_t end = name.size();
    while (end > 0 && std::isdigit(static_cast<unsigned char>(name[end - 1]))) --end;
    return name.substr(0, end);
}

}  // namespace

GradedPresentation kunneth(const GradedPresentation& a, const GradedPresentation& b) {
    if (b.generators.empty() && b.relations.empty()) return a;
    if (a.generators.empty() && a.relations.empty()) return b;
    if (!(a.coefficients == b.coefficients))
        throw Error(ErrorKind::InvalidParameters, "kunneth factors need the same coefficients");

    std::set<std::string> stems_a, stems_b;
    for (const auto& g : a.generators) stems_a.insert(stem_of(g.name));
    for (const auto& g : b.generators) stems_b.insert(stem_of(g.name));

    std::map<std::string, int> counters;
    auto rename_all = [&](const GradedPresentation& p) {
        std::map<std::string, std::string> names;
        for (const auto& g : p.generators) {
            std::string s = stem_of(g.name);
            if (stems_a.count(s) && stems_b.count(s)) names[g.name] = s + std::to_string(++counters[s]);
            else names[g.name] = g.name;
        }
        return names;
    };
    auto names_a = rename_all(a);
    auto names_b = rename_all(b);

    std::vector<PresentationGenerator> gens;
    for (const auto& g : a.generators) gens.push_back({names_a[g.name], g.degree});
    for (const auto& g : b.generators) gens.push_back({names_b[g.name], g.degree});
    std::vector<Series> relations;
    for (const auto& r : a.relations) relations.push_back(r.renamed(names_a));
    for (const auto& r : b.relations) relations.push_back(r.renamed(names_b));
    return make_presentation(a.coefficients, gens, relations, a.group + " x " + b.group,
                             "(" + a.formula + ") (x) (" + b.formula + ")");
}

std::vector<Exponents> monomial_basis(const std::vector<SeriesVar>& vars, int degree) {
    std::vector<Exponents> out;
    Exponents e(vars.size(), 0);
    // Depth-first with the largest exponent of each variable tried first gives lex-descending order.
    auto recurse = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == vars.size()) {
            if (left == 0) out.push_back(e);
            return;
        }
        for (int p = left / vars[i].weight; p >= 0; --p) {
            e[i] = p;
            self(self, i + 1, left - p * vars[i].weight);
        }
        e[i] = 0;
    };
    if (degree >= 0) recurse(recurse, 0, degree);
    return out;
}

namespace {

struct IntegralRelation {
    int degree;
    std::vector<std::pair<Exponents, Integer>> terms;
};

std::vector<IntegralRelation> integral_relations(const GradedPresentation& p) {
    std::vector<IntegralRelation> out;
    const auto vars = p.vars();
    for (const auto& r0 : p.relations) {
        Series r = r0.with_vars(vars);
        if (r.is_zero()) continue;
        IntegralRelation rel{*r.order(), {}};
        for (const auto& [e, c] : r.terms()) {
            auto value = c.constant_value();
            if (!value)
                throw Error(ErrorKind::InvalidParameters, "graded components need integer coefficients; got " + to_string(c));
            if (r.weighted_degree(e) != rel.degree)
                throw Error(ErrorKind::NonHomogeneousRelation, "relation is not homogeneous: " + to_string(r));
            rel.terms.emplace_back(e, *value);
        }
        out.push_back(std::move(rel));
    }
    return out;
}

using Matrix = std::vector<std::vector<Integer>>;

Matrix relation_matrix(const GradedPresentation& p, int degree, const std::vector<Exponents>& basis) {
    std::map<Exponents, std::size_t> column;
    for (std::size_t i = 0; i < basis.size(); ++i) column[basis[i]] = i;
    const auto vars = p.vars();
    Matrix rows;
    for (const auto& rel : integral_relations(p)) {
        if (rel.degree > degree) continue;
        for (const auto& shift : monomial_basis(vars, degree - rel.degree)) {
            std::vector<Integer> row(basis.size(), 0);
            for (const auto& [e, c] : rel.terms) {
                Exponents moved = e;
                for (std::size_t i = 0; i < moved.size(); ++i) moved[i] += shift[i];
                row[column.at(moved)] += c;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer trunc_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

std::vector<Integer> smith_invariants(Matrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m.front().size() : 0;
    std::vector<Integer> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Smallest nonzero entry of the remaining block becomes the pivot.
        bool found = false;
        std::size_t pr = t, pc = t;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 && (!found || abs(m[i][j]) < abs(m[pr][pc]))) {
                    pr = i;
                    pc = j;
                    found = true;
                }
        if (!found) break;
        std::swap(m[t], m[pr]);
        for (auto& row : m) std::swap(row[t], row[pc]);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                Integer q = trunc_div(m[i][t], m[t][t]);
                for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                Integer q = trunc_div(m[t][j], m[t][t]);
                for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) clean = false;
            }
            if (clean) break;
            // A remainder smaller than the pivot is left in row or column t; move it in.
            std::size_t best_i = t, best_j = t;
            for (std::size_t i = t + 1; i < rows; ++i)
                if (m[i][t] != 0 && abs(m[i][t]) < abs(m[best_i][best_j])) { best_i = i; best_j = t; }
            for (std::size_t j = t + 1; j < cols; ++j)
                if (m[t][j] != 0 && abs(m[t][j]) < abs(m[best_i][best_j])) { best_i = t; best_j = j; }
            std::swap(m[t], m[best_i]);
            for (auto& row : m) std::swap(row[t], row[best_j]);
        }
        diag.push_back(abs(m[t][t]));
    }
    // Pairwise gcd/lcm turns any diagonal into the divisibility chain.
    for (std::size_t i = 0; i < diag.size(); ++i) {
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            Integer g = gcd(diag[i], diag[j]);
            Integer l = lcm(diag[i], diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    }
    return diag;
}

GradedComponent graded_component(const GradedPresentation& p, int degree) {
    if (degree < 0) throw Error(ErrorKind::InvalidParameters, "component degree must be >= 0");
    const auto basis = monomial_basis(p.vars(), degree);
    std::vector<Integer> invariants = smith_invariants(relation_matrix(p, degree, basis));
    GradedComponent out;
    out.degree = degree;
    out.rank = static_cast<int>(basis.size() - invariants.size());
    for (const auto& d : invariants)
        if (d > 1) out.torsion.push_back(d);
    return out;
}

Series lattice_normal_form(const GradedPresentation& p, const Series& f0) {
    const auto vars = p.vars();
    const Series f = f0.with_vars(vars);
    if (f.is_zero()) return f;
    const int degree = *f.order();
    const auto basis = monomial_basis(vars, degree);
    std::map<Exponents, std::size_t> column;
    for (std::size_t i = 0; i < basis.size(); ++i) column[basis[i]] = i;

    std::vector<Integer> v(basis.size(), 0);
    for (const auto& [e, c] : f.terms()) {
        auto value = c.constant_value();
        if (!value) throw Error(ErrorKind::InvalidParameters, "normal forms need integer coefficients");
        if (f.weighted_degree(e) != degree)
            throw Error(ErrorKind::NonHomogeneousRelation, "normal forms need a homogeneous input");
        v[column.at(e)] = *value;
    }

    Matrix m = relation_matrix(p, degree, basis);
    std::size_t pr = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    for (std::size_t c = 0; c < basis.size() && pr < m.size(); ++c) {
        for (;;) {
            std::size_t best = m.size();
            for (std::size_t i = pr; i < m.size(); ++i)
                if (m[i][c] != 0 && (best == m.size() || abs(m[i][c]) < abs(m[best][c]))) best = i;
            if (best == m.size()) break;
            std::swap(m[pr], m[best]);
            bool clean = true;
            for (std::size_t i = pr + 1; i < m.size(); ++i) {
                if (m[i][c] == 0) continue;
                Integer q = floor_div(m[i][c], m[pr][c]);
                for (std::size_t j = c; j < basis.size(); ++j) m[i][j] -= q * m[pr][j];
                if (m[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (m[pr][c] == 0) continue;
        if (m[pr][c] < 0)
            for (auto& x : m[pr]) x = -x;
        for (std::size_t i = 0; i < pr; ++i) {
            Integer q = floor_div(m[i][c], m[pr][c]);
            if (q != 0)
                for (std::size_t j = c; j < basis.size(); ++j) m[i][j] -= q * m[pr][j];
        }
        pivots.emplace_back(pr, c);
        ++pr;
    }
    for (const auto& [row, c] : pivots) {
        Integer q = floor_div(v[c], m[row][c]);
        if (q != 0)
            for (std::size_t j = c; j < basis.size(); ++j) v[j] -= q * m[row][j];
    }
    Series out(vars, f.bound());
    for (std::size_t i = 0; i < basis.size(); ++i) out.add_term(basis[i], CoeffPoly(v[i]));
    return out;
}

}  // namespace cobord
