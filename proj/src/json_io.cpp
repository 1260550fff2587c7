#include "cobord/json_io.hpp"

namespace cobord {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, "json: " + what); }

Integer integer_from(const Json& j) {
    if (!j.is_string()) bad("expected a decimal string");
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) bad("malformed integer '" + j.get<std::string>() + "'");
    return v;
}

template <typename T>
T field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        bad(std::string("field '") + key + "' has the wrong type");
    }
}

}  // namespace

Json coeff_to_json(const CoeffPoly& p) {
    Json terms = Json::array();
    for (const auto& [mono, c] : p.terms()) {
        Json factors = Json::array();
        for (const auto& [g, power] : mono.factors()) {
            switch (g.kind()) {
                case GeneratorKind::A: factors.push_back({"a", g.first(), g.second(), power}); break;
                case GeneratorKind::M: factors.push_back({"m", g.first(), power}); break;
                case GeneratorKind::Named: factors.push_back({"named", g.symbol(), g.degree(), power}); break;
            }
        }
        terms.push_back({{"monomial", factors}, {"coeff", c.get_str()}});
    }
    return terms;
}

CoeffPoly coeff_from_json(const Json& j, int bound) {
    if (!j.is_array()) bad("a coefficient is an array of terms");
    CoeffPoly out = CoeffPoly().with_bound(bound);
    for (const auto& term : j) {
        std::vector<CoeffMonomial::Factor> factors;
        const Json monomial = field<Json>(term, "monomial");
        if (!monomial.is_array()) bad("monomial must be an array");
        for (const auto& f : monomial) {
            if (!f.is_array() || f.empty() || !f[0].is_string()) bad("malformed factor");
            const std::string kind = f[0].get<std::string>();
            try {
                if (kind == "a" && f.size() == 4)
                    factors.emplace_back(CoeffGenerator::a(f[1].get<int>(), f[2].get<int>()), f[3].get<int>());
                else if (kind == "m" && f.size() == 3)
                    factors.emplace_back(CoeffGenerator::m(f[1].get<int>()), f[2].get<int>());
                else if (kind == "named" && f.size() == 4)
                    factors.emplace_back(CoeffGenerator::named(f[1].get<std::string>(), f[2].get<int>()), f[3].get<int>());
                else
                    bad("unknown factor kind '" + kind + "'");
            } catch (const nlohmann::json::exception&) {
                bad("malformed factor");
            }
        }
        out.add_term(CoeffMonomial::from_factors(std::move(factors)), integer_from(field<Json>(term, "coeff")));
    }
    return out;
}

Json series_to_json(const Series& s) {
    Json vars = Json::array();
    for (const auto& v : s.vars()) vars.push_back({{"name", v.name}, {"weight", v.weight}});
    Json terms = Json::array();
    for (const auto& [e, c] : s.terms()) terms.push_back({{"exponents", e}, {"coeff", coeff_to_json(c)}});
    Json bound = s.bound() == kUnbounded ? Json(nullptr) : Json(s.bound());
    return {{"vars", vars}, {"bound", bound}, {"terms", terms}};
}

Series series_from_json(const Json& j) {
    std::vector<SeriesVar> vars;
    for (const auto& v : field<Json>(j, "vars")) vars.push_back({field<std::string>(v, "name"), field<int>(v, "weight")});
    const Json bound = field<Json>(j, "bound");
    Series out(vars, bound.is_null() ? kUnbounded : field<int>(j, "bound"));
    for (const auto& t : field<Json>(j, "terms")) {
        Exponents e = field<Exponents>(t, "exponents");
        if (e.size() != vars.size()) bad("exponent vector length does not match vars");
        out.add_term(e, coeff_from_json(field<Json>(t, "coeff")));
    }
    return out;
}

Json presentation_to_json(const GradedPresentation& p) {
    Json gens = Json::array();
    for (const auto& g : p.generators) gens.push_back({{"name", g.name}, {"degree", g.degree}});
    Json rels = Json::array();
    for (const auto& r : p.relations) rels.push_back(series_to_json(r));
    return {{"coefficient", std::string(to_string(p.coefficients.tag))},
            {"bound", p.coefficients.bound},
            {"coeff_bound", p.coefficients.coeff_bound},
            {"generators", gens},
            {"relations", rels},
            {"meta", {{"group", p.group}, {"formula", p.formula}}}};
}

GradedPresentation presentation_from_json(const Json& j) {
    GradedPresentation p;
    p.coefficients.tag = parse_coefficient_tag(field<std::string>(j, "coefficient"));
    p.coefficients.bound = field<int>(j, "bound");
    p.coefficients.coeff_bound = field<int>(j, "coeff_bound");
    for (const auto& g : field<Json>(j, "generators"))
        p.generators.push_back({field<std::string>(g, "name"), field<int>(g, "degree")});
    for (const auto& r : field<Json>(j, "relations")) p.relations.push_back(series_from_json(r).with_vars(p.vars()));
    const Json meta = field<Json>(j, "meta");
    p.group = field<std::string>(meta, "group");
    p.formula = field<std::string>(meta, "formula");
    return p;
}

Json component_to_json(const GradedComponent& c) {
    Json torsion = Json::array();
    for (const auto& t : c.torsion) torsion.push_back(t.get_str());
    return {{"rank", c.rank}, {"torsion", torsion}};
}

GradedComponent component_from_json(const Json& j, int degree) {
    GradedComponent c;
    c.degree = degree;
    c.rank = field<int>(j, "rank");
    for (const auto& t : field<Json>(j, "torsion")) c.torsion.push_back(integer_from(t));
    return c;
}

Json cells_to_json(const CellComplex& c) {
    Json cells = Json::array();
    for (const auto& cell : c.cells) cells.push_back({{"label", cell.label}, {"dim", cell.dim}});
    return {{"space", c.name},
            {"dimension", c.dimension},
            {"cells", cells},
            {"ranks", module_presentation(c).ranks}};
}

CellComplex cells_from_json(const Json& j) {
    CellComplex c;
    c.name = field<std::string>(j, "space");
    c.dimension = field<int>(j, "dimension");
    for (const auto& cell : field<Json>(j, "cells"))
        c.cells.push_back({field<std::string>(cell, "label"), field<int>(cell, "dim")});
    return c;
}

Json axioms_to_json(const AxiomReport& report) {
    Json out = Json::array();
    for (const auto& entry : report) {
        Json degree = entry.failure_degree ? Json(*entry.failure_degree) : Json(nullptr);
        out.push_back({{"axiom", entry.axiom}, {"residual_degree", degree}});
    }
    return out;
}

Json express_to_json(const ExpressResult& r) {
    return {{"result", series_to_json(r.result)}, {"residual", series_to_json(r.residual)}};
}

ExpressResult express_from_json(const Json& j) {
    return {series_from_json(field<Json>(j, "result")), series_from_json(field<Json>(j, "residual"))};
}

Json error_to_json(const Error& e) {
    return {{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
}

}  // namespace cobord
