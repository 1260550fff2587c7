#include "cobord/fgl.hpp"

#include <algorithm>

#include "cobord/error.hpp"

namespace cobord {

const SeriesVar FormalGroupLaw::kX{"x", 1};
const SeriesVar FormalGroupLaw::kY{"y", 1};

std::string_view to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::UniversalFree: return "free";
        case ModelKind::UniversalLog: return "log";
        case ModelKind::Additive: return "add";
        case ModelKind::Multiplicative: return "mult";
        case ModelKind::Custom: return "custom";
    }
    return "custom";
}

ModelKind parse_model_kind(std::string_view text) {
    if (text == "free" || text == "UniversalFree") return ModelKind::UniversalFree;
    if (text == "log" || text == "UniversalLog") return ModelKind::UniversalLog;
    if (text == "add" || text == "Additive") return ModelKind::Additive;
    if (text == "mult" || text == "Multiplicative") return ModelKind::Multiplicative;
    throw Error(ErrorKind::InvalidParameters, "unknown model '" + std::string(text) + "'");
}

CoeffGenerator beta_generator() { return CoeffGenerator::named("beta", -1); }

FormalGroupLaw::FormalGroupLaw(ModelKind kind, Series law, int coeff_bound)
    : kind_(kind), law_(std::move(law)), coeff_bound_(coeff_bound) {
    law_ = law_.with_vars(merge_vars({kX, kY}, law_.vars()));
    if (law_.vars().size() != 2)
        throw Error(ErrorKind::VariableMismatch, "a formal group law is a series in x and y only");
}

namespace {

Series x_of(int bound) { return Series::variable(FormalGroupLaw::kX, bound); }
Series y_of(int bound) { return Series::variable(FormalGroupLaw::kY, bound); }

Series free_law(int bound, int coeff_bound) {
    Series law = x_of(bound) + y_of(bound);
    for (int i = 1; i < bound; ++i)
        for (int j = 1; i + j <= bound; ++j)
            law.add_term({i, j}, CoeffPoly(CoeffGenerator::a(i, j), coeff_bound));
    return law;
}

Series log_law(int bound, int coeff_bound) {
    const SeriesVar t{"t", 1};
    Series log = Series::variable(t, bound);
    for (int k = 1; k + 1 <= bound; ++k) log.add_term({k + 1}, CoeffPoly(CoeffGenerator::m(k), coeff_bound));
    Series exp = compositional_inverse(log);
    Series log_x = substitute(log, {{"t", x_of(bound)}});
    Series log_y = substitute(log, {{"t", y_of(bound)}});
    return substitute(exp, {{"t", log_x + log_y}});
}

}  // namespace

FormalGroupLaw build_model(ModelKind kind, int bound, int coeff_bound) {
    if (bound < 1) throw Error(ErrorKind::BoundTooSmall, "model bound must be >= 1");
    if (coeff_bound < 1) throw Error(ErrorKind::BoundTooSmall, "coefficient bound must be >= 1");
    switch (kind) {
        case ModelKind::UniversalFree: return FormalGroupLaw(kind, free_law(bound, coeff_bound), coeff_bound);
        case ModelKind::UniversalLog: return FormalGroupLaw(kind, log_law(bound, coeff_bound), coeff_bound);
        case ModelKind::Additive: return FormalGroupLaw(kind, x_of(bound) + y_of(bound), coeff_bound);
        case ModelKind::Multiplicative: return build_multiplicative(beta_generator(), bound, coeff_bound);
        case ModelKind::Custom: break;
    }
    throw Error(ErrorKind::InvalidParameters, "custom models come from specialize()");
}

FormalGroupLaw build_multiplicative(CoeffGenerator beta, int bound, int coeff_bound) {
    if (bound < 1) throw Error(ErrorKind::BoundTooSmall, "model bound must be >= 1");
    Series law = x_of(bound) + y_of(bound);
    law.add_term({1, 1}, CoeffPoly(beta, coeff_bound));
    return FormalGroupLaw(ModelKind::Multiplicative, law, coeff_bound);
}

Series formal_sum(const FormalGroupLaw& law, const Series& f, const Series& g) {
    if (!f.constant_term().is_zero() || !g.constant_term().is_zero())
        throw Error(ErrorKind::NonNilpotentSubstitution, "formal sum of series with a constant term");
    // Renaming first keeps the substitution simultaneous even when f, g mention x or y.
    return substitute(law.law(), {{"x", f}, {"y", g}});
}

Series formal_sum(const FormalGroupLaw& law, const std::vector<Series>& terms) {
    if (terms.empty()) return Series({}, law.bound());
    Series acc = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) acc = formal_sum(law, acc, terms[i]);
    return acc;
}

Series inverse_series(const FormalGroupLaw& law, const SeriesVar& var) {
    const int bound = law.bound();
    Series t = Series::variable(var, bound);
    Series inv = -t;
    for (int k = 2; k * var.weight <= bound; ++k) {
        Series residual = formal_sum(law, t, inv);
        CoeffPoly c = residual.coefficient(Exponents{k});
        if (!c.is_zero()) inv.add_term({k}, -c);
    }
    return inv;
}

Series formal_inverse(const FormalGroupLaw& law, const Series& f) {
    return substitute(inverse_series(law, FormalGroupLaw::kX), {{"x", f}});
}

Series n_series(const FormalGroupLaw& law, int n, const SeriesVar& var) {
    const int bound = law.bound();
    Series t = Series::variable(var, bound);
    if (n == 0) return Series({var}, bound);
    if (n < 0) return substitute(n_series(law, -n, var), {{var.name, inverse_series(law, var)}});
    Series acc = t;
    for (int k = 2; k <= n; ++k) acc = formal_sum(law, t, acc);
    return acc;
}

AxiomReport check_axioms(const FormalGroupLaw& law) {
    const int bound = law.bound();
    Series x = x_of(bound);
    Series y = y_of(bound);
    Series z = Series::variable("z", bound);
    Series zero({}, bound);
    const Series& F = law.law();

    auto entry = [](std::string name, Series residual) {
        return AxiomResidual{std::move(name), residual, residual.order()};
    };
    AxiomReport report;
    report.push_back(entry("left-unit", substitute(F, {{"y", zero}}) - x));
    report.push_back(entry("right-unit", substitute(F, {{"x", zero}}) - y));
    report.push_back(entry("commutativity", F - substitute(F, {{"x", y}, {"y", x}})));
    Series left = formal_sum(law, formal_sum(law, x, y), z);
    Series right = formal_sum(law, x, formal_sum(law, y, z));
    report.push_back(entry("associativity", left - right));
    return report;
}

FormalGroupLaw specialize(const FormalGroupLaw& law, const CoeffHom& hom, const HomOptions& options) {
    Series mapped = law.law().map_coefficients([&](const CoeffPoly& c) { return apply_hom(c, hom, options); });
    return FormalGroupLaw(ModelKind::Custom, mapped, law.coeff_bound());
}

CoeffHom log_images(int bound, int coeff_bound) {
    FormalGroupLaw log = build_model(ModelKind::UniversalLog, bound, coeff_bound);
    CoeffHom images;
    for (int i = 1; i < bound; ++i) {
        for (int j = i; i + j <= bound; ++j) {
            CoeffGenerator g = CoeffGenerator::a(i, j);
            images[g] = log.law().coefficient(Exponents{i, j}).with_bound(coeff_bound);
        }
    }
    return images;
}

CoeffHom vanishing_images(const std::vector<CoeffGenerator>& generators) {
    CoeffHom images;
    for (auto g : generators) images[g] = CoeffPoly();
    return images;
}

std::vector<CoeffGenerator> coefficient_generators(const Series& s) {
    std::vector<CoeffGenerator> gens;
    for (const auto& [e, c] : s.terms()) {
        auto more = c.generators();
        gens.insert(gens.end(), more.begin(), more.end());
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return gens;
}

}  // namespace cobord
