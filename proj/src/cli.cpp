#include "cobord/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "cobord/cellular.hpp"
#include "cobord/chern.hpp"
#include "cobord/error.hpp"
#include "cobord/fgl.hpp"
#include "cobord/json_io.hpp"
#include "cobord/presentations.hpp"

namespace cobord {

namespace {

struct Config {
    std::string model;
    int bound = kDefaultBound;
    int coeff_bound = kDefaultCoeffBound;
    bool json = false;
    std::string output;

    int n = 2;
    std::string group;
    int degree = 0;
    bool chow = false;
    std::string roots = "triple";
    std::vector<std::string> space;
    bool list_cells = false;
};

struct Emitted {
    std::string text;
    int status = kExitOk;
};

FormalGroupLaw model_for(const Config& cfg, ModelKind fallback) {
    ModelKind kind = cfg.model.empty() ? fallback : parse_model_kind(cfg.model);
    return build_model(kind, cfg.bound, cfg.coeff_bound);
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

std::string format_presentation(const GradedPresentation& p) {
    std::ostringstream s;
    s << "group: " << p.group << "\n";
    s << "formula: " << p.formula << "\n";
    s << "coefficient: " << to_string(p.coefficients.tag) << " D=" << p.coefficients.bound
      << " Dc=" << p.coefficients.coeff_bound << "\n";
    s << "generators:";
    for (const auto& g : p.generators) s << " " << g.name << ":" << g.degree;
    s << "\n";
    if (p.relations.empty()) s << "relations: none\n";
    else s << "relations:\n";
    for (std::size_t i = 0; i < p.relations.size(); ++i)
        s << "  r" << i + 1 << " = " << to_string(p.relations[i]) << "\n";
    return s.str();
}

std::string format_torsion(const std::vector<Integer>& torsion) {
    std::string out = "[";
    for (std::size_t i = 0; i < torsion.size(); ++i) out += (i ? ", " : "") + torsion[i].get_str();
    return out + "]";
}

Emitted run_nseries(const Config& cfg) {
    Series s = n_series(model_for(cfg, ModelKind::UniversalFree), cfg.n);
    return {cfg.json ? dump(series_to_json(s)) : to_string(s) + "\n"};
}

Emitted run_inverse(const Config& cfg) {
    Series s = inverse_series(model_for(cfg, ModelKind::UniversalFree));
    return {cfg.json ? dump(series_to_json(s)) : to_string(s) + "\n"};
}

Emitted run_pseries(const Config& cfg) {
    ExpressResult r = p_series(model_for(cfg, ModelKind::UniversalLog));
    Emitted e;
    e.text = cfg.json ? dump(express_to_json(r))
                      : "P(u) = " + to_string(r.result) + "\nresidual = " + to_string(r.residual) + "\n";
    if (!r.residual.is_zero()) e.status = kExitResidual;
    return e;
}

Emitted run_sp2(const Config& cfg) {
    Sp2Roots roots = cfg.roots == "paired" ? Sp2Roots::Paired : Sp2Roots::Triple;
    Sp2Result r = sp2_series(model_for(cfg, ModelKind::UniversalFree), roots);
    if (cfg.json)
        return {dump({{"first", express_to_json(r.first)},
                      {"third", express_to_json(r.third)},
                      {"symmetric", r.symmetric}})};
    std::ostringstream s;
    s << "P1(v2,v4) = " << to_string(r.first.result) << "\n";
    s << "residual1 = " << to_string(r.first.residual) << "\n";
    s << "P3(v2,v4) = " << to_string(r.third.result) << "\n";
    s << "residual3 = " << to_string(r.third.residual) << "\n";
    s << "symmetric = " << (r.symmetric ? "yes" : "no") << "\n";
    return {s.str()};
}

Emitted run_present(const Config& cfg, bool chow) {
    GradedPresentation p = present(parse_group(cfg.group), model_for(cfg, ModelKind::UniversalFree));
    if (chow) p = chow_specialize(p);
    return {cfg.json ? dump(presentation_to_json(p)) : format_presentation(p)};
}

Emitted run_component(const Config& cfg) {
    if (cfg.degree < 0) throw Error(ErrorKind::InvalidParameters, "degree must be >= 0");
    GradedPresentation p = chow_specialize(present(parse_group(cfg.group), model_for(cfg, ModelKind::UniversalFree)));
    GradedComponent c = graded_component(p, cfg.degree);
    if (cfg.json) return {dump(component_to_json(c))};
    return {"degree " + std::to_string(c.degree) + ": rank " + std::to_string(c.rank) + ", torsion " +
            format_torsion(c.torsion) + "\n"};
}

Emitted run_bq(const Config& cfg) {
    std::vector<Series> rels = bq_relations(model_for(cfg, ModelKind::UniversalFree));
    if (cfg.json) {
        Json arr = Json::array();
        for (const auto& r : rels) arr.push_back(series_to_json(r));
        return {dump(arr)};
    }
    std::string out;
    for (std::size_t i = 0; i < rels.size(); ++i) out += "R" + std::to_string(i + 1) + " = " + to_string(rels[i]) + "\n";
    return {out};
}

Emitted run_cells(const Config& cfg) {
    std::string description;
    for (const auto& t : cfg.space) description += (description.empty() ? "" : " ") + t;
    CellComplex c = build_complex(parse_space(description));
    if (cfg.json) return {dump(cells_to_json(c))};
    std::ostringstream s;
    if (cfg.list_cells) {
        s << "space: " << c.name << "\n";
        for (const auto& cell : c.cells) s << "cell " << cell.label << " dim " << cell.dim << "\n";
    }
    s << "ranks:";
    for (int r : module_presentation(c).ranks) s << " " << r;
    s << "\n";
    return {s.str()};
}

Emitted run_axioms(const Config& cfg) {
    AxiomReport report = check_axioms(model_for(cfg, ModelKind::UniversalFree));
    if (cfg.json) return {dump(axioms_to_json(report))};
    std::string out;
    for (const auto& entry : report)
        out += entry.axiom + ": " +
               (entry.failure_degree ? "fails in degree " + std::to_string(*entry.failure_degree) : std::string("ok")) +
               "\n";
    return {out};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Formal group law, Chern class and classifying-space cobordism calculations", "cobord"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--model", cfg.model, "free, log, add or mult")
        ->check(CLI::IsMember({"free", "log", "add", "mult"}));
    app.add_option("-D", cfg.bound, "series truncation degree")->check(CLI::Range(1, 64));
    app.add_option("--coeff-bound", cfg.coeff_bound, "coefficient degree bound")->check(CLI::Range(1, 64));
    app.add_flag("--json", cfg.json, "emit JSON");
    app.add_option("-o", cfg.output, "write output to a file");

    auto* nseries = app.add_subcommand("nseries", "[n](x)");
    nseries->add_option("-n", cfg.n, "multiplier")->required();
    auto* inverse = app.add_subcommand("inverse", "[-1](x)");
    auto* pseries = app.add_subcommand("pseries", "x + [-1](x) as a series in x*[-1](x)");
    auto* sp2 = app.add_subcommand("sp2", "d1 and d3 as series in d2, d4");
    sp2->add_option("--roots", cfg.roots, "triple or paired")->check(CLI::IsMember({"triple", "paired"}));
    auto* presentc = app.add_subcommand("present", "graded presentation of a classifying space");
    presentc->add_option("group", cfg.group)->required();
    auto* chow = app.add_subcommand("chow", "Chow specialization of a presentation");
    chow->add_option("group", cfg.group)->required();
    auto* component = app.add_subcommand("component", "graded component of the Chow ring");
    component->add_option("group", cfg.group)->required();
    component->add_option("-d", cfg.degree, "degree")->required();
    component->add_flag("--chow", cfg.chow, "work at the Chow level (always on)");
    auto* bq = app.add_subcommand("bq-relations", "the six quaternion relations");
    auto* cells = app.add_subcommand("cells", "cell decomposition rank table");
    cells->add_option("space", cfg.space, "e.g. gr 2 4, p 3, p 1 x p 1")->required();
    cells->add_flag("--list", cfg.list_cells, "list the cells");
    auto* axioms = app.add_subcommand("axioms", "axiom residuals of the model");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        Emitted result;
        if (*nseries) result = run_nseries(cfg);
        else if (*inverse) result = run_inverse(cfg);
        else if (*pseries) result = run_pseries(cfg);
        else if (*sp2) result = run_sp2(cfg);
        else if (*presentc) result = run_present(cfg, false);
        else if (*chow) result = run_present(cfg, true);
        else if (*component) result = run_component(cfg);
        else if (*bq) result = run_bq(cfg);
        else if (*cells) result = run_cells(cfg);
        else if (*axioms) result = run_axioms(cfg);

        if (cfg.output.empty()) {
            out << result.text;
        } else {
            std::ofstream file(cfg.output, std::ios::binary);
            if (!file) throw Error(ErrorKind::InvalidParameters, "cannot open '" + cfg.output + "' for writing");
            file << result.text;
            if (!file) throw Error(ErrorKind::InvalidParameters, "failed writing '" + cfg.output + "'");
        }
        return result.status;
    } catch (const Error& e) {
        err << error_to_json(e).dump() << "\n";
        return kExitComputation;
    }
}

}  // namespace cobord
