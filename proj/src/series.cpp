#include "cobord/series.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "cobord/detail/expression_parser.hpp"
#include "cobord/error.hpp"

namespace cobord {

namespace {

int weighted_degree_of(const Exponents& e, const std::vector<SeriesVar>& vars) {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * vars[i].weight;
    return d;
}

bool lex_greater(const Exponents& lhs, const Exponents& rhs) {
    return std::lexicographical_compare(rhs.begin(), rhs.end(), lhs.begin(), lhs.end());
}

// ceil(order * (bound + 1) / weight) - 1, the last degree at which a
// substitution of a series of this order into a variable of this weight is
// still determined by a series known through `bound`.
int substituted_bound(int bound, int order, int weight) {
    if (bound == kUnbounded) return kUnbounded;
    long long num = static_cast<long long>(order) * (static_cast<long long>(bound) + 1);
    long long q = (num + weight - 1) / weight - 1;
    if (q >= kUnbounded) return kUnbounded - 1;
    return static_cast<int>(q);
}

std::vector<int> weights_of(const std::vector<SeriesVar>& vars) {
    std::vector<int> w;
    w.reserve(vars.size());
    for (const auto& v : vars) w.push_back(v.weight);
    return w;
}

}  // namespace

bool DegLexOrder::operator()(const Exponents& lhs, const Exponents& rhs) const {
    int dl = 0;
    int dr = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        dl += lhs[i] * weights[i];
        dr += rhs[i] * weights[i];
    }
    if (dl != dr) return dl < dr;
    return lex_greater(lhs, rhs);
}

std::vector<SeriesVar> merge_vars(const std::vector<SeriesVar>& lhs, const std::vector<SeriesVar>& rhs) {
    std::vector<SeriesVar> out = lhs;
    for (const auto& v : rhs) {
        auto it = std::find_if(out.begin(), out.end(), [&](const SeriesVar& w) { return w.name == v.name; });
        if (it == out.end()) {
            out.push_back(v);
        } else if (it->weight != v.weight) {
            throw Error(ErrorKind::VariableMismatch,
                        "variable '" + v.name + "' used with weights " + std::to_string(it->weight) +
                            " and " + std::to_string(v.weight));
        }
    }
    return out;
}

Series::Series(std::vector<SeriesVar> vars, int bound) : vars_(std::move(vars)), bound_(bound) {
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.weight < 1) throw Error(ErrorKind::InvalidParameters, "variable weight must be >= 1");
        if (!seen.insert(v.name).second)
            throw Error(ErrorKind::VariableMismatch, "duplicate variable '" + v.name + "'");
    }
}

Series Series::variable(const SeriesVar& var, int bound) {
    Series s({var}, bound);
    s.add_term({1}, CoeffPoly(1L));
    return s;
}

Series Series::constant(const CoeffPoly& value, int bound) {
    Series s({}, bound);
    s.add_term({}, value);
    return s;
}

std::optional<std::size_t> Series::var_index(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return i;
    return std::nullopt;
}

int Series::weighted_degree(const Exponents& e) const { return weighted_degree_of(e, vars_); }

std::optional<int> Series::order() const {
    std::optional<int> best;
    for (const auto& [e, c] : terms_) {
        int d = weighted_degree(e);
        if (!best || d < *best) best = d;
    }
    return best;
}

CoeffPoly Series::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? CoeffPoly() : it->second;
}

CoeffPoly Series::coefficient(const std::vector<std::pair<std::string, int>>& powers) const {
    Exponents e(vars_.size(), 0);
    for (const auto& [name, p] : powers) {
        auto idx = var_index(name);
        if (!idx) {
            if (p == 0) continue;
            return CoeffPoly();
        }
        e[*idx] += p;
    }
    return coefficient(e);
}

CoeffPoly Series::constant_term() const { return coefficient(Exponents(vars_.size(), 0)); }

void Series::add_term(const Exponents& e, const CoeffPoly& coeff) {
    if (e.size() != vars_.size())
        throw Error(ErrorKind::VariableMismatch, "exponent vector does not match variable list");
    if (coeff.is_zero() || weighted_degree(e) > bound_) return;
    auto [it, inserted] = terms_.try_emplace(e, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Series Series::truncated(int bound) const {
    Series out(vars_, std::min(bound, bound_));
    for (const auto& [e, c] : terms_)
        if (weighted_degree(e) <= out.bound_) out.terms_.emplace_hint(out.terms_.end(), e, c);
    return out;
}

Series Series::homogeneous_part(int degree) const {
    Series out(vars_, bound_);
    for (const auto& [e, c] : terms_)
        if (weighted_degree(e) == degree) out.terms_.emplace_hint(out.terms_.end(), e, c);
    return out;
}

Series Series::with_vars(const std::vector<SeriesVar>& vars) const {
    if (vars == vars_) return *this;
    std::vector<std::optional<std::size_t>> target(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        for (std::size_t j = 0; j < vars.size(); ++j) {
            if (vars[j].name == vars_[i].name) {
                if (vars[j].weight != vars_[i].weight)
                    throw Error(ErrorKind::VariableMismatch, "weight mismatch for '" + vars_[i].name + "'");
                target[i] = j;
            }
        }
    }
    Series out(vars, bound_);
    for (const auto& [e, c] : terms_) {
        Exponents f(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!target[i])
                throw Error(ErrorKind::VariableMismatch, "variable '" + vars_[i].name + "' cannot be dropped");
            f[*target[i]] = e[i];
        }
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

Series Series::compacted() const {
    std::vector<SeriesVar> used;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        bool occurs = std::any_of(terms_.begin(), terms_.end(), [i](const auto& t) { return t.first[i] != 0; });
        if (occurs) used.push_back(vars_[i]);
    }
    return with_vars(used);
}

Series Series::renamed(const std::map<std::string, std::string>& names) const {
    Series out = *this;
    for (auto& v : out.vars_) {
        auto it = names.find(v.name);
        if (it != names.end()) v.name = it->second;
    }
    Series check(out.vars_, bound_);  // rejects collisions
    return out;
}

Series Series::with_coeff_bound(int coeff_bound) const {
    Series out(vars_, bound_);
    for (const auto& [e, c] : terms_) out.add_term(e, c.with_bound(coeff_bound));
    return out;
}

Series& Series::operator+=(const Series& rhs) {
    if (rhs.vars_ != vars_) {
        auto vars = merge_vars(vars_, rhs.vars_);
        *this = with_vars(vars);
        if (rhs.bound_ < bound_) *this = truncated(rhs.bound_);
        Series aligned = rhs.with_vars(vars);
        for (const auto& [e, c] : aligned.terms_) add_term(e, c);
        return *this;
    }
    if (rhs.bound_ < bound_) *this = truncated(rhs.bound_);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Series& Series::operator-=(const Series& rhs) { return *this += -rhs; }

Series& Series::operator*=(const Series& rhs) {
    *this = *this * rhs;
    return *this;
}

Series Series::operator-() const {
    Series out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

Series Series::scaled(const CoeffPoly& factor) const {
    Series out(vars_, bound_);
    if (factor.is_zero()) return out;
    for (const auto& [e, c] : terms_) out.add_term(e, c * factor);
    return out;
}

Series multiply(const Series& lhs, const Series& rhs, int bound) {
    if (lhs.vars() != rhs.vars()) {
        auto vars = merge_vars(lhs.vars(), rhs.vars());
        return multiply(lhs.with_vars(vars), rhs.with_vars(vars), bound);
    }
    Series out(lhs.vars(), std::min({bound, lhs.bound(), rhs.bound()}));
    if (lhs.is_zero() || rhs.is_zero()) return out;
    const std::size_t n = lhs.vars().size();
    std::vector<std::pair<const Exponents*, int>> right;
    right.reserve(rhs.size());
    for (const auto& [e, c] : rhs.terms()) right.emplace_back(&e, rhs.weighted_degree(e));
    std::map<Exponents, CoeffPoly> acc;
    Exponents sum(n);
    for (const auto& [le, lc] : lhs.terms()) {
        int ld = lhs.weighted_degree(le);
        if (ld > out.bound()) continue;
        auto rit = rhs.terms().begin();
        for (std::size_t k = 0; k < right.size(); ++k, ++rit) {
            if (ld + right[k].second > out.bound()) continue;
            for (std::size_t i = 0; i < n; ++i) sum[i] = le[i] + (*right[k].first)[i];
            CoeffPoly product = lc * rit->second;
            if (product.is_zero()) continue;
            auto [it, inserted] = acc.try_emplace(sum, std::move(product));
            if (!inserted) it->second += product;
        }
    }
    for (auto& [e, c] : acc)
        if (!c.is_zero()) out.add_term(e, c);
    return out;
}

Series operator*(const Series& lhs, const Series& rhs) {
    return multiply(lhs, rhs, std::min(lhs.bound(), rhs.bound()));
}

bool operator==(const Series& lhs, const Series& rhs) {
    if (lhs.vars() == rhs.vars()) return lhs.terms() == rhs.terms();
    auto vars = merge_vars(lhs.vars(), rhs.vars());
    return lhs.with_vars(vars).terms() == rhs.with_vars(vars).terms();
}

Series pow(const Series& base, int exponent) {
    if (exponent < 0) throw Error(ErrorKind::InvalidParameters, "negative power of a series");
    Series result = Series::constant(CoeffPoly(1L), base.bound()).with_vars(base.vars());
    for (int i = 0; i < exponent; ++i) result = result * base;
    return result;
}

Series substitute(const Series& f, const Bindings& bindings, const SubstituteOptions& options) {
    const auto& fvars = f.vars();
    std::vector<const Series*> replacement(fvars.size(), nullptr);
    for (const auto& [name, series] : bindings) {
        auto idx = f.var_index(name);
        if (idx) replacement[*idx] = &series;
    }

    // Result variables, in the order they are introduced by f's variables.
    std::vector<SeriesVar> vars;
    for (std::size_t i = 0; i < fvars.size(); ++i) {
        vars = replacement[i] ? merge_vars(vars, replacement[i]->vars()) : merge_vars(vars, {fvars[i]});
    }

    int bound = kUnbounded;
    bool exact_f = false;
    for (std::size_t i = 0; i < fvars.size(); ++i) {
        if (!replacement[i]) continue;
        const Series& r = *replacement[i];
        bound = std::min(bound, r.bound());
        if (!r.constant_term().is_zero()) {
            if (!options.allow_constant_terms)
                throw Error(ErrorKind::NonNilpotentSubstitution,
                            "replacement for '" + fvars[i].name + "' has a nonzero constant term");
            exact_f = true;
        }
    }
    if (!exact_f) {
        if (fvars.empty()) bound = std::min(bound, f.bound());
        for (std::size_t i = 0; i < fvars.size(); ++i) {
            int order = fvars[i].weight;
            if (replacement[i]) {
                auto o = replacement[i]->order();
                if (!o) continue;
                order = *o;
            }
            bound = std::min(bound, substituted_bound(f.bound(), order, fvars[i].weight));
        }
    }

    // Group f's terms by the exponents of the bound variables; the unbound part
    // of each group is a plain linear combination of monomials.
    std::map<Exponents, Series> groups;
    std::vector<std::size_t> unbound_pos(fvars.size(), 0);
    for (std::size_t i = 0; i < fvars.size(); ++i) {
        if (!replacement[i]) {
            for (std::size_t j = 0; j < vars.size(); ++j)
                if (vars[j].name == fvars[i].name) unbound_pos[i] = j;
        }
    }
    for (const auto& [e, c] : f.terms()) {
        Exponents key(fvars.size(), 0);
        Exponents mono(vars.size(), 0);
        for (std::size_t i = 0; i < fvars.size(); ++i) {
            if (replacement[i]) {
                key[i] = e[i];
            } else {
                mono[unbound_pos[i]] = e[i];
            }
        }
        auto [it, inserted] = groups.try_emplace(key, Series(vars, bound));
        it->second.add_term(mono, c);
    }

    std::map<std::pair<std::size_t, int>, Series> powers;
    std::function<const Series&(std::size_t, int)> power = [&](std::size_t i, int p) -> const Series& {
        auto key = std::make_pair(i, p);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        Series value = p == 0 ? Series::constant(CoeffPoly(1L), bound).with_vars(vars)
                     : p == 1 ? replacement[i]->with_vars(vars).truncated(bound)
                              : multiply(power(i, p - 1), power(i, 1), bound);
        return powers.emplace(key, std::move(value)).first->second;
    };

    Series result(vars, bound);
    for (const auto& [key, group] : groups) {
        Series factor;
        bool have_factor = false;
        for (std::size_t i = 0; i < fvars.size(); ++i) {
            if (!replacement[i] || key[i] == 0) continue;
            if (!have_factor) {
                factor = power(i, key[i]);
                have_factor = true;
            } else {
                factor = multiply(factor, power(i, key[i]), bound);
            }
        }
        if (!have_factor) {
            result += group;
        } else {
            result += multiply(group, factor, bound);
        }
    }
    return result;
}

Series compositional_inverse(const Series& f) {
    Series g0 = f.compacted();
    if (g0.vars().size() != 1)
        throw Error(ErrorKind::NotInvertible, "compositional inverse needs a univariate series");
    const SeriesVar& t = g0.vars()[0];
    if (!g0.constant_term().is_zero())
        throw Error(ErrorKind::NotInvertible, "series has a nonzero constant term");
    CoeffPoly linear = g0.coefficient(Exponents{1});
    if (!linear.is_unit()) throw Error(ErrorKind::NotInvertible, "linear coefficient is not +-1");
    Integer unit = *linear.constant_value();

    const int bound = g0.bound();
    if (bound == kUnbounded)
        throw Error(ErrorKind::InvalidParameters, "compositional inverse needs a finite bound");
    Series g({t}, bound);
    g.add_term({1}, CoeffPoly(unit));
    for (int k = 2; k * t.weight <= bound; ++k) {
        Series composed = substitute(g0, {{t.name, g}});
        CoeffPoly r = composed.coefficient(Exponents{k});
        if (!r.is_zero()) g.add_term({k}, -(r * unit));
    }
    return g;
}

ExpressResult express_in(const Series& g, const std::vector<std::pair<std::string, Series>>& targets) {
    std::vector<SeriesVar> vars = g.vars();
    int bound = g.bound();
    for (const auto& [name, t] : targets) {
        vars = merge_vars(vars, t.vars());
        bound = std::min(bound, t.bound());
    }
    if (bound == kUnbounded) throw Error(ErrorKind::InvalidParameters, "express_in needs a finite bound");
    const DegLexOrder order{weights_of(vars)};

    struct Target {
        Series series;
        int order;
        Exponents lead;
    };
    std::vector<Target> prepared;
    std::vector<SeriesVar> new_vars;
    for (const auto& [name, t0] : targets) {
        Series t = t0.with_vars(vars).truncated(bound);
        auto o = t.order();
        if (!o || *o == 0)
            throw Error(ErrorKind::NotInvertible, "target '" + name + "' must be nonzero with zero constant term");
        const Exponents* lead = nullptr;
        for (const auto& [e, c] : t.terms()) {
            if (t.weighted_degree(e) != *o) continue;
            if (!lead || lex_greater(e, *lead)) lead = &e;
        }
        if (!t.coefficient(*lead).is_unit())
            throw Error(ErrorKind::NotInvertible, "target '" + name + "' has a non-unit leading coefficient");
        new_vars.push_back(SeriesVar{name, *o});
        prepared.push_back(Target{t, *o, *lead});
    }

    // Leading exponent of every target product within the bound; earlier
    // targets win ties because combinations are enumerated from the front.
    std::map<Exponents, Exponents> product_for_lead;
    Exponents combo(prepared.size(), 0);
    std::function<void(std::size_t, int)> enumerate = [&](std::size_t i, int used) {
        if (i == prepared.size()) {
            Exponents lead(vars.size(), 0);
            for (std::size_t k = 0; k < prepared.size(); ++k)
                for (std::size_t j = 0; j < vars.size(); ++j) lead[j] += combo[k] * prepared[k].lead[j];
            product_for_lead.try_emplace(lead, combo);
            return;
        }
        for (int p = (bound - used) / prepared[i].order; p >= 0; --p) {
            combo[i] = p;
            enumerate(i + 1, used + p * prepared[i].order);
        }
        combo[i] = 0;
    };
    enumerate(0, 0);

    std::map<Exponents, Series> product_cache;
    auto product = [&](const Exponents& c) -> const Series& {
        auto it = product_cache.find(c);
        if (it != product_cache.end()) return it->second;
        Series p = Series::constant(CoeffPoly(1L), bound).with_vars(vars);
        for (std::size_t k = 0; k < c.size(); ++k)
            for (int r = 0; r < c[k]; ++r) p = multiply(p, prepared[k].series, bound);
        return product_cache.emplace(c, std::move(p)).first->second;
    };

    std::map<Exponents, CoeffPoly, DegLexOrder> remaining(order);
    const Series start = g.with_vars(vars).truncated(bound);
    for (const auto& [e, c] : start.terms()) remaining.emplace(e, c);

    ExpressResult out{Series(new_vars, bound), Series(vars, bound)};
    while (!remaining.empty()) {
        auto it = remaining.begin();
        Exponents e = it->first;
        CoeffPoly c = it->second;
        auto found = product_for_lead.find(e);
        if (found == product_for_lead.end()) {
            out.residual.add_term(e, c);
            remaining.erase(it);
            continue;
        }
        const Series& p = product(found->second);
        CoeffPoly q = c * p.coefficient(e);  // leading coefficient is +-1, its own inverse
        out.result.add_term(found->second, q);
        for (const auto& [pe, pc] : p.terms()) {
            auto [rit, inserted] = remaining.try_emplace(pe, -(q * pc));
            if (!inserted) {
                rit->second -= q * pc;
                if (rit->second.is_zero()) remaining.erase(rit);
            } else if (rit->second.is_zero()) {
                remaining.erase(rit);
            }
        }
    }
    bool within_g = std::all_of(out.residual.terms().begin(), out.residual.terms().end(), [&](const auto& t) {
        for (std::size_t j = 0; j < vars.size(); ++j)
            if (t.first[j] != 0 && !g.var_index(vars[j].name)) return false;
        return true;
    });
    if (within_g) out.residual = out.residual.with_vars(g.vars());
    return out;
}

Series expand_result(const Series& result, const std::vector<std::pair<std::string, Series>>& targets) {
    Bindings bindings(targets.begin(), targets.end());
    return substitute(result, bindings);
}

std::string to_string(const Series& s) {
    if (s.is_zero()) return "0";
    std::vector<const Series::Terms::value_type*> terms;
    for (const auto& t : s.terms()) terms.push_back(&t);
    DegLexOrder order{weights_of(s.vars())};
    std::sort(terms.begin(), terms.end(), [&](auto* l, auto* r) { return order(l->first, r->first); });

    std::string out;
    for (const auto* term : terms) {
        const auto& [e, c] = *term;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += s.vars()[i].name;
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        std::string body;
        bool negative = false;
        if (c.size() == 1) {
            const auto& [cm, cc] = *c.terms().begin();
            negative = cc < 0;
            Integer magnitude = abs(cc);
            std::string coeff;
            if (!cm.is_one()) {
                coeff = (magnitude == 1 ? std::string() : magnitude.get_str() + "*") + cm.to_string();
            } else if (magnitude != 1 || mono.empty()) {
                coeff = magnitude.get_str();
            }
            body = coeff.empty() ? mono : (mono.empty() ? coeff : coeff + "*" + mono);
        } else {
            body = "(" + to_string(c) + ")" + (mono.empty() ? "" : "*" + mono);
        }
        if (out.empty()) {
            out = (negative ? "-" : "") + body;
        } else {
            out += (negative ? " - " : " + ") + body;
        }
    }
    return out;
}

Series parse_series(std::string_view text, const std::vector<SeriesVar>& vars, int bound) {
    auto atom = [&](const std::string& name, const std::vector<int>& idx) -> Series {
        if (idx.empty()) {
            for (const auto& v : vars)
                if (v.name == name) return Series::variable(v, bound).with_vars(vars);
        }
        std::string token = name;
        if (!idx.empty()) {
            token += "[";
            for (std::size_t i = 0; i < idx.size(); ++i) token += (i ? "," : "") + std::to_string(idx[i]);
            token += "]";
        }
        return Series::constant(parse_coeff(token), bound).with_vars(vars);
    };
    auto from_int = [&](const Integer& v) { return Series::constant(CoeffPoly(v), bound).with_vars(vars); };
    Series s = detail::parse_expression<Series>(text, atom, from_int);
    return s.with_vars(vars).truncated(bound);
}

}  // namespace cobord
