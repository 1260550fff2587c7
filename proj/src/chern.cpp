#include "cobord/chern.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "cobord/error.hpp"

namespace cobord {

struct Bundle::Node {
    Kind kind;
    std::string root;
    int trivial_rank = 0;
    std::vector<Bundle> children;
};

Bundle Bundle::line(std::string root) {
    if (root.empty()) throw Error(ErrorKind::InvalidParameters, "line bundle needs a root name");
    return Bundle(std::make_shared<const Node>(Node{Kind::Line, std::move(root), 0, {}}));
}

Bundle Bundle::trivial(int rank) {
    if (rank < 0) throw Error(ErrorKind::InvalidParameters, "trivial bundle rank must be >= 0");
    return Bundle(std::make_shared<const Node>(Node{Kind::Trivial, {}, rank, {}}));
}

Bundle Bundle::sum(std::vector<Bundle> parts) {
    return Bundle(std::make_shared<const Node>(Node{Kind::Sum, {}, 0, std::move(parts)}));
}

Bundle Bundle::tensor(std::vector<Bundle> factors) {
    if (factors.empty()) return trivial(1);
    return Bundle(std::make_shared<const Node>(Node{Kind::Tensor, {}, 0, std::move(factors)}));
}

Bundle Bundle::dual(Bundle inner) {
    return Bundle(std::make_shared<const Node>(Node{Kind::Dual, {}, 0, {std::move(inner)}}));
}

Bundle Bundle::multiple(int k, const Bundle& e) {
    if (k < 0) throw Error(ErrorKind::InvalidParameters, "bundle multiplicity must be >= 0");
    return sum(std::vector<Bundle>(static_cast<std::size_t>(k), e));
}

Bundle::Kind Bundle::kind() const { return node_->kind; }
const std::string& Bundle::root() const { return node_->root; }
const std::vector<Bundle>& Bundle::children() const { return node_->children; }

int Bundle::rank() const {
    switch (node_->kind) {
        case Kind::Line: return 1;
        case Kind::Trivial: return node_->trivial_rank;
        case Kind::Dual: return node_->children.front().rank();
        case Kind::Sum: {
            int r = 0;
            for (const auto& c : node_->children) r += c.rank();
            return r;
        }
        case Kind::Tensor: {
            int r = 1;
            for (const auto& c : node_->children) r *= c.rank();
            return r;
        }
    }
    return 0;
}

std::string Bundle::to_string() const {
    auto join = [&](const char* sep, bool wrap_sums) {
        std::string out;
        for (std::size_t i = 0; i < node_->children.size(); ++i) {
            if (i) out += sep;
            const Bundle& c = node_->children[i];
            bool wrap = wrap_sums && c.kind() == Kind::Sum && c.children().size() > 1;
            out += wrap ? "(" + c.to_string() + ")" : c.to_string();
        }
        return out;
    };
    switch (node_->kind) {
        case Kind::Line: return "L(" + node_->root + ")";
        case Kind::Trivial: return "1^" + std::to_string(node_->trivial_rank);
        case Kind::Dual: return "dual(" + node_->children.front().to_string() + ")";
        case Kind::Sum: return node_->children.empty() ? "1^0" : join(" + ", false);
        case Kind::Tensor: return join(" * ", true);
    }
    return {};
}

namespace {

class BundleParser {
public:
    explicit BundleParser(std::string_view text) : text_(text) {}

    Bundle parse() {
        Bundle e = sum();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::ParseError, "bundle expression at " + std::to_string(pos_) + ": " + what);
    }
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    std::string word() {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }
    int integer() {
        std::string w = word();
        if (w.empty() || !std::all_of(w.begin(), w.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
            fail("expected a non-negative integer");
        return std::stoi(w);
    }

    Bundle sum() {
        std::vector<Bundle> parts{product()};
        while (eat('+')) parts.push_back(product());
        return parts.size() == 1 ? parts.front() : Bundle::sum(std::move(parts));
    }
    Bundle product() {
        std::vector<Bundle> factors{atom()};
        while (eat('*')) factors.push_back(atom());
        return factors.size() == 1 ? factors.front() : Bundle::tensor(std::move(factors));
    }
    Bundle atom() {
        if (eat('(')) {
            Bundle e = sum();
            expect(')');
            return e;
        }
        skip();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (integer() != 1) fail("only the trivial bundle 1^r is a numeric atom");
            return Bundle::trivial(eat('^') ? integer() : 1);
        }
        std::string name = word();
        if (name == "L") {
            expect('(');
            std::string root = word();
            if (root.empty()) fail("expected a root name");
            expect(')');
            return Bundle::line(root);
        }
        if (name == "dual") {
            expect('(');
            Bundle e = sum();
            expect(')');
            return Bundle::dual(e);
        }
        fail(name.empty() ? "expected a bundle" : "unknown bundle '" + name + "'");
    }
};

}  // namespace

Bundle parse_bundle(std::string_view text) { return BundleParser(text).parse(); }

RootMultiset roots_of(const Bundle& e, const FormalGroupLaw& law) {
    const int bound = law.bound();
    switch (e.kind()) {
        case Bundle::Kind::Line: return {Series::variable(e.root(), bound)};
        case Bundle::Kind::Trivial: return RootMultiset(static_cast<std::size_t>(e.rank()), Series({}, bound));
        case Bundle::Kind::Dual: {
            RootMultiset roots = roots_of(e.children().front(), law);
            Series inv = inverse_series(law);
            for (auto& r : roots) r = substitute(inv, {{"x", r}});
            return roots;
        }
        case Bundle::Kind::Sum: {
            RootMultiset roots;
            for (const auto& c : e.children()) {
                RootMultiset more = roots_of(c, law);
                roots.insert(roots.end(), more.begin(), more.end());
            }
            return roots;
        }
        case Bundle::Kind::Tensor: {
            RootMultiset acc = roots_of(e.children().front(), law);
            for (std::size_t k = 1; k < e.children().size(); ++k) {
                RootMultiset next = roots_of(e.children()[k], law);
                RootMultiset combined;
                combined.reserve(acc.size() * next.size());
                for (const auto& a : acc)
                    for (const auto& b : next) combined.push_back(formal_sum(law, a, b));
                acc = std::move(combined);
            }
            return acc;
        }
    }
    return {};
}

std::vector<Series> elementary_symmetric(const std::vector<Series>& roots, int max_k, int bound) {
    std::vector<Series> e(static_cast<std::size_t>(max_k) + 1, Series({}, bound));
    e[0] = Series::constant(CoeffPoly(1L), bound);
    for (std::size_t j = 0; j < roots.size(); ++j) {
        int top = std::min<int>(max_k, static_cast<int>(j) + 1);
        for (int k = top; k >= 1; --k) e[k] += multiply(e[k - 1], roots[j], bound);
    }
    return e;
}

Series chern_class(const Bundle& e, int i, const FormalGroupLaw& law) {
    if (i < 0 || i > e.rank())
        throw Error(ErrorKind::IndexOutOfRange,
                    "chern class index " + std::to_string(i) + " outside 0.." + std::to_string(e.rank()));
    RootMultiset roots = roots_of(e, law);
    return elementary_symmetric(roots, i, law.bound())[static_cast<std::size_t>(i)];
}

Series symmetric_reduce(const Series& f, const std::vector<std::string>& roots, std::vector<std::string> names) {
    const std::size_t k = roots.size();
    if (names.empty())
        for (std::size_t i = 1; i <= k; ++i) names.push_back("e" + std::to_string(i));
    if (names.size() != k) throw Error(ErrorKind::InvalidParameters, "one name per elementary function");

    std::vector<SeriesVar> root_vars;
    for (const auto& r : roots) {
        auto idx = f.var_index(r);
        root_vars.push_back(idx ? f.vars()[*idx] : SeriesVar{r, 1});
    }
    const int w = k ? root_vars.front().weight : 1;
    for (const auto& v : root_vars)
        if (v.weight != w) throw Error(ErrorKind::InvalidParameters, "roots must share one weight");

    const std::vector<SeriesVar> vars = merge_vars(f.vars(), root_vars);
    const Series g = f.with_vars(vars);
    std::vector<std::size_t> root_idx;
    for (const auto& r : roots) root_idx.push_back(*g.var_index(r));
    std::vector<std::size_t> passive_idx;
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (std::find(root_idx.begin(), root_idx.end(), i) == root_idx.end()) passive_idx.push_back(i);

    for (std::size_t t = 0; t + 1 < k; ++t) {
        Series swapped(vars, g.bound());
        for (const auto& [e, c] : g.terms()) {
            Exponents s = e;
            std::swap(s[root_idx[t]], s[root_idx[t + 1]]);
            swapped.add_term(s, c);
        }
        if (!(swapped == g))
            throw Error(ErrorKind::NotSymmetric,
                        "not symmetric under " + roots[t] + " <-> " + roots[t + 1]);
    }

    std::vector<SeriesVar> out_vars;
    for (auto i : passive_idx) out_vars.push_back(vars[i]);
    for (std::size_t i = 0; i < k; ++i) out_vars.push_back(SeriesVar{names[i], w * static_cast<int>(i + 1)});
    Series out(out_vars, g.bound());

    std::vector<Series> root_series;
    for (const auto& v : root_vars) root_series.push_back(Series::variable(v, g.bound()).with_vars(vars));
    const std::vector<Series> elem = elementary_symmetric(root_series, static_cast<int>(k), g.bound());

    std::map<Exponents, Series> power_cache;
    auto elem_power = [&](const Exponents& p) -> const Series& {
        auto it = power_cache.find(p);
        if (it != power_cache.end()) return it->second;
        Series acc = Series::constant(CoeffPoly(1L), g.bound()).with_vars(vars);
        for (std::size_t i = 0; i < k; ++i)
            for (int r = 0; r < p[i]; ++r) acc = multiply(acc, elem[i + 1], g.bound());
        return power_cache.emplace(p, std::move(acc)).first->second;
    };

    auto root_part = [&](const Exponents& e) {
        Exponents r(k);
        for (std::size_t i = 0; i < k; ++i) r[i] = e[root_idx[i]];
        return r;
    };

    Series rest = g;
    while (!rest.is_zero()) {
        Exponents lead;
        bool found = false;
        for (const auto& [e, c] : rest.terms()) {
            Exponents r = root_part(e);
            if (!found || r > lead) {
                lead = r;
                found = true;
            }
        }
        Exponents steps(k);
        for (std::size_t i = 0; i < k; ++i) {
            steps[i] = lead[i] - (i + 1 < k ? lead[i + 1] : 0);
            if (steps[i] < 0) throw Error(ErrorKind::NotSymmetric, "leading root exponents are not non-increasing");
        }
        const Series& basis = elem_power(steps);

        std::vector<std::pair<Exponents, CoeffPoly>> leaders;
        for (const auto& [e, c] : rest.terms())
            if (root_part(e) == lead) leaders.emplace_back(e, c);
        for (const auto& [e, c] : leaders) {
            Exponents target(out_vars.size());
            for (std::size_t i = 0; i < passive_idx.size(); ++i) target[i] = e[passive_idx[i]];
            for (std::size_t i = 0; i < k; ++i) target[passive_idx.size() + i] = steps[i];
            out.add_term(target, c);
            for (const auto& [be, bc] : basis.terms()) {
                Exponents shifted = be;
                for (auto i : passive_idx) shifted[i] += e[i];
                rest.add_term(shifted, -(c * bc));
            }
        }
    }
    return out;
}

ExpressResult p_series(const FormalGroupLaw& law) {
    Series x = Series::variable(FormalGroupLaw::kX, law.bound());
    Series i = inverse_series(law);
    return express_in(x + i, {{"u", x * i}});
}

namespace {

// express_in that skips targets vanishing at the bound; their variables keep a nominal weight.
ExpressResult express_in_present(const Series& g, const std::vector<std::pair<std::string, Series>>& targets,
                                 const std::vector<int>& nominal_weights) {
    std::vector<std::pair<std::string, Series>> live;
    std::vector<SeriesVar> all_vars;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const auto& [name, t] = targets[i];
        auto o = t.order();
        all_vars.push_back(SeriesVar{name, o ? *o : nominal_weights[i]});
        if (!t.is_zero()) live.push_back(targets[i]);
    }
    if (live.empty()) return ExpressResult{Series(all_vars, g.bound()), g};
    ExpressResult r = express_in(g, live);
    r.result = r.result.with_vars(all_vars);
    return r;
}

}  // namespace

Sp2Result sp2_series(const FormalGroupLaw& law, Sp2Roots config) {
    const int bound = law.bound();
    Series r = Series::variable("r", bound);
    Series s = Series::variable("s", bound);
    std::vector<Series> roots;
    std::vector<std::string> free_roots;
    if (config == Sp2Roots::Triple) {
        Series t = Series::variable("t", bound);
        Series u = formal_inverse(law, formal_sum(law, formal_sum(law, r, s), t));
        roots = {r, s, t, u};
        free_roots = {"r", "s", "t"};
    } else {
        roots = {r, formal_inverse(law, r), s, formal_inverse(law, s)};
        free_roots = {"r", "s"};
    }

    Sp2Result out;
    out.d = elementary_symmetric(roots, 4, bound);

    std::vector<SeriesVar> vars;
    for (const auto& n : free_roots) vars.push_back(SeriesVar{n, 1});
    for (auto& d : out.d) d = d.with_vars(merge_vars(vars, d.vars()));

    for (std::size_t i = 0; i + 1 < free_roots.size() && out.symmetric; ++i) {
        for (int k = 1; k <= 4 && out.symmetric; ++k) {
            const Series& d = out.d[k];
            Series swapped = substitute(d, {{free_roots[i], Series::variable(free_roots[i + 1], bound)},
                                            {free_roots[i + 1], Series::variable(free_roots[i], bound)}});
            if (!(swapped == d)) out.symmetric = false;
        }
    }

    std::vector<std::pair<std::string, Series>> targets{{"v2", out.d[2]}, {"v4", out.d[4]}};
    out.first = express_in_present(out.d[1], targets, {2, 4});
    out.third = express_in_present(out.d[3], targets, {2, 4});
    return out;
}

std::vector<SeriesVar> chern_vars(int n) {
    std::vector<SeriesVar> vars;
    for (int i = 1; i <= n; ++i) vars.push_back(SeriesVar{"c" + std::to_string(i), i});
    return vars;
}

std::vector<Series> dual_chern_classes(int n, const FormalGroupLaw& law) {
    if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "dual chern classes need n >= 1");
    const int bound = law.bound();
    const Series inv = inverse_series(law);
    std::vector<std::string> names;
    std::vector<std::string> root_names;
    std::vector<Series> duals;
    for (int j = 1; j <= n; ++j) {
        root_names.push_back("r" + std::to_string(j));
        names.push_back("c" + std::to_string(j));
        duals.push_back(substitute(inv, {{"x", Series::variable(root_names.back(), bound)}}));
    }
    std::vector<SeriesVar> root_vars;
    for (const auto& r : root_names) root_vars.push_back(SeriesVar{r, 1});
    std::vector<Series> e = elementary_symmetric(duals, n, bound);
    std::vector<Series> out(1, Series(chern_vars(n), bound));
    for (int i = 1; i <= n; ++i) {
        Series reduced = symmetric_reduce(e[i].with_vars(merge_vars(root_vars, e[i].vars())), root_names, names);
        out.push_back(reduced.with_vars(chern_vars(n)));
    }
    return out;
}

Series dual_chern(int n, int i, const FormalGroupLaw& law) {
    if (i < 1 || i > n)
        throw Error(ErrorKind::IndexOutOfRange, "dual chern index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    return dual_chern_classes(n, law)[static_cast<std::size_t>(i)];
}

}  // namespace cobord
