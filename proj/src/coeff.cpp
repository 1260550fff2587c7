#include "cobord/coeff.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <sstream>

#include "cobord/detail/expression_parser.hpp"
#include "cobord/error.hpp"

namespace cobord {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MissingImage: return "MissingImage";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::NonNilpotentSubstitution: return "NonNilpotentSubstitution";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::VariableMismatch: return "VariableMismatch";
        case ErrorKind::BoundTooSmall: return "BoundTooSmall";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::PSeriesObstructed: return "PSeriesObstructed";
        case ErrorKind::UnsupportedGroup: return "UnsupportedGroup";
        case ErrorKind::NonHomogeneousRelation: return "NonHomogeneousRelation";
        case ErrorKind::InvalidParameters: return "InvalidParameters";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

namespace {

struct NamedEntry {
    std::string symbol;
    int degree;
};

// Named generators are interned once and never removed; entries are heap
// allocated so references stay valid while the table grows.
struct NamedRegistry {
    std::mutex mutex;
    std::vector<std::unique_ptr<NamedEntry>> entries;

    static NamedRegistry& instance() {
        static NamedRegistry registry;
        return registry;
    }

    std::size_t intern(const std::string& symbol, int degree) {
        std::lock_guard lock(mutex);
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (entries[i]->symbol == symbol) {
                if (entries[i]->degree != degree)
                    throw Error(ErrorKind::DegreeMismatch, "generator '" + symbol +
                                                              "' already registered with degree " +
                                                              std::to_string(entries[i]->degree));
                return i;
            }
        }
        entries.push_back(std::make_unique<NamedEntry>(NamedEntry{symbol, degree}));
        return entries.size() - 1;
    }

    const NamedEntry& at(std::size_t index) {
        std::lock_guard lock(mutex);
        return *entries.at(index);
    }

    std::optional<std::size_t> find(const std::string& symbol) {
        std::lock_guard lock(mutex);
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (entries[i]->symbol == symbol) return i;
        return std::nullopt;
    }
};

constexpr std::uint64_t make_key(GeneratorKind kind, std::uint64_t first, std::uint64_t second) {
    return (static_cast<std::uint64_t>(kind) << 56) | (first << 28) | second;
}

// True when lhs is lexicographically larger than rhs as exponent vectors.
bool lex_greater(const CoeffMonomial& lhs, const CoeffMonomial& rhs) {
    const auto& l = lhs.factors();
    const auto& r = rhs.factors();
    std::size_t n = std::min(l.size(), r.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (!(l[i].first == r[i].first)) return l[i].first < r[i].first;
        if (l[i].second != r[i].second) return l[i].second > r[i].second;
    }
    return l.size() > r.size();
}

}  // namespace

CoeffGenerator CoeffGenerator::a(int i, int j) {
    if (i < 1 || j < 1) throw Error(ErrorKind::InvalidParameters, "a[i,j] needs i, j >= 1");
    if (i > j) std::swap(i, j);
    return CoeffGenerator(make_key(GeneratorKind::A, static_cast<std::uint64_t>(i),
                                   static_cast<std::uint64_t>(j)));
}

CoeffGenerator CoeffGenerator::m(int k) {
    if (k < 1) throw Error(ErrorKind::InvalidParameters, "m[k] needs k >= 1");
    return CoeffGenerator(make_key(GeneratorKind::M, static_cast<std::uint64_t>(k), 0));
}

CoeffGenerator CoeffGenerator::named(const std::string& symbol, int degree) {
    if (symbol.empty()) throw Error(ErrorKind::InvalidParameters, "empty generator symbol");
    std::size_t index = NamedRegistry::instance().intern(symbol, degree);
    return CoeffGenerator(make_key(GeneratorKind::Named, index, 0));
}

int CoeffGenerator::degree() const {
    switch (kind()) {
        case GeneratorKind::A: return -(first() + second() - 1);
        case GeneratorKind::M: return -first();
        case GeneratorKind::Named:
            return NamedRegistry::instance().at(static_cast<std::size_t>(first())).degree;
    }
    return 0;
}

const std::string& CoeffGenerator::symbol() const {
    static const std::string kA = "a";
    static const std::string kM = "m";
    switch (kind()) {
        case GeneratorKind::A: return kA;
        case GeneratorKind::M: return kM;
        case GeneratorKind::Named: break;
    }
    return NamedRegistry::instance().at(static_cast<std::size_t>(first())).symbol;
}

std::string CoeffGenerator::to_string() const {
    switch (kind()) {
        case GeneratorKind::A:
            return "a[" + std::to_string(first()) + "," + std::to_string(second()) + "]";
        case GeneratorKind::M: return "m[" + std::to_string(first()) + "]";
        case GeneratorKind::Named: break;
    }
    return symbol();
}

bool operator<(CoeffGenerator lhs, CoeffGenerator rhs) {
    if (lhs.kind() == GeneratorKind::Named && rhs.kind() == GeneratorKind::Named &&
        !(lhs == rhs))
        return lhs.symbol() < rhs.symbol();
    return lhs.key_ < rhs.key_;
}

CoeffMonomial::CoeffMonomial(CoeffGenerator g, int power) {
    if (power != 0) {
        factors_.emplace_back(g, power);
        degree_ = g.degree() * power;
    }
}

CoeffMonomial CoeffMonomial::from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& l, const Factor& r) { return l.first < r.first; });
    CoeffMonomial result;
    for (const auto& [g, p] : factors) {
        if (!result.factors_.empty() && result.factors_.back().first == g) {
            result.factors_.back().second += p;
        } else {
            result.factors_.emplace_back(g, p);
        }
    }
    std::erase_if(result.factors_, [](const Factor& f) { return f.second == 0; });
    for (const auto& [g, p] : result.factors_) {
        if (p < 0) throw Error(ErrorKind::InvalidParameters, "negative exponent in monomial");
        result.degree_ += g.degree() * p;
    }
    return result;
}

int CoeffMonomial::power_of(CoeffGenerator g) const {
    for (const auto& [h, p] : factors_)
        if (h == g) return p;
    return 0;
}

std::string CoeffMonomial::to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [g, p] : factors_) {
        if (!out.empty()) out += '*';
        out += g.to_string();
        if (p != 1) out += "^" + std::to_string(p);
    }
    return out;
}

CoeffMonomial operator*(const CoeffMonomial& lhs, const CoeffMonomial& rhs) {
    CoeffMonomial out;
    out.factors_.reserve(lhs.factors_.size() + rhs.factors_.size());
    auto l = lhs.factors_.begin();
    auto r = rhs.factors_.begin();
    while (l != lhs.factors_.end() && r != rhs.factors_.end()) {
        if (l->first == r->first) {
            out.factors_.emplace_back(l->first, l->second + r->second);
            ++l;
            ++r;
        } else if (l->first < r->first) {
            out.factors_.push_back(*l++);
        } else {
            out.factors_.push_back(*r++);
        }
    }
    out.factors_.insert(out.factors_.end(), l, lhs.factors_.end());
    out.factors_.insert(out.factors_.end(), r, rhs.factors_.end());
    out.degree_ = lhs.degree_ + rhs.degree_;
    return out;
}

bool GradedLexOrder::operator()(const CoeffMonomial& lhs, const CoeffMonomial& rhs) const {
    int dl = std::abs(lhs.degree());
    int dr = std::abs(rhs.degree());
    if (dl != dr) return dl < dr;
    return lex_greater(lhs, rhs);
}

CoeffPoly::CoeffPoly(long value) {
    if (value != 0) terms_.emplace(CoeffMonomial{}, Integer(value));
}

CoeffPoly::CoeffPoly(const Integer& value) {
    if (value != 0) terms_.emplace(CoeffMonomial{}, value);
}

CoeffPoly::CoeffPoly(CoeffGenerator g, int bound) : bound_(bound) {
    add_term(CoeffMonomial(g), Integer(1));
}

CoeffPoly CoeffPoly::from_term(const CoeffMonomial& mono, const Integer& coeff, int bound) {
    CoeffPoly p;
    p.bound_ = bound;
    p.add_term(mono, coeff);
    return p;
}

CoeffPoly CoeffPoly::with_bound(int bound) const {
    CoeffPoly out;
    out.bound_ = bound;
    for (const auto& [mono, c] : terms_)
        if (std::abs(mono.degree()) <= bound) out.terms_.emplace_hint(out.terms_.end(), mono, c);
    return out;
}

std::optional<Integer> CoeffPoly::constant_value() const {
    if (terms_.empty()) return Integer(0);
    if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
    return std::nullopt;
}

bool CoeffPoly::is_unit() const {
    auto c = constant_value();
    return c && (*c == 1 || *c == -1);
}

void CoeffPoly::add_term(const CoeffMonomial& mono, const Integer& coeff) {
    if (coeff == 0 || std::abs(mono.degree()) > bound_) return;
    auto [it, inserted] = terms_.try_emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& rhs) {
    if (rhs.bound_ < bound_) *this = with_bound(rhs.bound_);
    for (const auto& [mono, c] : rhs.terms_) add_term(mono, c);
    return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& rhs) {
    if (rhs.bound_ < bound_) *this = with_bound(rhs.bound_);
    for (const auto& [mono, c] : rhs.terms_) add_term(mono, -c);
    return *this;
}

CoeffPoly& CoeffPoly::operator*=(const CoeffPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

CoeffPoly& CoeffPoly::operator*=(const Integer& rhs) {
    if (rhs == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, c] : terms_) c *= rhs;
    return *this;
}

CoeffPoly CoeffPoly::operator-() const {
    CoeffPoly out = *this;
    for (auto& [mono, c] : out.terms_) c = -c;
    return out;
}

CoeffPoly operator*(const CoeffPoly& lhs, const CoeffPoly& rhs) {
    CoeffPoly out;
    out.bound_ = std::min(lhs.bound_, rhs.bound_);
    if (lhs.terms_.empty() || rhs.terms_.empty()) return out;
    // Constant factors are common (integer series coefficients); skip monomial work.
    if (lhs.terms_.size() == 1 && lhs.terms_.begin()->first.is_one()) {
        for (const auto& [mono, c] : rhs.terms_) out.add_term(mono, c * lhs.terms_.begin()->second);
        return out;
    }
    if (rhs.terms_.size() == 1 && rhs.terms_.begin()->first.is_one()) {
        for (const auto& [mono, c] : lhs.terms_) out.add_term(mono, c * rhs.terms_.begin()->second);
        return out;
    }
    Integer product;
    for (const auto& [lm, lc] : lhs.terms_) {
        for (const auto& [rm, rc] : rhs.terms_) {
            if (std::abs(lm.degree() + rm.degree()) > out.bound_) continue;
            product = lc * rc;
            out.add_term(lm * rm, product);
        }
    }
    return out;
}

std::vector<CoeffGenerator> CoeffPoly::generators() const {
    std::vector<CoeffGenerator> gens;
    for (const auto& [mono, c] : terms_)
        for (const auto& [g, p] : mono.factors()) gens.push_back(g);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return gens;
}

CoeffPoly pow(const CoeffPoly& base, int exponent) {
    if (exponent < 0) throw Error(ErrorKind::InvalidParameters, "negative power");
    CoeffPoly result(1L);
    result = result.with_bound(base.bound());
    for (int i = 0; i < exponent; ++i) result *= base;
    return result;
}

DegreeResult degree_of(const CoeffPoly& p) {
    if (p.is_zero()) return {DegreeResult::Status::Undefined, 0};
    int degree = p.terms().begin()->first.degree();
    for (const auto& [mono, c] : p.terms())
        if (mono.degree() != degree) return {DegreeResult::Status::NotHomogeneous, 0};
    return {DegreeResult::Status::Homogeneous, degree};
}

CoeffPoly apply_hom(const CoeffPoly& p, const CoeffHom& images, const HomOptions& options) {
    if (options.check_grading) {
        for (const auto& [g, image] : images) {
            DegreeResult d = degree_of(image);
            if (d.status == DegreeResult::Status::NotHomogeneous ||
                (d.homogeneous() && d.degree != g.degree()))
                throw Error(ErrorKind::DegreeMismatch,
                            "image of " + g.to_string() + " is not homogeneous of degree " +
                                std::to_string(g.degree()));
        }
    }
    CoeffPoly result;
    result = result.with_bound(p.bound());
    std::map<std::pair<CoeffGenerator, int>, CoeffPoly,
             bool (*)(const std::pair<CoeffGenerator, int>&, const std::pair<CoeffGenerator, int>&)>
        powers([](const std::pair<CoeffGenerator, int>& l, const std::pair<CoeffGenerator, int>& r) {
            if (!(l.first == r.first)) return l.first < r.first;
            return l.second < r.second;
        });
    auto power = [&](CoeffGenerator g, int e) -> const CoeffPoly& {
        auto key = std::make_pair(g, e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        auto img = images.find(g);
        CoeffPoly base;
        if (img != images.end()) {
            base = img->second.with_bound(std::min(img->second.bound(), p.bound()));
        } else if (options.identity_on_missing) {
            base = CoeffPoly(g, p.bound());
        } else {
            throw Error(ErrorKind::MissingImage, "no image for generator " + g.to_string());
        }
        return powers.emplace(key, pow(base, e)).first->second;
    };
    for (const auto& [mono, c] : p.terms()) {
        CoeffPoly term(c);
        term = term.with_bound(p.bound());
        for (const auto& [g, e] : mono.factors()) {
            term *= power(g, e);
            if (term.is_zero()) break;
        }
        result += term;
    }
    return result;
}

CoeffHom compose(const CoeffHom& g, const CoeffHom& f, const HomOptions& options) {
    CoeffHom out;
    for (const auto& [gen, image] : f) out.emplace(gen, apply_hom(image, g, options));
    return out;
}

std::string to_string(const CoeffPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, c] : p.terms()) {
        Integer magnitude = abs(c);
        std::string body;
        if (mono.is_one()) {
            body = magnitude.get_str();
        } else if (magnitude == 1) {
            body = mono.to_string();
        } else {
            body = magnitude.get_str() + "*" + mono.to_string();
        }
        if (first) {
            out = (c < 0 ? "-" : "") + body;
            first = false;
        } else {
            out += (c < 0 ? " - " : " + ") + body;
        }
    }
    return out;
}

CoeffPoly parse_coeff(std::string_view text, int bound) {
    auto atom = [bound](const std::string& name, const std::vector<int>& idx) -> CoeffPoly {
        if (name == "a" && idx.size() == 2) return CoeffPoly(CoeffGenerator::a(idx[0], idx[1]), bound);
        if (name == "m" && idx.size() == 1) return CoeffPoly(CoeffGenerator::m(idx[0]), bound);
        if (idx.empty()) {
            auto found = NamedRegistry::instance().find(name);
            if (found) {
                int degree = NamedRegistry::instance().at(*found).degree;
                return CoeffPoly(CoeffGenerator::named(name, degree), bound);
            }
        }
        throw Error(ErrorKind::ParseError, "unknown coefficient generator '" + name + "'");
    };
    auto from_int = [bound](const Integer& v) { return CoeffPoly(v).with_bound(bound); };
    return detail::parse_expression<CoeffPoly>(text, atom, from_int).with_bound(bound);
}

}  // namespace cobord
