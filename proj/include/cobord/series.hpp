#pragma once

// Truncated multivariate power series with CoeffPoly coefficients.  Each
// variable carries a positive weight; a series with bound D stores exactly the
// terms of weighted degree <= D and says nothing about higher ones.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cobord/coeff.hpp"

namespace cobord {

struct SeriesVar {
    std::string name;
    int weight = 1;

    friend bool operator==(const SeriesVar&, const SeriesVar&) = default;
};

using Exponents = std::vector<int>;

class Series {
public:
    using Terms = std::map<Exponents, CoeffPoly>;

    Series() = default;
    Series(std::vector<SeriesVar> vars, int bound);

    static Series variable(const SeriesVar& var, int bound = kUnbounded);
    static Series variable(const std::string& name, int bound = kUnbounded) {
        return variable(SeriesVar{name, 1}, bound);
    }
    static Series constant(const CoeffPoly& value, int bound = kUnbounded);

    const std::vector<SeriesVar>& vars() const noexcept { return vars_; }
    int bound() const noexcept { return bound_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    std::optional<std::size_t> var_index(std::string_view name) const;
    int weighted_degree(const Exponents& e) const;
    // Lowest weighted degree of a stored term; empty for the zero series.
    std::optional<int> order() const;

    CoeffPoly coefficient(const Exponents& e) const;
    // Coefficient addressed by variable names; unnamed variables have exponent 0.
    CoeffPoly coefficient(const std::vector<std::pair<std::string, int>>& powers) const;
    CoeffPoly constant_term() const;

    void add_term(const Exponents& e, const CoeffPoly& coeff);

    Series truncated(int bound) const;
    Series homogeneous_part(int degree) const;
    // Re-expresses the series over `vars`, which must contain every variable
    // that occurs with a nonzero exponent.
    Series with_vars(const std::vector<SeriesVar>& vars) const;
    // Drops variables that never occur.
    Series compacted() const;
    Series renamed(const std::map<std::string, std::string>& names) const;
    Series with_coeff_bound(int coeff_bound) const;

    template <typename Fn>
    Series map_coefficients(Fn fn) const {
        Series out(vars_, bound_);
        for (const auto& [e, c] : terms_) out.add_term(e, fn(c));
        return out;
    }

    Series& operator+=(const Series& rhs);
    Series& operator-=(const Series& rhs);
    Series& operator*=(const Series& rhs);
    Series operator-() const;
    Series scaled(const CoeffPoly& factor) const;

    friend Series operator+(Series lhs, const Series& rhs) { return lhs += rhs; }
    friend Series operator-(Series lhs, const Series& rhs) { return lhs -= rhs; }
    friend Series operator*(const Series& lhs, const Series& rhs);
    friend Series operator*(const CoeffPoly& lhs, const Series& rhs) { return rhs.scaled(lhs); }
    friend Series operator*(const Series& lhs, const CoeffPoly& rhs) { return lhs.scaled(rhs); }
    friend Series operator*(long lhs, const Series& rhs) { return rhs.scaled(CoeffPoly(lhs)); }

    // Equality compares terms over the union of variables; bounds are ignored.
    friend bool operator==(const Series& lhs, const Series& rhs);

private:
    std::vector<SeriesVar> vars_;
    Terms terms_;
    int bound_ = kUnbounded;
};

// Union of the two variable lists: lhs order first, then new names from rhs.
std::vector<SeriesVar> merge_vars(const std::vector<SeriesVar>& lhs, const std::vector<SeriesVar>& rhs);

Series multiply(const Series& lhs, const Series& rhs, int bound);
Series pow(const Series& base, int exponent);

using Bindings = std::vector<std::pair<std::string, Series>>;

struct SubstituteOptions {
    // Allow replacements with a nonzero constant term; the caller certifies
    // that the series being substituted into is an exact polynomial.
    bool allow_constant_terms = false;
};

// Simultaneous substitution.  Unbound variables pass through.
Series substitute(const Series& f, const Bindings& bindings, const SubstituteOptions& options = {});

// g with g(f(t)) = t for univariate f with unit linear coefficient.
Series compositional_inverse(const Series& f);

struct ExpressResult {
    Series result;    // in the new variables, one per target
    Series residual;  // in the variables of g
};

// Greedy triangular solve of g = result(targets) + residual.  Each target
// needs a zero constant term and a unit leading coefficient; its new variable
// gets the target's order as weight.
ExpressResult express_in(const Series& g, const std::vector<std::pair<std::string, Series>>& targets);

// Plugs the targets back into an express_in result.
Series expand_result(const Series& result, const std::vector<std::pair<std::string, Series>>& targets);

std::string to_string(const Series& s);
Series parse_series(std::string_view text, const std::vector<SeriesVar>& vars, int bound = kUnbounded);

// Graded order on exponent vectors: lower weighted degree first, then
// lexicographically larger first.
struct DegLexOrder {
    std::vector<int> weights;
    bool operator()(const Exponents& lhs, const Exponents& rhs) const;
};

}  // namespace cobord
