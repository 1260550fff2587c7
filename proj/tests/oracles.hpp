#pragma once

// Independent reference computations used only by the tests.  None of them
// goes through substitute/compositional_inverse/express_in.

#include <map>
#include <vector>

#include "cobord/coeff.hpp"
#include "cobord/series.hpp"
#include "doctest.h"

namespace cobord::oracle {

// Dense univariate truncated series: c[k] is the coefficient of t^k.
using Dense = std::vector<CoeffPoly>;

inline Dense dense_of(const Series& s, int bound) {
    Dense d(static_cast<std::size_t>(bound) + 1);
    for (const auto& [e, c] : s.terms()) {
        int k = e.empty() ? 0 : e[0];
        if (k <= bound) d[static_cast<std::size_t>(k)] += c;
    }
    return d;
}

inline Dense dense_mul(const Dense& a, const Dense& b) {
    Dense out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// 1/h for h with constant term 1, by the geometric series in (1 - h).
inline Dense dense_reciprocal(const Dense& h) {
    Dense one(h.size());
    one[0] = CoeffPoly(1L);
    Dense q(h.size());
    for (std::size_t i = 1; i < h.size(); ++i) q[i] = -h[i];
    Dense result = one;
    Dense power = one;
    for (std::size_t k = 1; k < h.size(); ++k) {
        power = dense_mul(power, q);
        for (std::size_t i = 0; i < h.size(); ++i) result[i] += power[i];
    }
    return result;
}

inline CoeffPoly exact_div(const CoeffPoly& p, long n) {
    CoeffPoly out;
    for (const auto& [mono, c] : p.terms()) {
        Integer q = c / n;
        REQUIRE(q * n == c);
        out.add_term(mono, q);
    }
    return out;
}

// Lagrange reversion: [t^n] g = (1/n) [t^(n-1)] (t / f(t))^n, for f = t + O(t^2).
inline Dense lagrange_inverse(const Dense& f) {
    const std::size_t size = f.size();
    Dense h(size);  // f(t)/t
    for (std::size_t i = 1; i < size; ++i) h[i - 1] = f[i];
    Dense r = dense_reciprocal(h);
    Dense g(size);
    Dense power(size);
    power[0] = CoeffPoly(1L);
    for (std::size_t n = 1; n < size; ++n) {
        power = dense_mul(power, r);
        g[n] = exact_div(power[n - 1], static_cast<long>(n));
    }
    return g;
}

// Integer evaluation of a series with integer coefficients.
inline Integer evaluate(const Series& s, const std::map<std::string, long>& at) {
    Integer total = 0;
    for (const auto& [e, c] : s.terms()) {
        auto value = c.constant_value();
        REQUIRE(value.has_value());
        Integer term = *value;
        for (std::size_t i = 0; i < e.size(); ++i) {
            long base = at.at(s.vars()[i].name);
            for (int k = 0; k < e[i]; ++k) term *= base;
        }
        total += term;
    }
    return total;
}

}  // namespace cobord::oracle
