#pragma once

// Formal group law models and the operations built on a law F(x, y):
// formal sums, [n]-series, the inverse series, axiom checks, and
// specialization along coefficient homomorphisms.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cobord/coeff.hpp"
#include "cobord/series.hpp"

namespace cobord {

enum class ModelKind { UniversalFree, UniversalLog, Additive, Multiplicative, Custom };

std::string_view to_string(ModelKind kind);
// Accepts the CLI spellings free, log, add, mult (and the full names).
ModelKind parse_model_kind(std::string_view text);

inline constexpr int kDefaultBound = 6;
inline constexpr int kDefaultCoeffBound = 6;

// The parameter of the multiplicative law x + y + beta*x*y, degree -1.
CoeffGenerator beta_generator();

class FormalGroupLaw {
public:
    static const SeriesVar kX;
    static const SeriesVar kY;

    FormalGroupLaw(ModelKind kind, Series law, int coeff_bound);

    ModelKind kind() const noexcept { return kind_; }
    // F as a series in x and y.
    const Series& law() const noexcept { return law_; }
    int bound() const noexcept { return law_.bound(); }
    int coeff_bound() const noexcept { return coeff_bound_; }

private:
    ModelKind kind_;
    Series law_;
    int coeff_bound_;
};

// UniversalFree: x + y + sum a[i,j] x^i y^j over i + j <= bound.
// UniversalLog:  exp(log x + log y) with log t = t + sum m[k] t^(k+1).
FormalGroupLaw build_model(ModelKind kind, int bound = kDefaultBound, int coeff_bound = kDefaultCoeffBound);
FormalGroupLaw build_multiplicative(CoeffGenerator beta, int bound = kDefaultBound,
                                    int coeff_bound = kDefaultCoeffBound);

// f +_F g.  Both arguments need zero constant term.
Series formal_sum(const FormalGroupLaw& law, const Series& f, const Series& g);
// F-sum of a list; empty list gives 0.
Series formal_sum(const FormalGroupLaw& law, const std::vector<Series>& terms);

// [n](t) in the variable `var`; [0] = 0, [-n](t) = [n]([-1](t)).
Series n_series(const FormalGroupLaw& law, int n, const SeriesVar& var = FormalGroupLaw::kX);

// The unique i(t) with F(t, i(t)) = 0 through the bound.
Series inverse_series(const FormalGroupLaw& law, const SeriesVar& var = FormalGroupLaw::kX);

// Applies [-1] to an arbitrary series with zero constant term.
Series formal_inverse(const FormalGroupLaw& law, const Series& f);

struct AxiomResidual {
    std::string axiom;
    Series residual;
    std::optional<int> failure_degree;  // lowest weighted degree of a nonzero residual term

    bool holds() const { return residual.is_zero(); }
};

using AxiomReport = std::vector<AxiomResidual>;

// Residuals of left-unit, right-unit, commutativity and associativity.
AxiomReport check_axioms(const FormalGroupLaw& law);

// Custom model with every coefficient pushed through the homomorphism.
FormalGroupLaw specialize(const FormalGroupLaw& law, const CoeffHom& hom,
                          const HomOptions& options = {});

// a[i,j] -> coefficient of x^i y^j in the universal-log law, for i + j <= bound.
CoeffHom log_images(int bound, int coeff_bound = kDefaultCoeffBound);

// Every given generator -> 0.
CoeffHom vanishing_images(const std::vector<CoeffGenerator>& generators);

// All coefficient generators appearing in a series.
std::vector<CoeffGenerator> coefficient_generators(const Series& s);

}  // namespace cobord
