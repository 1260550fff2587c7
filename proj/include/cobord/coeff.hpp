#pragma once

// Graded coefficient rings: polynomials over Z in the Lazard generators a[i,j]
// (degree -(i+j-1)), the logarithm generators m[k] (degree -k), and named
// generators of caller-chosen degree.  Degrees are cohomological.

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cobord {

using Integer = mpz_class;

inline constexpr int kUnbounded = std::numeric_limits<int>::max();

enum class GeneratorKind : std::uint8_t { A = 0, M = 1, Named = 2 };

class CoeffGenerator {
public:
    // a(i, j) and a(j, i) are the same generator.
    static CoeffGenerator a(int i, int j);
    static CoeffGenerator m(int k);
    // Registers the symbol on first use; re-registering with another degree throws.
    static CoeffGenerator named(const std::string& symbol, int degree);

    GeneratorKind kind() const noexcept { return static_cast<GeneratorKind>(key_ >> 56); }
    int first() const noexcept { return static_cast<int>((key_ >> 28) & kFieldMask); }
    int second() const noexcept { return static_cast<int>(key_ & kFieldMask); }
    int degree() const;
    const std::string& symbol() const;
    std::string to_string() const;

    friend bool operator==(CoeffGenerator lhs, CoeffGenerator rhs) noexcept {
        return lhs.key_ == rhs.key_;
    }
    // Canonical order: all a[i,j] by (i, j), then m[k] by k, then named by symbol.
    friend bool operator<(CoeffGenerator lhs, CoeffGenerator rhs);

private:
    static constexpr std::uint64_t kFieldMask = (std::uint64_t{1} << 28) - 1;
    explicit CoeffGenerator(std::uint64_t key) : key_(key) {}
    std::uint64_t key_;
};

class CoeffMonomial {
public:
    using Factor = std::pair<CoeffGenerator, int>;

    CoeffMonomial() = default;
    explicit CoeffMonomial(CoeffGenerator g, int power = 1);
    // Sorts, merges repeated generators, drops zero powers.
    static CoeffMonomial from_factors(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    int degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return factors_.empty(); }
    int power_of(CoeffGenerator g) const;
    std::string to_string() const;

    friend CoeffMonomial operator*(const CoeffMonomial& lhs, const CoeffMonomial& rhs);
    friend bool operator==(const CoeffMonomial& lhs, const CoeffMonomial& rhs) {
        return lhs.degree_ == rhs.degree_ && lhs.factors_ == rhs.factors_;
    }

private:
    std::vector<Factor> factors_;
    int degree_ = 0;
};

// Graded-lexicographic: smaller |degree| first, then lexicographically larger
// exponent vector first (a[1,1]^2 before a[1,2]).
struct GradedLexOrder {
    bool operator()(const CoeffMonomial& lhs, const CoeffMonomial& rhs) const;
};

class CoeffPoly {
public:
    using Terms = std::map<CoeffMonomial, Integer, GradedLexOrder>;

    CoeffPoly() = default;
    CoeffPoly(long value);  // NOLINT(google-explicit-constructor)
    CoeffPoly(const Integer& value);  // NOLINT(google-explicit-constructor)
    explicit CoeffPoly(CoeffGenerator g, int bound = kUnbounded);
    static CoeffPoly from_term(const CoeffMonomial& mono, const Integer& coeff, int bound = kUnbounded);

    int bound() const noexcept { return bound_; }
    // Drops every monomial with |degree| > bound.
    CoeffPoly with_bound(int bound) const;

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    // The value when the polynomial is an integer constant (zero included).
    std::optional<Integer> constant_value() const;
    bool is_unit() const;

    CoeffPoly& operator+=(const CoeffPoly& rhs);
    CoeffPoly& operator-=(const CoeffPoly& rhs);
    CoeffPoly& operator*=(const CoeffPoly& rhs);
    CoeffPoly& operator*=(const Integer& rhs);
    CoeffPoly operator-() const;

    friend CoeffPoly operator+(CoeffPoly lhs, const CoeffPoly& rhs) { return lhs += rhs; }
    friend CoeffPoly operator-(CoeffPoly lhs, const CoeffPoly& rhs) { return lhs -= rhs; }
    friend CoeffPoly operator*(const CoeffPoly& lhs, const CoeffPoly& rhs);
    friend CoeffPoly operator*(CoeffPoly lhs, const Integer& rhs) { return lhs *= rhs; }
    friend CoeffPoly operator*(const Integer& lhs, CoeffPoly rhs) { return rhs *= lhs; }
    friend CoeffPoly operator*(long lhs, CoeffPoly rhs) { return rhs *= Integer(lhs); }
    friend CoeffPoly operator*(CoeffPoly lhs, long rhs) { return lhs *= Integer(rhs); }

    // Equality ignores the bound.
    friend bool operator==(const CoeffPoly& lhs, const CoeffPoly& rhs) {
        return lhs.terms_ == rhs.terms_;
    }

    // Adds coeff * mono, respecting the bound.
    void add_term(const CoeffMonomial& mono, const Integer& coeff);
    // All generators that occur, in canonical order.
    std::vector<CoeffGenerator> generators() const;

private:
    Terms terms_;
    int bound_ = kUnbounded;
};

inline CoeffPoly poly_mul(const CoeffPoly& a, const CoeffPoly& b) { return a * b; }
CoeffPoly pow(const CoeffPoly& base, int exponent);

struct DegreeResult {
    enum class Status { Homogeneous, NotHomogeneous, Undefined };
    Status status;
    int degree = 0;

    bool homogeneous() const noexcept { return status == Status::Homogeneous; }
};

DegreeResult degree_of(const CoeffPoly& p);

using CoeffHom = std::map<CoeffGenerator, CoeffPoly>;

struct HomOptions {
    bool check_grading = true;
    // Generators without an image map to themselves instead of raising MissingImage.
    bool identity_on_missing = false;
};

CoeffPoly apply_hom(const CoeffPoly& p, const CoeffHom& images, const HomOptions& options = {});

// g o f: apply f first, then g.
CoeffHom compose(const CoeffHom& g, const CoeffHom& f, const HomOptions& options = {});

std::string to_string(const CoeffPoly& p);
// Inverse of to_string; also accepts any +,-,*,^,() expression in generators.
CoeffPoly parse_coeff(std::string_view text, int bound = kUnbounded);

}  // namespace cobord
