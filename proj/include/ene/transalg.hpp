#pragma once

#include <map>
#include <string>
#include <vector>

#include "ene/ene_product.hpp"
#include "ene/rational_function.hpp"
#include "ene/series.hpp"

namespace ene {

/// Point of the sphere: a Q(i) value or the point at infinity.
struct SpherePoint {
    bool infinite = false;
    GaussianRational value;  // meaningful iff !infinite

    static SpherePoint at_infinity() { return {true, GaussianRational()}; }
    static SpherePoint finite(GaussianRational v) { return {false, std::move(v)}; }

    friend bool operator==(const SpherePoint& a, const SpherePoint& b) {
        if (a.infinite != b.infinite) return false;
        return a.infinite || a.value == b.value;
    }
    friend bool operator!=(const SpherePoint& a, const SpherePoint& b) { return !(a == b); }
    /// finite points first (by scalar order), infinity last
    friend bool operator<(const SpherePoint& a, const SpherePoint& b) {
        if (a.infinite != b.infinite) return !a.infinite;
        return !a.infinite && a.value < b.value;
    }

    std::string to_string() const { return infinite ? "inf" : value.to_string(); }
};

/// f = ratPart * e^{expPart}, both rational over Q(i). Canonical form: the
/// polynomial part of expPart has zero constant term (exponents live modulo
/// constants), and ratPart is nonzero.
class TransalgebraicFunction {
public:
    TransalgebraicFunction() : rat_(1) {}
    explicit TransalgebraicFunction(RationalFunction rat) : TransalgebraicFunction(std::move(rat), {}) {}
    TransalgebraicFunction(RationalFunction rat, RationalFunction exponent);

    /// e^{alpha R_k(z/z0)}: the building blocks the exponential factors
    /// decompose into. k >= 1, z0 != 0.
    static TransalgebraicFunction generator(int k, const GaussianRational& z0, const GaussianRational& alpha);

    const RationalFunction& rational_part() const { return rat_; }
    const RationalFunction& exponent_part() const { return exp_; }
    bool is_rational() const { return exp_.is_zero(); }

    TransalgebraicFunction inverse() const;
    TransalgebraicFunction pow(long e) const;
    friend TransalgebraicFunction operator*(const TransalgebraicFunction& a, const TransalgebraicFunction& b);
    friend TransalgebraicFunction operator/(const TransalgebraicFunction& a, const TransalgebraicFunction& b);

    friend bool operator==(const TransalgebraicFunction& a, const TransalgebraicFunction& b) {
        return a.rat_ == b.rat_ && a.exp_ == b.exp_;
    }
    friend bool operator!=(const TransalgebraicFunction& a, const TransalgebraicFunction& b) { return !(a == b); }

private:
    RationalFunction rat_;
    RationalFunction exp_;
};

/// Zeros and poles with signed multiplicities (algebraic part, summing to zero
/// over the sphere) plus exponential singularities with their orders
/// (transcendental part).
struct TransalgebraicDivisor {
    std::map<SpherePoint, long> algebraic;
    std::map<SpherePoint, int> transcendental;
};

/// Both parts of the divisor. Requires every zero and pole to lie in Q(i).
TransalgebraicDivisor transalg_divisor(const TransalgebraicFunction& f);

/// Order of the exponential singularity at p (0 when f is tame there).
int transalg_order(const TransalgebraicFunction& f, const SpherePoint& p);

/// d0 = algebraic support away from the exponential singularities,
/// d_infinity = sum of (order + 1) over the singular set.
struct DegreeProfile {
    int d0 = 0;
    int d_infinity = 0;
};

DegreeProfile degree_profile(const TransalgebraicFunction& f);

/// f'/f = ratPart'/ratPart + expPart', exactly.
RationalFunction transalg_log_derivative(const TransalgebraicFunction& f);

/// One exponential factor e^{coefficient * R_order(z / location)}.
struct GeneratorTerm {
    int order = 0;
    GaussianRational location;
    GaussianRational coefficient;
};

/// expPart decomposed as entire_part(z) + zero_part(1/z) + sum of terms,
/// up to an additive constant (exponents are taken modulo constants).
/// entire_part and zero_part have zero constant term.
struct GeneratorFactorization {
    RationalFunction rational_part;
    Poly entire_part;
    Poly zero_part;  // coefficient j multiplies z^-j
    std::vector<GeneratorTerm> terms;
};

GeneratorFactorization factor_generators(const TransalgebraicFunction& f);

/// Reassembles the exponent of a factorization (polynomially in z and 1/z plus
/// the generator terms). Differs from the original exponent by a constant.
RationalFunction assemble_exponent(const GeneratorFactorization& g);

/// Symbol of an exponential singularity: the function e^{-w R_m(z/u)} ...
/// concretely, exponent coefficients -weight * n^(order-1) * parameter^(-n).
/// order 0 degenerates to the simple algebraic factor (1 - z/parameter)^weight.
struct EneSymbol {
    long order = 0;
    GaussianRational parameter;  // != 0
    GaussianRational weight;

    /// "infinite-zero", "infinite-pole" or "simple-factor".
    std::string kind() const;

    LaurentSeries exponent_series(int high) const;
    NormalizedSeries expand(int high) const;
};

/// The product law on symbols: orders add, parameters multiply, weights
/// multiply. Exact, no series involved.
EneSymbol ene_symbols(const EneSymbol& a, const EneSymbol& b);

/// Exponent of f at 0 modulo constants: log(rat/rat(0)) + expansion of the
/// exponent with its constant dropped. Requires the algebraic divisor away
/// from 0; the window dips below zero when f has an exponential singularity
/// at the origin.
LaurentSeries transalg_exponent_series(const TransalgebraicFunction& f, int order);

/// Result of the eñe product of transalgebraic functions as a series at 0.
/// When an operand has an exponential singularity at the origin the product
/// exponent keeps negative-index coefficients; those cannot be folded into a
/// power series and are reported in `principal` (has_principal set) while
/// `series` carries exp of the regular part.
struct EneProductResult {
    NormalizedSeries series;
    LaurentSeries principal;
    bool has_principal = false;
};

EneProductResult ene_transalg(const TransalgebraicFunction& f, const TransalgebraicFunction& g, int order);

}  // namespace ene
