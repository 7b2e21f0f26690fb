#pragma once

#include <map>
#include <string>
#include <vector>

#include "ene/poly.hpp"

namespace ene {

/// Quotient of polynomials over Q(i), kept reduced with monic denominator.
/// The zero function is 0/1.
class RationalFunction {
public:
    RationalFunction() : num_(Poly::zero()), den_(Poly::one()) {}
    RationalFunction(long n) : num_(Poly::constant(GaussianRational(n))), den_(Poly::one()) {}  // NOLINT
    explicit RationalFunction(const GaussianRational& s) : num_(Poly::constant(s)), den_(Poly::one()) {}
    explicit RationalFunction(Poly p) : num_(std::move(p)), den_(Poly::one()) {}
    /// Reduces num/den; throws "division by zero polynomial" when den = 0.
    RationalFunction(Poly num, Poly den);

    static RationalFunction variable() { return RationalFunction(Poly::variable()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

    /// Canonical form makes equality structural.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    RationalFunction inverse() const;
    RationalFunction pow(long e) const;
    RationalFunction derivative() const;

    /// Value at a non-pole; throws "evaluation at a pole" otherwise.
    GaussianRational operator()(const GaussianRational& z) const;
    bool is_pole(const GaussianRational& z) const { return den_(z).is_zero(); }

    /// R(1/z) as a rational function of z.
    RationalFunction substitute_inverse() const;
    /// R(z/u), u != 0.
    RationalFunction rescaled_argument(const GaussianRational& u) const;

    /// deg den - deg num: order of vanishing at infinity (negative = pole).
    int order_at_infinity() const;

    /// Polynomial part under euclidean division.
    Poly quotient_part() const;

    std::string to_string(const std::string& var = "z") const;

private:
    Poly num_;
    Poly den_;
};

/// Multiplicity of z0 as a pole of r (0 when regular there).
int polar_order(const RationalFunction& r, const GaussianRational& z0);

/// Coefficient of 1/(z - z0) in the expansion of r at z0. Exact.
GaussianRational residue(const RationalFunction& r, const GaussianRational& z0);

/// r = polynomial_part + sum over poles z0 of sum_j coeff[j-1]/(z - z0)^j.
/// polar_parts[z0][j-1] is the coefficient of (z - z0)^{-j}.
struct PolarDecomposition {
    Poly polynomial_part;
    std::map<GaussianRational, std::vector<GaussianRational>> polar_parts;
};

/// Exact partial fraction decomposition. Every pole must lie in Q(i);
/// throws "pole outside scalar field" if the denominator does not split.
PolarDecomposition partial_fractions(const RationalFunction& r);

/// Reassemble a decomposition into a rational function (inverse of the above).
RationalFunction assemble(const PolarDecomposition& d);

}  // namespace ene
