#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ene/rational.hpp"

namespace ene {

/// Dense polynomial over Q(i), coefficients lowest index first, no trailing
/// zeros. The zero polynomial stores nothing and has degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<GaussianRational> coeffs) : c_(coeffs) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return constant(GaussianRational(1)); }
    static Poly constant(const GaussianRational& s);
    static Poly variable();  // z
    /// c * z^k
    static Poly monomial(const GaussianRational& c, int k);

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<GaussianRational>& coefficients() const { return c_; }
    GaussianRational coeff(int k) const;
    GaussianRational leading() const;
    bool is_monic() const { return !c_.empty() && leading().is_one(); }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const GaussianRational& s, Poly p);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned e) const;
    Poly derivative() const;
    GaussianRational operator()(const GaussianRational& z) const;

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
    /// Exact division; throws if the remainder is nonzero.
    Poly divide_exact(const Poly& den) const;
    Poly monic() const;

    /// p(z + a).
    Poly shifted(const GaussianRational& a) const;
    /// z^n p(1/z) for n >= degree; coefficients reversed into length n+1.
    Poly reversed(int n) const;
    /// p(z/u), u != 0.
    Poly rescaled_argument(const GaussianRational& u) const;

    /// Lowest-first display, "1+4z+z^2" style. "0" for zero.
    std::string to_string(const std::string& var = "z") const;

private:
    void trim();

    std::vector<GaussianRational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

/// Divide (z - root) out of p exactly; throws unless root is actually a root.
Poly deflate(const Poly& p, const GaussianRational& root);

}  // namespace ene
