#include "ene/rational_function.hpp"

#include <sstream>

#include "ene/error.hpp"
#include "ene/gaussian_roots.hpp"

namespace ene {

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("division by zero polynomial");
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    GaussianRational lead = den_.leading();
    if (!lead.is_one()) {
        GaussianRational inv = lead.inverse();
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    return *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    return *this = RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    return *this = RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw Error("division by zero");
    return *this = RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw Error("division by zero");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
    if (e == 0) return RationalFunction(1);
    RationalFunction base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
    // reduced & monic is preserved under powers: no re-reduction needed
    RationalFunction r;
    r.num_ = base.num_.pow(static_cast<unsigned>(k));
    r.den_ = base.den_.pow(static_cast<unsigned>(k));
    GaussianRational lead = r.den_.leading();
    if (!lead.is_one()) {
        GaussianRational inv = lead.inverse();
        r.num_ = inv * r.num_;
        r.den_ = inv * r.den_;
    }
    return r;
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

GaussianRational RationalFunction::operator()(const GaussianRational& z) const {
    GaussianRational d = den_(z);
    if (d.is_zero()) throw Error("evaluation at a pole");
    return num_(z) / d;
}

RationalFunction RationalFunction::substitute_inverse() const {
    if (is_zero()) return RationalFunction();
    int dn = num_.degree();
    int dd = den_.degree();
    int n = dn > dd ? dn : dd;
    // num(1/z)/den(1/z) = z^n num(1/z) / (z^n den(1/z))
    return RationalFunction(num_.reversed(n), den_.reversed(n));
}

RationalFunction RationalFunction::rescaled_argument(const GaussianRational& u) const {
    return RationalFunction(num_.rescaled_argument(u), den_.rescaled_argument(u));
}

int RationalFunction::order_at_infinity() const {
    if (is_zero()) throw Error("order at infinity of zero function");
    return den_.degree() - num_.degree();
}

Poly RationalFunction::quotient_part() const {
    return Poly::divmod(num_, den_).first;
}

std::string RationalFunction::to_string(const std::string& var) const {
    if (is_polynomial()) {
        GaussianRational c = den_.coeff(0);
        Poly n = c.is_one() ? num_ : c.inverse() * num_;
        return n.to_string(var);
    }
    std::ostringstream os;
    bool wrap_num = num_.degree() > 0;
    os << (wrap_num ? "(" : "") << num_.to_string(var) << (wrap_num ? ")" : "");
    os << "/(" << den_.to_string(var) << ")";
    return os.str();
}

int polar_order(const RationalFunction& r, const GaussianRational& z0) {
    if (r.is_zero()) return 0;
    int m = 0;
    Poly d = r.den();
    while (d.degree() >= 1 && d(z0).is_zero()) {
        d = deflate(d, z0);
        ++m;
    }
    return m;  // num(z0) != 0 whenever m > 0: the quotient is reduced
}

namespace {

/// Polar coefficients of r at a pole z0 of order m: returns c[0..m-1] with
/// c[j-1] the coefficient of (z-z0)^{-j}. Uses the Taylor expansion of
/// num/(den with the pole removed) at z0.
std::vector<GaussianRational> polar_coefficients(const RationalFunction& r, const GaussianRational& z0, int m) {
    Poly g = r.den();
    for (int k = 0; k < m; ++k) g = deflate(g, z0);
    // h(w) = num(z0+w) / g(z0+w) as a power series to order m-1
    Poly ns = r.num().shifted(z0);
    Poly gs = g.shifted(z0);
    GaussianRational g0 = gs.coeff(0);  // nonzero: pole fully removed
    std::vector<GaussianRational> inv(static_cast<std::size_t>(m));
    inv[0] = g0.inverse();
    for (int t = 1; t < m; ++t) {
        GaussianRational acc;
        for (int j = 1; j <= t; ++j) acc += gs.coeff(j) * inv[static_cast<std::size_t>(t - j)];
        inv[static_cast<std::size_t>(t)] = -(acc * inv[0]);
    }
    std::vector<GaussianRational> taylor(static_cast<std::size_t>(m));
    for (int t = 0; t < m; ++t) {
        GaussianRational acc;
        for (int j = 0; j <= t; ++j) acc += ns.coeff(j) * inv[static_cast<std::size_t>(t - j)];
        taylor[static_cast<std::size_t>(t)] = acc;
    }
    // num/den = sum_t taylor_t (z-z0)^{t-m}: coefficient of (z-z0)^{-j} is taylor_{m-j}
    std::vector<GaussianRational> c(static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j) c[static_cast<std::size_t>(j - 1)] = taylor[static_cast<std::size_t>(m - j)];
    return c;
}

}  // namespace

GaussianRational residue(const RationalFunction& r, const GaussianRational& z0) {
    int m = polar_order(r, z0);
    if (m == 0) return GaussianRational();
    return polar_coefficients(r, z0, m)[0];
}

PolarDecomposition partial_fractions(const RationalFunction& r) {
    PolarDecomposition d;
    d.polynomial_part = r.quotient_part();
    if (r.is_polynomial()) return d;
    RootExtraction roots = gaussian_rational_roots(r.den());
    if (!roots.splits()) throw Error("pole outside scalar field");
    for (const auto& [z0, m] : roots.roots) d.polar_parts[z0] = polar_coefficients(r, z0, m);
    return d;
}

RationalFunction assemble(const PolarDecomposition& d) {
    RationalFunction r(d.polynomial_part);
    for (const auto& [z0, coeffs] : d.polar_parts) {
        Poly lin{-z0, GaussianRational(1)};  // z - z0
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            if (coeffs[j].is_zero()) continue;
            r += RationalFunction(Poly::constant(coeffs[j]), lin.pow(static_cast<unsigned>(j + 1)));
        }
    }
    return r;
}

}  // namespace ene
