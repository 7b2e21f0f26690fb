#include "ene/transalg.hpp"

#include <algorithm>

#include "ene/error.hpp"
#include "ene/euler.hpp"
#include "ene/gaussian_roots.hpp"

namespace ene {

TransalgebraicFunction::TransalgebraicFunction(RationalFunction rat, RationalFunction exponent)
    : rat_(std::move(rat)), exp_(std::move(exponent)) {
    if (rat_.is_zero()) throw Error("transalgebraic function requires nonzero rational part");
    GaussianRational c = exp_.quotient_part().coeff(0);
    if (!c.is_zero()) exp_ -= RationalFunction(c);
}

TransalgebraicFunction TransalgebraicFunction::generator(int k, const GaussianRational& z0,
                                                         const GaussianRational& alpha) {
    if (z0.is_zero()) throw Error("generator location must be nonzero");
    return TransalgebraicFunction(RationalFunction(1),
                                  RationalFunction(alpha) * euler_r(k).rescaled_argument(z0));
}

TransalgebraicFunction TransalgebraicFunction::inverse() const {
    return {rat_.inverse(), -exp_};
}

TransalgebraicFunction TransalgebraicFunction::pow(long e) const {
    return {rat_.pow(e), RationalFunction(GaussianRational(Rational(e))) * exp_};
}

TransalgebraicFunction operator*(const TransalgebraicFunction& a, const TransalgebraicFunction& b) {
    return {a.rat_ * b.rat_, a.exp_ + b.exp_};
}

TransalgebraicFunction operator/(const TransalgebraicFunction& a, const TransalgebraicFunction& b) {
    return a * b.inverse();
}

namespace {

/// All roots with multiplicities; throws when the polynomial does not split.
std::map<GaussianRational, int> split_roots(const Poly& p) {
    if (p.degree() <= 0) return {};
    RootExtraction e = gaussian_rational_roots(p);
    if (!e.splits()) throw Error("pole outside scalar field");
    return e.roots;
}

}  // namespace

TransalgebraicDivisor transalg_divisor(const TransalgebraicFunction& f) {
    TransalgebraicDivisor out;
    for (const auto& [root, m] : split_roots(f.rational_part().num()))
        out.algebraic[SpherePoint::finite(root)] += m;
    for (const auto& [root, m] : split_roots(f.rational_part().den()))
        out.algebraic[SpherePoint::finite(root)] -= m;
    int at_inf = f.rational_part().order_at_infinity();
    if (at_inf != 0) out.algebraic[SpherePoint::at_infinity()] += at_inf;
    for (auto it = out.algebraic.begin(); it != out.algebraic.end();)
        it = it->second == 0 ? out.algebraic.erase(it) : std::next(it);

    const RationalFunction& e = f.exponent_part();
    if (!e.is_zero()) {
        for (const auto& [pole, m] : split_roots(e.den())) out.transcendental[SpherePoint::finite(pole)] = m;
        int dq = e.num().degree() - e.den().degree();
        if (dq >= 1) out.transcendental[SpherePoint::at_infinity()] = dq;
    }
    return out;
}

int transalg_order(const TransalgebraicFunction& f, const SpherePoint& p) {
    const RationalFunction& e = f.exponent_part();
    if (e.is_zero()) return 0;
    if (p.infinite) return std::max(e.num().degree() - e.den().degree(), 0);
    return polar_order(e, p.value);
}

DegreeProfile degree_profile(const TransalgebraicFunction& f) {
    TransalgebraicDivisor d = transalg_divisor(f);
    DegreeProfile out;
    for (const auto& [p, m] : d.algebraic) {
        (void)m;
        if (d.transcendental.find(p) == d.transcendental.end()) ++out.d0;
    }
    for (const auto& [p, ord] : d.transcendental) {
        (void)p;
        out.d_infinity += ord + 1;
    }
    return out;
}

RationalFunction transalg_log_derivative(const TransalgebraicFunction& f) {
    const RationalFunction& r = f.rational_part();
    return r.derivative() / r + f.exponent_part().derivative();
}

namespace {

/// Polar coefficients of R_k at its pole 1, cached: row k holds c[0..k-1]
/// with c[j-1] the coefficient of (z-1)^{-j}.
const std::vector<GaussianRational>& euler_polar_at_one(int k) {
    static std::map<int, std::vector<GaussianRational>> cache;
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    PolarDecomposition d = partial_fractions(euler_r(k));
    auto& row = cache[k];
    row = d.polar_parts.at(GaussianRational(1));
    return row;
}

}  // namespace

GeneratorFactorization factor_generators(const TransalgebraicFunction& f) {
    GeneratorFactorization out;
    out.rational_part = f.rational_part();
    PolarDecomposition d = partial_fractions(f.exponent_part());

    Poly q = d.polynomial_part;
    if (!q.coeff(0).is_zero()) q -= Poly::constant(q.coeff(0));  // exponent modulo constants
    out.entire_part = q;

    for (const auto& [z0, coeffs] : d.polar_parts) {
        if (z0.is_zero()) {
            // polar part at the origin is a polynomial in 1/z
            std::vector<GaussianRational> w(coeffs.size() + 1);
            for (std::size_t j = 0; j < coeffs.size(); ++j) w[j + 1] = coeffs[j];
            out.zero_part = Poly(std::move(w));
            continue;
        }
        std::vector<GaussianRational> residual = coeffs;
        int m = static_cast<int>(residual.size());
        for (int k = m; k >= 1; --k) {
            const GaussianRational& top = residual[static_cast<std::size_t>(k - 1)];
            if (top.is_zero()) continue;
            const auto& gamma = euler_polar_at_one(k);
            // polar coeffs of R_k(z/z0) at z0 are gamma[j-1] z0^j
            GaussianRational alpha = top / (gamma[static_cast<std::size_t>(k - 1)] * z0.pow(k));
            for (int j = 1; j <= k; ++j)
                residual[static_cast<std::size_t>(j - 1)] -=
                    alpha * gamma[static_cast<std::size_t>(j - 1)] * z0.pow(j);
            out.terms.push_back({k, z0, alpha});
        }
        for (const auto& c : residual)
            if (!c.is_zero()) throw Error("generator elimination left a residue");
    }
    return out;
}

RationalFunction assemble_exponent(const GeneratorFactorization& g) {
    RationalFunction e(g.entire_part);
    if (!g.zero_part.is_zero()) {
        // zero_part(1/z) = reversed / z^deg
        int dz = g.zero_part.degree();
        e += RationalFunction(g.zero_part.reversed(dz), Poly::monomial(GaussianRational(1), dz));
    }
    for (const auto& t : g.terms)
        e += RationalFunction(t.coefficient) * euler_r(t.order).rescaled_argument(t.location);
    return e;
}

std::string EneSymbol::kind() const {
    if (order > 0) return "infinite-zero";
    if (order < 0) return "infinite-pole";
    return "simple-factor";
}

LaurentSeries EneSymbol::exponent_series(int high) const {
    if (parameter.is_zero()) throw Error("symbol parameter must be nonzero");
    LaurentSeries s = LaurentSeries::zero(high);
    GaussianRational ui = parameter.inverse();
    GaussianRational p(1);
    for (int n = 1; n <= high; ++n) {
        p *= ui;
        s.set_coeff(n, -(weight * GaussianRational(Rational(static_cast<long>(n)).pow(order - 1)) * p));
    }
    return s;
}

NormalizedSeries EneSymbol::expand(int high) const {
    return NormalizedSeries(exponent_series(high).exp());
}

EneSymbol ene_symbols(const EneSymbol& a, const EneSymbol& b) {
    if (a.parameter.is_zero() || b.parameter.is_zero()) throw Error("symbol parameter must be nonzero");
    return {a.order + b.order, a.parameter * b.parameter, a.weight * b.weight};
}

LaurentSeries transalg_exponent_series(const TransalgebraicFunction& f, int order) {
    const RationalFunction& rat = f.rational_part();
    if (rat.num()(GaussianRational()).is_zero() || rat.den()(GaussianRational()).is_zero())
        throw Error("unsupported representative: algebraic divisor meets 0");
    GaussianRational c0 = rat(GaussianRational());
    LaurentSeries alg = (c0.inverse() * series_of_rational(rat, order)).log();
    if (f.exponent_part().is_zero()) return alg;
    LaurentSeries es = series_of_rational(f.exponent_part(), order);
    es.set_coeff(0, GaussianRational());  // exponent modulo constants
    return alg + es;
}

EneProductResult ene_transalg(const TransalgebraicFunction& f, const TransalgebraicFunction& g, int order) {
    LaurentSeries hf = transalg_exponent_series(f, order);
    LaurentSeries hg = transalg_exponent_series(g, order);
    LaurentSeries h = ene_exp(hf, hg);
    EneProductResult out{NormalizedSeries(h.regular_part().exp()), h.principal_part(),
                         h.has_principal_part()};
    return out;
}

}  // namespace ene
