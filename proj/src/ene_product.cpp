#include "ene/ene_product.hpp"

#include <algorithm>

#include "ene/error.hpp"

namespace ene {

void RootDivisor::add(const GaussianRational& root, long mult) {
    if (root.is_zero()) throw Error("divisor entry at zero");
    if (mult == 0) return;
    auto it = entries_.find(root);
    if (it == entries_.end()) {
        entries_.emplace(root, mult);
        return;
    }
    it->second += mult;
    if (it->second == 0) entries_.erase(it);
}

long RootDivisor::multiplicity(const GaussianRational& root) const {
    auto it = entries_.find(root);
    return it == entries_.end() ? 0 : it->second;
}

NormalizedSeries::NormalizedSeries(const LaurentSeries& s) : s_(s) {
    for (int k = s.low(); k < 0; ++k)
        if (!s.coeff(k).is_zero()) throw Error("series not normalized");
    if (!s.coeff(0).is_one()) throw Error("series not normalized");
}

LaurentSeries ene_exp(const LaurentSeries& f, const LaurentSeries& g) {
    int low = std::max(f.low(), g.low());
    int high = std::min(f.high(), g.high());
    if (high < 0) throw Error("truncation window collapsed");
    LaurentSeries h{SeriesWindow{low, high}};
    for (int k = low; k <= high; ++k) {
        if (k == 0) continue;
        GaussianRational v = f.coeff(k) * g.coeff(k);
        if (v.is_zero()) continue;
        h.set_coeff(k, GaussianRational(Rational(static_cast<long>(-k))) * v);
    }
    return h;
}

NormalizedSeries ene_series(const NormalizedSeries& f, const NormalizedSeries& g) {
    return NormalizedSeries(ene_exp(f.log_series(), g.log_series()).exp());
}

RootDivisor ene_roots(const RootDivisor& a, const RootDivisor& b) {
    RootDivisor out;
    for (const auto& [alpha, na] : a.entries())
        for (const auto& [beta, nb] : b.entries()) out.add(alpha * beta, na * nb);
    return out;
}

NormalizedSeries poly_from_divisor(const RootDivisor& d, int order) {
    // exponent of prod (1 - z/a)^n is sum over entries of -n a^-k / k at z^k
    LaurentSeries f = LaurentSeries::zero(order);
    for (const auto& [root, mult] : d.entries()) {
        GaussianRational inv = root.inverse();
        GaussianRational p(1);
        GaussianRational m{Rational(mult)};
        for (int k = 1; k <= order; ++k) {
            p *= inv;
            f.set_coeff(k, f.coeff(k) - m * p / GaussianRational(Rational(k)));
        }
    }
    return NormalizedSeries(f.exp());
}

GaussianRational universal_coeff_residual(const std::vector<GaussianRational>& a,
                                          const std::vector<GaussianRational>& b, int n) {
    if (n < 1) throw Error("coefficient index must be positive");
    if (a.size() < static_cast<std::size_t>(n) || b.size() < static_cast<std::size_t>(n))
        throw Error("coefficient list shorter than requested index");
    LaurentSeries fa = LaurentSeries::one(n);
    LaurentSeries fb = LaurentSeries::one(n);
    for (int k = 1; k <= n; ++k) {
        fa.set_coeff(k, a[static_cast<std::size_t>(k - 1)]);
        fb.set_coeff(k, b[static_cast<std::size_t>(k - 1)]);
    }
    LaurentSeries h = ene_exp(fa.log(), fb.log());
    // (exp h)_n - h_n: the product coefficient with its top cross term
    // -n F_n G_n removed. Everything left lives below index n.
    LaurentSeries c = h.exp();
    return c.coeff(n) - h.coeff(n);
}

}  // namespace ene
