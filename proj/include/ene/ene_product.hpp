#pragma once

#include <map>
#include <vector>

#include "ene/series.hpp"

namespace ene {

/// Formal multiset of nonzero roots with signed multiplicities (negative
/// entries are poles). Zero multiplicities are never stored.
class RootDivisor {
public:
    RootDivisor() = default;

    /// Adds mult at root; throws on root 0. Entries that cancel disappear.
    void add(const GaussianRational& root, long mult);

    const std::map<GaussianRational, long>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    long multiplicity(const GaussianRational& root) const;

    friend bool operator==(const RootDivisor& a, const RootDivisor& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const RootDivisor& a, const RootDivisor& b) { return !(a == b); }

private:
    std::map<GaussianRational, long> entries_;
};

/// Power series with constant term 1: the multiplicative normalization every
/// eñe operand is brought to.
class NormalizedSeries {
public:
    /// Requires constant term 1 and no nonzero negative-index coefficient.
    explicit NormalizedSeries(const LaurentSeries& s);

    const LaurentSeries& series() const { return s_; }
    int order() const { return s_.high(); }

    /// log with constant term 0, same window.
    LaurentSeries log_series() const { return s_.log(); }

    friend bool operator==(const NormalizedSeries& a, const NormalizedSeries& b) { return a.s_ == b.s_; }
    friend bool operator!=(const NormalizedSeries& a, const NormalizedSeries& b) { return !(a == b); }

private:
    LaurentSeries s_;
};

/// The product on exponents: H_k = -k F_k G_k coefficientwise. This is the
/// bilinear form the whole library revolves around. Window: low is the larger
/// of the operand lows, high the smaller of the highs.
LaurentSeries ene_exp(const LaurentSeries& f, const LaurentSeries& g);

/// Multiplicative eñe product of normalized series: exp(ene_exp(log f, log g)).
NormalizedSeries ene_series(const NormalizedSeries& f, const NormalizedSeries& g);

/// Divisor-level product: all pairwise root products with multiplied
/// multiplicities, cancellations removed.
RootDivisor ene_roots(const RootDivisor& a, const RootDivisor& b);

/// prod over entries (1 - z/root)^mult expanded through `order`.
NormalizedSeries poly_from_divisor(const RootDivisor& d, int order);

/// c_n + n F_n G_n, where c_n is the n-th coefficient of the eñe product of
/// the series with coefficient lists a, b (indices 1..n) and F, G are their
/// logs. The exponent coefficient H_n = -n F_n G_n carries the entire
/// dependence of c_n on the top coefficients, so this residual is a function
/// of a_1..a_{n-1}, b_1..b_{n-1} alone; returning it lets callers check
/// exactly that. (The residual in multiplicative coordinates, c_n + n a_n b_n,
/// is NOT top-free: already c_2 = -2 a_2 b_2 + a_2 b_1^2 + a_1^2 b_2.)
GaussianRational universal_coeff_residual(const std::vector<GaussianRational>& a,
                                          const std::vector<GaussianRational>& b, int n);

}  // namespace ene
