#pragma once

#include <string>
#include <vector>

#include "ene/rational.hpp"
#include "ene/rational_function.hpp"

namespace ene {

/// Index window of a truncated Laurent series: coefficients with index below
/// `low` are exactly zero (a support bound), indices above `high` are unknown
/// (truncation). Always low <= 0 <= high.
struct SeriesWindow {
    int low = 0;
    int high = 0;
};

/// Truncated Laurent series over Q(i) around 0. All arithmetic tracks the
/// largest window on which the result is exact.
class LaurentSeries {
public:
    LaurentSeries() : low_(0), high_(0), c_(1) {}
    /// Zero series on the given window.
    explicit LaurentSeries(SeriesWindow w);
    LaurentSeries(int low, std::vector<GaussianRational> coeffs);

    static LaurentSeries zero(int high) { return LaurentSeries(SeriesWindow{0, high}); }
    static LaurentSeries one(int high);
    /// c * z^k on window [min(k,0), high].
    static LaurentSeries monomial(const GaussianRational& c, int k, int high);

    int low() const { return low_; }
    int high() const { return high_; }
    SeriesWindow window() const { return {low_, high_}; }

    /// Exact coefficient; indices below the window are zero, above it throw.
    const GaussianRational& coeff(int k) const;

    void set_coeff(int k, const GaussianRational& v);

    bool is_zero() const;  // zero on the whole window

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const GaussianRational& s, LaurentSeries t);
    /// Multiplication by the inverse; divisor must have a nonzero coefficient.
    friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b);

    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
        return a.low_ == b.low_ && a.high_ == b.high_ && a.c_ == b.c_;
    }
    friend bool operator!=(const LaurentSeries& a, const LaurentSeries& b) { return !(a == b); }

    /// z^v * (nonvanishing power series) inverted exactly; the window shrinks
    /// by twice the valuation v.
    LaurentSeries inverse() const;

    /// log of a series with constant term 1 and no polar part; window [0, high].
    LaurentSeries log() const;
    /// exp of a series with constant term 0 and no polar part; window [0, high].
    LaurentSeries exp() const;

    /// z d/dz: multiplies coefficient k by k. Window unchanged.
    LaurentSeries theta() const;
    /// s(z/u) for u != 0: coefficient k picks up u^{-k}. Window unchanged.
    LaurentSeries rescaled(const GaussianRational& u) const;

    /// Same coefficients up to new_high (must not exceed high).
    LaurentSeries truncated(int new_high) const;
    /// Coefficients at negative index, zero elsewhere. Same window.
    LaurentSeries principal_part() const;
    /// Coefficients at index >= 0, zero elsewhere. Same window.
    LaurentSeries regular_part() const;
    bool has_principal_part() const;

    /// "z^-1+2-z^3+O(z^5)" style display.
    std::string to_string(const std::string& var = "z") const;

private:
    void normalize_bounds();

    int low_;
    int high_;
    std::vector<GaussianRational> c_;  // c_[k - low_]
};

/// Equality of every coefficient both sides know (below-window indices count
/// as zero). This is the right notion for cross-checking two computations.
bool equal_on_common_window(const LaurentSeries& a, const LaurentSeries& b);

/// Laurent expansion of r at 0, exact through index `order`. The window's low
/// end extends to the true valuation when r has a pole or zero at 0.
LaurentSeries series_of_rational(const RationalFunction& r, int order);

}  // namespace ene
