#include "ene/series.hpp"

#include <algorithm>
#include <sstream>

#include "ene/error.hpp"

namespace ene {

namespace {
const GaussianRational kZero{};

Rational rat_of(int n) { return Rational(static_cast<long>(n)); }
}  // namespace

LaurentSeries::LaurentSeries(SeriesWindow w) : low_(w.low), high_(w.high) {
    normalize_bounds();
    c_.assign(static_cast<std::size_t>(high_ - low_) + 1, GaussianRational());
}

LaurentSeries::LaurentSeries(int low, std::vector<GaussianRational> coeffs) : low_(low), c_(std::move(coeffs)) {
    if (c_.empty()) throw Error("empty series window");
    high_ = low_ + static_cast<int>(c_.size()) - 1;
    if (low_ > 0 || high_ < 0) {
        // pad so the window always straddles 0
        if (low_ > 0) {
            c_.insert(c_.begin(), static_cast<std::size_t>(low_), GaussianRational());
            low_ = 0;
        }
        if (high_ < 0) {
            c_.insert(c_.end(), static_cast<std::size_t>(-high_), GaussianRational());
            high_ = 0;
        }
    }
}

void LaurentSeries::normalize_bounds() {
    if (low_ > 0) low_ = 0;
    if (high_ < 0) throw Error("truncation window collapsed");
}

LaurentSeries LaurentSeries::one(int high) {
    LaurentSeries s = zero(high);
    s.set_coeff(0, GaussianRational(1));
    return s;
}

LaurentSeries LaurentSeries::monomial(const GaussianRational& c, int k, int high) {
    if (k > high) throw Error("monomial index beyond window");
    LaurentSeries s(SeriesWindow{std::min(k, 0), high});
    s.set_coeff(k, c);
    return s;
}

const GaussianRational& LaurentSeries::coeff(int k) const {
    if (k < low_) return kZero;
    if (k > high_) throw Error("coefficient index beyond truncation window");
    return c_[static_cast<std::size_t>(k - low_)];
}

void LaurentSeries::set_coeff(int k, const GaussianRational& v) {
    if (k < low_ || k > high_) throw Error("coefficient index beyond truncation window");
    c_[static_cast<std::size_t>(k - low_)] = v;
}

bool LaurentSeries::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    SeriesWindow w{std::min(a.low_, b.low_), std::min(a.high_, b.high_)};
    LaurentSeries r{w};
    for (int k = w.low; k <= w.high; ++k) r.set_coeff(k, a.coeff(k) + b.coeff(k));
    return r;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
    SeriesWindow w{std::min(a.low_, b.low_), std::min(a.high_, b.high_)};
    LaurentSeries r{w};
    for (int k = w.low; k <= w.high; ++k) r.set_coeff(k, a.coeff(k) - b.coeff(k));
    return r;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    // exactness bound uses the true valuations: the unknown tail of one factor
    // first pollutes index high + (valuation of the other)
    auto valuation = [](const LaurentSeries& s) {
        for (int k = s.low_; k <= s.high_; ++k)
            if (!s.coeff(k).is_zero()) return k;
        return s.high_ + 1;  // zero on the window: support starts past it
    };
    int va = valuation(a);
    int vb = valuation(b);
    int low = std::min(va + vb, 0);
    int high = std::min(a.high_ + vb, b.high_ + va);
    if (high < 0) throw Error("truncation window collapsed");
    LaurentSeries r{SeriesWindow{low, high}};
    for (int k = low; k <= high; ++k) {
        GaussianRational acc;
        int jlo = std::max(a.low_, k - b.high_);
        int jhi = std::min(a.high_, k - b.low_);
        for (int j = jlo; j <= jhi; ++j) {
            const GaussianRational& aj = a.coeff(j);
            if (aj.is_zero()) continue;
            acc += aj * b.coeff(k - j);
        }
        r.set_coeff(k, acc);
    }
    return r;
}

LaurentSeries operator*(const GaussianRational& s, LaurentSeries t) {
    for (auto& c : t.c_) c *= s;
    return t;
}

LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) {
    return a * b.inverse();
}

LaurentSeries LaurentSeries::inverse() const {
    int v = low_;
    while (v <= high_ && coeff(v).is_zero()) ++v;
    if (v > high_) throw Error("division by series that is zero to truncation order");
    int order = high_ - v;  // u = z^-v s / c_v is a unit power series known to this order
    GaussianRational cv = coeff(v);
    GaussianRational cv_inv = cv.inverse();
    std::vector<GaussianRational> u(static_cast<std::size_t>(order) + 1);
    for (int j = 0; j <= order; ++j) u[static_cast<std::size_t>(j)] = coeff(v + j) * cv_inv;
    std::vector<GaussianRational> inv(static_cast<std::size_t>(order) + 1);
    inv[0] = GaussianRational(1);
    for (int t = 1; t <= order; ++t) {
        GaussianRational acc;
        for (int j = 1; j <= t; ++j) acc += u[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(t - j)];
        inv[static_cast<std::size_t>(t)] = -acc;
    }
    // s^-1 = cv^-1 z^-v u^-1: window [-v, high - 2v]
    if (high_ - 2 * v < 0) throw Error("truncation window collapsed");
    LaurentSeries r{SeriesWindow{-v, high_ - 2 * v}};
    for (int j = 0; j <= order; ++j) r.set_coeff(-v + j, inv[static_cast<std::size_t>(j)] * cv_inv);
    return r;
}

LaurentSeries LaurentSeries::log() const {
    for (int k = low_; k < 0; ++k)
        if (!coeff(k).is_zero()) throw Error("series not normalized");
    if (!coeff(0).is_one()) throw Error("series not normalized");
    int n = high_;
    // log s = integral of s'/s
    LaurentSeries r = zero(n);
    if (n == 0) return r;
    // q = s'/s known to index n-1
    LaurentSeries ds{SeriesWindow{0, n - 1}};
    for (int k = 0; k <= n - 1; ++k) ds.set_coeff(k, GaussianRational(rat_of(k + 1)) * coeff(k + 1));
    LaurentSeries q = ds * inverse();
    for (int k = 1; k <= n; ++k) r.set_coeff(k, q.coeff(k - 1) / GaussianRational(rat_of(k)));
    return r;
}

LaurentSeries LaurentSeries::exp() const {
    for (int k = low_; k < 0; ++k)
        if (!coeff(k).is_zero()) throw Error("exponent not formal-nilpotent");
    if (!coeff(0).is_zero()) throw Error("exponent not formal-nilpotent");
    int n = high_;
    LaurentSeries r = zero(n);
    r.set_coeff(0, GaussianRational(1));
    // n g_n = sum_{j=1..n} j f_j g_{n-j}
    for (int m = 1; m <= n; ++m) {
        GaussianRational acc;
        for (int j = 1; j <= m; ++j) {
            const GaussianRational& fj = coeff(j);
            if (fj.is_zero()) continue;
            acc += GaussianRational(rat_of(j)) * fj * r.coeff(m - j);
        }
        r.set_coeff(m, acc / GaussianRational(rat_of(m)));
    }
    return r;
}

LaurentSeries LaurentSeries::theta() const {
    LaurentSeries r = *this;
    for (int k = low_; k <= high_; ++k) r.set_coeff(k, GaussianRational(rat_of(k)) * coeff(k));
    return r;
}

LaurentSeries LaurentSeries::rescaled(const GaussianRational& u) const {
    if (u.is_zero()) throw Error("rescale by zero");
    LaurentSeries r = *this;
    GaussianRational ui = u.inverse();
    // u^-k for k from low to high
    GaussianRational f = ui.pow(low_);
    for (int k = low_; k <= high_; ++k) {
        r.set_coeff(k, f * coeff(k));
        f *= ui;
    }
    return r;
}

LaurentSeries LaurentSeries::truncated(int new_high) const {
    if (new_high > high_) throw Error("cannot extend truncation window");
    if (new_high < 0) throw Error("truncation window collapsed");
    LaurentSeries r{SeriesWindow{low_, new_high}};
    for (int k = low_; k <= new_high; ++k) r.set_coeff(k, coeff(k));
    return r;
}

LaurentSeries LaurentSeries::principal_part() const {
    LaurentSeries r{window()};
    for (int k = low_; k < 0; ++k) r.set_coeff(k, coeff(k));
    return r;
}

LaurentSeries LaurentSeries::regular_part() const {
    LaurentSeries r{window()};
    for (int k = std::max(low_, 0); k <= high_; ++k) r.set_coeff(k, coeff(k));
    return r;
}

bool LaurentSeries::has_principal_part() const {
    for (int k = low_; k < 0; ++k)
        if (!coeff(k).is_zero()) return true;
    return false;
}

std::string LaurentSeries::to_string(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (int k = low_; k <= high_; ++k) {
        const GaussianRational& c = coeff(k);
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        bool negated = false;
        if (!first && cs[0] == '-' && c.imag().is_zero()) {
            cs = cs.substr(1);
            negated = true;
        }
        if (!first) os << (negated ? "-" : "+");
        bool composite = cs.find('+') != std::string::npos || cs.find('*') != std::string::npos ||
                         cs.find('-', 1) != std::string::npos;
        if (k == 0) {
            os << cs;
        } else {
            if (cs == "1") {
            } else if (cs == "-1") {
                os << "-";
            } else {
                os << (composite ? "(" + cs + ")" : cs);
            }
            os << var;
            if (k != 1) os << "^" << k;
        }
        first = false;
    }
    if (first) os << "0";
    os << "+O(" << var << "^" << (high_ + 1) << ")";
    return os.str();
}

bool equal_on_common_window(const LaurentSeries& a, const LaurentSeries& b) {
    int low = std::min(a.low(), b.low());
    int high = std::min(a.high(), b.high());
    for (int k = low; k <= high; ++k)
        if (a.coeff(k) != b.coeff(k)) return false;
    return true;
}

LaurentSeries series_of_rational(const RationalFunction& r, int order) {
    if (order < 0) throw Error("negative truncation order");
    if (r.is_zero()) return LaurentSeries::zero(order);
    // den = z^v dtilde with dtilde(0) != 0
    Poly den = r.den();
    int v = 0;
    while (den.degree() > 0 && den.coeff(0).is_zero()) {
        den = deflate(den, GaussianRational());
        ++v;
    }
    // expand num/dtilde to index order+v, then shift down by v
    int n = order + v;
    GaussianRational d0 = den.coeff(0);
    GaussianRational d0_inv = d0.inverse();
    std::vector<GaussianRational> inv(static_cast<std::size_t>(n) + 1);
    inv[0] = d0_inv;
    for (int t = 1; t <= n; ++t) {
        GaussianRational acc;
        for (int j = 1; j <= std::min(t, den.degree()); ++j)
            acc += den.coeff(j) * inv[static_cast<std::size_t>(t - j)];
        inv[static_cast<std::size_t>(t)] = -(acc * d0_inv);
    }
    LaurentSeries out{SeriesWindow{std::min(-v, 0), order}};
    for (int t = 0; t <= n; ++t) {
        GaussianRational acc;
        for (int j = 0; j <= std::min(t, r.num().degree()); ++j)
            acc += r.num().coeff(j) * inv[static_cast<std::size_t>(t - j)];
        if (t - v <= order) out.set_coeff(t - v, acc);
    }
    return out;
}

}  // namespace ene
