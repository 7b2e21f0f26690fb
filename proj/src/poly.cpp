#include "ene/poly.hpp"

#include <sstream>

#include "ene/error.hpp"

namespace ene {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const GaussianRational& s) {
    Poly p;
    if (!s.is_zero()) p.c_.push_back(s);
    return p;
}

Poly Poly::variable() {
    return monomial(GaussianRational(1), 1);
}

Poly Poly::monomial(const GaussianRational& c, int k) {
    if (k < 0) throw Error("monomial with negative exponent");
    Poly p;
    if (!c.is_zero()) {
        p.c_.assign(static_cast<std::size_t>(k) + 1, GaussianRational());
        p.c_.back() = c;
    }
    return p;
}

GaussianRational Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return GaussianRational();
    return c_[static_cast<std::size_t>(k)];
}

GaussianRational Poly::leading() const {
    if (c_.empty()) throw Error("leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<GaussianRational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t j = 0; j < a.c_.size(); ++j) {
        if (a.c_[j].is_zero()) continue;
        for (std::size_t k = 0; k < b.c_.size(); ++k) c[j + k] += a.c_[j] * b.c_[k];
    }
    return Poly(std::move(c));
}

Poly operator*(const GaussianRational& s, Poly p) {
    for (auto& c : p.c_) c *= s;
    p.trim();
    return p;
}

Poly Poly::pow(unsigned e) const {
    Poly acc = Poly::one();
    Poly base = *this;
    while (e != 0) {
        if (e & 1) acc *= base;
        if (e >>= 1) base *= base;
    }
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<GaussianRational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = GaussianRational(Rational(static_cast<long>(k))) * c_[k];
    return Poly(std::move(d));
}

GaussianRational Poly::operator()(const GaussianRational& z) const {
    GaussianRational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw Error("division by zero polynomial");
    Poly rem = num;
    if (num.degree() < den.degree()) return {Poly(), rem};
    GaussianRational lead_inv = den.leading().inverse();
    std::vector<GaussianRational> q(static_cast<std::size_t>(num.degree() - den.degree()) + 1);
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        int shift = rem.degree() - den.degree();
        GaussianRational f = rem.leading() * lead_inv;
        q[static_cast<std::size_t>(shift)] = f;
        rem -= Poly::monomial(f, shift) * den;
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::divide_exact(const Poly& den) const {
    auto [q, r] = divmod(*this, den);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

Poly Poly::monic() const {
    if (is_zero()) throw Error("monic form of zero polynomial");
    return leading().inverse() * *this;
}

Poly Poly::shifted(const GaussianRational& a) const {
    // p(z+a) = sum_t taylor_t z^t where the taylor_t are the remainders of
    // repeated synthetic division of p by (z - a).
    std::vector<GaussianRational> taylor;
    std::vector<GaussianRational> v = c_;
    taylor.reserve(v.size());
    while (!v.empty()) {
        GaussianRational rem;
        for (std::size_t k = v.size(); k-- > 0;) {
            GaussianRational next = v[k] + rem * a;
            v[k] = rem;  // quotient coefficient b_k ends up in slot k
            rem = next;
        }
        taylor.push_back(rem);
        v.pop_back();  // top slot is always the stray leading zero
    }
    return Poly(std::move(taylor));
}

Poly Poly::reversed(int n) const {
    if (n < degree()) throw Error("reversal order below degree");
    if (is_zero()) return Poly();
    std::vector<GaussianRational> r(static_cast<std::size_t>(n) + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) r[static_cast<std::size_t>(n) - k] = c_[k];
    return Poly(std::move(r));
}

Poly Poly::rescaled_argument(const GaussianRational& u) const {
    if (u.is_zero()) throw Error("rescale by zero");
    GaussianRational inv = u.inverse();
    GaussianRational p(1);
    std::vector<GaussianRational> r = c_;
    for (std::size_t k = 1; k < r.size(); ++k) {
        p *= inv;
        r[k] *= p;
    }
    return Poly(std::move(r));
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const GaussianRational& c = c_[k];
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        bool negated = false;
        if (!first && !cs.empty() && cs[0] == '-' && c.imag().is_zero()) {
            cs = cs.substr(1);
            negated = true;
        }
        if (!first) os << (negated ? "-" : "+");
        bool needs_parens = cs.find('+') != std::string::npos ||
                            (cs.find('-') != std::string::npos && !(cs[0] == '-' && cs.find('-', 1) == std::string::npos)) ||
                            cs.find('/') != std::string::npos || cs.find('*') != std::string::npos;
        if (k == 0) {
            os << cs;
        } else {
            if (cs == "1") {
            } else if (cs == "-1") {
                os << "-";
            } else {
                os << (needs_parens ? "(" + cs + ")" : cs);
            }
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = Poly::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

Poly deflate(const Poly& p, const GaussianRational& root) {
    if (p.is_zero()) throw Error("deflating zero polynomial");
    const auto& c = p.coefficients();
    std::vector<GaussianRational> q(c.size() - 1);
    GaussianRational carry;
    for (std::size_t k = c.size(); k-- > 1;) {
        carry = c[k] + carry * root;
        q[k - 1] = carry;
    }
    GaussianRational rem = c[0] + carry * root;
    if (!rem.is_zero()) throw Error("deflation by non-root");
    return Poly(std::move(q));
}

}  // namespace ene
