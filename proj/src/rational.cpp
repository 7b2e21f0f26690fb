#include "ene/rational.hpp"

#include <cctype>
#include <ostream>

namespace ene {

Rational::Rational(long n, long d) {
    if (d == 0) throw Error("rational with zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (sgn(d) == 0) throw Error("rational with zero denominator");
    q_ = mpq_class(n) / mpq_class(d);
    q_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    // mpq's own parser is looser than we want (accepts base prefixes,
    // whitespace); validate the shape first.
    auto fail = [&]() -> Rational { throw Error("malformed rational literal: '" + text + "'"); };
    std::size_t pos = 0;
    auto digits = [&](std::size_t from) {
        std::size_t p = from;
        if (p < text.size() && (text[p] == '+' || text[p] == '-')) ++p;
        if (p >= text.size() || !std::isdigit(static_cast<unsigned char>(text[p]))) return std::size_t{0};
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
        return p - from;
    };
    std::size_t n = digits(0);
    if (n == 0) return fail();
    pos = n;
    if (pos < text.size()) {
        if (text[pos] != '/') return fail();
        std::size_t m = digits(pos + 1);
        if (m == 0 || pos + 1 + m != text.size()) return fail();
        if (text[pos + 1] == '+' || text[pos + 1] == '-') return fail();
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) return fail();
    if (q.get_den() == 0) throw Error("rational with zero denominator");
    q.canonicalize();
    return Rational(q);
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw Error("division by zero");
    Rational r;
    r.q_ = 1 / q_;
    return r;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw Error("division by zero");
        return Rational(0);
    }
    Rational base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.q_.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), base.q_.get_den().get_mpz_t(), k);
    Rational r;
    r.q_ = mpq_class(num) / mpq_class(den);  // already canonical: base was
    return r;
}

Rational Rational::abs() const {
    Rational r;
    r.q_ = ::abs(q_);
    return r;
}

std::string Rational::to_string() const {
    return q_.get_str();
}

Rational Rational::factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    return *this *= o.inverse();
}

GaussianRational GaussianRational::inverse() const {
    Rational n = norm();
    if (n.is_zero()) throw Error("division by zero");
    return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::pow(long e) const {
    if (e == 0) return GaussianRational(1);
    GaussianRational base = *this;
    if (e < 0) base = inverse();
    unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
    GaussianRational acc(1);
    while (k != 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

std::string GaussianRational::to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string im_part;
    if (im_.is_one()) {
        im_part = "i";
    } else if (im_ == Rational(-1)) {
        im_part = "-i";
    } else {
        // "2*i" stays exact under the expression grammar's precedence.
        im_part = im_.to_string() + "*i";
    }
    if (re_.is_zero()) return im_part;
    if (im_part[0] == '-') return re_.to_string() + im_part;
    return re_.to_string() + "+" + im_part;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& s) {
    return os << s.to_string();
}

}  // namespace ene
