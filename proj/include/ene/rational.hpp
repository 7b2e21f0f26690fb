#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "ene/error.hpp"

namespace ene {

/// Arbitrary-precision rational, always canonical (reduced, denominator > 0).
/// Thin wrapper over mpq_class; results of gmpxx expression templates are
/// materialized here so callers never touch __gmp_expr.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit by design
    Rational(long n, long d);
    explicit Rational(const mpz_class& n) : q_(n) {}
    Rational(const mpz_class& n, const mpz_class& d);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Accepts "p" or "p/q" with optional sign, arbitrary size.
    static Rational from_string(const std::string& text);

    const mpq_class& raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational inverse() const;
    /// Integer power, negative exponents invert. 0^0 = 1, 0^negative throws.
    Rational pow(long e) const;
    Rational abs() const;

    /// "p" when the denominator is 1, else "p/q".
    std::string to_string() const;
    double to_double() const { return q_.get_d(); }

    static Rational factorial(unsigned long n);

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Element of Q(i). Exact field operations throughout.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
    GaussianRational(long n) : re_(n) {}                   // NOLINT
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational conj() const { return {re_, -im_}; }
    /// re^2 + im^2, the field norm down to Q.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
    /// Lexicographic (re, im); a total order for container keys, nothing more.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    GaussianRational inverse() const;
    GaussianRational pow(long e) const;

    /// Human form: "3/2", "i", "-i", "2*i", "1-i", "1/2+1/3*i".
    std::string to_string() const;

    std::pair<double, double> to_doubles() const { return {re_.to_double(), im_.to_double()}; }

private:
    Rational re_;
    Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& s);

}  // namespace ene
