#include "ene/gaussian_roots.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "ene/error.hpp"

namespace ene {
namespace {

constexpr std::size_t kDivisorBudget = 1 << 14;

struct Gint {
    mpz_class re, im;

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

bool operator<(const Gint& a, const Gint& b) {
    int c = cmp(a.re, b.re);
    if (c != 0) return c < 0;
    return cmp(a.im, b.im) < 0;
}

Gint gmul(const Gint& a, const Gint& b) {
    Gint r;
    r.re = a.re * b.re - a.im * b.im;
    r.im = a.re * b.im + a.im * b.re;
    return r;
}

mpz_class gnorm(const Gint& a) {
    mpz_class n = a.re * a.re + a.im * a.im;
    return n;
}

/// q = a / b when b divides a exactly in Z[i].
bool gdivide_exact(const Gint& a, const Gint& b, Gint& q) {
    mpz_class n = gnorm(b);
    if (sgn(n) == 0) return false;
    mpz_class re = a.re * b.re + a.im * b.im;
    mpz_class im = a.im * b.re - a.re * b.im;
    if (!mpz_divisible_p(re.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(im.get_mpz_t(), n.get_mpz_t()))
        return false;
    q.re = re / n;
    q.im = im / n;
    return true;
}

/// Unique associate with re > 0, im >= 0 (zero stays zero).
Gint first_quadrant(Gint w) {
    for (int k = 0; k < 4; ++k) {
        if (sgn(w.re) > 0 && sgn(w.im) >= 0) return w;
        w = Gint{-w.im, w.re};  // multiply by i
    }
    return w;  // zero
}

mpz_class round_quotient(const mpz_class& x, const mpz_class& n) {
    // nearest integer to x/n, n > 0
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
    if (2 * r > n) ++q;
    return q;
}

Gint ggcd(Gint a, Gint b) {
    while (!b.is_zero()) {
        mpz_class n = gnorm(b);
        mpz_class xre = a.re * b.re + a.im * b.im;
        mpz_class xim = a.im * b.re - a.re * b.im;
        Gint q{round_quotient(xre, n), round_quotient(xim, n)};
        Gint r{a.re - (q.re * b.re - q.im * b.im), a.im - (q.re * b.im + q.im * b.re)};
        a = b;
        b = r;
    }
    return a;
}

void factor_integer(mpz_class n, std::map<mpz_class, int>& out);

mpz_class pollard_rho(const mpz_class& n) {
    // n odd composite. Floyd cycle detection on x^2 + c.
    for (long c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1;
        auto step = [&](const mpz_class& v) {
            mpz_class r = (v * v + c) % n;
            return r;
        };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            mpz_class diff = x - y;
            diff = abs(diff);
            if (sgn(diff) == 0) break;  // cycle without factor; new c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_integer(mpz_class n, std::map<mpz_class, int>& out) {
    if (n <= 1) return;
    for (mpz_class d = 2; d * d <= n && d < 100000; d == 2 ? ++d : d += 2) {
        while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            ++out[d];
            n /= d;
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
        ++out[n];
        return;
    }
    mpz_class f = pollard_rho(n);
    factor_integer(f, out);
    factor_integer(n / f, out);
}

/// x with x^2 = -1 mod p, for prime p = 1 mod 4.
mpz_class sqrt_minus_one(const mpz_class& p) {
    mpz_class e = (p - 1) / 4;
    for (mpz_class a = 2;; ++a) {
        if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != -1) continue;
        mpz_class x;
        mpz_powm(x.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return x;
    }
}

/// Gaussian prime factorization of w != 0, up to units.
std::vector<std::pair<Gint, int>> gaussian_factor(Gint w) {
    std::vector<std::pair<Gint, int>> out;
    std::map<mpz_class, int> norm_primes;
    factor_integer(gnorm(w), norm_primes);
    for (const auto& [p, e] : norm_primes) {
        if (p == 2) {
            // (1+i) is the unique prime of norm 2
            out.emplace_back(Gint{1, 1}, e);
            for (int k = 0; k < e; ++k) {
                Gint q;
                if (!gdivide_exact(w, Gint{1, 1}, q)) throw Error("gaussian factorization inconsistency");
                w = q;
            }
        } else if (mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) {
            // inert prime; norm contributes p^2 per factor
            int m = e / 2;
            out.emplace_back(Gint{p, 0}, m);
            for (int k = 0; k < m; ++k) {
                Gint q;
                if (!gdivide_exact(w, Gint{p, 0}, q)) throw Error("gaussian factorization inconsistency");
                w = q;
            }
        } else {
            // split prime: pi and conj(pi), each norm p
            mpz_class s = sqrt_minus_one(p);
            Gint pi = first_quadrant(ggcd(Gint{p, 0}, Gint{s, 1}));
            Gint pibar = first_quadrant(Gint{pi.re, -pi.im});
            int va = 0;
            Gint q;
            while (gdivide_exact(w, pi, q)) {
                w = q;
                ++va;
            }
            int vb = e - va;
            for (int k = 0; k < vb; ++k) {
                if (!gdivide_exact(w, pibar, q)) throw Error("gaussian factorization inconsistency");
                w = q;
            }
            if (va > 0) out.emplace_back(pi, va);
            if (vb > 0) out.emplace_back(pibar, vb);
        }
    }
    return out;
}

/// Divisors of w up to units, normalized to the first quadrant.
std::vector<Gint> gaussian_divisors(const Gint& w) {
    auto factors = gaussian_factor(w);
    std::vector<Gint> divisors{Gint{1, 0}};
    for (const auto& [pi, e] : factors) {
        std::vector<Gint> next;
        next.reserve(divisors.size() * static_cast<std::size_t>(e + 1));
        for (const auto& d : divisors) {
            Gint acc = d;
            next.push_back(acc);
            for (int k = 1; k <= e; ++k) {
                acc = gmul(acc, pi);
                next.push_back(acc);
            }
        }
        divisors = std::move(next);
        if (divisors.size() > kDivisorBudget)
            throw Error("root search budget exceeded: too many divisor candidates");
    }
    std::set<Gint> canon;
    for (const auto& d : divisors) canon.insert(first_quadrant(d));
    return {canon.begin(), canon.end()};
}

/// Clear denominators and Gaussian content; preserves the root set.
std::vector<Gint> integer_model(const Poly& p) {
    mpz_class den = 1;
    for (const auto& c : p.coefficients()) {
        mpz_class d1 = c.real().denominator();
        mpz_class d2 = c.imag().denominator();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d1.get_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d2.get_mpz_t());
    }
    std::vector<Gint> v;
    v.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) {
        mpz_class re = c.real().numerator() * (den / c.real().denominator());
        mpz_class im = c.imag().numerator() * (den / c.imag().denominator());
        v.push_back(Gint{re, im});
    }
    Gint content{0, 0};
    for (const auto& g : v)
        if (!g.is_zero()) content = ggcd(content, g);
    if (!content.is_zero() && gnorm(content) != 1) {
        for (auto& g : v) {
            Gint q;
            if (!gdivide_exact(g, content, q)) throw Error("gaussian content inconsistency");
            g = q;
        }
    }
    return v;
}

GaussianRational to_scalar(const Gint& g) {
    return {Rational(g.re), Rational(g.im)};
}

}  // namespace

RootExtraction gaussian_rational_roots(const Poly& input) {
    if (input.is_zero()) throw Error("root extraction of zero polynomial");
    RootExtraction out;
    Poly p = input;

    // roots at 0 come off as a power of z
    {
        int v = 0;
        while (p.degree() > 0 && p.coeff(0).is_zero()) {
            p = deflate(p, GaussianRational());
            ++v;
        }
        if (v > 0) out.roots[GaussianRational()] = v;
    }

    while (p.degree() >= 1) {
        if (p.degree() == 1) {
            GaussianRational root = -(p.coeff(0) / p.coeff(1));
            out.roots[root] += 1;
            p = Poly::constant(p.leading());
            break;
        }

        std::vector<Gint> v = integer_model(p);
        std::vector<Gint> d0 = gaussian_divisors(v.front());
        std::vector<Gint> dn = gaussian_divisors(v.back());
        if (d0.size() * dn.size() * 4 > kDivisorBudget * 16)
            throw Error("root search budget exceeded: too many divisor candidates");

        std::set<GaussianRational> candidates;
        const GaussianRational units[4] = {GaussianRational(1), GaussianRational::i(),
                                           GaussianRational(-1), -GaussianRational::i()};
        for (const auto& num : d0)
            for (const auto& den : dn) {
                GaussianRational base = to_scalar(num) / to_scalar(den);
                for (const auto& u : units) candidates.insert(base * u);
            }

        bool found = false;
        for (const auto& r : candidates) {
            if (!p(r).is_zero()) continue;
            int mult = 0;
            while (p.degree() >= 1 && p(r).is_zero()) {
                p = deflate(p, r);
                ++mult;
            }
            out.roots[r] += mult;
            found = true;
            break;
        }
        if (!found) break;
    }

    out.remainder = p;
    return out;
}

}  // namespace ene
