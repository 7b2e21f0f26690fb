#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ene/error.hpp"
#include "ene/gaussian_roots.hpp"
#include "ene/rational_function.hpp"
#include "ene/verify.hpp"

using namespace ene;

namespace {
GaussianRational gq(long n, long d) { return GaussianRational(Rational(n, d)); }
GaussianRational gi(long re, long im) { return GaussianRational(Rational(re), Rational(im)); }
}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(2, 4).to_string() == "1/2");
    CHECK(Rational(-2, -4).to_string() == "1/2");
    CHECK(Rational(3, -6).to_string() == "-1/2");
    CHECK(Rational(0, 5).to_string() == "0");
    CHECK(Rational(7).to_string() == "7");
    CHECK((Rational(1, 2) + Rational(1, 3)).to_string() == "5/6");
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(-2).pow(3) == Rational(-8));
    CHECK(Rational::factorial(6) == Rational(720));
    CHECK(Rational::from_string("-7/3") == Rational(-7, 3));
    CHECK_THROWS_AS(Rational::from_string("1/0"), Error);
    CHECK_THROWS_AS(Rational::from_string("a"), Error);
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("gaussian rational field") {
    GaussianRational a = gi(1, 2);
    GaussianRational b = gi(3, -1);
    CHECK((a * b) == gi(5, 5));
    CHECK((a * a.inverse()).is_one());
    CHECK(a.conj() == gi(1, -2));
    CHECK(a.norm() == Rational(5));
    CHECK(gi(0, 1).pow(4).is_one());
    CHECK(gi(1, 1).pow(-2) == gi(0, -1) * gq(1, 2));
    CHECK(gi(2, 0).to_string() == "2");
    CHECK(gi(0, 1).to_string() == "i");
    CHECK(gi(0, -1).to_string() == "-i");
    CHECK(gi(0, 2).to_string() == "2*i");
    CHECK((gq(1, 2) + gi(0, 1) * gq(1, 3)).to_string() == "1/2+1/3*i");
    CHECK_THROWS_AS(GaussianRational().inverse(), Error);
}

TEST_CASE("poly arithmetic and display") {
    Poly p{gq(1, 1), GaussianRational(4), GaussianRational(1)};  // 1 + 4z + z^2
    CHECK(p.to_string() == "1+4z+z^2");
    CHECK(p.degree() == 2);
    CHECK(p(GaussianRational(1)) == GaussianRational(6));
    Poly z = Poly::variable();
    CHECK(((z + Poly::one()) * (z - Poly::one())).to_string() == "-1+z^2");
    CHECK((z.pow(3)).derivative().to_string() == "3z^2");
    CHECK(p.reversed(2) == p);
    CHECK(Poly{GaussianRational(1), GaussianRational(2)}.reversed(3).to_string() == "2z^2+z^3");
}

TEST_CASE("poly shift rescale divmod") {
    Poly z = Poly::variable();
    Poly p = z.pow(2);  // (z+1)^2 = 1 + 2z + z^2
    CHECK(p.shifted(GaussianRational(1)).to_string() == "1+2z+z^2");
    Poly q{GaussianRational(3), GaussianRational(0), GaussianRational(1)};
    CHECK(q.shifted(gi(0, 1)).to_string() == "2+(2*i)z+z^2");
    CHECK(p.rescaled_argument(GaussianRational(2)).to_string() == "(1/4)z^2");

    Poly a = (z - Poly::constant(GaussianRational(2))) * (z + Poly::one()) * (z + Poly::one());
    auto [quo, rem] = Poly::divmod(a, z + Poly::one());
    CHECK(rem.is_zero());
    CHECK(quo == (z - Poly::constant(GaussianRational(2))) * (z + Poly::one()));
    auto [q2, r2] = Poly::divmod(a, z.pow(2));
    CHECK((q2 * z.pow(2) + r2) == a);
    CHECK(poly_gcd(a, a.derivative()).monic() == (z + Poly::one()).monic());
}

TEST_CASE("gaussian rational roots") {
    Poly z = Poly::variable();
    // roots 1/2 (double), -i, plus an irreducible quadratic left over
    Poly p = (Poly::constant(GaussianRational(2)) * z - Poly::one()).pow(2) *
             (z + Poly::constant(gi(0, 1))) * (z.pow(2) + z + Poly::constant(GaussianRational(1)));
    RootExtraction ex = gaussian_rational_roots(p);
    CHECK(ex.roots.size() == 2);
    CHECK(ex.roots.at(gq(1, 2)) == 2);
    CHECK(ex.roots.at(gi(0, -1)) == 1);
    CHECK_FALSE(ex.splits());
    CHECK(ex.remainder.monic() == (z.pow(2) + z + Poly::constant(GaussianRational(1))));

    // z^2 + 1 splits over Q(i)
    RootExtraction ix = gaussian_rational_roots(z.pow(2) + Poly::one());
    CHECK(ix.splits());
    CHECK(ix.roots.at(gi(0, 1)) == 1);
    CHECK(ix.roots.at(gi(0, -1)) == 1);

    // x^2 - 2 has no Q(i) roots
    CHECK(gaussian_rational_roots(z.pow(2) - Poly::constant(GaussianRational(2))).roots.empty());
    CHECK_THROWS_AS(gaussian_rational_roots(Poly::zero()), Error);
}

TEST_CASE("root extraction randomized") {
    sample::Rng rng(7);
    for (int t = 0; t < 40; ++t) {
        Poly p = Poly::constant(sample::root(rng));
        std::map<GaussianRational, int> want;
        int n = 1 + static_cast<int>(rng() % 3);
        for (int j = 0; j < n; ++j) {
            GaussianRational r = sample::root(rng);
            int m = 1 + static_cast<int>(rng() % 2);
            want[r] += m;
            Poly lin{-r, GaussianRational(1)};
            p = p * lin.pow(m);
        }
        RootExtraction ex = gaussian_rational_roots(p);
        CHECK(ex.splits());
        CHECK(ex.roots.size() == want.size());
        for (const auto& [r, m] : want) CHECK(ex.roots.at(r) == m);
    }
}

TEST_CASE("rational function reduction and evaluation") {
    Poly z = Poly::variable();
    RationalFunction r(z.pow(2) - Poly::one(), z - Poly::one());
    CHECK(r.is_polynomial());
    CHECK(r.num().to_string() == "1+z");
    RationalFunction s(Poly::one(), Poly{GaussianRational(1), GaussianRational(-1)});  // 1/(1-z)
    CHECK(s(GaussianRational(2)) == GaussianRational(-1));
    CHECK_THROWS_WITH(s(GaussianRational(1)), doctest::Contains("pole"));
    CHECK(s.order_at_infinity() == 1);
    CHECK((s * s.inverse()) == RationalFunction(1));
    CHECK(s.substitute_inverse() == RationalFunction(Poly{GaussianRational(0), GaussianRational(1)},
                                                     Poly{GaussianRational(-1), GaussianRational(1)}));
}

TEST_CASE("residues and polar orders") {
    Poly z = Poly::variable();
    // d log of (1 - z/2) e^{1/(1-z)}: residue 1 at 2, double pole at 1
    RationalFunction dlog = RationalFunction(Poly::constant(gq(-1, 2)), Poly{GaussianRational(1), gq(-1, 2)}) +
                            RationalFunction(Poly::one(), (z - Poly::one()).pow(2));
    CHECK(residue(dlog, GaussianRational(2)) == GaussianRational(1));
    CHECK(polar_order(dlog, GaussianRational(1)) == 2);
    CHECK(polar_order(dlog, GaussianRational(5)) == 0);
    CHECK(residue(dlog, GaussianRational(1)).is_zero());

    RationalFunction r(Poly::one(), z.pow(2) + Poly::one());
    CHECK(residue(r, gi(0, 1)) == gq(1, 2) * gi(0, -1));
}

TEST_CASE("partial fractions reassemble") {
    sample::Rng rng(11);
    for (int t = 0; t < 30; ++t) {
        RationalFunction r = sample::rational_exponent(rng, 3, 3, true);
        PolarDecomposition d = partial_fractions(r);
        CHECK(assemble(d) == r);
        for (const auto& [at, coeffs] : d.polar_parts) {
            CHECK_FALSE(coeffs.empty());
            CHECK_FALSE(coeffs.back().is_zero());
            CHECK(residue(r, at) == coeffs[0]);
        }
    }
    Poly z = Poly::variable();
    CHECK_THROWS_WITH(partial_fractions(RationalFunction(Poly::one(), z.pow(2) - Poly::constant(GaussianRational(2)))),
                      doctest::Contains("pole outside"));
}
