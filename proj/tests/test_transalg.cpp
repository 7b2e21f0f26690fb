#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ene/error.hpp"
#include "ene/euler.hpp"
#include "ene/transalg.hpp"

using namespace ene;

namespace {

GaussianRational gq(long n, long d = 1) { return GaussianRational(Rational(n, d)); }

RationalFunction one_minus_z_over(const GaussianRational& a) {
    return RationalFunction(Poly{GaussianRational(1), -a.inverse()});
}

bool is_constant(const RationalFunction& r) {
    return r.is_zero() || (r.num().degree() == 0 && r.den().degree() == 0);
}

const GeneratorTerm* find_term(const GeneratorFactorization& g, int order, const GaussianRational& loc) {
    for (const auto& t : g.terms)
        if (t.order == order && t.location == loc) return &t;
    return nullptr;
}

}  // namespace

TEST_CASE("canonical form") {
    // exponents live modulo constants: any constant slips out on construction
    RationalFunction e(Poly{GaussianRational(3), GaussianRational(1)});  // 3 + z
    TransalgebraicFunction f(RationalFunction(1), e);
    CHECK(f.exponent_part() == RationalFunction(Poly::variable()));

    // constants hide in the quotient of proper-looking exponents too:
    // z/(1-z) and z/(1-z) + 5 name the same exponent class
    RationalFunction g(Poly::variable(), Poly{GaussianRational(1), GaussianRational(-1)});
    TransalgebraicFunction h1(RationalFunction(1), g + RationalFunction(5));
    TransalgebraicFunction h2(RationalFunction(1), g);
    CHECK(h1 == h2);
    CHECK(h1.exponent_part().quotient_part().coeff(0).is_zero());

    CHECK_THROWS_WITH_AS((void)TransalgebraicFunction(RationalFunction(0)), doctest::Contains("nonzero"),
                         Error);
    CHECK(TransalgebraicFunction().is_rational());
}

TEST_CASE("generators") {
    TransalgebraicFunction g = TransalgebraicFunction::generator(2, gq(3), gq(5));
    CHECK(g.rational_part() == RationalFunction(1));
    CHECK(g.exponent_part() == RationalFunction(5) * euler_r(2).rescaled_argument(gq(3)));
    CHECK_FALSE(g.is_rational());
    CHECK_THROWS_WITH_AS((void)TransalgebraicFunction::generator(1, gq(0), gq(1)),
                         doctest::Contains("nonzero"), Error);
}

TEST_CASE("group operations") {
    TransalgebraicFunction a(one_minus_z_over(gq(2)), RationalFunction(Poly::variable()));
    TransalgebraicFunction b(one_minus_z_over(gq(3)),
                             RationalFunction(Poly::monomial(GaussianRational(1), 2)));
    TransalgebraicFunction p = a * b;
    CHECK(p.rational_part() == a.rational_part() * b.rational_part());
    CHECK(p.exponent_part() == a.exponent_part() + b.exponent_part());
    CHECK(a / a == TransalgebraicFunction());
    CHECK(a.inverse().exponent_part() == -a.exponent_part());
    TransalgebraicFunction cube = a.pow(3);
    CHECK(cube.exponent_part() == RationalFunction(3) * a.exponent_part());
    CHECK(cube.rational_part() == a.rational_part().pow(3));
    CHECK(a.pow(-1) == a.inverse());
}

TEST_CASE("divisors") {
    // (1 - z/2) e^{1/(1-z)}: zero at 2, pole at infinity, essential point at 1
    TransalgebraicFunction f(one_minus_z_over(gq(2)),
                             RationalFunction(Poly::one(), Poly{GaussianRational(1), GaussianRational(-1)}));
    TransalgebraicDivisor d = transalg_divisor(f);
    REQUIRE(d.algebraic.size() == 2);
    CHECK(d.algebraic.at(SpherePoint::finite(gq(2))) == 1);
    CHECK(d.algebraic.at(SpherePoint::at_infinity()) == -1);
    REQUIRE(d.transcendental.size() == 1);
    CHECK(d.transcendental.at(SpherePoint::finite(gq(1))) == 1);

    CHECK(transalg_order(f, SpherePoint::finite(gq(1))) == 1);
    CHECK(transalg_order(f, SpherePoint::finite(gq(2))) == 0);
    CHECK(transalg_order(f, SpherePoint::at_infinity()) == 0);

    DegreeProfile prof = degree_profile(f);
    CHECK(prof.d0 == 2);
    CHECK(prof.d_infinity == 2);
}

TEST_CASE("divisor degree sums to zero") {
    // the algebraic part always balances over the sphere
    std::vector<TransalgebraicFunction> cases = {
        TransalgebraicFunction(one_minus_z_over(gq(2)).pow(2) / one_minus_z_over(gq(3))),
        TransalgebraicFunction(RationalFunction(Poly{gq(1), gq(0), gq(1)})),  // 1 + z^2, zeros +-i
        TransalgebraicFunction::generator(3, gq(1, 2), gq(7)),
        TransalgebraicFunction(one_minus_z_over(GaussianRational::i()),
                               RationalFunction(Poly::variable())),
    };
    for (const auto& f : cases) {
        long total = 0;
        for (const auto& [p, m] : transalg_divisor(f).algebraic) {
            (void)p;
            total += m;
        }
        CHECK(total == 0);
    }
}

TEST_CASE("essential singularity at infinity") {
    TransalgebraicFunction f(RationalFunction(1),
                             RationalFunction(Poly::monomial(GaussianRational(1), 2)));  // e^{z^2}
    TransalgebraicDivisor d = transalg_divisor(f);
    CHECK(d.algebraic.empty());
    CHECK(d.transcendental.at(SpherePoint::at_infinity()) == 2);
    CHECK(transalg_order(f, SpherePoint::at_infinity()) == 2);
    DegreeProfile prof = degree_profile(f);
    CHECK(prof.d0 == 0);
    CHECK(prof.d_infinity == 3);
}

TEST_CASE("divisor requires split roots") {
    TransalgebraicFunction f(RationalFunction(Poly{gq(-2), gq(0), gq(1)}));  // z^2 - 2
    CHECK_THROWS_WITH_AS(transalg_divisor(f), doctest::Contains("pole outside"), Error);
}

TEST_CASE("log derivative") {
    // f = (1-z/2)^3 (1-z/5)^-2 e^{z + 1/(1-z)^2}
    RationalFunction rat = one_minus_z_over(gq(2)).pow(3) * one_minus_z_over(gq(5)).pow(-2);
    RationalFunction expo =
        RationalFunction(Poly::variable()) +
        RationalFunction(Poly::one(), Poly{GaussianRational(1), GaussianRational(-1)}.pow(2));
    TransalgebraicFunction f(rat, expo);
    RationalFunction ld = transalg_log_derivative(f);

    // residue at each algebraic point is its multiplicity
    CHECK(residue(ld, gq(2)) == gq(3));
    CHECK(residue(ld, gq(5)) == gq(-2));
    CHECK(polar_order(ld, gq(2)) == 1);
    // an order-d essential point becomes a pole of order d+1
    CHECK(polar_order(ld, gq(1)) == 3);

    // purely rational check: (lg f)' of (1+z^2) has residue 1 at both +-i
    RationalFunction ld2 =
        transalg_log_derivative(TransalgebraicFunction(RationalFunction(Poly{gq(1), gq(0), gq(1)})));
    CHECK(residue(ld2, GaussianRational::i()) == GaussianRational(1));
    CHECK(residue(ld2, -GaussianRational::i()) == GaussianRational(1));
}

TEST_CASE("generator factorization") {
    SUBCASE("single pole") {
        // exponent 1/(1-z) is -1 times the order-1 generator at 1, up to a constant
        TransalgebraicFunction f(
            RationalFunction(1),
            RationalFunction(Poly::one(), Poly{GaussianRational(1), GaussianRational(-1)}));
        GeneratorFactorization g = factor_generators(f);
        CHECK(g.rational_part == RationalFunction(1));
        CHECK(g.entire_part.is_zero());
        CHECK(g.zero_part.is_zero());
        REQUIRE(g.terms.size() == 1);
        CHECK(g.terms[0].order == 1);
        CHECK(g.terms[0].location == gq(1));
        CHECK(g.terms[0].coefficient == gq(-1));
        CHECK(is_constant(assemble_exponent(g) - f.exponent_part()));
    }

    SUBCASE("mixed structure") {
        RationalFunction expo = RationalFunction(3) * euler_r(1).rescaled_argument(gq(2)) +
                                RationalFunction(-1) * euler_r(2).rescaled_argument(gq(2)) +
                                RationalFunction(gq(1, 2)) * euler_r(1).rescaled_argument(gq(-1)) +
                                RationalFunction(Poly{gq(0), gq(1), gq(0), gq(1)}) +  // z + z^3
                                RationalFunction(Poly{gq(2)}, Poly::variable());       // 2/z
        TransalgebraicFunction f(one_minus_z_over(gq(7)), expo);
        GeneratorFactorization g = factor_generators(f);

        CHECK(g.rational_part == f.rational_part());
        CHECK(g.entire_part == Poly{gq(0), gq(1), gq(0), gq(1)});
        CHECK(g.zero_part == Poly{gq(0), gq(2)});
        REQUIRE(g.terms.size() == 3);
        REQUIRE(find_term(g, 1, gq(2)) != nullptr);
        CHECK(find_term(g, 1, gq(2))->coefficient == gq(3));
        REQUIRE(find_term(g, 2, gq(2)) != nullptr);
        CHECK(find_term(g, 2, gq(2))->coefficient == gq(-1));
        REQUIRE(find_term(g, 1, gq(-1)) != nullptr);
        CHECK(find_term(g, 1, gq(-1))->coefficient == gq(1, 2));

        // reassembly matches the exponent exactly up to the dropped constant
        RationalFunction back = assemble_exponent(g);
        CHECK(is_constant(back - f.exponent_part()));
        CHECK(back.derivative() == f.exponent_part().derivative());
    }

    SUBCASE("gaussian location") {
        TransalgebraicFunction f = TransalgebraicFunction::generator(2, GaussianRational::i(), gq(4));
        GeneratorFactorization g = factor_generators(f);
        REQUIRE(g.terms.size() == 1);
        CHECK(g.terms[0].order == 2);
        CHECK(g.terms[0].location == GaussianRational::i());
        CHECK(g.terms[0].coefficient == gq(4));
    }

    SUBCASE("irrational pole refuses") {
        TransalgebraicFunction f(RationalFunction(1),
                                 RationalFunction(Poly::one(), Poly{gq(-2), gq(0), gq(1)}));
        CHECK_THROWS_WITH_AS(factor_generators(f), doctest::Contains("pole outside"), Error);
    }
}

TEST_CASE("symbols") {
    EneSymbol zero_sym{3, gq(2), gq(1)};
    EneSymbol pole_sym{-2, gq(1, 2), gq(5)};
    EneSymbol simple{0, gq(2), gq(1)};
    CHECK(zero_sym.kind() == "infinite-zero");
    CHECK(pole_sym.kind() == "infinite-pole");
    CHECK(simple.kind() == "simple-factor");

    // exponent coefficients are -weight n^{order-1} parameter^{-n}
    LaurentSeries es = zero_sym.exponent_series(6);
    for (int n = 1; n <= 6; ++n)
        CHECK(es.coeff(n) == -(gq(1) * GaussianRational(Rational(n).pow(2)) * gq(2).pow(-n)));

    // order 0, weight 1 degenerates to the plain factor 1 - z/parameter
    LaurentSeries lin = simple.expand(8).series();
    CHECK(lin.coeff(0) == GaussianRational(1));
    CHECK(lin.coeff(1) == gq(-1, 2));
    for (int n = 2; n <= 8; ++n) CHECK(lin.coeff(n).is_zero());

    EneSymbol prod = ene_symbols(zero_sym, pole_sym);
    CHECK(prod.order == 1);
    CHECK(prod.parameter == gq(1));
    CHECK(prod.weight == gq(5));

    // symbol multiplication tracks the series-level product exactly
    LaurentSeries lhs = ene_exp(zero_sym.exponent_series(10), pole_sym.exponent_series(10));
    CHECK(lhs == prod.exponent_series(10));

    EneSymbol bad{1, gq(0), gq(1)};
    CHECK_THROWS_WITH_AS(bad.exponent_series(4), doctest::Contains("nonzero"), Error);
    CHECK_THROWS_WITH_AS(ene_symbols(bad, simple), doctest::Contains("nonzero"), Error);
}

TEST_CASE("exponent series at the origin") {
    TransalgebraicFunction f(one_minus_z_over(gq(2)),
                             RationalFunction(Poly::one(), Poly{GaussianRational(1), GaussianRational(-1)}));
    LaurentSeries s = transalg_exponent_series(f, 8);
    // log(1 - z/2) plus the exponent expansion with its constant dropped
    LaurentSeries ex = series_of_rational(f.exponent_part(), 8);
    ex.set_coeff(0, GaussianRational());
    CHECK(s == series_of_rational(f.rational_part(), 8).log() + ex);

    // a zero or pole sitting at the origin has no normalized expansion there
    CHECK_THROWS_WITH_AS(
        transalg_exponent_series(TransalgebraicFunction(RationalFunction(Poly::variable())), 6),
        doctest::Contains("algebraic divisor meets 0"), Error);
    CHECK_THROWS_WITH_AS(
        transalg_exponent_series(
            TransalgebraicFunction(RationalFunction(Poly::one(), Poly::variable())), 6),
        doctest::Contains("algebraic divisor meets 0"), Error);

    // an essential singularity at 0 pushes the window below zero
    TransalgebraicFunction es(RationalFunction(1), RationalFunction(Poly::one(), Poly::variable()));
    LaurentSeries t = transalg_exponent_series(es, 6);
    CHECK(t.low() < 0);
    CHECK(t.coeff(-1) == GaussianRational(1));
}

TEST_CASE("products of transalgebraic functions") {
    SUBCASE("rational times rational") {
        TransalgebraicFunction f(one_minus_z_over(gq(2)));
        TransalgebraicFunction g(one_minus_z_over(gq(3)));
        EneProductResult r = ene_transalg(f, g, 12);
        CHECK_FALSE(r.has_principal);
        CHECK(r.series.series() == series_of_rational(one_minus_z_over(gq(6)), 12));
    }

    SUBCASE("generator absorbs a linear factor") {
        // e^{R_1(z/u)} against (1 - z/a) lands on e^{R_1(z/(ua))}
        GaussianRational u = gq(2), a = gq(3);
        TransalgebraicFunction f = TransalgebraicFunction::generator(1, u, gq(1));
        TransalgebraicFunction g(one_minus_z_over(a));
        EneProductResult r = ene_transalg(f, g, 14);
        CHECK_FALSE(r.has_principal);
        TransalgebraicFunction expect = TransalgebraicFunction::generator(1, u * a, gq(1));
        CHECK(r.series.series() == transalg_exponent_series(expect, 14).exp());
    }

    SUBCASE("generators compose by index addition") {
        GaussianRational u = gq(2), v = gq(1, 2);
        TransalgebraicFunction f = TransalgebraicFunction::generator(2, u, gq(1));
        TransalgebraicFunction g = TransalgebraicFunction::generator(3, v, gq(1));
        EneProductResult r = ene_transalg(f, g, 12);
        TransalgebraicFunction expect = TransalgebraicFunction::generator(5, u * v, gq(1));
        CHECK(r.series.series() == transalg_exponent_series(expect, 12).exp());
    }

    SUBCASE("essential singularities at the origin meet in the principal part") {
        TransalgebraicFunction f(RationalFunction(1),
                                 RationalFunction(Poly::one(), Poly::variable()));  // e^{1/z}
        EneProductResult r = ene_transalg(f, f, 10);
        CHECK(r.has_principal);
        CHECK(r.principal.coeff(-1) == GaussianRational(1));
        // nothing regular survives: both exponents are supported at index -1
        CHECK(r.series.series() == LaurentSeries::one(10));
    }
}
