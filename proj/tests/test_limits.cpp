#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "ene/error.hpp"
#include "ene/limits.hpp"

using namespace ene;

namespace {

GaussianRational gq(long n, long d = 1) { return GaussianRational(Rational(n, d)); }

ApproxSpherePoint pt(double x, double y = 0.0) {
    return ApproxSpherePoint::finite(std::complex<double>(x, y));
}

TransalgebraicFunction exp_of(RationalFunction e) {
    return TransalgebraicFunction(RationalFunction(1), std::move(e));
}

const RationalFunction one_minus_z(Poly{GaussianRational(1), GaussianRational(-1)});

}  // namespace

TEST_CASE("chordal metric") {
    CHECK(chordal_distance(pt(0), pt(0.75)) == doctest::Approx(1.2));
    CHECK(chordal_distance(pt(0), ApproxSpherePoint::at_infinity()) == doctest::Approx(2.0));
    CHECK(chordal_distance(pt(1), ApproxSpherePoint::at_infinity()) == doctest::Approx(std::sqrt(2.0)));
    CHECK(chordal_distance(ApproxSpherePoint::at_infinity(), ApproxSpherePoint::at_infinity()) == 0.0);

    // symmetry, identity, triangle inequality on a small sample
    std::vector<ApproxSpherePoint> sample = {pt(0), pt(1), pt(-2, 1), pt(0.5, -0.5),
                                             ApproxSpherePoint::at_infinity()};
    for (const auto& a : sample) {
        CHECK(chordal_distance(a, a) == 0.0);
        for (const auto& b : sample) {
            CHECK(chordal_distance(a, b) == doctest::Approx(chordal_distance(b, a)));
            CHECK(chordal_distance(a, b) <= 2.0 + 1e-12);
            for (const auto& c : sample)
                CHECK(chordal_distance(a, c) <=
                      chordal_distance(a, b) + chordal_distance(b, c) + 1e-12);
        }
    }

    // large points approach infinity in this metric
    CHECK(chordal_distance(pt(1e9), ApproxSpherePoint::at_infinity()) < 1e-8);
}

TEST_CASE("hausdorff distance") {
    std::vector<ApproxSpherePoint> a = {pt(0), pt(1)};
    std::vector<ApproxSpherePoint> b = {pt(0)};
    CHECK(hausdorff_distance(a, a) == 0.0);
    CHECK(hausdorff_distance(a, b) == doctest::Approx(std::sqrt(2.0)));
    CHECK(hausdorff_distance(b, a) == doctest::Approx(std::sqrt(2.0)));
    CHECK_THROWS_WITH_AS(hausdorff_distance({}, a), doctest::Contains("empty"), Error);
    CHECK_THROWS_WITH_AS(hausdorff_distance(a, {}), doctest::Contains("empty"), Error);
}

TEST_CASE("sample regions") {
    SampleRegion region;
    region.circles.push_back({0.0, 0.0, 0.5, 8});
    region.circles.push_back({1.0, 2.0, 0.25, 5});
    region.rects.push_back({-1.0, -1.0, 1.0, 1.0, 3, 2});
    auto pts = region.points();
    REQUIRE(pts.size() == 8 + 5 + 6);
    for (int j = 0; j < 8; ++j)
        CHECK(std::abs(pts[static_cast<std::size_t>(j)]) == doctest::Approx(0.5));
    for (int j = 8; j < 13; ++j)
        CHECK(std::abs(pts[static_cast<std::size_t>(j)] - std::complex<double>(1.0, 2.0)) ==
              doctest::Approx(0.25));
    CHECK(pts[13] == std::complex<double>(-1.0, -1.0));
    CHECK(pts.back() == std::complex<double>(1.0, 1.0));

    SampleRegion degenerate;
    degenerate.rects.push_back({0.25, 0.0, 0.0, 0.0, 1, 1});
    auto single = degenerate.points();
    REQUIRE(single.size() == 1);
    CHECK(single[0] == std::complex<double>(0.25, 0.0));
}

TEST_CASE("approximation error") {
    SampleRegion region;
    region.circles.push_back({0.0, 0.0, 0.5, 32});

    SUBCASE("rational functions are reproduced exactly") {
        TransalgebraicFunction f(RationalFunction(Poly{GaussianRational(1), gq(-1, 3)}));
        CHECK(euler_limit_error(f, 5, region) == 0.0);
    }

    SUBCASE("the error halves when k doubles") {
        TransalgebraicFunction f = exp_of(RationalFunction(Poly::variable()));  // e^z
        double e64 = euler_limit_error(f, 64, region);
        double e128 = euler_limit_error(f, 128, region);
        double e256 = euler_limit_error(f, 256, region);
        CHECK(e64 > 0.0);
        CHECK(e128 / e64 == doctest::Approx(0.5).epsilon(0.3));
        CHECK(e256 / e128 == doctest::Approx(0.5).epsilon(0.3));
    }

    SUBCASE("samples must respect the exclusion zone") {
        TransalgebraicFunction f(one_minus_z);  // zero at 1
        SampleRegion bad;
        bad.circles.push_back({1.05, 0.0, 0.001, 4});
        CHECK_THROWS_WITH_AS(euler_limit_error(f, 8, bad), doctest::Contains("exclusion"), Error);
    }

    SUBCASE("bad arguments") {
        TransalgebraicFunction f = exp_of(RationalFunction(Poly::variable()));
        CHECK_THROWS_WITH_AS(euler_limit_error(f, 0, region), doctest::Contains("positive"), Error);
        CHECK_THROWS_WITH_AS(euler_limit_error(f, 4, SampleRegion{}), doctest::Contains("empty"), Error);
    }
}

TEST_CASE("divisor support tracking") {
    TransalgebraicFunction f = exp_of(RationalFunction(Poly::variable()));  // e^z
    auto target = support_points(f);
    REQUIRE(target.size() == 1);
    CHECK(target[0].infinite);

    // f_k = (1 + z/k)^k: one zero of order k at -k, pole of order k at infinity
    auto sup = approximant_support(f, 100);
    REQUIRE(sup.size() == 2);
    bool found_root = false, found_inf = false;
    for (const auto& p : sup) {
        if (p.infinite) found_inf = true;
        if (!p.infinite && std::abs(p.value - std::complex<double>(-100.0, 0.0)) < 1e-6)
            found_root = true;
    }
    CHECK(found_root);
    CHECK(found_inf);
    CHECK(hausdorff_distance(approximant_support(f, 200), target) <
          hausdorff_distance(sup, target));

    // e^{z^2}: moving zeros at +-i sqrt(k)
    TransalgebraicFunction g = exp_of(RationalFunction(Poly::monomial(GaussianRational(1), 2)));
    auto sup2 = approximant_support(g, 64);
    int on_axis = 0;
    for (const auto& p : sup2)
        if (!p.infinite && std::abs(p.value.real()) < 1e-6 &&
            std::abs(std::abs(p.value.imag()) - 8.0) < 1e-6)
            ++on_axis;
    CHECK(on_axis == 2);
}

TEST_CASE("divisor collapse onto essential singularities") {
    TransalgebraicFunction f = exp_of(RationalFunction(Poly::one(), one_minus_z.num()));

    SUBCASE("rational input has nothing to collapse") {
        CollapseReport r = collapse_witness(TransalgebraicFunction(one_minus_z), 10);
        CHECK(r.witnesses.empty());
    }

    SUBCASE("pure exponential pole") {
        CollapseReport r = collapse_witness(f, 50);
        CHECK(r.k == 50);
        REQUIRE(r.witnesses.size() == 1);
        const SingularityWitness& w = r.witnesses[0];
        CHECK(w.singularity == SpherePoint::finite(gq(1)));
        CHECK(w.order == 1);

        // one zero cluster of total multiplicity 50 just outside the pole
        REQUIRE(w.zeros.size() == 1);
        CHECK(w.zeros[0].multiplicity == 50);
        CHECK(w.zeros[0].distance < 0.05);
        // the pole of f_k sits exactly on the singularity
        REQUIRE(w.poles.size() == 1);
        CHECK(w.poles[0].multiplicity == 50);
        CHECK(w.poles[0].distance == 0.0);
        CHECK(w.distinct_locations() == 2);
    }

    SUBCASE("algebraic factor adds a pole at infinity") {
        TransalgebraicFunction g =
            TransalgebraicFunction(RationalFunction(Poly{GaussianRational(1), gq(-1, 2)})) * f;
        CollapseReport r = collapse_witness(g, 40);
        REQUIRE(r.witnesses.size() == 1);
        const SingularityWitness& w = r.witnesses[0];
        long zero_mult = 0, pole_mult = 0;
        for (const auto& c : w.zeros) zero_mult += c.multiplicity;
        for (const auto& c : w.poles) pole_mult += c.multiplicity;
        CHECK(zero_mult == 40);
        CHECK(pole_mult == 41);  // order 40 at the singularity plus the fixed pole at infinity
        CHECK(w.distinct_locations() == 3);
    }

    SUBCASE("bad index") {
        CHECK_THROWS_WITH_AS(collapse_witness(f, 0), doctest::Contains("positive"), Error);
    }
}

TEST_CASE("convergence study") {
    SampleRegion region;
    region.circles.push_back({0.0, 0.0, 0.5, 32});

    TransalgebraicFunction f = exp_of(RationalFunction(Poly::variable()));  // e^z
    ConvergenceReport r = euler_limit_study(f, region, 64, 256);
    REQUIRE(r.ks == std::vector<long>({64, 128, 256}));
    REQUIRE(r.errors.size() == 3);
    REQUIRE(r.hausdorff.size() == 3);
    for (std::size_t j = 1; j < r.errors.size(); ++j) {
        double ratio = r.errors[j] / r.errors[j - 1];
        CHECK(ratio > 0.35);
        CHECK(ratio < 0.65);
        CHECK(r.hausdorff[j] < r.hausdorff[j - 1]);
    }
    // first order convergence shows up as slope -1 on the log-log line
    CHECK(r.decay_exponent == doctest::Approx(-1.0).epsilon(0.1));

    // (1 - z/2) e^{1/(1-z)} behaves the same away from its singularity
    TransalgebraicFunction g(RationalFunction(Poly{GaussianRational(1), gq(-1, 2)}),
                             RationalFunction(Poly::one(), one_minus_z.num()));
    ConvergenceReport r2 = euler_limit_study(g, region, 64, 256);
    for (std::size_t j = 1; j < r2.errors.size(); ++j) {
        double ratio = r2.errors[j] / r2.errors[j - 1];
        CHECK(ratio > 0.35);
        CHECK(ratio < 0.65);
    }

    CHECK_THROWS_WITH_AS(euler_limit_study(f, region, 0, 8), doctest::Contains("bad index"), Error);
    CHECK_THROWS_WITH_AS(euler_limit_study(f, region, 16, 8), doctest::Contains("bad index"), Error);
}
