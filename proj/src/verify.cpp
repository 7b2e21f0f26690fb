#include "ene/verify.hpp"

#include <sstream>

#include "ene/error.hpp"
#include "ene/euler.hpp"
#include "ene/limits.hpp"
#include "ene/numeric.hpp"

namespace ene {

std::vector<std::string> verify_suite_names() {
    return {"ring", "euler", "generators", "polylog", "bridge", "limits"};
}

std::string first_series_mismatch(const LaurentSeries& a, const LaurentSeries& b) {
    int lo = std::min(a.low(), b.low());
    int hi = std::min(a.high(), b.high());
    for (int k = lo; k <= hi; ++k) {
        if (a.coeff(k) != b.coeff(k)) {
            std::ostringstream out;
            out << "coefficient " << k << ": " << a.coeff(k).to_string() << " vs "
                << b.coeff(k).to_string();
            return out.str();
        }
    }
    return "";
}

namespace sample {

const std::vector<GaussianRational>& scalar_pool() {
    static const std::vector<GaussianRational> pool = {
        GaussianRational(1),
        GaussianRational(-1),
        GaussianRational(2),
        GaussianRational(3),
        GaussianRational(-2),
        GaussianRational(Rational(1, 2)),
        GaussianRational(Rational(-1, 2)),
        GaussianRational(Rational(3, 2)),
        GaussianRational(Rational(1, 3)),
        GaussianRational::i(),
        GaussianRational(Rational(0), Rational(-1)),
        GaussianRational(Rational(1), Rational(1)),
        GaussianRational(Rational(1), Rational(-1)),
        GaussianRational(Rational(0), Rational(2)),
        GaussianRational(Rational(-1, 2), Rational(1)),
    };
    return pool;
}

GaussianRational root(Rng& rng) {
    const auto& pool = scalar_pool();
    return pool[rng() % pool.size()];
}

GaussianRational small_rational(Rng& rng, bool nonzero) {
    long num = static_cast<long>(rng() % 13) - 6;
    if (nonzero && num == 0) num = 1;
    long den = 1 + static_cast<long>(rng() % 4);
    return GaussianRational(Rational(num, den));
}

RootDivisor divisor(Rng& rng, int max_entries, int max_mult) {
    RootDivisor d;
    int n = 1 + static_cast<int>(rng() % max_entries);
    for (int j = 0; j < n; ++j) d.add(root(rng), 1 + static_cast<long>(rng() % max_mult));
    return d;
}

RootDivisor signed_divisor(Rng& rng, int max_entries, int max_mult) {
    RootDivisor d;
    int n = 1 + static_cast<int>(rng() % max_entries);
    for (int j = 0; j < n; ++j) {
        long m = 1 + static_cast<long>(rng() % max_mult);
        if (rng() % 2 == 0) m = -m;
        d.add(root(rng), m);
    }
    return d;
}

TransalgebraicFunction generator_product(Rng& rng, int max_factors) {
    TransalgebraicFunction f;
    int n = 1 + static_cast<int>(rng() % max_factors);
    for (int j = 0; j < n; ++j) {
        if (rng() % 4 == 0) {
            // plain algebraic factor (1 - z/u)^m
            GaussianRational u = root(rng);
            RationalFunction lin(Poly{GaussianRational(1), -u.inverse()});
            long m = 1 + static_cast<long>(rng() % 2);
            if (rng() % 2 == 0) m = -m;
            f = f * TransalgebraicFunction(lin.pow(m));
        } else {
            int k = 1 + static_cast<int>(rng() % 3);
            f = f * TransalgebraicFunction::generator(k, root(rng), small_rational(rng, true));
        }
    }
    return f;
}

RationalFunction rational_exponent(Rng& rng, int max_poles, int max_order, bool allow_pole_at_zero) {
    RationalFunction r;
    int npoles = static_cast<int>(rng() % (max_poles + 1));
    for (int p = 0; p < npoles; ++p) {
        GaussianRational at = root(rng);
        if (allow_pole_at_zero && rng() % 3 == 0) at = GaussianRational(0);
        int ord = 1 + static_cast<int>(rng() % max_order);
        Poly lin{-at, GaussianRational(1)};  // z - at
        for (int j = 1; j <= ord; ++j) {
            GaussianRational c = small_rational(rng, j == ord);
            if (c.is_zero()) continue;
            r = r + RationalFunction(Poly::constant(c), lin.pow(j));
        }
    }
    int deg = static_cast<int>(rng() % 3);
    std::vector<GaussianRational> poly(deg + 1);
    for (int j = 1; j <= deg; ++j) poly[j] = small_rational(rng, false);
    r = r + RationalFunction(Poly(std::move(poly)));
    return r;
}

TransalgebraicFunction transalg_function(Rng& rng) {
    RationalFunction rat(1);
    int n = static_cast<int>(rng() % 3);
    for (int j = 0; j < n; ++j) {
        GaussianRational u = root(rng);
        RationalFunction lin(Poly{GaussianRational(1), -u.inverse()});
        long m = 1 + static_cast<long>(rng() % 2);
        if (rng() % 2 == 0) m = -m;
        rat = rat * lin.pow(m);
    }
    return TransalgebraicFunction(rat, rational_exponent(rng, 2, 3, true));
}

}  // namespace sample

namespace {

std::string render_divisor(const RootDivisor& d) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& [r, m] : d.entries()) {
        if (!first) out << ", ";
        first = false;
        out << r.to_string() << ":" << m;
    }
    out << "}";
    return out.str();
}

std::string render_function(const TransalgebraicFunction& f) {
    return "rat = " + f.rational_part().to_string() + ", exponent = " + f.exponent_part().to_string();
}

VerifyCheck make_pass(std::string name, std::string summary) {
    return {std::move(name), true, std::move(summary)};
}

VerifyCheck make_fail(std::string name, std::string detail) {
    return {std::move(name), false, std::move(detail)};
}

// ---- ring -----------------------------------------------------------------

VerifyCheck check_commutativity(const VerifyOptions& o) {
    sample::Rng rng(o.seed);
    for (int t = 0; t < o.trials; ++t) {
        auto f = sample::generator_product(rng, 2);
        auto g = sample::generator_product(rng, 2);
        auto fg = ene_transalg(f, g, o.order);
        auto gf = ene_transalg(g, f, o.order);
        std::string msg = first_series_mismatch(fg.series.series(), gf.series.series());
        if (!msg.empty()) {
            return make_fail("commutativity",
                             "trial " + std::to_string(t) + ": f: " + render_function(f) +
                                 "; g: " + render_function(g) + "; " + msg);
        }
    }
    return make_pass("commutativity", std::to_string(o.trials) + " random products");
}

VerifyCheck check_associativity(const VerifyOptions& o) {
    sample::Rng rng(o.seed + 1);
    for (int t = 0; t < o.trials; ++t) {
        auto f = sample::generator_product(rng, 2);
        auto g = sample::generator_product(rng, 2);
        auto h = sample::generator_product(rng, 2);
        NormalizedSeries sf(transalg_exponent_series(f, o.order).exp());
        NormalizedSeries sg(transalg_exponent_series(g, o.order).exp());
        NormalizedSeries sh(transalg_exponent_series(h, o.order).exp());
        auto left = ene_series(ene_series(sf, sg), sh);
        auto right = ene_series(sf, ene_series(sg, sh));
        std::string msg = first_series_mismatch(left.series(), right.series());
        if (!msg.empty()) {
            return make_fail("associativity", "trial " + std::to_string(t) + ": " + msg);
        }
    }
    return make_pass("associativity", std::to_string(o.trials) + " random triples");
}

VerifyCheck check_distributivity(const VerifyOptions& o) {
    sample::Rng rng(o.seed + 2);
    for (int t = 0; t < o.trials; ++t) {
        auto f = sample::generator_product(rng, 2);
        auto g = sample::generator_product(rng, 2);
        auto h = sample::generator_product(rng, 2);
        auto lhs = ene_transalg(f, g * h, o.order);
        auto fg = ene_transalg(f, g, o.order);
        auto fh = ene_transalg(f, h, o.order);
        LaurentSeries rhs = fg.series.series() * fh.series.series();
        std::string msg = first_series_mismatch(lhs.series.series(), rhs);
        if (!msg.empty()) {
            return make_fail("distributivity",
                             "trial " + std::to_string(t) + ": f: " + render_function(f) + "; " + msg);
        }
    }
    return make_pass("distributivity", std::to_string(o.trials) + " random triples");
}

VerifyCheck check_unit(const VerifyOptions& o) {
    sample::Rng rng(o.seed + 3);
    TransalgebraicFunction unit(RationalFunction(Poly{GaussianRational(1), GaussianRational(-1)}));
    for (int t = 0; t < o.trials; ++t) {
        auto f = sample::generator_product(rng, 2);
        auto prod = ene_transalg(f, unit, o.order);
        LaurentSeries expected = transalg_exponent_series(f, o.order).exp();
        std::string msg = first_series_mismatch(prod.series.series(), expected);
        if (!msg.empty()) {
            return make_fail("unit", "trial " + std::to_string(t) + ": f: " + render_function(f) + "; " + msg);
        }
    }
    return make_pass("unit", "(1-z) is neutral on " + std::to_string(o.trials) + " products");
}

VerifyCheck check_absorbing(const VerifyOptions& o) {
    sample::Rng rng(o.seed + 4);
    TransalgebraicFunction one(RationalFunction(1));
    for (int t = 0; t < o.trials; ++t) {
        auto f = sample::generator_product(rng, 2);
        auto prod = ene_transalg(f, one, o.order);
        std::string msg = first_series_mismatch(prod.series.series(), LaurentSeries::one(o.order));
        if (!msg.empty()) {
            return make_fail("absorbing", "trial " + std::to_string(t) + ": " + msg);
        }
    }
    return make_pass("absorbing", "1 absorbs " + std::to_string(o.trials) + " products");
}

// ---- euler ----------------------------------------------------------------

VerifyCheck check_numerator_invariants(const VerifyOptions& o) {
    for (int k = 2; k <= o.max_k; ++k) {
        Poly p = euler_numerator(k);
        if (p.degree() != k - 2) {
            return make_fail("numerator_invariants", "k=" + std::to_string(k) + ": degree " +
                                                         std::to_string(p.degree()) + " != " +
                                                         std::to_string(k - 2));
        }
        if (p.coeff(0) != GaussianRational(1)) {
            return make_fail("numerator_invariants", "k=" + std::to_string(k) + ": P(0) != 1");
        }
        GaussianRational at_one = p(GaussianRational(1));
        if (at_one != GaussianRational(Rational::factorial(k - 1))) {
            return make_fail("numerator_invariants",
                             "k=" + std::to_string(k) + ": P(1) = " + at_one.to_string() +
                                 " != (k-1)!");
        }
        if (p.reversed(k - 2) != p) {
            return make_fail("numerator_invariants", "k=" + std::to_string(k) + ": not palindromic");
        }
    }
    return make_pass("numerator_invariants", "degree, P(0), P(1), palindrome for k = 2.." +
                                                 std::to_string(o.max_k));
}

VerifyCheck check_inversion_symmetry(const VerifyOptions& o) {
    for (int k = 2; k <= o.max_k; ++k) {
        if (!check_functional_equation(k)) {
            return make_fail("inversion_symmetry", "k=" + std::to_string(k));
        }
    }
    return make_pass("inversion_symmetry",
                     "r(1/z) = (-1)^k r(z) for k = 2.." + std::to_string(o.max_k));
}

VerifyCheck check_closed_form_series(const VerifyOptions&) {
    for (int k = 1; k <= 8; ++k) {
        LaurentSeries expanded = series_of_rational(euler_r(k), 24);
        LaurentSeries direct = euler_r_series(k, 24);
        std::string msg = first_series_mismatch(expanded, direct);
        if (!msg.empty()) return make_fail("closed_form_series", "k=" + std::to_string(k) + ": " + msg);
    }
    return make_pass("closed_form_series", "closed form matches -sum n^{k-1} z^n for k = 1..8");
}

VerifyCheck check_frozen_rows(const VerifyOptions&) {
    const std::vector<std::vector<long>> rows = {
        {1}, {1}, {1, 1}, {1, 4, 1}, {1, 11, 11, 1}, {1, 26, 66, 26, 1}, {1, 57, 302, 302, 57, 1}};
    for (int k = 1; k <= 7; ++k) {
        Poly p = euler_numerator(k);
        const auto& want = rows[k - 1];
        bool ok = p.degree() + 1 == static_cast<int>(want.size());
        for (int j = 0; ok && j <= p.degree(); ++j) ok = p.coeff(j) == GaussianRational(want[j]);
        if (!ok) {
            return make_fail("frozen_rows", "k=" + std::to_string(k) + ": got " + p.to_string());
        }
    }
    return make_pass("frozen_rows", "numerators for k = 1..7 match the stored table");
}

// ---- generators -------------------------------------------------------------

VerifyCheck check_factor_round_trip(const VerifyOptions& o) {
    sample::Rng rng(o.seed + 10);
    for (int t = 0; t < o.trials; ++t) {
        RationalFunction e = sample::rational_exponent(rng, 3, 4, true);
        TransalgebraicFunction f(RationalFunction(1), e);
        GeneratorFactorization fact = factor_generators(f);
        for (const auto& term : fact.terms) {
            if (term.order < 1 || term.location.is_zero()) {
                return make_fail("factor_round_trip",
                                 "trial " + std::to_string(t) + ": malformed generator term");
            }
        }
        RationalFunction diff = assemble_exponent(fact) - f.exponent_part();
        if (!diff.is_constant()) {
            return make_fail("factor_round_trip", "trial " + std::to_string(t) + ": exponent " +
                                                      e.to_string() + " reassembles with residue " +
                                                      diff.to_string());
        }
    }
    return make_pass("factor_round_trip",
                     std::to_string(o.trials) + " exponents refactor up to a constant");
}

VerifyCheck check_generator_law(const VerifyOptions&) {
    const int window = 20;
    const std::vector<GaussianRational> params = {
        GaussianRational(1), GaussianRational(2), GaussianRational(-1),
        GaussianRational(Rational(1, 2)), GaussianRational(Rational(1), Rational(1))};
    int cases = 0;
    for (int k = -3; k <= 4; ++k) {
        if (k == 0) continue;
        for (int l = -3; l <= 4; ++l) {
            if (l == 0) continue;
            for (const auto& u : params) {
                for (const auto& v : params) {
                    EneSymbol a{k, u, GaussianRational(1)};
                    EneSymbol b{l, v, GaussianRational(1)};
                    LaurentSeries lhs = ene_exp(a.exponent_series(window), b.exponent_series(window));
                    LaurentSeries rhs = ene_symbols(a, b).exponent_series(window);
                    std::string msg = first_series_mismatch(lhs, rhs);
                    if (!msg.empty()) {
                        return make_fail("generator_law",
                                         "k=" + std::to_string(k) + " l=" + std::to_string(l) +
                                             " u=" + u.to_string() + " v=" + v.to_string() + ": " + msg);
                    }
                    ++cases;
                }
            }
        }
    }
    return make_pass("generator_law", std::to_string(cases) + " order/parameter combinations");
}

VerifyCheck check_symbol_series_consistency(const VerifyOptions& o) {
    sample::Rng rng(o.seed + 11);
    for (int t = 0; t < o.trials; ++t) {
        EneSymbol a{static_cast<long>(rng() % 7) - 3, sample::root(rng), sample::small_rational(rng, true)};
        EneSymbol b{static_cast<long>(rng() % 7) - 3, sample::root(rng), sample::small_rational(rng, true)};
        LaurentSeries lhs = ene_exp(a.exponent_series(o.order), b.exponent_series(o.order));
        LaurentSeries rhs = ene_symbols(a, b).exponent_series(o.order);
        std::string msg = first_series_mismatch(lhs, rhs);
        if (!msg.empty()) {
            return make_fail("symbol_series_consistency",
                             "trial " + std::to_string(t) + ": orders " + std::to_string(a.order) +
                                 "," + std::to_string(b.order) + ": " + msg);
        }
    }
    return make_pass("symbol_series_consistency", std::to_string(o.trials) + " random symbol pairs");
}

VerifyCheck check_log_derivative(const VerifyOptions& o) {
    sample::Rng rng(o.seed + 12);
    for (int t = 0; t < o.trials; ++t) {
        auto f = sample::transalg_function(rng);
        auto g = sample::transalg_function(rng);
        RationalFunction sum = transalg_log_derivative(f) + transalg_log_derivative(g);
        if (transalg_log_derivative(f * g) != sum) {
            return make_fail("log_derivative", "trial " + std::to_string(t) +
                                                   ": d log(fg) != d log f + d log g for f: " +
                                                   render_function(f) + "; g: " + render_function(g));
        }
        if (transalg_log_derivative(f.inverse()) != -transalg_log_derivative(f)) {
            return make_fail("log_derivative",
                             "trial " + std::to_string(t) + ": inverse law fails for " + render_function(f));
        }
        RationalFunction dlog = transalg_log_derivative(f);
        TransalgebraicDivisor div = transalg_divisor(f);
        for (const auto& [p, mult] : div.algebraic) {
            if (p.infinite) continue;
            GaussianRational res = residue(dlog, p.value);
            if (res != GaussianRational(mult)) {
                return make_fail("log_derivative",
                                 "trial " + std::to_string(t) + ": residue at " + p.to_string() +
                                     " is " + res.to_string() + ", multiplicity " + std::to_string(mult));
            }
        }
        for (const auto& [p, d] : div.transcendental) {
            if (p.infinite) continue;
            int ord = polar_order(dlog, p.value);
            if (ord != d + 1) {
                return make_fail("log_derivative",
                                 "trial " + std::to_string(t) + ": polar order at singularity " +
                                     p.to_string() + " is " + std::to_string(ord) + ", expected " +
                                     std::to_string(d + 1));
            }
        }
    }
    return make_pass("log_derivative",
                     "additivity, residues and polar orders on " + std::to_string(o.trials) + " functions");
}

VerifyCheck check_grading(const VerifyOptions& o) {
    sample::Rng rng(o.seed + 13);
    int trials = std::min(o.trials, 40);
    for (int t = 0; t < trials; ++t) {
        auto f = sample::generator_product(rng, 2);
        auto g = sample::generator_product(rng, 2);
        auto symbols_of = [](const TransalgebraicFunction& h) {
            std::vector<EneSymbol> out;
            GeneratorFactorization fact = factor_generators(h);
            if (!fact.entire_part.is_zero() || !fact.zero_part.is_zero()) {
                throw Error("generator product with polynomial exponent part");
            }
            for (const auto& term : fact.terms) {
                out.push_back({term.order, term.location, term.coefficient});
            }
            TransalgebraicDivisor div = transalg_divisor(TransalgebraicFunction(fact.rational_part));
            for (const auto& [p, mult] : div.algebraic) {
                if (p.infinite) continue;
                out.push_back({0, p.value, GaussianRational(mult)});
            }
            return out;
        };
        LaurentSeries expected = LaurentSeries::zero(o.order);
        for (const auto& a : symbols_of(f)) {
            for (const auto& b : symbols_of(g)) {
                expected = expected + ene_symbols(a, b).exponent_series(o.order);
            }
        }
        auto prod = ene_transalg(f, g, o.order);
        std::string msg = first_series_mismatch(prod.series.series(), expected.exp());
        if (!msg.empty()) {
            return make_fail("grading", "trial " + std::to_string(t) + ": f: " + render_function(f) +
                                            "; g: " + render_function(g) + "; " + msg);
        }
    }
    return make_pass("grading", "symbol-by-symbol expansion matches the product on " +
                                    std::to_string(trials) + " pairs");
}

// ---- polylog ----------------------------------------------------------------

VerifyCheck check_pole_inverse(const VerifyOptions&) {
    const int window = 24;
    LaurentSeries log_one_minus_z = euler_r_series(0, window);
    for (int k = 0; k <= 6; ++k) {
        LaurentSeries f = euler_r_series(k, window);
        LaurentSeries g = -polylog_series(k + 1, window);
        LaurentSeries h = ene_exp(f, g);
        std::string msg = first_series_mismatch(h, log_one_minus_z);
        if (!msg.empty()) return make_fail("pole_inverse", "k=" + std::to_string(k) + ": " + msg);
    }
    return make_pass("pole_inverse", "e^{r_k} against e^{-li_{k+1}} gives 1-z for k = 0..6");
}

VerifyCheck check_index_bridge(const VerifyOptions&) {
    for (int k = 1; k <= 8; ++k) {
        std::string msg = first_series_mismatch(polylog_series(k, 24), -euler_r_series(1 - k, 24));
        if (!msg.empty()) return make_fail("index_bridge", "k=" + std::to_string(k) + ": " + msg);
    }
    return make_pass("index_bridge", "li_k = -r_{1-k} coefficientwise for k = 1..8");
}

VerifyCheck check_theta_recurrence(const VerifyOptions&) {
    for (int k = -4; k <= 8; ++k) {
        std::string msg = first_series_mismatch(euler_r_series(k, 20).theta(), euler_r_series(k + 1, 20));
        if (!msg.empty()) return make_fail("theta_recurrence", "k=" + std::to_string(k) + ": " + msg);
    }
    return make_pass("theta_recurrence", "z d/dz steps the index up for k = -4..8");
}

// ---- bridge -----------------------------------------------------------------

VerifyCheck bridge_trial_check(const std::string& name, const VerifyOptions& o, bool signed_mults,
                               std::uint64_t salt) {
    sample::Rng rng(o.seed + salt);
    for (int t = 0; t < o.trials; ++t) {
        RootDivisor a = signed_mults ? sample::signed_divisor(rng, 3, 3) : sample::divisor(rng, 3, 3);
        RootDivisor b = signed_mults ? sample::signed_divisor(rng, 3, 3) : sample::divisor(rng, 3, 3);
        auto lhs = ene_series(poly_from_divisor(a, o.order), poly_from_divisor(b, o.order));
        LaurentSeries expected = poly_from_divisor(ene_roots(a, b), o.order).series();
        if (o.negative_control && t == o.trials / 2) {
            expected.set_coeff(1, expected.coeff(1) + GaussianRational(1));
        }
        std::string msg = first_series_mismatch(lhs.series(), expected);
        if (!msg.empty()) {
            return make_fail(name, "trial " + std::to_string(t) + ": a = " + render_divisor(a) +
                                       ", b = " + render_divisor(b) + ": " + msg);
        }
    }
    return make_pass(name, std::to_string(o.trials) + " divisor pairs");
}

VerifyCheck check_universal_coefficient(const VerifyOptions& o) {
    sample::Rng rng(o.seed + 22);
    for (int n = 1; n <= 10; ++n) {
        for (int t = 0; t < 3; ++t) {
            std::vector<GaussianRational> a(n), b(n);
            for (int j = 0; j < n; ++j) {
                a[j] = sample::small_rational(rng, false);
                b[j] = sample::small_rational(rng, false);
            }
            GaussianRational r0 = universal_coeff_residual(a, b, n);
            a[n - 1] = a[n - 1] + sample::small_rational(rng, true);
            b[n - 1] = b[n - 1] + sample::small_rational(rng, true);
            GaussianRational r1 = universal_coeff_residual(a, b, n);
            if (r0 != r1) {
                return make_fail("universal_coefficient",
                                 "n=" + std::to_string(n) + ": residual moved from " + r0.to_string() +
                                     " to " + r1.to_string() + " when the top coefficients changed");
            }
            // with nothing below the top, the coefficient is the pure cross term
            std::vector<GaussianRational> a0(n), b0(n);
            a0[n - 1] = sample::small_rational(rng, true);
            b0[n - 1] = sample::small_rational(rng, true);
            if (!universal_coeff_residual(a0, b0, n).is_zero()) {
                return make_fail("universal_coefficient",
                                 "n=" + std::to_string(n) +
                                     ": nonzero residual with all lower coefficients zero");
            }
        }
    }
    return make_pass("universal_coefficient",
                     "the top coefficients enter c_n only through the cross term, n = 1..10");
}

VerifyCheck check_bilinearity(const VerifyOptions& o) {
    sample::Rng rng(o.seed + 23);
    auto random_exponent = [&](int low) {
        LaurentSeries s(SeriesWindow{low, o.order});
        for (int k = low; k <= o.order; ++k) {
            if (k == 0) continue;  // exponents live modulo constants
            s.set_coeff(k, sample::small_rational(rng, false));
        }
        return s;
    };
    for (int t = 0; t < o.trials; ++t) {
        int low = (t % 3 == 0) ? -2 : 0;
        LaurentSeries f = random_exponent(low);
        LaurentSeries g = random_exponent(0);
        LaurentSeries h = random_exponent(0);
        GaussianRational c = sample::small_rational(rng, true);
        if (ene_exp(f + g, h) != ene_exp(f, h) + ene_exp(g, h)) {
            return make_fail("bilinearity", "trial " + std::to_string(t) + ": additivity fails");
        }
        if (ene_exp(c * f, h) != c * ene_exp(f, h)) {
            return make_fail("bilinearity", "trial " + std::to_string(t) + ": scalars do not pull out");
        }
        if (ene_exp(f, h) != ene_exp(h, f)) {
            return make_fail("bilinearity", "trial " + std::to_string(t) + ": symmetry fails");
        }
    }
    return make_pass("bilinearity", std::to_string(o.trials) + " exponent triples");
}

// ---- limits -----------------------------------------------------------------

VerifyCheck check_hausdorff_axioms(const VerifyOptions& o) {
    sample::Rng rng(o.seed + 30);
    auto random_set = [&]() {
        std::vector<ApproxSpherePoint> pts;
        int n = 1 + static_cast<int>(rng() % 4);
        for (int j = 0; j < n; ++j) {
            if (rng() % 8 == 0) {
                pts.push_back(ApproxSpherePoint::at_infinity());
            } else {
                pts.push_back(ApproxSpherePoint::finite(to_complex(sample::root(rng))));
            }
        }
        return pts;
    };
    int trials = std::min(o.trials, 30);
    for (int t = 0; t < trials; ++t) {
        auto a = random_set();
        auto b = random_set();
        auto c = random_set();
        double dab = hausdorff_distance(a, b);
        double dba = hausdorff_distance(b, a);
        double dac = hausdorff_distance(a, c);
        double dbc = hausdorff_distance(b, c);
        if (hausdorff_distance(a, a) > 1e-12) {
            return make_fail("hausdorff_axioms", "trial " + std::to_string(t) + ": d(A,A) != 0");
        }
        if (std::abs(dab - dba) > 1e-12) {
            return make_fail("hausdorff_axioms", "trial " + std::to_string(t) + ": not symmetric");
        }
        if (dac > dab + dbc + 1e-9) {
            return make_fail("hausdorff_axioms", "trial " + std::to_string(t) + ": triangle inequality fails");
        }
        if (dab < 0) {
            return make_fail("hausdorff_axioms", "trial " + std::to_string(t) + ": negative distance");
        }
    }
    return make_pass("hausdorff_axioms", std::to_string(trials) + " random point sets");
}

VerifyCheck check_decay(const VerifyOptions&) {
    // e^z: error of r0 (1 + r1/k)^k should halve with k (first-order decay).
    TransalgebraicFunction f(RationalFunction(1), RationalFunction(Poly::variable()));
    SampleRegion region;
    region.circles.push_back({0.0, 0.0, 0.5, 32});
    double prev = euler_limit_error(f, 16, region);
    for (long k = 32; k <= 64; k *= 2) {
        double err = euler_limit_error(f, k, region);
        double ratio = err / prev;
        if (!(ratio > 0.3 && ratio < 0.7)) {
            std::ostringstream out;
            out << "k=" << k << ": error ratio " << ratio << " outside (0.3, 0.7)";
            return make_fail("decay", out.str());
        }
        prev = err;
    }
    return make_pass("decay", "error halves with k for e^z on |z| = 1/2");
}

VerifyCheck check_collapse(const VerifyOptions&) {
    // e^{1/(1-z)}: zeros of the approximant pile up at the singularity.
    TransalgebraicFunction f(
        RationalFunction(1),
        RationalFunction(Poly::one(), Poly{GaussianRational(1), GaussianRational(-1)}));
    CollapseReport report = collapse_witness(f, 50);
    if (report.witnesses.size() != 1) {
        return make_fail("collapse", "expected one singularity witness, got " +
                                         std::to_string(report.witnesses.size()));
    }
    const SingularityWitness& w = report.witnesses[0];
    if (w.singularity != SpherePoint::finite(GaussianRational(1)) || w.order != 1) {
        return make_fail("collapse", "witness attached to the wrong singularity");
    }
    long zero_mult = 0;
    for (const auto& z : w.zeros) {
        zero_mult += z.multiplicity;
        if (z.distance > 0.05) {
            std::ostringstream out;
            out << "zero cluster sits " << z.distance << " away from the singularity";
            return make_fail("collapse", out.str());
        }
    }
    if (zero_mult != 50) {
        return make_fail("collapse", "zero multiplicity " + std::to_string(zero_mult) + " != k");
    }
    long pole_mult = 0;
    for (const auto& p : w.poles) pole_mult += p.multiplicity;
    if (pole_mult != 50) {
        return make_fail("collapse", "pole multiplicity " + std::to_string(pole_mult) + " != k");
    }
    if (w.distinct_locations() < 2) {
        return make_fail("collapse", "zeros and poles collapsed to a single location");
    }
    return make_pass("collapse", "k = 50 puts 50 zeros and a 50-fold pole at the singularity");
}

VerifyCheck check_region_exclusion(const VerifyOptions&) {
    TransalgebraicFunction f(
        RationalFunction(1),
        RationalFunction(Poly::one(), Poly{GaussianRational(1), GaussianRational(-1)}));
    SampleRegion region;
    region.circles.push_back({1.0, 0.0, 0.01, 8});
    try {
        euler_limit_error(f, 8, region);
    } catch (const Error&) {
        return make_pass("region_exclusion", "samples inside the guard distance are refused");
    }
    return make_fail("region_exclusion", "sampling on top of a singularity was accepted");
}

}  // namespace

VerifyReport run_verify_suite(const std::string& suite, const VerifyOptions& options) {
    VerifyReport report;
    report.suite = suite;
    if (suite == "ring") {
        report.checks.push_back(check_commutativity(options));
        report.checks.push_back(check_associativity(options));
        report.checks.push_back(check_distributivity(options));
        report.checks.push_back(check_unit(options));
        report.checks.push_back(check_absorbing(options));
    } else if (suite == "euler") {
        report.checks.push_back(check_numerator_invariants(options));
        report.checks.push_back(check_inversion_symmetry(options));
        report.checks.push_back(check_closed_form_series(options));
        report.checks.push_back(check_frozen_rows(options));
    } else if (suite == "generators") {
        report.checks.push_back(check_factor_round_trip(options));
        report.checks.push_back(check_generator_law(options));
        report.checks.push_back(check_symbol_series_consistency(options));
        report.checks.push_back(check_log_derivative(options));
        report.checks.push_back(check_grading(options));
    } else if (suite == "polylog") {
        report.checks.push_back(check_pole_inverse(options));
        report.checks.push_back(check_index_bridge(options));
        report.checks.push_back(check_theta_recurrence(options));
    } else if (suite == "bridge") {
        report.checks.push_back(bridge_trial_check("divisor_bridge", options, false, 20));
        report.checks.push_back(bridge_trial_check("signed_bridge", options, true, 21));
        report.checks.push_back(check_universal_coefficient(options));
        report.checks.push_back(check_bilinearity(options));
    } else if (suite == "limits") {
        report.checks.push_back(check_hausdorff_axioms(options));
        report.checks.push_back(check_decay(options));
        report.checks.push_back(check_collapse(options));
        report.checks.push_back(check_region_exclusion(options));
    } else {
        throw Error("unknown verify suite: " + suite);
    }
    report.pass = true;
    for (const auto& c : report.checks) report.pass = report.pass && c.pass;
    return report;
}

}  // namespace ene
