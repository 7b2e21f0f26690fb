#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ene/ene_product.hpp"
#include "ene/transalg.hpp"

namespace ene {

struct VerifyOptions {
    int order = 12;    // series truncation for the identity checks
    int max_k = 12;    // highest euler index exercised
    int trials = 100;  // randomized cases per property
    std::uint64_t seed = 20260817;
    /// Internal test fixture: corrupts one expected value in the bridge suite
    /// so the failure path (counterexample reporting) stays honest.
    bool negative_control = false;
};

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;  // counterexample or summary
};

struct VerifyReport {
    std::string suite;
    bool pass = false;
    std::vector<VerifyCheck> checks;
};

/// Suites: ring, euler, generators, polylog, bridge, limits.
std::vector<std::string> verify_suite_names();

/// "" when the two agree on their common window, else a one-line
/// counterexample naming the first differing index and both values.
std::string first_series_mismatch(const LaurentSeries& a, const LaurentSeries& b);

/// Runs one suite deterministically (fixed seed, single thread). Throws on an
/// unknown suite name.
VerifyReport run_verify_suite(const std::string& suite, const VerifyOptions& options);

/// Deterministic generators shared by the verify suites and the test
/// binaries. All draw from a fixed pool of nonzero Q(i) scalars.
namespace sample {

using Rng = std::mt19937_64;

const std::vector<GaussianRational>& scalar_pool();

/// pool element (never 0)
GaussianRational root(Rng& rng);
/// small rational in [-6, 6] with denominator up to 4; optionally nonzero
GaussianRational small_rational(Rng& rng, bool nonzero);
/// up to max_entries pool roots with multiplicities in [1, max_mult]
RootDivisor divisor(Rng& rng, int max_entries, int max_mult);
/// like divisor but multiplicities in [-max_mult, max_mult] \ {0}
RootDivisor signed_divisor(Rng& rng, int max_entries, int max_mult);
/// product of generator factors e^{a R_k(z/u)} times a rational factor whose
/// divisor avoids 0; poles of the exponent stay away from 0 as well
TransalgebraicFunction generator_product(Rng& rng, int max_factors);
/// rational exponent: polar parts of order <= max_order at <= max_poles pool
/// points (possibly including 0) plus a small polynomial, constant-free
RationalFunction rational_exponent(Rng& rng, int max_poles, int max_order, bool allow_pole_at_zero);
/// ratPart * e^{exponent} with ratPart zeros/poles from the pool
TransalgebraicFunction transalg_function(Rng& rng);

}  // namespace sample

}  // namespace ene
