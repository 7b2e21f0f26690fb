#pragma once

#include <complex>
#include <vector>

#include "ene/poly.hpp"
#include "ene/rational_function.hpp"

namespace ene {

std::complex<double> to_complex(const GaussianRational& s);

/// Coefficients lowest-first, exact values rounded once.
std::vector<std::complex<double>> complex_coefficients(const Poly& p);

std::complex<double> eval_poly(const std::vector<std::complex<double>>& coeffs, std::complex<double> z);

/// All roots of the polynomial with the given coefficients (trailing zeros
/// tolerated), via Aberth-Ehrlich iteration with deterministic starting
/// points. Throws with diagnostics when the iteration fails to settle.
std::vector<std::complex<double>> aberth_roots(std::vector<std::complex<double>> coeffs);

/// Greedy clustering: points within `radius` of a cluster's first member
/// merge into it. Returns (centroid, count) pairs.
std::vector<std::pair<std::complex<double>, int>> cluster_points(
    const std::vector<std::complex<double>>& pts, double radius);

/// log(1+w), accurate for small |w|.
std::complex<double> log1p_complex(std::complex<double> w);

}  // namespace ene
