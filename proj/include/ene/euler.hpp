#pragma once

#include <string>
#include <vector>

#include "ene/rational_function.hpp"
#include "ene/series.hpp"

namespace ene {

/// Numerator polynomial of the k-th euler function in its closed form
/// -z P_k(z) / (1-z)^k. Defined for k >= 1 by P_1 = 1 and
/// P_{k+1} = (1 + (k-1)z) P_k + z(1-z) P_k'.
Poly euler_numerator(int k);

/// The k-th euler function -z P_k(z)/(1-z)^k as a reduced rational function,
/// k >= 1. Its expansion at 0 is -sum_{n>=1} n^{k-1} z^n.
RationalFunction euler_r(int k);

/// Coefficients -n^{k-1} through `order`, any integer k. For k <= 0 these are
/// no longer rational functions but stay perfectly good series; k = 0 gives
/// log(1-z).
LaurentSeries euler_r_series(int k, int order);

/// Polylogarithm coefficients n^{-k} through `order`, k >= 1.
/// polylog_series(k, n) == -euler_r_series(1-k, n).
LaurentSeries polylog_series(int k, int order);

/// r(1/z) == (-1)^k r(z), the inversion symmetry the euler functions satisfy
/// for k >= 2. Exposed so callers can probe arbitrary candidates.
bool inversion_symmetric(const RationalFunction& r, int k);

/// check for euler_r(k) itself, k >= 2.
bool check_functional_equation(int k);

struct EulerTableRow {
    int k;
    Poly numerator;
    RationalFunction closed_form;
};

std::vector<EulerTableRow> euler_table(int max_k);

/// TSV: "k<TAB>P_k coefficients<TAB>R_k(z)", one row per k, trailing newline.
std::string render_euler_table(int max_k);

}  // namespace ene
