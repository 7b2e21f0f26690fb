#pragma once

#include <map>

#include "ene/poly.hpp"

namespace ene {

/// Result of exact root extraction over Q(i). `remainder` is the factor left
/// after dividing out every root found: a constant when the polynomial splits,
/// a higher-degree polynomial with no Q(i) roots otherwise.
struct RootExtraction {
    std::map<GaussianRational, int> roots;
    Poly remainder;

    bool splits() const { return remainder.degree() <= 0; }
};

/// All roots of p in Q(i) with multiplicities, by the rational root theorem
/// over the Gaussian integers (denominators cleared, Z[i] divisor enumeration
/// through norm factorization). Exact; throws on the zero polynomial or when
/// the divisor enumeration exceeds its budget.
RootExtraction gaussian_rational_roots(const Poly& p);

}  // namespace ene
