#include "ene/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ene/error.hpp"

namespace ene {

std::complex<double> to_complex(const GaussianRational& s) {
    return {s.real().to_double(), s.imag().to_double()};
}

std::vector<std::complex<double>> complex_coefficients(const Poly& p) {
    std::vector<std::complex<double>> c;
    c.reserve(p.coefficients().size());
    for (const auto& a : p.coefficients()) c.push_back(to_complex(a));
    return c;
}

std::complex<double> eval_poly(const std::vector<std::complex<double>>& coeffs, std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::vector<std::complex<double>> aberth_roots(std::vector<std::complex<double>> c) {
    while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
    if (c.size() <= 1) return {};
    int n = static_cast<int>(c.size()) - 1;
    // strip roots at 0 exactly
    std::vector<std::complex<double>> roots;
    std::size_t v = 0;
    while (v < c.size() && std::abs(c[v]) == 0.0) ++v;
    for (std::size_t j = 0; j < v; ++j) roots.push_back(0.0);
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(v));
    n = static_cast<int>(c.size()) - 1;
    if (n == 0) return roots;

    std::vector<std::complex<double>> d(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = static_cast<double>(k) * c[k];

    // deterministic start: circle of the root-magnitude bound
    double bound = 0.0;
    for (int k = 0; k < n; ++k) bound = std::max(bound, std::abs(c[static_cast<std::size_t>(k)] / c.back()));
    double radius = 1.0 + bound;
    std::vector<std::complex<double>> x(static_cast<std::size_t>(n));
    const double pi = 3.14159265358979323846;
    for (int j = 0; j < n; ++j) {
        double angle = 2.0 * pi * (static_cast<double>(j) + 0.25) / static_cast<double>(n) + 0.5;
        x[static_cast<std::size_t>(j)] = std::polar(radius, angle);
    }

    const int max_iters = 500;
    const double tol = 1e-13;
    for (int iter = 0; iter < max_iters; ++iter) {
        double moved = 0.0;
        for (int j = 0; j < n; ++j) {
            std::complex<double> zj = x[static_cast<std::size_t>(j)];
            std::complex<double> p = eval_poly(c, zj);
            std::complex<double> dp = eval_poly(d, zj);
            std::complex<double> newton = dp == 0.0 ? std::complex<double>(0.0) : p / dp;
            std::complex<double> rep = 0.0;
            for (int m = 0; m < n; ++m) {
                if (m == j) continue;
                std::complex<double> diff = zj - x[static_cast<std::size_t>(m)];
                if (std::abs(diff) < 1e-300) diff = 1e-300;
                rep += 1.0 / diff;
            }
            std::complex<double> denom = 1.0 - newton * rep;
            std::complex<double> step = std::abs(denom) < 1e-300 ? newton : newton / denom;
            x[static_cast<std::size_t>(j)] = zj - step;
            moved = std::max(moved, std::abs(step) / std::max(1.0, std::abs(zj)));
        }
        if (moved < tol) {
            roots.insert(roots.end(), x.begin(), x.end());
            return roots;
        }
    }
    // settle check: accept if residuals are tiny even without step convergence
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
        double r = std::abs(eval_poly(c, x[static_cast<std::size_t>(j)]));
        worst = std::max(worst, r);
    }
    double scale = 0.0;
    for (const auto& a : c) scale = std::max(scale, std::abs(a));
    if (worst <= 1e-9 * scale) {
        roots.insert(roots.end(), x.begin(), x.end());
        return roots;
    }
    std::ostringstream os;
    os << "root iteration did not converge: degree " << n << ", " << max_iters
       << " iterations, max residual " << worst;
    throw Error(os.str());
}

std::vector<std::pair<std::complex<double>, int>> cluster_points(
    const std::vector<std::complex<double>>& pts, double radius) {
    std::vector<std::pair<std::complex<double>, int>> clusters;
    std::vector<std::complex<double>> sums;
    std::vector<std::complex<double>> anchors;
    for (const auto& p : pts) {
        bool placed = false;
        for (std::size_t j = 0; j < clusters.size(); ++j) {
            if (std::abs(p - anchors[j]) <= radius) {
                sums[j] += p;
                ++clusters[j].second;
                clusters[j].first = sums[j] / static_cast<double>(clusters[j].second);
                placed = true;
                break;
            }
        }
        if (!placed) {
            clusters.emplace_back(p, 1);
            sums.push_back(p);
            anchors.push_back(p);
        }
    }
    return clusters;
}

std::complex<double> log1p_complex(std::complex<double> w) {
    double a = w.real();
    double b = w.imag();
    double re = 0.5 * std::log1p(2.0 * a + a * a + b * b);
    double im = std::atan2(b, 1.0 + a);
    return {re, im};
}

}  // namespace ene
