#include "ene/limits.hpp"

#include <algorithm>
#include <cmath>

#include "ene/error.hpp"
#include "ene/numeric.hpp"

namespace ene {

ApproxSpherePoint ApproxSpherePoint::of(const SpherePoint& p) {
    return p.infinite ? at_infinity() : finite(to_complex(p.value));
}

double chordal_distance(const ApproxSpherePoint& a, const ApproxSpherePoint& b) {
    if (a.infinite && b.infinite) return 0.0;
    if (a.infinite || b.infinite) {
        const std::complex<double>& v = a.infinite ? b.value : a.value;
        return 2.0 / std::sqrt(1.0 + std::norm(v));
    }
    return 2.0 * std::abs(a.value - b.value) /
           std::sqrt((1.0 + std::norm(a.value)) * (1.0 + std::norm(b.value)));
}

double hausdorff_distance(const std::vector<ApproxSpherePoint>& a, const std::vector<ApproxSpherePoint>& b) {
    if (a.empty() || b.empty()) throw Error("hausdorff distance of empty set");
    auto directed = [](const std::vector<ApproxSpherePoint>& from, const std::vector<ApproxSpherePoint>& to) {
        double worst = 0.0;
        for (const auto& p : from) {
            double best = 4.0;
            for (const auto& q : to) best = std::min(best, chordal_distance(p, q));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

std::vector<std::complex<double>> SampleRegion::points() const {
    std::vector<std::complex<double>> pts;
    const double pi = 3.14159265358979323846;
    for (const auto& c : circles) {
        for (int j = 0; j < c.count; ++j) {
            double angle = 2.0 * pi * static_cast<double>(j) / static_cast<double>(c.count);
            pts.push_back(std::complex<double>(c.cx, c.cy) + std::polar(c.radius, angle));
        }
    }
    for (const auto& r : rects) {
        for (int ix = 0; ix < r.nx; ++ix) {
            double x = r.nx == 1 ? r.x0 : r.x0 + (r.x1 - r.x0) * static_cast<double>(ix) / (r.nx - 1);
            for (int iy = 0; iy < r.ny; ++iy) {
                double y = r.ny == 1 ? r.y0 : r.y0 + (r.y1 - r.y0) * static_cast<double>(iy) / (r.ny - 1);
                pts.emplace_back(x, y);
            }
        }
    }
    return pts;
}

SampleRegion parse_sample_grid(const std::string& spec, double exclusion) {
    SampleRegion region;
    region.exclusion = exclusion;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t end = spec.find(';', pos);
        if (end == std::string::npos) end = spec.size();
        std::string part = spec.substr(pos, end - pos);
        pos = end + 1;
        if (part.empty()) continue;
        std::size_t colon = part.find(':');
        if (colon == std::string::npos) throw Error("bad grid entry '" + part + "': missing ':'");
        std::string kind = part.substr(0, colon);
        std::vector<double> nums;
        std::string rest = part.substr(colon + 1);
        std::size_t p = 0;
        while (p <= rest.size()) {
            std::size_t comma = rest.find(',', p);
            if (comma == std::string::npos) comma = rest.size();
            std::string tok = rest.substr(p, comma - p);
            p = comma + 1;
            try {
                std::size_t used = 0;
                nums.push_back(std::stod(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw Error("bad grid number '" + tok + "' in '" + part + "'");
            }
            if (p > rest.size()) break;
        }
        if (kind == "circle") {
            if (nums.size() != 4) throw Error("circle grid needs cx,cy,r,n");
            SampleCircle c{nums[0], nums[1], nums[2], static_cast<int>(nums[3])};
            if (c.radius <= 0 || c.count < 1) throw Error("circle grid needs r > 0 and n >= 1");
            region.circles.push_back(c);
        } else if (kind == "rect") {
            if (nums.size() != 6) throw Error("rect grid needs x0,y0,x1,y1,nx,ny");
            SampleRect r{nums[0], nums[1], nums[2], nums[3],
                         static_cast<int>(nums[4]), static_cast<int>(nums[5])};
            if (r.nx < 1 || r.ny < 1) throw Error("rect grid needs nx, ny >= 1");
            region.rects.push_back(r);
        } else {
            throw Error("unknown grid shape '" + kind + "'");
        }
    }
    if (region.circles.empty() && region.rects.empty()) throw Error("empty grid specification");
    return region;
}

std::vector<ApproxSpherePoint> support_points(const TransalgebraicFunction& f) {
    TransalgebraicDivisor d = transalg_divisor(f);
    std::vector<ApproxSpherePoint> pts;
    for (const auto& [p, m] : d.algebraic) {
        (void)m;
        pts.push_back(ApproxSpherePoint::of(p));
    }
    for (const auto& [p, m] : d.transcendental) {
        (void)m;
        bool dup = false;
        for (const auto& q : pts)
            if (chordal_distance(ApproxSpherePoint::of(p), q) == 0.0) dup = true;
        if (!dup) pts.push_back(ApproxSpherePoint::of(p));
    }
    return pts;
}

namespace {

struct NumericRational {
    std::vector<std::complex<double>> num;
    std::vector<std::complex<double>> den;

    std::complex<double> operator()(std::complex<double> z) const {
        return eval_poly(num, z) / eval_poly(den, z);
    }
};

NumericRational numeric_of(const RationalFunction& r) {
    return {complex_coefficients(r.num()), complex_coefficients(r.den())};
}

/// (1 + w/k)^k via exp(k log1p(w/k)); exact zero when 1 + w/k vanishes.
std::complex<double> euler_power(std::complex<double> w, long k) {
    std::complex<double> t = w / static_cast<double>(k);
    if (std::abs(std::complex<double>(1.0) + t) == 0.0) return 0.0;
    return std::exp(static_cast<double>(k) * log1p_complex(t));
}

void check_region(const TransalgebraicFunction& f, const SampleRegion& region,
                  const std::vector<std::complex<double>>& pts) {
    std::vector<ApproxSpherePoint> supp = support_points(f);
    for (const auto& z : pts) {
        ApproxSpherePoint p = ApproxSpherePoint::finite(z);
        for (const auto& s : supp)
            if (chordal_distance(p, s) < region.exclusion) throw Error("region violates exclusion");
    }
}

}  // namespace

double euler_limit_error(const TransalgebraicFunction& f, long k, const SampleRegion& region) {
    if (k < 1) throw Error("approximation index must be positive");
    std::vector<std::complex<double>> pts = region.points();
    if (pts.empty()) throw Error("empty sample region");
    check_region(f, region, pts);
    NumericRational r0 = numeric_of(f.rational_part());
    NumericRational r1 = numeric_of(f.exponent_part());
    double worst = 0.0;
    for (const auto& z : pts) {
        std::complex<double> base = r0(z);
        std::complex<double> w = r1(z);
        std::complex<double> exact = base * std::exp(w);
        std::complex<double> approx = base * euler_power(w, k);
        double err = std::abs(approx - exact);
        if (!std::isfinite(err)) throw Error("limit evaluation overflowed");
        worst = std::max(worst, err);
    }
    return worst;
}

int SingularityWitness::distinct_locations() const {
    std::vector<ApproxSpherePoint> seen;
    auto note = [&](const ApproxSpherePoint& p) {
        for (const auto& q : seen)
            if (chordal_distance(p, q) < 1e-9) return;
        seen.push_back(p);
    };
    for (const auto& c : zeros) note(c.location);
    for (const auto& c : poles) note(c.location);
    return static_cast<int>(seen.size());
}

CollapseReport collapse_witness(const TransalgebraicFunction& f, long k) {
    if (k < 1) throw Error("approximation index must be positive");
    CollapseReport report;
    report.k = k;
    TransalgebraicDivisor div = transalg_divisor(f);
    if (div.transcendental.empty()) return report;

    for (const auto& [p, ord] : div.transcendental)
        report.witnesses.push_back(SingularityWitness{p, ord, {}, {}});

    auto nearest = [&](const ApproxSpherePoint& loc) -> SingularityWitness& {
        std::size_t best = 0;
        double best_d = 5.0;
        for (std::size_t j = 0; j < report.witnesses.size(); ++j) {
            double d = chordal_distance(loc, ApproxSpherePoint::of(report.witnesses[j].singularity));
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        return report.witnesses[best];
    };
    auto assign = [&](std::vector<ClusterWitness> SingularityWitness::*slot, const ApproxSpherePoint& loc,
                      long mult) {
        SingularityWitness& w = nearest(loc);
        double d = chordal_distance(loc, ApproxSpherePoint::of(w.singularity));
        (w.*slot).push_back(ClusterWitness{loc, mult, d});
    };

    // moving zeros: roots of k den1 + num1, each a zero of f_k of order k
    const RationalFunction& e = f.exponent_part();
    Poly moving = GaussianRational(Rational(k)) * e.den() + e.num();
    std::vector<std::complex<double>> roots = aberth_roots(complex_coefficients(moving));
    for (const auto& [center, count] : cluster_points(roots, 1e-6))
        assign(&SingularityWitness::zeros, ApproxSpherePoint::finite(center), k * count);

    // poles of f_k at the poles of R1 (these sit exactly on the finite
    // singularities), order k * m, plus whatever R0 already does there
    for (const auto& [p, m] : div.transcendental) {
        if (p.infinite) continue;
        long order = k * static_cast<long>(m);
        auto alg = div.algebraic.find(p);
        if (alg != div.algebraic.end()) order -= alg->second;  // R0 zero reduces the pole
        if (order > 0)
            assign(&SingularityWitness::poles, ApproxSpherePoint::of(p), order);
        else if (order < 0)
            assign(&SingularityWitness::zeros, ApproxSpherePoint::of(p), -order);
    }

    // behavior at infinity: ord_inf f_k = ord_inf R0 + k (deg den1 - deg moving)
    if (!e.is_zero()) {
        long ord_inf = f.rational_part().order_at_infinity() +
                       k * static_cast<long>(e.den().degree() - moving.degree());
        if (ord_inf > 0)
            assign(&SingularityWitness::zeros, ApproxSpherePoint::at_infinity(), ord_inf);
        else if (ord_inf < 0)
            assign(&SingularityWitness::poles, ApproxSpherePoint::at_infinity(), -ord_inf);
    }
    return report;
}

std::vector<ApproxSpherePoint> approximant_support(const TransalgebraicFunction& f, long k) {
    if (k < 1) throw Error("approximation index must be positive");
    std::vector<ApproxSpherePoint> pts;
    TransalgebraicDivisor div = transalg_divisor(f);
    for (const auto& [p, m] : div.algebraic) {
        (void)m;
        if (!p.infinite) pts.push_back(ApproxSpherePoint::of(p));
    }
    const RationalFunction& e = f.exponent_part();
    if (e.is_zero()) {
        for (const auto& [p, m] : div.algebraic)
            if (p.infinite && m != 0) pts.push_back(ApproxSpherePoint::at_infinity());
        return pts;
    }
    Poly moving = GaussianRational(Rational(k)) * e.den() + e.num();
    for (const auto& z : aberth_roots(complex_coefficients(moving)))
        pts.push_back(ApproxSpherePoint::finite(z));
    for (const auto& [p, m] : div.transcendental) {
        (void)m;
        if (!p.infinite) pts.push_back(ApproxSpherePoint::of(p));
    }
    long ord_inf = f.rational_part().order_at_infinity() +
                   k * static_cast<long>(e.den().degree() - moving.degree());
    if (ord_inf != 0) pts.push_back(ApproxSpherePoint::at_infinity());
    return pts;
}

ConvergenceReport euler_limit_study(const TransalgebraicFunction& f, const SampleRegion& region,
                                    long k_min, long k_max) {
    if (k_min < 1 || k_max < k_min) throw Error("bad index range");
    ConvergenceReport report;
    std::vector<ApproxSpherePoint> target = support_points(f);
    for (long k = k_min; k <= k_max; k *= 2) {
        report.ks.push_back(k);
        report.errors.push_back(euler_limit_error(f, k, region));
        report.hausdorff.push_back(hausdorff_distance(approximant_support(f, k), target));
    }
    // least squares on (log k, log err), ignoring exact zeros
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t j = 0; j < report.ks.size(); ++j) {
        if (report.errors[j] <= 0.0) continue;
        double x = std::log(static_cast<double>(report.ks[j]));
        double y = std::log(report.errors[j]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    report.decay_exponent = n >= 2 ? (n * sxy - sx * sy) / (n * sxx - sx * sx) : 0.0;
    return report;
}

}  // namespace ene
