#pragma once

#include <complex>
#include <string>
#include <vector>

#include "ene/transalg.hpp"

namespace ene {

/// Numeric point on the sphere.
struct ApproxSpherePoint {
    bool infinite = false;
    std::complex<double> value;

    static ApproxSpherePoint at_infinity() { return {true, {}}; }
    static ApproxSpherePoint finite(std::complex<double> v) { return {false, v}; }
    static ApproxSpherePoint of(const SpherePoint& p);
};

/// Chordal metric on the sphere: 2|a-b| / sqrt((1+|a|^2)(1+|b|^2)),
/// 2/sqrt(1+|a|^2) against infinity. Range [0, 2].
double chordal_distance(const ApproxSpherePoint& a, const ApproxSpherePoint& b);

/// Hausdorff distance in the chordal metric; empty inputs are an error.
double hausdorff_distance(const std::vector<ApproxSpherePoint>& a, const std::vector<ApproxSpherePoint>& b);

struct SampleCircle {
    double cx = 0, cy = 0;
    double radius = 1;
    int count = 16;
};

struct SampleRect {
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    int nx = 1, ny = 1;
};

/// Where the limit is probed: circles and rectangle grids, with a guard
/// distance that every sample must keep from the divisor support of f.
struct SampleRegion {
    std::vector<SampleCircle> circles;
    std::vector<SampleRect> rects;
    double exclusion = 0.1;

    std::vector<std::complex<double>> points() const;
};

/// Builds a region from "circle:cx,cy,r,n" / "rect:x0,y0,x1,y1,nx,ny" specs,
/// ';'-separated. Malformed specs are an Error.
SampleRegion parse_sample_grid(const std::string& spec, double exclusion);

/// max over the region of |f_k(z) - f(z)| where f_k = R0 (1 + R1/k)^k is the
/// Euler-style approximation of f = R0 e^{R1}. Samples too close to the
/// divisor support (chordal metric, < exclusion) are refused.
double euler_limit_error(const TransalgebraicFunction& f, long k, const SampleRegion& region);

/// A bunch of divisor points of f_k converging somewhere, with its size.
struct ClusterWitness {
    ApproxSpherePoint location;
    long multiplicity = 0;
    double distance = 0;  // chordal distance to the singularity it converges to
};

/// Zeros and poles of f_k collapsing onto one exponential singularity.
struct SingularityWitness {
    SpherePoint singularity;
    int order = 0;
    std::vector<ClusterWitness> zeros;
    std::vector<ClusterWitness> poles;

    /// distinct divisor locations attached to this singularity
    int distinct_locations() const;
};

struct CollapseReport {
    long k = 0;
    std::vector<SingularityWitness> witnesses;
};

/// Where the zeros and poles of f_k = R0 (1 + R1/k)^k pile up: each zero
/// cluster and pole of f_k is assigned to the nearest exponential singularity
/// of f in the chordal metric.
CollapseReport collapse_witness(const TransalgebraicFunction& f, long k);

/// Support of Div(f) as numeric sphere points (algebraic and transcendental).
std::vector<ApproxSpherePoint> support_points(const TransalgebraicFunction& f);

/// Support of Div(f_k) numerically: fixed zeros/poles of R0, roots of
/// k den1 + num1 (each a zero of order k), poles of R1, infinity if f_k has a
/// zero or pole there.
std::vector<ApproxSpherePoint> approximant_support(const TransalgebraicFunction& f, long k);

struct ConvergenceReport {
    std::vector<long> ks;
    std::vector<double> errors;
    std::vector<double> hausdorff;
    /// least-squares slope of log error against log k (about -1 when the
    /// approximation converges at first order)
    double decay_exponent = 0;
};

/// Doubles k from k_min to k_max, recording the sup error on the region and
/// the Hausdorff distance between divisor supports.
ConvergenceReport euler_limit_study(const TransalgebraicFunction& f, const SampleRegion& region,
                                    long k_min, long k_max);

}  // namespace ene
