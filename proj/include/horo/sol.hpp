#pragma once

#include <array>
#include <utility>
#include <vector>

#include "horo/errors.hpp"
#include "horo/hyperbolic.hpp"

namespace horo {

struct SolParams {
    double p;
    double q;
    SolParams(double p_, double q_);
};

/// Group element (a,b,c) of S(p,q); also a point (x,y,z) of Sol(p,q).
struct SolEl {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    bool operator==(const SolEl&) const = default;
};

using SolPoint = SolEl;
using Mat3 = std::array<std::array<double, 3>, 3>;

/// (a,b,c)(x,y,z) = (e^{pc} x + a, e^{-qc} y + b, c + z).
SolEl sol_mul(const SolParams& s, const SolEl& g, const SolEl& h);
SolEl sol_inverse(const SolParams& s, const SolEl& g);
Mat3 sol_matrix(const SolParams& s, const SolEl& g);
Mat3 mat3_mul(const Mat3& a, const Mat3& b);
double sol_modular(const SolParams& s, const SolEl& g);

/// The two distance-nonincreasing projections to H(p) and H(q).
std::pair<LogPoint, LogPoint> projections(const SolPoint& pt);

/// Sampled path with fixed endpoints.
struct SolPath {
    std::vector<SolPoint> samples; // N+1 points, N >= 1
};

/// Gauss-4 quadrature of the Sol length element along the linear
/// interpolant of each segment.
double path_length(const SolParams& s, const SolPath& path);

struct SolUpperResult {
    double length;
    bool converged;
};

inline constexpr int kSolPathSegments = 64;

/// Numerical distance upper bound: gradient descent with backtracking on
/// the interior samples, seeded by the straight line and a two-phase path
/// that runs the H(p) geodesic in (x,z) first and the H(q) motion second.
SolUpperResult dist_upper(const SolParams& s, const SolPoint& a, const SolPoint& b);

/// lower = max of projected distances, upper = projected sum minus |dz|.
std::pair<double, double> sandwich(const SolParams& s, const SolPoint& a, const SolPoint& b);

} // namespace horo
