#pragma once

#include <stdexcept>

namespace horo {

/// Point x + iy of the upper half plane.
struct HPoint {
    double x;
    double y;

    bool operator==(const HPoint&) const = default;
};

HPoint make_hpoint(double x, double y);

/// Sliced plane parameter: horocycle lines sit at Im z = q^k, q > 1.
struct SlicedParams {
    double q;
    explicit SlicedParams(double q_);
};

/// Point of the logarithmic-model plane H(p) with curvature -p^2,
/// length element exp(-2pz) dx^2 + dz^2.
struct LogPoint {
    double x;
    double z;

    bool operator==(const LogPoint&) const = default;
};

/// z -> q^n z + b.
struct AffHEl {
    int n = 0;
    double b = 0.0;
};

/// Hyperbolic distance; evaluated through the arccosh form, which stays
/// accurate where the log-quotient form loses digits.
double dist_h(const HPoint& z1, const HPoint& z2);

/// The log-quotient form, kept as an independent cross-check route.
double dist_h_log_form(const HPoint& z1, const HPoint& z2);

/// h_q(z) = log_q(Im z).
double busemann_q(const HPoint& z, double q);

/// Distance in H(p): rescale into the half plane and divide by p.
double dist_hp(const LogPoint& a, const LogPoint& b, double p);

HPoint affh_apply(const AffHEl& g, const HPoint& z, double q);
AffHEl affh_compose(const AffHEl& g, const AffHEl& h, double q);
double affh_modular(const AffHEl& g, double q);

} // namespace horo
