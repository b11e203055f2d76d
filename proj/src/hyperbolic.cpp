#include "horo/hyperbolic.hpp"

#include <cmath>

namespace horo {

HPoint make_hpoint(double x, double y) {
    if (!(y > 0.0)) throw std::invalid_argument("half-plane point needs Im z > 0");
    return HPoint{x, y};
}

SlicedParams::SlicedParams(double q_) : q(q_) {
    if (!(q > 1.0)) throw std::invalid_argument("sliced plane parameter needs q > 1");
}

double dist_h(const HPoint& z1, const HPoint& z2) {
    double dx = z1.x - z2.x;
    double dy = z1.y - z2.y;
    return std::acosh(1.0 + (dx * dx + dy * dy) / (2.0 * z1.y * z2.y));
}

double dist_h_log_form(const HPoint& z1, const HPoint& z2) {
    // log(num/den) with den rationalised via num * den = 4 y1 y2, which is
    // exact for |z1 - conj z2| +- |z1 - z2| and avoids the cancellation of
    // the direct difference.
    double dx = z1.x - z2.x;
    double num = std::hypot(dx, z1.y + z2.y) + std::hypot(dx, z1.y - z2.y);
    return std::log(num * num / (4.0 * z1.y * z2.y));
}

double busemann_q(const HPoint& z, double q) {
    if (!(q > 1.0)) throw std::invalid_argument("busemann_q needs q > 1");
    return std::log(z.y) / std::log(q);
}

double dist_hp(const LogPoint& a, const LogPoint& b, double p) {
    if (!(p > 0.0)) throw std::invalid_argument("curvature parameter must be positive");
    HPoint za{p * a.x, std::exp(p * a.z)};
    HPoint zb{p * b.x, std::exp(p * b.z)};
    return dist_h(za, zb) / p;
}

HPoint affh_apply(const AffHEl& g, const HPoint& z, double q) {
    double s = std::pow(q, g.n);
    return HPoint{s * z.x + g.b, s * z.y};
}

AffHEl affh_compose(const AffHEl& g, const AffHEl& h, double q) {
    return AffHEl{g.n + h.n, std::pow(q, g.n) * h.b + g.b};
}

double affh_modular(const AffHEl& g, double q) {
    return std::pow(q, -g.n);
}

} // namespace horo
