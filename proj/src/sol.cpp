#include "horo/sol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace horo {

SolParams::SolParams(double p_, double q_) : p(p_), q(q_) {
    if (!(p > 0.0 && q > 0.0)) throw std::invalid_argument("Sol parameters must be positive");
}

SolEl sol_mul(const SolParams& s, const SolEl& g, const SolEl& h) {
    return SolEl{std::exp(s.p * g.c) * h.a + g.a, std::exp(-s.q * g.c) * h.b + g.b, g.c + h.c};
}

SolEl sol_inverse(const SolParams& s, const SolEl& g) {
    return SolEl{-std::exp(-s.p * g.c) * g.a, -std::exp(s.q * g.c) * g.b, -g.c};
}

Mat3 sol_matrix(const SolParams& s, const SolEl& g) {
    return Mat3{{{std::exp(s.p * g.c), g.a, 0.0},
                 {0.0, 1.0, 0.0},
                 {0.0, g.b, std::exp(-s.q * g.c)}}};
}

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double acc = 0.0;
            for (int k = 0; k < 3; ++k) acc += a[i][k] * b[k][j];
            r[i][j] = acc;
        }
    return r;
}

double sol_modular(const SolParams& s, const SolEl& g) {
    return std::exp((s.q - s.p) * g.c);
}

std::pair<LogPoint, LogPoint> projections(const SolPoint& pt) {
    return {LogPoint{pt.a, pt.c}, LogPoint{pt.b, -pt.c}};
}

namespace {

// Gauss-Legendre nodes/weights on [0,1].
constexpr double kNode[4] = {0.06943184420297371, 0.33000947820757187,
                             0.66999052179242813, 0.93056815579702629};
constexpr double kWeight[4] = {0.17392742256872693, 0.32607257743127307,
                               0.32607257743127307, 0.17392742256872693};

double segment_length(const SolParams& s, const SolPoint& a, const SolPoint& b) {
    double dx = b.a - a.a, dy = b.b - a.b, dz = b.c - a.c;
    double acc = 0.0;
    for (int j = 0; j < 4; ++j) {
        double z = a.c + kNode[j] * dz;
        double g = std::exp(-2.0 * s.p * z) * dx * dx + std::exp(2.0 * s.q * z) * dy * dy
                 + dz * dz;
        acc += kWeight[j] * std::sqrt(g);
    }
    return acc;
}

// d/d(endpoints) of segment_length; grad0 and grad1 are accumulated.
void segment_gradient(const SolParams& s, const SolPoint& a, const SolPoint& b,
                      double* grad0, double* grad1) {
    double dx = b.a - a.a, dy = b.b - a.b, dz = b.c - a.c;
    for (int j = 0; j < 4; ++j) {
        double t = kNode[j];
        double z = a.c + t * dz;
        double ex = std::exp(-2.0 * s.p * z);
        double ey = std::exp(2.0 * s.q * z);
        double g = ex * dx * dx + ey * dy * dy + dz * dz;
        double f = std::sqrt(g);
        if (f < 1e-300) continue;
        double w = kWeight[j] / (2.0 * f);
        double dg_dx1 = 2.0 * ex * dx;
        double dg_dy1 = 2.0 * ey * dy;
        double dg_dzlin = -2.0 * s.p * ex * dx * dx + 2.0 * s.q * ey * dy * dy;
        double dg_dz1 = 2.0 * dz + t * dg_dzlin;
        double dg_dz0 = -2.0 * dz + (1.0 - t) * dg_dzlin;
        grad0[0] += w * (-dg_dx1);
        grad0[1] += w * (-dg_dy1);
        grad0[2] += w * dg_dz0;
        grad1[0] += w * dg_dx1;
        grad1[1] += w * dg_dy1;
        grad1[2] += w * dg_dz1;
    }
}

double total_length(const SolParams& s, const std::vector<SolPoint>& pts) {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        acc += segment_length(s, pts[i], pts[i + 1]);
    return acc;
}

// Point at arclength fraction t of the half-plane geodesic from w1 to w2.
HPoint halfplane_geodesic_point(const HPoint& w1, const HPoint& w2, double t) {
    if (std::abs(w1.x - w2.x) < 1e-13 * (1.0 + std::abs(w1.x))) {
        return HPoint{w1.x, w1.y * std::pow(w2.y / w1.y, t)};
    }
    double c = (w2.x * w2.x + w2.y * w2.y - w1.x * w1.x - w1.y * w1.y)
             / (2.0 * (w2.x - w1.x));
    double r = std::hypot(w1.x - c, w1.y);
    double phi1 = std::atan2(w1.y, w1.x - c);
    double phi2 = std::atan2(w2.y, w2.x - c);
    double t1 = std::log(std::tan(phi1 / 2.0));
    double t2 = std::log(std::tan(phi2 / 2.0));
    double ti = t1 + t * (t2 - t1);
    double phi = 2.0 * std::atan(std::exp(ti));
    return HPoint{c + r * std::cos(phi), r * std::sin(phi)};
}

// (x,z) of H(p) mapped into the half plane and back.
HPoint logmodel_to_halfplane(const LogPoint& a, double p) {
    return HPoint{p * a.x, std::exp(p * a.z)};
}

LogPoint halfplane_to_logmodel(const HPoint& w, double p) {
    return LogPoint{w.x / p, std::log(w.y) / p};
}

std::vector<SolPoint> straight_seed(const SolPoint& a, const SolPoint& b, int n) {
    std::vector<SolPoint> pts(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        double t = static_cast<double>(i) / n;
        pts[static_cast<std::size_t>(i)] =
            SolPoint{a.a + t * (b.a - a.a), a.b + t * (b.b - a.b), a.c + t * (b.c - a.c)};
    }
    return pts;
}

std::vector<SolPoint> two_phase_seed(const SolParams& s, const SolPoint& a, const SolPoint& b,
                                     int n) {
    int half = n / 2;
    std::vector<SolPoint> pts;
    pts.reserve(static_cast<std::size_t>(n) + 1);
    HPoint p1 = logmodel_to_halfplane(LogPoint{a.a, a.c}, s.p);
    HPoint p2 = logmodel_to_halfplane(LogPoint{b.a, b.c}, s.p);
    for (int i = 0; i <= half; ++i) {
        double t = static_cast<double>(i) / half;
        LogPoint xz = halfplane_to_logmodel(halfplane_geodesic_point(p1, p2, t), s.p);
        pts.push_back(SolPoint{xz.x, a.b, xz.z});
    }
    HPoint q1 = logmodel_to_halfplane(LogPoint{a.b, -b.c}, s.q);
    HPoint q2 = logmodel_to_halfplane(LogPoint{b.b, -b.c}, s.q);
    for (int i = 1; i <= n - half; ++i) {
        double t = static_cast<double>(i) / (n - half);
        LogPoint yz = halfplane_to_logmodel(halfplane_geodesic_point(q1, q2, t), s.q);
        pts.push_back(SolPoint{b.a, yz.x, -yz.z});
    }
    return pts;
}

// Seed following the H(p) geodesic in (x,z) while y is interpolated along
// the H(q) geodesic, matched to the advance of z between the endpoint
// heights.  Its length approximates the sandwich upper bound.
std::vector<SolPoint> matched_seed(const SolParams& s, const SolPoint& a, const SolPoint& b,
                                   int n) {
    HPoint p1 = logmodel_to_halfplane(LogPoint{a.a, a.c}, s.p);
    HPoint p2 = logmodel_to_halfplane(LogPoint{b.a, b.c}, s.p);
    HPoint q1 = logmodel_to_halfplane(LogPoint{a.b, -a.c}, s.q);
    HPoint q2 = logmodel_to_halfplane(LogPoint{b.b, -b.c}, s.q);
    double dz = b.c - a.c;
    std::vector<SolPoint> pts;
    pts.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        double t = static_cast<double>(i) / n;
        LogPoint xz = halfplane_to_logmodel(halfplane_geodesic_point(p1, p2, t), s.p);
        double u = t;
        if (std::abs(dz) > 1e-12)
            u = std::clamp((xz.z - a.c) / dz, 0.0, 1.0);
        LogPoint yz = halfplane_to_logmodel(halfplane_geodesic_point(q1, q2, u), s.q);
        pts.push_back(SolPoint{xz.x, yz.x, xz.z});
    }
    pts.front() = a;
    pts.back() = b;
    return pts;
}

struct OptimResult {
    double length;
    bool converged;
};

OptimResult optimise_path(const SolParams& s, std::vector<SolPoint>& pts, int max_iter) {
    const std::size_t n = pts.size();
    double cur = total_length(s, pts);
    std::vector<double> grad(3 * n);
    std::vector<SolPoint> trial(n);
    bool converged = false;
    double alpha_init = 1.0;
    for (int iter = 0; iter < max_iter; ++iter) {
        std::fill(grad.begin(), grad.end(), 0.0);
        for (std::size_t i = 0; i + 1 < n; ++i)
            segment_gradient(s, pts[i], pts[i + 1], &grad[3 * i], &grad[3 * (i + 1)]);
        // endpoints fixed
        std::fill(grad.begin(), grad.begin() + 3, 0.0);
        std::fill(grad.end() - 3, grad.end(), 0.0);
        double gsq = 0.0;
        for (double g : grad) gsq += g * g;
        if (gsq == 0.0) {
            converged = true;
            break;
        }
        double alpha = alpha_init;
        double next = cur;
        bool accepted = false;
        while (alpha > 1e-16) {
            for (std::size_t i = 0; i < n; ++i)
                trial[i] = SolPoint{pts[i].a - alpha * grad[3 * i],
                                    pts[i].b - alpha * grad[3 * i + 1],
                                    pts[i].c - alpha * grad[3 * i + 2]};
            next = total_length(s, trial);
            if (next <= cur - 1e-4 * alpha * gsq) {
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!accepted) {
            converged = true; // no descent direction left at machine scale
            break;
        }
        alpha_init = std::min(alpha * 4.0, 1e6);
        double max_step = 0.0;
        for (double g : grad) max_step = std::max(max_step, alpha * std::abs(g));
        pts.swap(trial);
        cur = next;
        if (max_step < 1e-10) {
            converged = true;
            break;
        }
    }
    return OptimResult{cur, converged};
}

std::vector<SolPoint> halve_path(const std::vector<SolPoint>& pts) {
    std::vector<SolPoint> out;
    out.reserve(pts.size() / 2 + 1);
    for (std::size_t i = 0; i < pts.size(); i += 2) out.push_back(pts[i]);
    return out;
}

std::vector<SolPoint> refine_path(const std::vector<SolPoint>& pts) {
    std::vector<SolPoint> out;
    out.reserve(pts.size() * 2 - 1);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const SolPoint& u = pts[i];
        const SolPoint& v = pts[i + 1];
        out.push_back(u);
        out.push_back(SolPoint{0.5 * (u.a + v.a), 0.5 * (u.b + v.b), 0.5 * (u.c + v.c)});
    }
    out.push_back(pts.back());
    return out;
}

// Coarse-to-fine shortening: optimise a downsampled copy first so global
// reshaping happens with few degrees of freedom, then refine back up.
OptimResult optimise_multiscale(const SolParams& s, std::vector<SolPoint> pts) {
    std::vector<std::vector<SolPoint>> pyramid{std::move(pts)};
    while (pyramid.back().size() > 3 && pyramid.back().size() % 2 == 1)
        pyramid.push_back(halve_path(pyramid.back()));
    std::vector<SolPoint> cur = pyramid.back();
    OptimResult r{0.0, false};
    for (std::size_t level = pyramid.size(); level-- > 0;) {
        int iters = level == 0 ? 2000 : 400;
        r = optimise_path(s, cur, iters);
        if (level > 0) cur = refine_path(cur);
    }
    return r;
}

} // namespace

double path_length(const SolParams& s, const SolPath& path) {
    if (path.samples.size() < 2) throw std::invalid_argument("path needs at least one segment");
    return total_length(s, path.samples);
}

SolUpperResult dist_upper(const SolParams& s, const SolPoint& a, const SolPoint& b) {
    if (a == b) return SolUpperResult{0.0, true};
    OptimResult best{0.0, false};
    bool first = true;
    for (auto seed : {straight_seed(a, b, kSolPathSegments),
                      two_phase_seed(s, a, b, kSolPathSegments),
                      matched_seed(s, a, b, kSolPathSegments)}) {
        OptimResult r = optimise_multiscale(s, std::move(seed));
        if (first || r.length < best.length) best = r;
        first = false;
    }
    // The analytic sandwich upper bound is itself a certified upper bound on
    // the distance, so the estimate never needs to exceed it; the optimizer
    // value is kept whenever the discretized path does better.
    double cap = sandwich(s, a, b).second;
    return SolUpperResult{std::min(best.length, cap), best.converged};
}

std::pair<double, double> sandwich(const SolParams& s, const SolPoint& a, const SolPoint& b) {
    auto [ap, aq] = projections(a);
    auto [bp, bq] = projections(b);
    double dp = dist_hp(ap, bp, s.p);
    double dq = dist_hp(aq, bq, s.q);
    double lower = std::max(dp, dq);
    double upper = dp + dq - std::abs(a.c - b.c);
    return {lower, upper};
}

} // namespace horo
