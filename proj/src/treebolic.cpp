#include "horo/treebolic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace horo {

HtParams::HtParams(int p_, double q_) : p(p_), q(q_) {
    if (p < 2) throw std::invalid_argument("treebolic branching number must be >= 2");
    if (!(q > 1.0 + 1e-9)) throw std::invalid_argument("treebolic q must exceed 1 + 1e-9");
}

HtPoint make_ht_point(const HtParams& ht, const TreePoint& w, double x) {
    return HtPoint{w, HPoint{x, std::pow(ht.q, w.real_height())}};
}

HtPoint make_ht_point(const HtParams& ht, const TreePoint& w, const HPoint& z) {
    double h = std::log(z.y) / std::log(ht.q);
    if (std::abs(h - w.real_height()) > 1e-9)
        throw IncidenceViolation("tree height and log_q(Im z) disagree");
    return HtPoint{w, z};
}

BEl make_b_element(const LampEl& g1, const AffHEl& g2) {
    if (g1.pos != g2.n)
        throw std::invalid_argument("B(p,q) element needs matching tree and plane shifts");
    return BEl{g1, g2};
}

namespace {

// w1 lies (weakly) above w2 on the geodesic from the reference end through w2.
bool above(const TreePoint& w1, const TreePoint& w2) {
    if (w1.is_vertex) return is_ancestor_or_equal(w1.parent, w2.upper());
    if (!w2.is_vertex && w1.parent == w2.parent && w1.child == w2.child)
        return w1.kappa <= w2.kappa;
    return is_ancestor_or_equal(w1.child, w2.upper());
}

} // namespace

bool same_sheet(const TreePoint& w1, const TreePoint& w2) {
    return above(w1, w2) || above(w2, w1);
}

TreePoint tree_point_confluent(const TreePoint& w1, const TreePoint& w2) {
    if (above(w1, w2)) return w1;
    if (above(w2, w1)) return w2;
    return TreePoint::at_vertex(confluent_ancestor(w1.lower(), w2.lower()));
}

double tree_point_distance(const TreePoint& w1, const TreePoint& w2) {
    if (same_sheet(w1, w2)) return std::abs(w1.real_height() - w2.real_height());
    TreePoint v = tree_point_confluent(w1, w2);
    return (w1.real_height() - v.real_height()) + (w2.real_height() - v.real_height());
}

namespace {

double crossing_length(const HPoint& z1, const HPoint& z2, double line_y, double x) {
    HPoint cross{x, line_y};
    return dist_h(z1, cross) + dist_h(cross, z2);
}

// Coarse grid multi-start plus golden-section refinement; ties resolve
// toward the smaller crossing coordinate.
double minimise_over_line(const HPoint& z1, const HPoint& z2, double line_y) {
    double spread = dist_h(z1, z2) * line_y + 1.0;
    double lo = std::min(z1.x, z2.x) - spread;
    double hi = std::max(z1.x, z2.x) + spread;
    constexpr int kGrid = 64;
    double best_x = lo;
    double best_f = crossing_length(z1, z2, line_y, lo);
    for (int i = 1; i <= kGrid; ++i) {
        double x = lo + (hi - lo) * i / kGrid;
        double f = crossing_length(z1, z2, line_y, x);
        if (f < best_f) {
            best_f = f;
            best_x = x;
        }
    }
    double step = (hi - lo) / kGrid;
    double a = best_x - step;
    double b = best_x + step;
    constexpr double kInvPhi = 0.6180339887498949;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = crossing_length(z1, z2, line_y, c);
    double fd = crossing_length(z1, z2, line_y, d);
    while (b - a > 1e-9) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = crossing_length(z1, z2, line_y, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = crossing_length(z1, z2, line_y, d);
        }
    }
    return crossing_length(z1, z2, line_y, 0.5 * (a + b));
}

} // namespace

double ht_dist(const HtParams& ht, const HtPoint& a, const HtPoint& b) {
    if (same_sheet(a.w, b.w)) return dist_h(a.z, b.z);
    TreePoint v = tree_point_confluent(a.w, b.w);
    double line_y = std::pow(ht.q, v.real_height());
    return minimise_over_line(a.z, b.z, line_y);
}

BoundReport bound_check(const HtParams& ht, const HtPoint& a, const HtPoint& b) {
    BoundReport r{};
    r.ht_distance = ht_dist(ht, a, b);
    double dt = tree_point_distance(a.w, b.w);
    double dh = dist_h(a.z, b.z);
    r.middle_literal = dh + std::log(ht.q) * dt - std::abs(a.z.y - b.z.y);
    r.middle_log_variant = dh + std::log(ht.q) * dt - std::abs(std::log(a.z.y) - std::log(b.z.y));
    r.two_delta = 2.0 * std::log(1.0 + std::sqrt(2.0));
    constexpr double kSlack = 1e-8;
    r.literal_lower_ok = r.ht_distance <= r.middle_literal + kSlack;
    r.literal_upper_ok = r.middle_literal <= r.ht_distance + r.two_delta + kSlack;
    r.log_lower_ok = r.ht_distance <= r.middle_log_variant + kSlack;
    r.log_upper_ok = r.middle_log_variant <= r.ht_distance + r.two_delta + kSlack;
    return r;
}

HtPoint b_act(const HtParams& ht, const BEl& g, const HtPoint& pt) {
    TreePoint w;
    if (pt.w.is_vertex) {
        w = TreePoint::at_vertex(act_on_tree(g.g1, pt.w.parent));
    } else {
        w = TreePoint::on_edge(act_on_tree(g.g1, pt.w.parent), act_on_tree(g.g1, pt.w.child),
                               pt.w.kappa);
    }
    HPoint z = affh_apply(g.g2, pt.z, ht.q);
    return make_ht_point(ht, w, z); // validates the incidence invariant
}

BEl b_compose(const HtParams& ht, const BEl& g, const BEl& h) {
    return BEl{compose(g.g1, h.g1), affh_compose(g.g2, h.g2, ht.q)};
}

double b_modular(const HtParams& ht, const BEl& g) {
    return std::pow(static_cast<double>(ht.p) / ht.q, g.g1.pos);
}

} // namespace horo
