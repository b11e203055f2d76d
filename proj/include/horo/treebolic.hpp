#pragma once

#include "horo/errors.hpp"
#include "horo/hyperbolic.hpp"
#include "horo/tree.hpp"
#include "horo/wreath.hpp"

namespace horo {

struct HtParams {
    int p;
    double q;
    HtParams(int p_, double q_);
};

/// Point (w, z) of treebolic space: h(w) = log_q(Im z), where h is the
/// real-valued tree height of the metric tree.
struct HtPoint {
    TreePoint w;
    HPoint z;
};

/// Builds the point over w with the given horizontal coordinate; Im z is
/// forced by the incidence relation.
HtPoint make_ht_point(const HtParams& ht, const TreePoint& w, double x);
/// Validating constructor from raw data (1e-9 incidence tolerance).
HtPoint make_ht_point(const HtParams& ht, const TreePoint& w, const HPoint& z);

/// Isometry of HT(p,q): lamplighter tree part with shift m, affine plane
/// part with the same exponent n = m.
struct BEl {
    LampEl g1;
    AffHEl g2;
};

BEl make_b_element(const LampEl& g1, const AffHEl& g2);

/// True iff the two tree points are comparable in the ancestor order, i.e.
/// lie on a common geodesic toward the reference end.
bool same_sheet(const TreePoint& w1, const TreePoint& w2);

/// Confluent of two metric-tree points (the higher one when comparable).
TreePoint tree_point_confluent(const TreePoint& w1, const TreePoint& w2);

/// Geodesic distance in the metric tree.
double tree_point_distance(const TreePoint& w1, const TreePoint& w2);

/// The two-case treebolic metric; off-sheet pairs minimise over crossing
/// points on the bifurcation line of the confluent.
double ht_dist(const HtParams& ht, const HtPoint& a, const HtPoint& b);

/// Both readings of the comparison inequality around the exact metric.
struct BoundReport {
    double ht_distance;
    double middle_literal;      // ... - |Im z1 - Im z2|
    double middle_log_variant;  // ... - |log Im z1 - log Im z2|
    double two_delta;           // 2 log(1 + sqrt 2)
    bool literal_lower_ok;      // d_HT <= middle (literal)
    bool literal_upper_ok;      // middle <= d_HT + 2 delta (literal)
    bool log_lower_ok;
    bool log_upper_ok;
};
BoundReport bound_check(const HtParams& ht, const HtPoint& a, const HtPoint& b);

HtPoint b_act(const HtParams& ht, const BEl& g, const HtPoint& pt);
BEl b_compose(const HtParams& ht, const BEl& g, const BEl& h);
double b_modular(const HtParams& ht, const BEl& g);

} // namespace horo
