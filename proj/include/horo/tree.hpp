#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "horo/errors.hpp"

namespace horo {

/// Parameters of the homogeneous tree T_p (degree p+1, branching number p).
struct TreeParams {
    int p;
    explicit TreeParams(int branching);
};

/// Vertex of T_p in "generations" coordinates: a finitely supported digit
/// sequence sigma(n), n <= 0, plus the horocycle index (Busemann level).
/// digits stores the nonzero-prefix-stripped tail of sigma; the last entry
/// is sigma(0), the label of the edge entering the vertex from its
/// predecessor. Canonical form has no leading zeros.
struct TreeVertex {
    std::vector<std::uint8_t> digits;
    int level = 0;

    bool operator==(const TreeVertex&) const = default;
};

/// Deterministic total order for exports and test stability:
/// level first, then digit count, then lexicographic digits.
bool tree_vertex_less(const TreeVertex& a, const TreeVertex& b);

TreeVertex make_vertex(std::vector<std::uint8_t> digits, int level);

/// Point of the metric tree: a vertex, or an interior point of the edge
/// [parent, child] at offset kappa in [0,1) below the parent.
struct TreePoint {
    TreeVertex parent;
    TreeVertex child;   // equal to parent when the point is a vertex
    double kappa = 0.0;
    bool is_vertex = true;

    static TreePoint at_vertex(const TreeVertex& v);
    static TreePoint on_edge(const TreeVertex& parent, const TreeVertex& child, double kappa);

    double real_height() const { return parent.level + kappa; }
    const TreeVertex& upper() const { return parent; }
    const TreeVertex& lower() const { return is_vertex ? parent : child; }

    bool operator==(const TreePoint&) const = default;
};

/// End of T_p: the reference end at the top, or a lower end described by an
/// anchor vertex continued downward with all-zero digits. Canonical anchors
/// carry no trailing zeros (the all-zero ray is anchored at ([], 0)).
struct TreeEnd {
    bool is_omega = true;
    TreeVertex anchor;

    static TreeEnd omega();
    static TreeEnd lower_zero_ray(const TreeVertex& anchor);

    bool operator==(const TreeEnd&) const = default;
};

using TreeTarget = std::variant<TreeVertex, TreeEnd>;

/// Witness of a non-trivial vertex stabiliser: swap the subtrees hanging
/// from two chosen successors of the apex.
struct SubtreeSwap {
    TreeVertex apex;
    std::uint8_t branch_a;
    std::uint8_t branch_b;
};

TreeVertex predecessor(const TreeVertex& v);
std::vector<TreeVertex> successors(const TreeParams& t, const TreeVertex& v);
TreeVertex child_vertex(const TreeVertex& v, std::uint8_t digit);

/// Digit of the edge entering the ancestor of v at the given level
/// (implicit 0 beyond the stored prefix). Requires lvl <= v.level.
std::uint8_t digit_at_level(const TreeVertex& v, int lvl);
TreeVertex ancestor_at(const TreeVertex& v, int lvl);
bool is_ancestor_or_equal(const TreeVertex& u, const TreeVertex& v);

/// Maximal-level common ancestor x curlywedge y (confluent with respect to
/// the reference end).
TreeVertex confluent_ancestor(const TreeVertex& x, const TreeVertex& y);
int tree_distance(const TreeVertex& x, const TreeVertex& y);

/// d(x, x^y) - d(o, x^y); equals h(x) - h(o) by the Busemann limit formula.
int busemann_limit_check(const TreeVertex& x, const TreeVertex& o);

/// Last common vertex of the geodesics from o toward w and toward z.
/// Throws IdenticalEnds when w = z are boundary points.
TreeVertex confluent_from_root(const TreeTarget& w, const TreeTarget& z, const TreeVertex& o);

/// theta(w,z) = exp(-d(o, w^z)), 0 when w = z.
double ultrametric(const TreeTarget& w, const TreeTarget& z, const TreeVertex& o);

/// Neighbors in the tree plus the added [x, (x^-)^-] edges:
/// predecessor, grandmother, p successors, p^2 grandchildren.
std::vector<TreeVertex> grandmother_neighbors(const TreeParams& t, const TreeVertex& v);
bool grandmother_adjacent(const TreeVertex& u, const TreeVertex& v);
bool tree_adjacent(const TreeVertex& u, const TreeVertex& v);

/// Involutive automorphism exchanging the branch_a/branch_b subtrees of the
/// apex; fixes the apex and every non-descendant.
TreeVertex apply_swap(const SubtreeSwap& s, const TreeVertex& v);

} // namespace horo
