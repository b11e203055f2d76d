#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "horo/errors.hpp"
#include "horo/tree.hpp"
#include "horo/wreath.hpp"

namespace horo {

struct DlParams {
    int p;
    int q;
    DlParams(int p_, int q_);
};

/// Vertex (x1, x2) of DL(p,q) with h(x1) + h(x2) = 0.
struct DlVertex {
    TreeVertex x1; // in T_p
    TreeVertex x2; // in T_q

    bool operator==(const DlVertex&) const = default;
};

DlVertex make_dl_vertex(const TreeVertex& x1, const TreeVertex& x2);
DlVertex dl_origin();
bool dl_vertex_less(const DlVertex& a, const DlVertex& b);

/// Element of the transitive group: a pair of lamplighter tree
/// automorphisms with opposite level shifts.
struct AEl {
    LampEl g1; // over Z_p
    LampEl g2; // over Z_q
};

AEl make_a_element(const LampEl& g1, const LampEl& g2);

struct DlBoundaryPoint {
    // exactly one of the five cases of the "filled 8"
    enum class Kind { LowerEndOmega2, VertexOmega2, Omega1LowerEnd, Omega1Vertex, Omega1Omega2 };
    Kind kind;
    std::optional<TreeEnd> end;     // for the lower-end cases
    std::optional<TreeVertex> vertex; // for the vertex cases
};

struct BfsBall {
    std::vector<DlVertex> vertices;                       // canonical order
    std::vector<std::pair<std::size_t, std::size_t>> edges; // index pairs, i < j
    std::map<std::vector<int>, int> distance;             // by canonical key
    int distance_of(const DlVertex& v) const;
    bool contains(const DlVertex& v) const;
};

/// Canonical integer key used for deterministic ordering and lookups.
std::vector<int> dl_key(const DlVertex& v);

std::vector<DlVertex> neighbors(const DlParams& dl, const DlVertex& v);

inline constexpr int kDefaultBfsCap = 8;
BfsBall bfs_ball(const DlParams& dl, const DlVertex& origin, int radius, int cap = kDefaultBfsCap);

/// Bertacchi's distance with the corrected last term |h(x1) - h(y1)|.
int formula_dist(const DlVertex& u, const DlVertex& v);

/// The K_{p,q} subgraph of the non-Cayley proof: A in the horoplane of o,
/// B = all neighbors of A one horoplane up.
struct KpqWitness {
    std::vector<DlVertex> set_a;
    std::vector<DlVertex> set_b;
    bool complete_bipartite = false;
    bool b_is_neighbor_set = false;
};
KpqWitness kpq_witness(const DlParams& dl, const DlVertex& o);

DlVertex a_act(const AEl& g, const DlVertex& v);
AEl a_compose(const AEl& g, const AEl& h);
AEl a_transporter(const DlParams& dl, const DlVertex& u, const DlVertex& v);

/// Finite-horizon classification of a sequence's boundary limit.
std::optional<DlBoundaryPoint> classify_limit(const std::vector<DlVertex>& ray);

/// Convention: (p/q)^{Phi(g1)} (the survey's printed exponent base is
/// defective; either base is multiplicative and trivial iff p = q).
double modular_candidate(const DlParams& dl, const AEl& g);

} // namespace horo
