#include "horo/dl.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace horo {

DlParams::DlParams(int p_, int q_) : p(p_), q(q_) {
    if (p < 2 || q < 2) throw std::invalid_argument("DL parameters must be >= 2");
}

DlVertex make_dl_vertex(const TreeVertex& x1, const TreeVertex& x2) {
    if (x1.level + x2.level != 0)
        throw std::invalid_argument("DL vertex needs opposite Busemann levels");
    return DlVertex{x1, x2};
}

DlVertex dl_origin() { return DlVertex{make_vertex({}, 0), make_vertex({}, 0)}; }

std::vector<int> dl_key(const DlVertex& v) {
    std::vector<int> key;
    key.reserve(v.x1.digits.size() + v.x2.digits.size() + 3);
    key.push_back(v.x1.level);
    key.push_back(static_cast<int>(v.x1.digits.size()));
    for (auto d : v.x1.digits) key.push_back(d);
    key.push_back(static_cast<int>(v.x2.digits.size()));
    for (auto d : v.x2.digits) key.push_back(d);
    return key;
}

bool dl_vertex_less(const DlVertex& a, const DlVertex& b) {
    return dl_key(a) < dl_key(b);
}

AEl make_a_element(const LampEl& g1, const LampEl& g2) {
    if (g1.pos + g2.pos != 0)
        throw std::invalid_argument("A(p,q) element needs opposite level shifts");
    return AEl{g1, g2};
}

std::vector<DlVertex> neighbors(const DlParams& dl, const DlVertex& v) {
    std::vector<DlVertex> out;
    out.reserve(static_cast<std::size_t>(dl.p + dl.q));
    TreeVertex pre2 = predecessor(v.x2);
    for (const TreeVertex& s : successors(TreeParams(dl.p), v.x1))
        out.push_back(DlVertex{s, pre2});
    TreeVertex pre1 = predecessor(v.x1);
    for (const TreeVertex& s : successors(TreeParams(dl.q), v.x2))
        out.push_back(DlVertex{pre1, s});
    return out;
}

int BfsBall::distance_of(const DlVertex& v) const {
    auto it = distance.find(dl_key(v));
    if (it == distance.end()) throw std::out_of_range("vertex outside the enumerated ball");
    return it->second;
}

bool BfsBall::contains(const DlVertex& v) const {
    return distance.find(dl_key(v)) != distance.end();
}

BfsBall bfs_ball(const DlParams& dl, const DlVertex& origin, int radius, int cap) {
    if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
    if (radius > cap) throw RadiusTooLarge("BFS radius exceeds the configured cap");
    BfsBall ball;
    ball.distance[dl_key(origin)] = 0;
    std::vector<DlVertex> frontier{origin};
    ball.vertices.push_back(origin);
    for (int r = 1; r <= radius; ++r) {
        std::vector<DlVertex> next;
        for (const DlVertex& v : frontier) {
            for (const DlVertex& n : neighbors(dl, v)) {
                auto key = dl_key(n);
                if (ball.distance.emplace(std::move(key), r).second) {
                    next.push_back(n);
                    ball.vertices.push_back(n);
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(ball.vertices.begin(), ball.vertices.end(), dl_vertex_less);
    // edges inside the ball, by sorted index
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < ball.vertices.size(); ++i)
        index[dl_key(ball.vertices[i])] = i;
    for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
        for (const DlVertex& n : neighbors(dl, ball.vertices[i])) {
            auto it = index.find(dl_key(n));
            if (it != index.end() && i < it->second)
                ball.edges.emplace_back(i, it->second);
        }
    }
    std::sort(ball.edges.begin(), ball.edges.end());
    return ball;
}

int formula_dist(const DlVertex& u, const DlVertex& v) {
    return tree_distance(u.x1, v.x1) + tree_distance(u.x2, v.x2)
         - std::abs(u.x1.level - v.x1.level);
}

KpqWitness kpq_witness(const DlParams& dl, const DlVertex& o) {
    KpqWitness w;
    TreeVertex o2pre = predecessor(o.x2);
    for (const TreeVertex& s : successors(TreeParams(dl.q), o2pre))
        w.set_a.push_back(DlVertex{o.x1, s});
    for (const TreeVertex& s : successors(TreeParams(dl.p), o.x1))
        w.set_b.push_back(DlVertex{s, o2pre});

    auto adjacent = [&](const DlVertex& u, const DlVertex& v) {
        auto ns = neighbors(dl, u);
        return std::find(ns.begin(), ns.end(), v) != ns.end();
    };
    w.complete_bipartite = true;
    for (const DlVertex& a : w.set_a)
        for (const DlVertex& b : w.set_b)
            if (!adjacent(a, b)) w.complete_bipartite = false;
    // B must be exactly the neighbors of A in the upper horoplane
    std::vector<std::vector<int>> upper_neighbors;
    for (const DlVertex& a : w.set_a)
        for (const DlVertex& n : neighbors(dl, a))
            if (n.x1.level == o.x1.level + 1) upper_neighbors.push_back(dl_key(n));
    std::sort(upper_neighbors.begin(), upper_neighbors.end());
    upper_neighbors.erase(std::unique(upper_neighbors.begin(), upper_neighbors.end()),
                          upper_neighbors.end());
    std::vector<std::vector<int>> b_keys;
    for (const DlVertex& b : w.set_b) b_keys.push_back(dl_key(b));
    std::sort(b_keys.begin(), b_keys.end());
    w.b_is_neighbor_set = (upper_neighbors == b_keys);
    return w;
}

DlVertex a_act(const AEl& g, const DlVertex& v) {
    return DlVertex{act_on_tree(g.g1, v.x1), act_on_tree(g.g2, v.x2)};
}

AEl a_compose(const AEl& g, const AEl& h) {
    return AEl{compose(g.g1, h.g1), compose(g.g2, h.g2)};
}

AEl a_transporter(const DlParams& dl, const DlVertex& u, const DlVertex& v) {
    return AEl{transporter(dl.p, u.x1, v.x1), transporter(dl.q, u.x2, v.x2)};
}

namespace {

enum class Trend { Constant, ToOmega, ToLowerEnd, None };

Trend coordinate_trend(const std::vector<TreeVertex>& xs) {
    std::size_t n = xs.size();
    std::size_t start = n / 2;
    const TreeVertex& base = xs.front();
    const TreeVertex& last = xs.back();

    bool constant = true;
    for (std::size_t i = start; i < n; ++i)
        if (xs[i] != last) constant = false;
    if (constant) return Trend::Constant;

    bool descending = true;
    for (std::size_t i = start; i + 1 < n; ++i)
        if (xs[i].level > xs[i + 1].level || !is_ancestor_or_equal(xs[i], last))
            descending = false;
    if (descending && last.level - xs[start].level >= 2) return Trend::ToLowerEnd;

    bool escaping = true;
    int prev = confluent_ancestor(xs[start], base).level;
    int first = prev;
    for (std::size_t i = start + 1; i < n; ++i) {
        int cur = confluent_ancestor(xs[i], base).level;
        if (cur > prev) escaping = false;
        prev = cur;
    }
    if (escaping && first - prev >= 2) return Trend::ToOmega;

    return Trend::None;
}

} // namespace

std::optional<DlBoundaryPoint> classify_limit(const std::vector<DlVertex>& ray) {
    if (ray.size() < 2) throw std::invalid_argument("classify_limit needs at least 2 points");
    std::vector<TreeVertex> xs1, xs2;
    for (const DlVertex& v : ray) {
        xs1.push_back(v.x1);
        xs2.push_back(v.x2);
    }
    Trend t1 = coordinate_trend(xs1);
    Trend t2 = coordinate_trend(xs2);
    using K = DlBoundaryPoint::Kind;
    if (t1 == Trend::ToLowerEnd && t2 == Trend::ToOmega)
        return DlBoundaryPoint{K::LowerEndOmega2, TreeEnd::lower_zero_ray(xs1.back()), {}};
    if (t1 == Trend::Constant && t2 == Trend::ToOmega)
        return DlBoundaryPoint{K::VertexOmega2, {}, xs1.back()};
    if (t1 == Trend::ToOmega && t2 == Trend::ToLowerEnd)
        return DlBoundaryPoint{K::Omega1LowerEnd, TreeEnd::lower_zero_ray(xs2.back()), {}};
    if (t1 == Trend::ToOmega && t2 == Trend::Constant)
        return DlBoundaryPoint{K::Omega1Vertex, {}, xs2.back()};
    if (t1 == Trend::ToOmega && t2 == Trend::ToOmega)
        return DlBoundaryPoint{K::Omega1Omega2, {}, {}};
    return std::nullopt;
}

double modular_candidate(const DlParams& dl, const AEl& g) {
    return std::pow(static_cast<double>(dl.p) / static_cast<double>(dl.q), g.g1.pos);
}

} // namespace horo
