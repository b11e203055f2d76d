#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <deque>
#include <map>
#include <random>

#include "horo/dl.hpp"

using namespace horo;

namespace {

// Local early-exit BFS, kept separate from the library's oracle on purpose.
int bfs_oracle(const DlParams& dl, const DlVertex& u, const DlVertex& v, int cap = 12) {
    if (u == v) return 0;
    std::map<std::vector<int>, int> dist;
    dist[dl_key(u)] = 0;
    std::deque<DlVertex> queue{u};
    while (!queue.empty()) {
        DlVertex cur = queue.front();
        queue.pop_front();
        int d = dist.at(dl_key(cur));
        if (d >= cap) continue;
        for (const DlVertex& w : neighbors(dl, cur))
            if (dist.emplace(dl_key(w), d + 1).second) {
                if (w == v) return d + 1;
                queue.push_back(w);
            }
    }
    return -1;
}

} // namespace

TEST_CASE("vertices must balance the two levels") {
    CHECK_THROWS_AS(make_dl_vertex(make_vertex({}, 1), make_vertex({}, 1)),
                    std::invalid_argument);
    DlVertex o = dl_origin();
    CHECK(o.x1.level == 0);
    CHECK(o.x2.level == 0);
}

TEST_CASE("neighbor structure") {
    DlParams dl(2, 3);
    DlVertex o = dl_origin();
    std::vector<DlVertex> ns = neighbors(dl, o);
    CHECK(ns.size() == 5);
    for (const DlVertex& n : ns) {
        CHECK(n.x1.level + n.x2.level == 0);
        CHECK(formula_dist(o, n) == 1);
        // adjacency is symmetric
        std::vector<DlVertex> back = neighbors(dl, n);
        CHECK(std::find(back.begin(), back.end(), o) != back.end());
    }
}

TEST_CASE("radius-1 ball of DL(2,2) has 5 vertices and 4 edges") {
    BfsBall ball = bfs_ball(DlParams(2, 2), dl_origin(), 1);
    CHECK(ball.vertices.size() == 5);
    CHECK(ball.edges.size() == 4);
}

TEST_CASE("BFS cap guards runaway enumerations") {
    CHECK_THROWS_AS(bfs_ball(DlParams(2, 2), dl_origin(), 9), RadiusTooLarge);
    CHECK_NOTHROW(bfs_ball(DlParams(2, 2), dl_origin(), 9, 10));
}

TEST_CASE("every enumerated vertex has degree p+q") {
    for (auto [p, q] : {std::pair<int, int>{2, 2}, {2, 3}}) {
        DlParams dl(p, q);
        BfsBall ball = bfs_ball(dl, dl_origin(), 3);
        for (const DlVertex& v : ball.vertices)
            CHECK(neighbors(dl, v).size() == static_cast<std::size_t>(p + q));
    }
}

TEST_CASE("distance formula vanishes on the diagonal off level zero") {
    DlVertex v = make_dl_vertex(make_vertex({1}, 1), make_vertex({}, -1));
    CHECK(formula_dist(v, v) == 0);
}

TEST_CASE("distance formula matches BFS") {
    for (auto [p, q] : {std::pair<int, int>{2, 2}, {2, 3}}) {
        DlParams dl(p, q);
        BfsBall ball = bfs_ball(dl, dl_origin(), 3);
        for (const DlVertex& v : ball.vertices)
            CHECK(formula_dist(dl_origin(), v) == ball.distance_of(v));
        std::mt19937_64 rng(41u);
        std::uniform_int_distribution<std::size_t> pick(0, ball.vertices.size() - 1);
        for (int i = 0; i < 40; ++i) {
            const DlVertex& u = ball.vertices[pick(rng)];
            const DlVertex& v = ball.vertices[pick(rng)];
            CHECK(formula_dist(u, v) == bfs_oracle(dl, u, v));
        }
    }
}

TEST_CASE("complete bipartite witness") {
    for (auto [p, q] : {std::pair<int, int>{2, 2}, {2, 3}, {3, 2}}) {
        KpqWitness w = kpq_witness(DlParams(p, q), dl_origin());
        CHECK(w.set_a.size() == static_cast<std::size_t>(q));
        CHECK(w.set_b.size() == static_cast<std::size_t>(p));
        CHECK(w.complete_bipartite);
        CHECK(w.b_is_neighbor_set);
    }
}

TEST_CASE("group elements act by graph automorphisms") {
    DlParams dl(2, 2);
    std::mt19937_64 rng(42u);
    BfsBall ball = bfs_ball(dl, dl_origin(), 3);
    std::uniform_int_distribution<std::size_t> pick(0, ball.vertices.size() - 1);
    for (int i = 0; i < 30; ++i) {
        const DlVertex& u = ball.vertices[pick(rng)];
        const DlVertex& v = ball.vertices[pick(rng)];
        AEl g = a_transporter(dl, u, v);
        CHECK(a_act(g, u) == v);
        // adjacency is preserved
        for (const DlVertex& n : neighbors(dl, u)) {
            DlVertex gn = a_act(g, n);
            std::vector<DlVertex> ns = neighbors(dl, v);
            CHECK(std::find(ns.begin(), ns.end(), gn) != ns.end());
        }
        const DlVertex& w = ball.vertices[pick(rng)];
        AEl h = a_transporter(dl, v, w);
        CHECK(a_act(a_compose(h, g), u) == a_act(h, a_act(g, u)));
    }
}

TEST_CASE("mismatched shifts are rejected") {
    CHECK_THROWS_AS(make_a_element(LampEl{make_config(2, {}), 1},
                                   LampEl{make_config(2, {}), 1}),
                    std::invalid_argument);
}

TEST_CASE("finite-horizon boundary classification") {
    DlParams dl(2, 2);
    std::vector<DlVertex> down{dl_origin()};
    std::vector<DlVertex> up{dl_origin()};
    std::vector<DlVertex> wobble{dl_origin()};
    for (int i = 0; i < 12; ++i) {
        const DlVertex& d = down.back();
        down.push_back(DlVertex{child_vertex(d.x1, 0), predecessor(d.x2)});
        const DlVertex& u = up.back();
        up.push_back(DlVertex{predecessor(u.x1), child_vertex(u.x2, 0)});
        const DlVertex& w = wobble.back();
        if (i % 2 == 0)
            wobble.push_back(DlVertex{child_vertex(w.x1, 1), predecessor(w.x2)});
        else
            wobble.push_back(DlVertex{predecessor(w.x1), child_vertex(w.x2, 1)});
    }
    auto cd = classify_limit(down);
    REQUIRE(cd.has_value());
    CHECK(cd->kind == DlBoundaryPoint::Kind::LowerEndOmega2);
    auto cu = classify_limit(up);
    REQUIRE(cu.has_value());
    CHECK(cu->kind == DlBoundaryPoint::Kind::Omega1LowerEnd);
    CHECK(!classify_limit(wobble).has_value());
}

TEST_CASE("modular candidate is multiplicative and trivial for p=q") {
    DlParams dl(2, 3);
    AEl g = a_transporter(dl, dl_origin(),
                          DlVertex{make_vertex({1}, 1), make_vertex({}, -1)});
    AEl h = a_transporter(dl, dl_origin(),
                          DlVertex{make_vertex({}, -2), make_vertex({1, 2}, 2)});
    CHECK(modular_candidate(dl, a_compose(g, h)) ==
          doctest::Approx(modular_candidate(dl, g) * modular_candidate(dl, h)));
    DlParams square(3, 3);
    CHECK(modular_candidate(square, g) == doctest::Approx(1.0));
    AEl id = a_transporter(dl, dl_origin(), dl_origin());
    CHECK(modular_candidate(dl, id) == doctest::Approx(1.0));
}
