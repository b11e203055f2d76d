#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "horo/treebolic.hpp"

using namespace horo;

namespace {

double grid_oracle(const HPoint& z1, const HPoint& z2, double line_y) {
    double lo = std::min(z1.x, z2.x) - 0.5;
    double hi = std::max(z1.x, z2.x) + 0.5;
    double best = 1e300;
    for (int i = 0; i <= 20000; ++i) {
        double x = lo + (hi - lo) * i / 20000;
        HPoint c{x, line_y};
        best = std::min(best, dist_h(z1, c) + dist_h(c, z2));
    }
    return best;
}

TreePoint random_tree_point(std::mt19937_64& rng, int p) {
    std::uniform_int_distribution<int> lvl(-2, 2), len(0, 3), digit(0, p - 1), coin(0, 1);
    std::uniform_real_distribution<double> kap(0.05, 0.95);
    std::vector<std::uint8_t> d;
    int n = len(rng);
    for (int i = 0; i < n; ++i) d.push_back(static_cast<std::uint8_t>(digit(rng)));
    TreeVertex u = make_vertex(std::move(d), lvl(rng));
    if (coin(rng) == 0) return TreePoint::at_vertex(u);
    return TreePoint::on_edge(u, child_vertex(u, static_cast<std::uint8_t>(digit(rng))),
                              kap(rng));
}

LampEl random_lamp(std::mt19937_64& rng, int p) {
    std::uniform_int_distribution<int> pos(-2, 2), idx(-3, 3), val(0, p - 1), count(0, 2);
    std::map<int, int> support;
    int n = count(rng);
    for (int i = 0; i < n; ++i) support[idx(rng)] = val(rng);
    return LampEl{make_config(p, support), pos(rng)};
}

} // namespace

TEST_CASE("incidence is forced or validated") {
    HtParams ht(2, 2.0);
    TreePoint w = TreePoint::at_vertex(make_vertex({1}, 1));
    HtPoint a = make_ht_point(ht, w, 0.25);
    CHECK(a.z.y == doctest::Approx(2.0));
    CHECK_NOTHROW(make_ht_point(ht, w, HPoint{0.0, 2.0}));
    CHECK_THROWS_AS(make_ht_point(ht, w, HPoint{0.0, 3.0}), IncidenceViolation);
    // interior edge points sit at fractional heights
    TreePoint e = TreePoint::on_edge(make_vertex({1}, 1), make_vertex({1, 1}, 2), 0.5);
    CHECK(make_ht_point(ht, e, 0.0).z.y == doctest::Approx(std::pow(2.0, 1.5)));
}

TEST_CASE("sheet relation") {
    TreePoint root = TreePoint::at_vertex(make_vertex({}, 0));
    TreePoint below = TreePoint::at_vertex(make_vertex({1}, 1));
    TreePoint other = TreePoint::at_vertex(make_vertex({}, 1)); // zero branch
    CHECK(same_sheet(root, root));
    CHECK(same_sheet(root, below));
    CHECK(!same_sheet(below, other));
    CHECK(tree_point_confluent(below, other).parent == make_vertex({}, 0));
}

TEST_CASE("metric-tree distances") {
    TreePoint a = TreePoint::at_vertex(make_vertex({1}, 1));
    TreePoint b = TreePoint::at_vertex(make_vertex({}, 1));
    CHECK(tree_point_distance(a, b) == doctest::Approx(2.0));
    TreePoint e = TreePoint::on_edge(make_vertex({1}, 1), make_vertex({1, 0}, 2), 0.25);
    CHECK(tree_point_distance(a, e) == doctest::Approx(0.25));
    CHECK(tree_point_distance(e, b) == doctest::Approx(2.25));
}

TEST_CASE("same-sheet pairs use the plane metric") {
    HtParams ht(2, 2.0);
    HtPoint a = make_ht_point(ht, TreePoint::at_vertex(make_vertex({}, 0)), -1.0);
    HtPoint b = make_ht_point(ht, TreePoint::at_vertex(make_vertex({}, 2)), 2.0);
    CHECK(ht_dist(ht, a, b) == doctest::Approx(dist_h(a.z, b.z)));
    CHECK(ht_dist(ht, a, a) == doctest::Approx(0.0));
}

TEST_CASE("split sheets at height zero: symmetric worked example") {
    HtParams ht(2, 2.0);
    HtPoint a = make_ht_point(ht, TreePoint::at_vertex(make_vertex({}, 1)), -1.0);
    HtPoint b = make_ht_point(ht, TreePoint::at_vertex(make_vertex({1}, 1)), 1.0);
    double expected = 2.0 * dist_h(HPoint{-1.0, 2.0}, HPoint{0.0, 1.0});
    CHECK(ht_dist(ht, a, b) == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("case-2 minimiser agrees with a dense grid") {
    HtParams ht(2, 2.0);
    std::mt19937_64 rng(51u);
    std::uniform_real_distribution<double> ux(-3.0, 3.0);
    std::uniform_int_distribution<int> lvl(-1, 1), extra(0, 2), digit(0, 1);
    for (int i = 0; i < 15; ++i) {
        TreeVertex apex = make_vertex({}, lvl(rng));
        TreeVertex u1 = child_vertex(apex, 0);
        TreeVertex u2 = child_vertex(apex, 1);
        for (int j = extra(rng); j > 0; --j)
            u1 = child_vertex(u1, static_cast<std::uint8_t>(digit(rng)));
        HtPoint a = make_ht_point(ht, TreePoint::at_vertex(u1), ux(rng));
        HtPoint b = make_ht_point(ht, TreePoint::at_vertex(u2), ux(rng));
        double d = ht_dist(ht, a, b);
        double g = grid_oracle(a.z, b.z, std::pow(ht.q, apex.level));
        CHECK(std::abs(d - g) <= 1e-6);
    }
}

TEST_CASE("metric axioms on random pairs") {
    HtParams ht(2, 2.0);
    std::mt19937_64 rng(52u);
    std::uniform_real_distribution<double> ux(-3.0, 3.0);
    for (int i = 0; i < 100; ++i) {
        HtPoint a = make_ht_point(ht, random_tree_point(rng, 2), ux(rng));
        HtPoint b = make_ht_point(ht, random_tree_point(rng, 2), ux(rng));
        HtPoint c = make_ht_point(ht, random_tree_point(rng, 2), ux(rng));
        double ab = ht_dist(ht, a, b);
        CHECK(ab == doctest::Approx(ht_dist(ht, b, a)).epsilon(1e-9));
        CHECK(ab >= 0.0);
        CHECK(ht_dist(ht, a, c) <= ab + ht_dist(ht, b, c) + 1e-8);
    }
}

TEST_CASE("comparison bound: log variant holds, coincident points trivially") {
    HtParams ht(2, 2.0);
    HtPoint a = make_ht_point(ht, TreePoint::at_vertex(make_vertex({1}, 1)), 0.5);
    BoundReport same = bound_check(ht, a, a);
    CHECK(same.ht_distance == doctest::Approx(0.0));
    CHECK(same.middle_literal == doctest::Approx(0.0));
    CHECK(same.two_delta == doctest::Approx(2.0 * std::log(1.0 + std::sqrt(2.0))));
    CHECK(same.log_lower_ok);
    CHECK(same.log_upper_ok);

    std::mt19937_64 rng(53u);
    std::uniform_real_distribution<double> ux(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        HtPoint u = make_ht_point(ht, random_tree_point(rng, 2), ux(rng));
        HtPoint v = make_ht_point(ht, random_tree_point(rng, 2), ux(rng));
        BoundReport r = bound_check(ht, u, v);
        CHECK(r.log_lower_ok);
        CHECK(r.log_upper_ok);
    }
}

TEST_CASE("isometry group acts by isometries") {
    HtParams ht(2, 2.0);
    std::mt19937_64 rng(54u);
    std::uniform_real_distribution<double> ux(-3.0, 3.0), ub(-2.0, 2.0);
    for (int i = 0; i < 60; ++i) {
        LampEl g1 = random_lamp(rng, 2);
        BEl g = make_b_element(g1, AffHEl{g1.pos, ub(rng)});
        HtPoint a = make_ht_point(ht, random_tree_point(rng, 2), ux(rng));
        HtPoint b = make_ht_point(ht, random_tree_point(rng, 2), ux(rng));
        HtPoint ga = b_act(ht, g, a);
        HtPoint gb = b_act(ht, g, b);
        CHECK(std::abs(ht_dist(ht, ga, gb) - ht_dist(ht, a, b)) <= 1e-8);
        // heights shift together by the common exponent
        CHECK(ga.w.real_height() == doctest::Approx(a.w.real_height() + g1.pos));
    }
}

TEST_CASE("identity acts trivially and composition is compatible") {
    HtParams ht(2, 2.0);
    std::mt19937_64 rng(55u);
    std::uniform_real_distribution<double> ux(-3.0, 3.0), ub(-2.0, 2.0);
    BEl id = make_b_element(lamp_identity(2), AffHEl{0, 0.0});
    for (int i = 0; i < 40; ++i) {
        HtPoint a = make_ht_point(ht, random_tree_point(rng, 2), ux(rng));
        HtPoint ia = b_act(ht, id, a);
        CHECK(ia.w == a.w);
        CHECK(ia.z.x == doctest::Approx(a.z.x));
        LampEl g1 = random_lamp(rng, 2);
        LampEl h1 = random_lamp(rng, 2);
        BEl g = make_b_element(g1, AffHEl{g1.pos, ub(rng)});
        BEl h = make_b_element(h1, AffHEl{h1.pos, ub(rng)});
        HtPoint lhs = b_act(ht, g, b_act(ht, h, a));
        HtPoint rhs = b_act(ht, b_compose(ht, g, h), a);
        CHECK(lhs.w == rhs.w);
        CHECK(lhs.z.x == doctest::Approx(rhs.z.x).epsilon(1e-10));
        CHECK(lhs.z.y == doctest::Approx(rhs.z.y).epsilon(1e-10));
    }
}

TEST_CASE("mismatched shifts are rejected; modular function") {
    CHECK_THROWS_AS(make_b_element(LampEl{make_config(2, {}), 1}, AffHEl{0, 0.0}),
                    std::invalid_argument);
    HtParams ht(2, 2.0);
    BEl g = make_b_element(LampEl{make_config(2, {}), 3}, AffHEl{3, 0.0});
    CHECK(b_modular(ht, g) == doctest::Approx(1.0)); // p = q = 2
    HtParams ht2(2, 4.0);
    CHECK(b_modular(ht2, g) == doctest::Approx(std::pow(0.5, 3)));
}
