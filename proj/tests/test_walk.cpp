#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "horo/walk.hpp"

using namespace horo;

TEST_CASE("default checkpoints are decades up to the horizon") {
    CHECK(default_checkpoints(10000) == std::vector<int>{10, 100, 1000, 10000});
    CHECK(default_checkpoints(500) == std::vector<int>{10, 100, 500});
    CHECK(default_checkpoints(7) == std::vector<int>{7});
}

TEST_CASE("encoding maps the identity to the origin and generators to neighbors") {
    CHECK(lamplighter_encode(lamp_identity(2)) == dl_origin());
    for (int p : {2, 3}) {
        DlVertex o = lamplighter_encode(lamp_identity(p));
        for (const LampEl& g : generators(p))
            CHECK(formula_dist(lamplighter_encode(g), o) == 1);
    }
}

TEST_CASE("encoding tracks generator words step by step") {
    std::mt19937_64 rng(81u);
    for (int p : {2, 3}) {
        std::vector<LampEl> gens = generators(p);
        std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
        LampEl cur = lamp_identity(p);
        DlVertex prev = lamplighter_encode(cur);
        for (int i = 0; i < 40; ++i) {
            cur = compose(cur, gens[pick(rng)]);
            DlVertex next = lamplighter_encode(cur);
            CHECK(next.x1.level + next.x2.level == 0);
            CHECK(formula_dist(prev, next) == 1);
            prev = next;
        }
    }
}

TEST_CASE("walk statistics are deterministic given a seed") {
    WalkConfig cfg;
    cfg.steps = 200;
    cfg.trials = 10;
    cfg.seed = 99;
    WalkStats a = srw_run(DlParams(2, 3), cfg);
    WalkStats b = srw_run(DlParams(2, 3), cfg);
    CHECK(a.checkpoints == b.checkpoints);
    CHECK(a.mean_distance == b.mean_distance);
    CHECK(a.half_width == b.half_width);
    CHECK(a.speed == b.speed);
    CHECK(a.return_frequency_even == b.return_frequency_even);

    WalkConfig other = cfg;
    other.seed = 100;
    WalkStats c = srw_run(DlParams(2, 3), other);
    CHECK(a.mean_distance != c.mean_distance);
}

TEST_CASE("statistics are well formed") {
    WalkConfig cfg;
    cfg.steps = 500;
    cfg.trials = 20;
    cfg.seed = 5;
    for (auto [p, q] : {std::pair<int, int>{2, 2}, {2, 3}}) {
        WalkStats st = srw_run(DlParams(p, q), cfg);
        CHECK(st.checkpoints == std::vector<int>{10, 100, 500});
        for (double m : st.mean_distance) CHECK(m >= 0.0);
        CHECK(st.speed >= 0.0);
        CHECK(st.speed <= 1.0);
        CHECK(st.return_frequency_even >= 0.0);
        CHECK(st.return_frequency_even <= 1.0);
        // distance grows at most one per step
        for (std::size_t i = 0; i < st.checkpoints.size(); ++i)
            CHECK(st.mean_distance[i] <= st.checkpoints[i]);
    }
}

TEST_CASE("lamplighter walk needs square parameters") {
    WalkConfig cfg;
    cfg.steps = 10;
    cfg.trials = 2;
    cfg.seed = 1;
    CHECK_THROWS_AS(lamplighter_walk(DlParams(2, 3), cfg), ParamsNotSquare);
    CHECK_NOTHROW(lamplighter_walk(DlParams(2, 2), cfg));
}

TEST_CASE("the two samplers of DL(2,2) produce comparable profiles") {
    WalkConfig cfg;
    cfg.steps = 1000;
    cfg.trials = 60;
    cfg.seed = 17;
    cfg.checkpoints = {100, 1000};
    WalkStats graph = srw_run(DlParams(2, 2), cfg);
    WalkStats group = lamplighter_walk(DlParams(2, 2), cfg);
    for (std::size_t i = 0; i < cfg.checkpoints.size(); ++i) {
        double gap = std::abs(graph.mean_distance[i] - group.mean_distance[i]);
        double band = 4.0 * (graph.half_width[i] + group.half_width[i]);
        CHECK(gap <= band);
    }
}

TEST_CASE("invalid configurations are rejected") {
    WalkConfig cfg;
    cfg.steps = 0;
    cfg.trials = 1;
    CHECK_THROWS_AS(srw_run(DlParams(2, 2), cfg), std::invalid_argument);
    cfg.steps = 1;
    cfg.trials = 0;
    CHECK_THROWS_AS(srw_run(DlParams(2, 2), cfg), std::invalid_argument);
}
