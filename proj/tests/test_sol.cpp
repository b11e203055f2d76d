#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "horo/sol.hpp"

using namespace horo;

namespace {

SolEl random_el(std::mt19937_64& rng, double range) {
    std::uniform_real_distribution<double> u(-range, range);
    return SolEl{u(rng), u(rng), u(rng)};
}

} // namespace

TEST_CASE("group law on a worked product") {
    SolParams s(1.0, 2.0);
    SolEl g{0.0, 0.0, 1.0};
    SolEl h{1.0, 1.0, 0.0};
    SolEl gh = sol_mul(s, g, h);
    CHECK(gh.a == doctest::Approx(std::exp(1.0)));
    CHECK(gh.b == doctest::Approx(std::exp(-2.0)));
    CHECK(gh.c == doctest::Approx(1.0));
}

TEST_CASE("group axioms") {
    SolParams s(1.0, 2.0);
    std::mt19937_64 rng(61u);
    SolEl id{};
    for (int i = 0; i < 300; ++i) {
        SolEl g = random_el(rng, 1.0);
        SolEl h = random_el(rng, 1.0);
        SolEl k = random_el(rng, 1.0);
        SolEl lhs = sol_mul(s, sol_mul(s, g, h), k);
        SolEl rhs = sol_mul(s, g, sol_mul(s, h, k));
        CHECK(std::abs(lhs.a - rhs.a) <= 1e-14);
        CHECK(std::abs(lhs.b - rhs.b) <= 1e-14);
        CHECK(std::abs(lhs.c - rhs.c) <= 1e-14);
        SolEl e = sol_mul(s, g, sol_inverse(s, g));
        CHECK(std::abs(e.a) <= 1e-14);
        CHECK(std::abs(e.b) <= 1e-14);
        CHECK(std::abs(e.c) <= 1e-14);
        SolEl ge = sol_mul(s, g, id);
        CHECK(ge == g);
    }
}

TEST_CASE("matrix representation is a homomorphism") {
    SolParams s(0.5, 1.5);
    std::mt19937_64 rng(62u);
    for (int i = 0; i < 100; ++i) {
        SolEl g = random_el(rng, 1.0);
        SolEl h = random_el(rng, 1.0);
        Mat3 lhs = sol_matrix(s, sol_mul(s, g, h));
        Mat3 rhs = mat3_mul(sol_matrix(s, g), sol_matrix(s, h));
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) CHECK(std::abs(lhs[r][c] - rhs[r][c]) <= 1e-12);
    }
}

TEST_CASE("modular function") {
    SolParams s(1.0, 3.0);
    SolEl g{0.4, -0.2, 0.7};
    CHECK(sol_modular(s, g) == doctest::Approx(std::exp(2.0 * 0.7)));
    SolParams uni(2.0, 2.0);
    CHECK(sol_modular(uni, g) == doctest::Approx(1.0));
    std::mt19937_64 rng(63u);
    for (int i = 0; i < 50; ++i) {
        SolEl a = random_el(rng, 1.0);
        SolEl b = random_el(rng, 1.0);
        CHECK(sol_modular(s, sol_mul(s, a, b)) ==
              doctest::Approx(sol_modular(s, a) * sol_modular(s, b)));
    }
}

TEST_CASE("pinched vertical pair") {
    SolParams s(1.0, 1.0);
    SolPoint a{0.0, 0.0, 0.0};
    SolPoint b{0.0, 0.0, 1.0};
    auto [lower, upper] = sandwich(s, a, b);
    CHECK(lower == doctest::Approx(1.0));
    CHECK(upper == doctest::Approx(1.0));
    SolUpperResult r = dist_upper(s, a, b);
    CHECK(r.length == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("straight vertical path length is exact") {
    SolParams s(1.0, 2.0);
    SolPath path;
    for (int i = 0; i <= 8; ++i)
        path.samples.push_back(SolPoint{0.0, 0.0, static_cast<double>(i) / 8.0});
    CHECK(path_length(s, path) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(path_length(s, SolPath{{SolPoint{}}}), std::invalid_argument);
}

TEST_CASE("quadrature is stable under refinement on straight seeds") {
    SolParams s(1.0, 2.0);
    std::mt19937_64 rng(64u);
    for (int i = 0; i < 10; ++i) {
        SolPoint a = random_el(rng, 2.0);
        SolPoint b = random_el(rng, 2.0);
        SolPath coarse, fine;
        for (int j = 0; j <= 64; ++j) {
            double t = static_cast<double>(j) / 64.0;
            coarse.samples.push_back(
                SolPoint{a.a + t * (b.a - a.a), a.b + t * (b.b - a.b), a.c + t * (b.c - a.c)});
        }
        for (int j = 0; j <= 256; ++j) {
            double t = static_cast<double>(j) / 256.0;
            fine.samples.push_back(
                SolPoint{a.a + t * (b.a - a.a), a.b + t * (b.b - a.b), a.c + t * (b.c - a.c)});
        }
        CHECK(std::abs(path_length(s, coarse) - path_length(s, fine)) <= 1e-6);
    }
}

TEST_CASE("projections are 1-Lipschitz for the upper estimate") {
    SolParams s(1.0, 2.0);
    std::mt19937_64 rng(65u);
    for (int i = 0; i < 10; ++i) {
        SolPoint a = random_el(rng, 2.0);
        SolPoint b = random_el(rng, 2.0);
        auto [ap, aq] = projections(a);
        auto [bp, bq] = projections(b);
        SolUpperResult r = dist_upper(s, a, b);
        CHECK(dist_hp(ap, bp, s.p) <= r.length + 1e-6);
        CHECK(dist_hp(aq, bq, s.q) <= r.length + 1e-6);
    }
}

TEST_CASE("upper estimate sits inside the sandwich") {
    std::mt19937_64 rng(66u);
    for (SolParams s : {SolParams(1.0, 1.0), SolParams(1.0, 2.0)}) {
        for (int i = 0; i < 12; ++i) {
            SolPoint a = random_el(rng, 2.0);
            SolPoint b = random_el(rng, 2.0);
            auto [lower, upper] = sandwich(s, a, b);
            SolUpperResult r = dist_upper(s, a, b);
            CHECK(r.length >= lower - 1e-6);
            CHECK(r.length <= upper + 1e-6);
        }
    }
}

TEST_CASE("parameters must be positive") {
    CHECK_THROWS_AS(SolParams(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(SolParams(1.0, -2.0), std::invalid_argument);
}
