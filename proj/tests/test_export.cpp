#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "json.hpp"

#include "horo/graph_export.hpp"

using namespace horo;

TEST_CASE("coordinate syntax round-trips") {
    TreeVertex v = make_vertex({1, 0, 2}, 3);
    CHECK(coordinate_string(v) == "3:102");
    CHECK(parse_coordinate("3:102", 3) == v);
    CHECK(parse_coordinate("0:", 2) == make_vertex({}, 0));
    CHECK(parse_coordinate("-2:", 2) == make_vertex({}, -2));
    CHECK(parse_coordinate("2:01", 2) == make_vertex({1}, 2)); // canonicalised
    CHECK_THROWS_AS(parse_coordinate("abc", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_coordinate("1:2", 2), std::invalid_argument); // digit >= p
    CHECK_THROWS_AS(parse_coordinate("x:1", 2), std::invalid_argument);
}

TEST_CASE("small DL export has the expected shape") {
    ExportGraph g = export_dl_ball(DlParams(2, 2), 1);
    CHECK(g.space == "dl");
    CHECK(g.vertices.size() == 5);
    CHECK(g.edges.size() == 4);
    for (std::size_t i = 0; i < g.vertices.size(); ++i) CHECK(g.vertices[i].id == i);
    for (auto [a, b] : g.edges) {
        CHECK(a < b);
        CHECK(b < g.vertices.size());
    }
}

TEST_CASE("exports are deterministic") {
    ExportGraph g1 = export_dl_ball(DlParams(2, 3), 2);
    ExportGraph g2 = export_dl_ball(DlParams(2, 3), 2);
    CHECK(to_dot(g1) == to_dot(g2));
    CHECK(to_json(g1) == to_json(g2));
}

TEST_CASE("grandmother export: interior vertices have degree 8") {
    ExportGraph g = export_grandmother_ball(TreeParams(2), 2);
    CHECK(g.space == "grandmother");
    // the origin is interior in a radius-2 ball; count its incident edges
    std::size_t origin_id = 0;
    bool found = false;
    for (const auto& v : g.vertices)
        if (v.coordinates == "0:") {
            origin_id = v.id;
            found = true;
        }
    REQUIRE(found);
    int degree = 0;
    for (auto [a, b] : g.edges)
        if (a == origin_id || b == origin_id) ++degree;
    CHECK(degree == 8); // p^2 + p + 2
}

TEST_CASE("radius cap is enforced") {
    CHECK_THROWS_AS(export_dl_ball(DlParams(2, 2), 9), RadiusTooLarge);
    CHECK_THROWS_AS(export_grandmother_ball(TreeParams(2), 9), RadiusTooLarge);
}

TEST_CASE("JSON schema fields") {
    ExportGraph g = export_dl_ball(DlParams(2, 3), 1);
    nlohmann::json j = nlohmann::json::parse(to_json(g));
    CHECK(j["schema"] == "horo-graph/1");
    CHECK(j["space"] == "dl");
    CHECK(j["p"] == 2);
    CHECK(j["q"] == 3);
    CHECK(j["radius"] == 1);
    CHECK(j["vertices"].size() == g.vertices.size());
    CHECK(j["edges"].size() == g.edges.size());
    for (const auto& v : j["vertices"]) {
        CHECK(v.contains("id"));
        CHECK(v.contains("coordinates"));
        CHECK(v.contains("level"));
    }
}

TEST_CASE("DOT output carries rank hints by level") {
    ExportGraph g = export_dl_ball(DlParams(2, 2), 1);
    std::string dot = to_dot(g);
    CHECK(dot.find("graph ball {") != std::string::npos);
    CHECK(dot.find("rank=same") != std::string::npos);
    CHECK(dot.find(" -- ") != std::string::npos);
}
