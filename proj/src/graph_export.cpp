#include "horo/graph_export.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace horo {

std::string coordinate_string(const TreeVertex& v) {
    std::ostringstream os;
    os << v.level << ':';
    for (std::uint8_t d : v.digits) os << static_cast<int>(d);
    return os.str();
}

TreeVertex parse_coordinate(const std::string& text, int p) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("coordinate must look like level:digits");
    int level = 0;
    try {
        level = std::stoi(text.substr(0, colon));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad level in coordinate '" + text + "'");
    }
    std::vector<std::uint8_t> digits;
    for (std::size_t i = colon + 1; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9')
            throw std::invalid_argument("bad digit in coordinate '" + text + "'");
        int d = c - '0';
        if (d >= p) throw std::invalid_argument("digit out of range for branching " +
                                                std::to_string(p));
        digits.push_back(static_cast<std::uint8_t>(d));
    }
    return make_vertex(std::move(digits), level);
}

ExportGraph export_dl_ball(const DlParams& dl, int radius, int cap) {
    BfsBall ball = bfs_ball(dl, dl_origin(), radius, cap);
    ExportGraph g;
    g.space = "dl";
    g.p = dl.p;
    g.q = dl.q;
    g.radius = radius;
    for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
        const DlVertex& v = ball.vertices[i];
        g.vertices.push_back({i, coordinate_string(v.x1) + "," + coordinate_string(v.x2),
                              v.x1.level});
    }
    g.edges = ball.edges;
    return g;
}

ExportGraph export_grandmother_ball(const TreeParams& t, int radius, int cap) {
    if (radius < 0 || radius > cap)
        throw RadiusTooLarge("radius must lie in [0, " + std::to_string(cap) + "]");
    std::map<TreeVertex, int, decltype(&tree_vertex_less)> dist(&tree_vertex_less);
    TreeVertex origin = make_vertex({}, 0);
    dist[origin] = 0;
    std::deque<TreeVertex> queue{origin};
    while (!queue.empty()) {
        TreeVertex v = queue.front();
        queue.pop_front();
        int d = dist.at(v);
        if (d == radius) continue;
        for (const TreeVertex& w : grandmother_neighbors(t, v)) {
            if (dist.emplace(w, d + 1).second) queue.push_back(w);
        }
    }
    ExportGraph g;
    g.space = "grandmother";
    g.p = t.p;
    g.radius = radius;
    std::map<std::string, std::size_t> index;
    for (const auto& [v, d] : dist) {
        std::size_t id = g.vertices.size();
        std::string key = coordinate_string(v);
        g.vertices.push_back({id, key, v.level});
        index[key] = id;
    }
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& [v, d] : dist) {
        std::size_t i = index.at(coordinate_string(v));
        for (const TreeVertex& w : grandmother_neighbors(t, v)) {
            auto it = index.find(coordinate_string(w));
            if (it == index.end()) continue;
            std::size_t j = it->second;
            if (i < j)
                edges.insert({i, j});
            else if (j < i)
                edges.insert({j, i});
        }
    }
    g.edges.assign(edges.begin(), edges.end());
    return g;
}

std::string to_dot(const ExportGraph& g) {
    std::ostringstream os;
    os << "graph ball {\n";
    os << "  // space=" << g.space << " p=" << g.p;
    if (g.q > 0) os << " q=" << g.q;
    os << " radius=" << g.radius << "\n";
    std::map<int, std::vector<std::size_t>> by_level;
    for (const auto& v : g.vertices) {
        os << "  n" << v.id << " [label=\"" << v.coordinates << "\"];\n";
        by_level[v.level].push_back(v.id);
    }
    for (const auto& [lvl, ids] : by_level) {
        os << "  { rank=same;";
        for (std::size_t id : ids) os << " n" << id << ";";
        os << " } // level " << lvl << "\n";
    }
    for (const auto& [i, j] : g.edges) os << "  n" << i << " -- n" << j << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_json(const ExportGraph& g) {
    nlohmann::json j;
    j["schema"] = "horo-graph/1";
    j["space"] = g.space;
    j["p"] = g.p;
    if (g.q > 0) j["q"] = g.q;
    j["radius"] = g.radius;
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : g.vertices)
        j["vertices"].push_back({{"id", v.id}, {"coordinates", v.coordinates},
                                 {"level", v.level}});
    j["edges"] = nlohmann::json::array();
    for (const auto& [a, b] : g.edges) j["edges"].push_back({a, b});
    return j.dump(2) + "\n";
}

} // namespace horo
