#pragma once

#include <string>
#include <utility>
#include <vector>

#include "horo/dl.hpp"
#include "horo/tree.hpp"

namespace horo {

/// Flattened, deterministically ordered graph ready for DOT/JSON export.
struct ExportGraph {
    struct Vertex {
        std::size_t id;
        std::string coordinates; // canonical "level:digits" syntax
        int level;
    };
    std::string space; // "dl" or "grandmother"
    int p = 0;
    int q = 0; // 0 for tree-based exports
    int radius = 0;
    std::vector<Vertex> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

std::string coordinate_string(const TreeVertex& v);
TreeVertex parse_coordinate(const std::string& text, int p);

ExportGraph export_dl_ball(const DlParams& dl, int radius, int cap = kDefaultBfsCap);
ExportGraph export_grandmother_ball(const TreeParams& t, int radius, int cap = kDefaultBfsCap);

std::string to_dot(const ExportGraph& g);
std::string to_json(const ExportGraph& g);

} // namespace horo
