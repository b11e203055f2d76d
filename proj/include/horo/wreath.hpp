#pragma once

#include <map>
#include <vector>

#include "horo/errors.hpp"
#include "horo/tree.hpp"

namespace horo {

/// Finitely supported configuration Z -> Z_p; zeros are not stored.
struct Config {
    std::map<int, int> support; // values in 1..p-1
    int p = 2;

    bool operator==(const Config&) const = default;
};

Config make_config(int p, const std::map<int, int>& values);
Config delta_config(int p, int position, int value);

/// Element (eta, k) of the lamplighter group Z_p wr Z.
struct LampEl {
    Config eta;
    int pos = 0;

    bool operator==(const LampEl&) const = default;
};

LampEl lamp_identity(int p);

/// (eta, k)(eta', k') = (eta + L_k eta', k + k').
LampEl compose(const LampEl& g, const LampEl& h);
LampEl inverse(const LampEl& g);

/// The symmetric generating set {(delta_1^l, 1), (delta_0^l, -1) : l in Z_p}.
std::vector<LampEl> generators(int p);

/// Faithful predecessor-preserving action on T_p. The vertex is read as a
/// configuration on (-inf, level]; the image has level shifted by g.pos and
/// configuration g.eta + shifted digits, truncated at the new level.
TreeVertex act_on_tree(const LampEl& g, const TreeVertex& v);

/// Constructive transitivity witness: act_on_tree(result, u) = v.
LampEl transporter(int p, const TreeVertex& u, const TreeVertex& v);

} // namespace horo
