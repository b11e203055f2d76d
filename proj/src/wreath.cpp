#include "horo/wreath.hpp"

#include <stdexcept>

namespace horo {

namespace {

int mod_p(int v, int p) {
    int r = v % p;
    return r < 0 ? r + p : r;
}

void add_at(Config& c, int position, int value) {
    int v = mod_p(c.support.count(position) ? c.support[position] + value : value, c.p);
    if (v == 0) c.support.erase(position);
    else c.support[position] = v;
}

void require_same_p(int a, int b) {
    if (a != b) throw ModulusMismatch("lamp moduli differ");
}

} // namespace

Config make_config(int p, const std::map<int, int>& values) {
    if (p < 2) throw std::invalid_argument("configuration modulus must be >= 2");
    Config c{{}, p};
    for (auto [k, v] : values) add_at(c, k, v);
    return c;
}

Config delta_config(int p, int position, int value) {
    return make_config(p, {{position, value}});
}

LampEl lamp_identity(int p) { return LampEl{make_config(p, {}), 0}; }

LampEl compose(const LampEl& g, const LampEl& h) {
    require_same_p(g.eta.p, h.eta.p);
    LampEl r{g.eta, g.pos + h.pos};
    for (auto [k, v] : h.eta.support) add_at(r.eta, k + g.pos, v);
    return r;
}

LampEl inverse(const LampEl& g) {
    LampEl r{make_config(g.eta.p, {}), -g.pos};
    for (auto [k, v] : g.eta.support) add_at(r.eta, k - g.pos, -v);
    return r;
}

std::vector<LampEl> generators(int p) {
    if (p < 2) throw std::invalid_argument("modulus must be >= 2");
    std::vector<LampEl> out;
    out.reserve(static_cast<std::size_t>(2 * p));
    for (int l = 0; l < p; ++l) out.push_back(LampEl{delta_config(p, 1, l), 1});
    for (int l = 0; l < p; ++l) out.push_back(LampEl{delta_config(p, 0, l), -1});
    return out;
}

TreeVertex act_on_tree(const LampEl& g, const TreeVertex& v) {
    int p = g.eta.p;
    int new_level = v.level + g.pos;
    // digits of v as a configuration: zeta(v.level - i) = digits[size-1-i]
    Config out = make_config(p, {});
    for (std::size_t i = 0; i < v.digits.size(); ++i) {
        int lvl = v.level - static_cast<int>(v.digits.size() - 1 - i);
        add_at(out, lvl + g.pos, v.digits[i]);
    }
    for (auto [k, val] : g.eta.support)
        if (k <= new_level) add_at(out, k, val);
    if (out.support.empty()) return make_vertex({}, new_level);
    int top = out.support.begin()->first;
    std::vector<std::uint8_t> digits(static_cast<std::size_t>(new_level - top + 1), 0);
    for (auto [k, val] : out.support)
        digits[static_cast<std::size_t>(k - top)] = static_cast<std::uint8_t>(val);
    return make_vertex(std::move(digits), new_level);
}

LampEl transporter(int p, const TreeVertex& u, const TreeVertex& v) {
    int shift = v.level - u.level;
    LampEl g{make_config(p, {}), shift};
    // eta = zeta_v - L_shift zeta_u on (-inf, v.level]
    for (std::size_t i = 0; i < v.digits.size(); ++i) {
        int lvl = v.level - static_cast<int>(v.digits.size() - 1 - i);
        add_at(g.eta, lvl, v.digits[i]);
    }
    for (std::size_t i = 0; i < u.digits.size(); ++i) {
        int lvl = u.level - static_cast<int>(u.digits.size() - 1 - i);
        add_at(g.eta, lvl + shift, -static_cast<int>(u.digits[i]));
    }
    return g;
}

} // namespace horo
