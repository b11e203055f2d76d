#include "horo/tree.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace horo {

namespace {

void strip_leading_zeros(std::vector<std::uint8_t>& digits) {
    std::size_t i = 0;
    while (i < digits.size() && digits[i] == 0) ++i;
    if (i > 0) digits.erase(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(i));
}

} // namespace

TreeParams::TreeParams(int branching) : p(branching) {
    if (p < 2) throw std::invalid_argument("tree branching number must be >= 2");
}

TreeVertex make_vertex(std::vector<std::uint8_t> digits, int level) {
    strip_leading_zeros(digits);
    return TreeVertex{std::move(digits), level};
}

bool tree_vertex_less(const TreeVertex& a, const TreeVertex& b) {
    if (a.level != b.level) return a.level < b.level;
    if (a.digits.size() != b.digits.size()) return a.digits.size() < b.digits.size();
    return a.digits < b.digits;
}

TreePoint TreePoint::at_vertex(const TreeVertex& v) {
    return TreePoint{v, v, 0.0, true};
}

TreePoint TreePoint::on_edge(const TreeVertex& parent, const TreeVertex& child, double kappa) {
    if (predecessor(child) != parent)
        throw std::invalid_argument("edge endpoints are not a predecessor/successor pair");
    if (!(kappa >= 0.0 && kappa < 1.0))
        throw std::invalid_argument("edge offset must lie in [0,1)");
    if (kappa == 0.0) return at_vertex(parent);
    return TreePoint{parent, child, kappa, false};
}

TreeEnd TreeEnd::omega() { return TreeEnd{true, TreeVertex{}}; }

TreeEnd TreeEnd::lower_zero_ray(const TreeVertex& anchor) {
    TreeVertex a = anchor;
    while (!a.digits.empty() && a.digits.back() == 0) {
        a.digits.pop_back();
        --a.level;
    }
    if (a.digits.empty()) a.level = 0; // the all-zero ray
    return TreeEnd{false, a};
}

TreeVertex predecessor(const TreeVertex& v) {
    TreeVertex r = v;
    if (!r.digits.empty()) r.digits.pop_back();
    --r.level;
    return r;
}

TreeVertex child_vertex(const TreeVertex& v, std::uint8_t digit) {
    TreeVertex r = v;
    r.digits.push_back(digit);
    strip_leading_zeros(r.digits);
    ++r.level;
    return r;
}

std::vector<TreeVertex> successors(const TreeParams& t, const TreeVertex& v) {
    std::vector<TreeVertex> out;
    out.reserve(static_cast<std::size_t>(t.p));
    for (int d = 0; d < t.p; ++d)
        out.push_back(child_vertex(v, static_cast<std::uint8_t>(d)));
    return out;
}

std::uint8_t digit_at_level(const TreeVertex& v, int lvl) {
    if (lvl > v.level) throw std::invalid_argument("digit_at_level: level below the vertex");
    std::ptrdiff_t idx = static_cast<std::ptrdiff_t>(v.digits.size()) - 1 - (v.level - lvl);
    if (idx < 0) return 0;
    return v.digits[static_cast<std::size_t>(idx)];
}

TreeVertex ancestor_at(const TreeVertex& v, int lvl) {
    if (lvl > v.level) throw std::invalid_argument("ancestor_at: level below the vertex");
    TreeVertex r = v;
    int up = v.level - lvl;
    int keep = static_cast<int>(r.digits.size()) - up;
    r.digits.resize(static_cast<std::size_t>(std::max(keep, 0)));
    r.level = lvl;
    return r;
}

bool is_ancestor_or_equal(const TreeVertex& u, const TreeVertex& v) {
    return u.level <= v.level && ancestor_at(v, u.level) == u;
}

TreeVertex confluent_ancestor(const TreeVertex& x, const TreeVertex& y) {
    int lvl = std::min(x.level, y.level);
    TreeVertex a = ancestor_at(x, lvl);
    TreeVertex b = ancestor_at(y, lvl);
    while (a != b) {
        a = predecessor(a);
        b = predecessor(b);
    }
    return a;
}

int tree_distance(const TreeVertex& x, const TreeVertex& y) {
    TreeVertex v = confluent_ancestor(x, y);
    return (x.level - v.level) + (y.level - v.level);
}

int busemann_limit_check(const TreeVertex& x, const TreeVertex& o) {
    TreeVertex v = confluent_ancestor(x, o);
    return (x.level - v.level) - (o.level - v.level);
}

namespace {

// Does the vertex lie on the bi-infinite geodesic from the reference end
// down the eventually-zero ray of the given lower end?
bool on_lower_ray(const TreeVertex& u, const TreeEnd& end) {
    const TreeVertex& a = end.anchor;
    if (u.level <= a.level) return ancestor_at(a, u.level) == u;
    if (ancestor_at(u, a.level) != a) return false;
    for (int lvl = a.level + 1; lvl <= u.level; ++lvl)
        if (digit_at_level(u, lvl) != 0) return false;
    return true;
}

// Next vertex on the geodesic from cur toward the target; nullopt when the
// target is cur itself.
std::optional<TreeVertex> geodesic_step(const TreeVertex& cur, const TreeTarget& target) {
    if (const TreeVertex* t = std::get_if<TreeVertex>(&target)) {
        if (cur == *t) return std::nullopt;
        if (is_ancestor_or_equal(cur, *t))
            return child_vertex(cur, digit_at_level(*t, cur.level + 1));
        return predecessor(cur);
    }
    const TreeEnd& e = std::get<TreeEnd>(target);
    if (e.is_omega) return predecessor(cur);
    if (!on_lower_ray(cur, e)) return predecessor(cur);
    if (cur.level < e.anchor.level)
        return child_vertex(cur, digit_at_level(e.anchor, cur.level + 1));
    return child_vertex(cur, 0);
}

bool targets_equal(const TreeTarget& w, const TreeTarget& z) {
    if (w.index() != z.index()) return false;
    if (const TreeVertex* v = std::get_if<TreeVertex>(&w))
        return *v == std::get<TreeVertex>(z);
    return std::get<TreeEnd>(w) == std::get<TreeEnd>(z);
}

} // namespace

TreeVertex confluent_from_root(const TreeTarget& w, const TreeTarget& z, const TreeVertex& o) {
    if (std::holds_alternative<TreeEnd>(w) && targets_equal(w, z))
        throw IdenticalEnds("confluent of an end with itself is undefined");
    TreeVertex cur = o;
    for (;;) {
        std::optional<TreeVertex> nw = geodesic_step(cur, w);
        std::optional<TreeVertex> nz = geodesic_step(cur, z);
        if (!nw || !nz || *nw != *nz) return cur;
        cur = *nw;
    }
}

double ultrametric(const TreeTarget& w, const TreeTarget& z, const TreeVertex& o) {
    if (targets_equal(w, z)) return 0.0;
    TreeVertex c = confluent_from_root(w, z, o);
    return std::exp(-static_cast<double>(tree_distance(o, c)));
}

std::vector<TreeVertex> grandmother_neighbors(const TreeParams& t, const TreeVertex& v) {
    std::vector<TreeVertex> out;
    out.reserve(static_cast<std::size_t>(t.p * t.p + t.p + 2));
    TreeVertex pre = predecessor(v);
    out.push_back(pre);
    out.push_back(predecessor(pre));
    for (const TreeVertex& s : successors(t, v)) {
        out.push_back(s);
        for (const TreeVertex& g : successors(t, s)) out.push_back(g);
    }
    return out;
}

bool tree_adjacent(const TreeVertex& u, const TreeVertex& v) {
    if (u.level == v.level + 1) return predecessor(u) == v;
    if (v.level == u.level + 1) return predecessor(v) == u;
    return false;
}

bool grandmother_adjacent(const TreeVertex& u, const TreeVertex& v) {
    if (tree_adjacent(u, v)) return true;
    if (u.level == v.level + 2) return predecessor(predecessor(u)) == v;
    if (v.level == u.level + 2) return predecessor(predecessor(v)) == u;
    return false;
}

TreeVertex apply_swap(const SubtreeSwap& s, const TreeVertex& v) {
    if (v.level <= s.apex.level) return v;
    if (ancestor_at(v, s.apex.level) != s.apex) return v;
    int child_lvl = s.apex.level + 1;
    std::uint8_t d = digit_at_level(v, child_lvl);
    std::uint8_t replacement;
    if (d == s.branch_a) replacement = s.branch_b;
    else if (d == s.branch_b) replacement = s.branch_a;
    else return v;
    // materialise the implicit zero prefix down to the child-of-apex digit
    TreeVertex r = v;
    std::size_t need = static_cast<std::size_t>(v.level - child_lvl + 1);
    while (r.digits.size() < need) r.digits.insert(r.digits.begin(), 0);
    r.digits[r.digits.size() - need] = replacement;
    strip_leading_zeros(r.digits);
    return r;
}

} // namespace horo
