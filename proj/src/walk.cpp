#include "horo/walk.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace horo {

namespace {

void validate(const WalkConfig& cfg) {
    if (cfg.steps < 1 || cfg.trials < 1)
        throw std::invalid_argument("walk needs steps >= 1 and trials >= 1");
}

std::mt19937_64 trial_rng(std::uint64_t seed, int trial) {
    std::seed_seq seq{static_cast<std::uint64_t>(0x9e3779b97f4a7c15ULL), seed,
                      static_cast<std::uint64_t>(trial)};
    return std::mt19937_64(seq);
}

struct Accumulator {
    std::vector<double> sum;
    std::vector<double> sumsq;
    long long even_returns = 0;
    long long even_times = 0;

    explicit Accumulator(std::size_t n) : sum(n, 0.0), sumsq(n, 0.0) {}

    void add_checkpoint(std::size_t i, double d) {
        sum[i] += d;
        sumsq[i] += d * d;
    }

    WalkStats finish(const std::vector<int>& checkpoints, int trials, int steps) const {
        WalkStats st;
        st.checkpoints = checkpoints;
        for (std::size_t i = 0; i < sum.size(); ++i) {
            double mean = sum[i] / trials;
            double var = std::max(0.0, sumsq[i] / trials - mean * mean);
            st.mean_distance.push_back(mean);
            st.half_width.push_back(1.96 * std::sqrt(var / trials));
        }
        st.speed = st.mean_distance.back() / steps;
        st.return_frequency_even =
            even_times > 0 ? static_cast<double>(even_returns) / static_cast<double>(even_times)
                           : 0.0;
        return st;
    }
};

} // namespace

std::vector<int> default_checkpoints(int steps) {
    std::vector<int> cps;
    for (int c = 10; c < steps; c *= 10) cps.push_back(c);
    cps.push_back(steps);
    return cps;
}

DlVertex lamplighter_encode(const LampEl& g) {
    int k = g.pos;
    std::vector<std::uint8_t> d1;
    std::vector<std::uint8_t> d2;
    if (!g.eta.support.empty()) {
        int lo = g.eta.support.begin()->first;
        int hi = g.eta.support.rbegin()->first;
        if (lo <= k) {
            d1.assign(static_cast<std::size_t>(k - lo + 1), 0);
            for (auto [pos, val] : g.eta.support)
                if (pos <= k) d1[static_cast<std::size_t>(pos - lo)] =
                    static_cast<std::uint8_t>(val);
        }
        if (hi >= k + 1) {
            d2.assign(static_cast<std::size_t>(hi - k), 0);
            for (auto [pos, val] : g.eta.support)
                if (pos >= k + 1) d2[static_cast<std::size_t>(hi - pos)] =
                    static_cast<std::uint8_t>(val);
        }
    }
    return make_dl_vertex(make_vertex(std::move(d1), k), make_vertex(std::move(d2), -k));
}

WalkStats srw_run(const DlParams& dl, const WalkConfig& cfg) {
    validate(cfg);
    std::vector<int> cps = cfg.checkpoints.empty() ? default_checkpoints(cfg.steps)
                                                   : cfg.checkpoints;
    Accumulator acc(cps.size());
    const DlVertex origin = dl_origin();
    for (int trial = 0; trial < cfg.trials; ++trial) {
        auto rng = trial_rng(cfg.seed, trial);
        std::uniform_int_distribution<int> move(0, dl.p + dl.q - 1);
        DlVertex cur = origin;
        std::size_t next_cp = 0;
        for (int t = 1; t <= cfg.steps; ++t) {
            int r = move(rng);
            if (r < dl.p) {
                cur = DlVertex{child_vertex(cur.x1, static_cast<std::uint8_t>(r)),
                               predecessor(cur.x2)};
            } else {
                cur = DlVertex{predecessor(cur.x1),
                               child_vertex(cur.x2, static_cast<std::uint8_t>(r - dl.p))};
            }
            if (t % 2 == 0) {
                ++acc.even_times;
                if (cur == origin) ++acc.even_returns;
            }
            if (next_cp < cps.size() && t == cps[next_cp]) {
                acc.add_checkpoint(next_cp, formula_dist(cur, origin));
                ++next_cp;
            }
        }
    }
    return acc.finish(cps, cfg.trials, cfg.steps);
}

WalkStats lamplighter_walk(const DlParams& dl, const WalkConfig& cfg) {
    if (dl.p != dl.q) throw ParamsNotSquare("lamplighter walk needs p = q");
    validate(cfg);
    std::vector<int> cps = cfg.checkpoints.empty() ? default_checkpoints(cfg.steps)
                                                   : cfg.checkpoints;
    Accumulator acc(cps.size());
    const std::vector<LampEl> gens = generators(dl.p);
    const LampEl id = lamp_identity(dl.p);
    const DlVertex origin = lamplighter_encode(id);
    for (int trial = 0; trial < cfg.trials; ++trial) {
        auto rng = trial_rng(cfg.seed, trial);
        std::uniform_int_distribution<std::size_t> move(0, gens.size() - 1);
        LampEl cur = id;
        std::size_t next_cp = 0;
        for (int t = 1; t <= cfg.steps; ++t) {
            cur = compose(cur, gens[move(rng)]);
            if (t % 2 == 0) {
                ++acc.even_times;
                if (cur == id) ++acc.even_returns;
            }
            if (next_cp < cps.size() && t == cps[next_cp]) {
                acc.add_checkpoint(next_cp, formula_dist(lamplighter_encode(cur), origin));
                ++next_cp;
            }
        }
    }
    return acc.finish(cps, cfg.trials, cfg.steps);
}

} // namespace horo
