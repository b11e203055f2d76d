#pragma once

#include <cstdint>
#include <vector>

#include "horo/dl.hpp"
#include "horo/errors.hpp"
#include "horo/wreath.hpp"

namespace horo {

struct WalkConfig {
    int steps = 1;
    int trials = 1;
    std::uint64_t seed = 0;
    std::vector<int> checkpoints; // defaults to powers of ten up to steps
};

struct WalkStats {
    std::vector<int> checkpoints;
    std::vector<double> mean_distance;
    std::vector<double> half_width; // 1.96 sigma / sqrt(T)
    double speed = 0.0;             // mean_distance(steps) / steps
    double return_frequency_even = 0.0;
};

/// The section-3 identification (eta, k) -> ((eta|_{<=k}, k), (eta|_{>k}, -k))
/// of lamplighter elements with DL(p,p) vertices.
DlVertex lamplighter_encode(const LampEl& g);

/// Simple random walk on DL(p,q); distances via the corrected Bertacchi
/// formula, deterministic per (seed, trial).
WalkStats srw_run(const DlParams& dl, const WalkConfig& cfg);

/// Simple random walk on the 2p lamplighter generators, measured through
/// the DL(p,p) encoding. Throws ParamsNotSquare when p != q.
WalkStats lamplighter_walk(const DlParams& dl, const WalkConfig& cfg);

std::vector<int> default_checkpoints(int steps);

} // namespace horo
