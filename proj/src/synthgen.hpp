/**
 * synthgen.hpp — synthetic benchmark: a chain of coupled 2-channel delayed
 * stochastic ODEs with tridiagonal ground-truth adjacency.
 */

#ifndef SIGCX_SYNTHGEN_HPP
#define SIGCX_SYNTHGEN_HPP

#include <cstdint>
#include <vector>

#include "timeseries.hpp"

namespace sigcx {

struct SynthConfig {
    int n = 5;                 // chain length (vertex count)
    double c = 0.45;           // coupling, must be nonzero
    double sigma = 0.08;       // driving-noise std
    double sigma_start = 2.5;  // initial-condition std for the first vertex
    double h = 0.05;           // delay, an integer multiple of dt
    double dt = 0.01;          // step on [0,1]
    std::uint64_t seed = 0;
};

struct GroundTruth {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // unordered pairs i < j

    bool has_edge(int i, int j) const;
};

/// Euler-Maruyama on the uniform grid {0, dt, ..., 1}. Each vertex is a
/// 2-channel path driven by its own delayed state and its chain neighbors',
/// with the missing neighbor term dropped at the chain ends. Pre-history is
/// the initial value held constant.
std::vector<MultivariatePath> simulate_dataset(const SynthConfig& cfg);

/// Off-diagonal tridiagonal pattern: edges at |i - j| = 1.
GroundTruth ground_truth_adjacency(int n);

}  // namespace sigcx

#endif
