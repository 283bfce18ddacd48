#include "synthgen.hpp"

#include <cmath>
#include <stdexcept>

#include "rng.hpp"

namespace sigcx {

bool GroundTruth::has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    for (const auto& e : edges)
        if (e.first == i && e.second == j) return true;
    return false;
}

std::vector<MultivariatePath> simulate_dataset(const SynthConfig& cfg) {
    if (cfg.c == 0.0)
        throw std::invalid_argument("coupling c must be nonzero");
    if (cfg.n < 2) throw std::invalid_argument("chain needs at least 2 vertices");
    if (cfg.dt <= 0.0) throw std::invalid_argument("dt must be positive");
    if (cfg.sigma < 0.0 || cfg.sigma_start < 0.0)
        throw std::invalid_argument("noise levels must be nonnegative");
    const double steps_real = cfg.h / cfg.dt;
    const int delay_steps = static_cast<int>(std::lround(steps_real));
    if (cfg.h < 0.0 || std::abs(steps_real - delay_steps) > 1e-9)
        throw std::invalid_argument("delay h must be a nonnegative integer multiple of dt");

    const int n_steps = static_cast<int>(std::lround(1.0 / cfg.dt));
    const int samples = n_steps + 1;
    const int n = cfg.n;

    Eigen::Matrix2d B1;
    B1 << 1.0, cfg.c, cfg.c, 1.0;
    const double c = cfg.c;
    const double sqrt_dt = std::sqrt(cfg.dt);

    auto rng = make_rng(cfg.seed, "gen");
    std::normal_distribution<double> gauss(0.0, 1.0);

    // state[i] holds the full history so delayed lookups are direct
    std::vector<Eigen::MatrixXd> state(n, Eigen::MatrixXd::Zero(samples, 2));
    state[0](0, 0) = cfg.sigma_start * gauss(rng);
    state[0](0, 1) = cfg.sigma_start * gauss(rng);

    auto delayed = [&](int i, int t) -> Eigen::Vector2d {
        int td = t - delay_steps;
        if (td < 0) td = 0;  // pre-history: initial value held constant
        return state[i].row(td).transpose();
    };

    for (int t = 0; t < n_steps; ++t) {
        for (int i = 0; i < n; ++i) {
            Eigen::Vector2d drift = B1 * delayed(i, t);
            if (i > 0) drift += c * delayed(i - 1, t);
            if (i < n - 1) drift -= c * delayed(i + 1, t);
            Eigen::Vector2d noise(cfg.sigma * gauss(rng), cfg.sigma * gauss(rng));
            state[i].row(t + 1) =
                (state[i].row(t).transpose() + cfg.dt * drift + sqrt_dt * noise)
                    .transpose();
        }
    }

    TimeGrid grid(samples);
    for (int t = 0; t < samples; ++t) grid[t] = t * cfg.dt;
    grid.back() = n_steps * cfg.dt;  // index arithmetic, no accumulation

    std::vector<MultivariatePath> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i)
        out.emplace_back(grid, std::move(state[i]), "Y" + std::to_string(i + 1));
    return out;
}

GroundTruth ground_truth_adjacency(int n) {
    if (n < 2) throw std::invalid_argument("chain needs at least 2 vertices");
    GroundTruth gt;
    gt.n = n;
    for (int i = 0; i + 1 < n; ++i) gt.edges.emplace_back(i, i + 1);
    return gt;
}

}  // namespace sigcx
