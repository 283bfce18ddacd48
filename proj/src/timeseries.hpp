/**
 * timeseries.hpp — sampled multivariate paths on a time grid.
 *
 * A path is a piecewise-linear interpolation of its samples. Restriction,
 * projection, padding and the usual augmentations (lead-lag, time) live here.
 */

#ifndef SIGCX_TIMESERIES_HPP
#define SIGCX_TIMESERIES_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

namespace sigcx {

/// Strictly increasing timestamps spanning [front, back], length >= 2.
using TimeGrid = std::vector<double>;

void validate_grid(const TimeGrid& grid);

/// A d-channel path sampled on a grid; rows of `values` align with grid times.
struct MultivariatePath {
    TimeGrid grid;
    Eigen::MatrixXd values;  // grid.size() x dim
    std::string label;

    MultivariatePath() = default;
    MultivariatePath(TimeGrid g, Eigen::MatrixXd v, std::string lbl = "");

    int dim() const { return static_cast<int>(values.cols()); }
    int samples() const { return static_cast<int>(values.rows()); }
    double t_begin() const { return grid.front(); }
    double t_end() const { return grid.back(); }
};

/// Keep only the given sample rows. Indices must be strictly increasing,
/// in range, and at least two.
MultivariatePath restrict_to_indices(const MultivariatePath& path,
                                     const std::vector<int>& indices);

/// Linear interpolation at t in [t_begin, t_end]; exact on grid points.
Eigen::VectorXd interpolate_at(const MultivariatePath& path, double t);

/// Restrict channels to `keep` (order preserved).
MultivariatePath project_channels(const MultivariatePath& path,
                                  const std::vector<int>& keep);

/// Append zero channels until the path has target_dim channels.
MultivariatePath zero_pad_augment(const MultivariatePath& path, int target_dim);

/// Discrete lead-lag: 2d channels on a refined grid of 2N-1 points where N is
/// the sample count. Lead channels come first. At even refined steps both
/// copies sit on the same sample; at odd steps the lead has advanced.
MultivariatePath lead_lag(const MultivariatePath& path);

/// Prepend a time channel rescaled affinely to [0,1].
MultivariatePath time_augment(const MultivariatePath& path);

}  // namespace sigcx

#endif
