#include "timeseries.hpp"

#include <algorithm>
#include <cmath>

namespace sigcx {

void validate_grid(const TimeGrid& grid) {
    if (grid.size() < 2)
        throw std::invalid_argument("time grid needs at least 2 samples");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::invalid_argument("time grid must be strictly increasing");
}

MultivariatePath::MultivariatePath(TimeGrid g, Eigen::MatrixXd v, std::string lbl)
    : grid(std::move(g)), values(std::move(v)), label(std::move(lbl)) {
    validate_grid(grid);
    if (static_cast<std::size_t>(values.rows()) != grid.size())
        throw std::invalid_argument("sample count does not match grid length");
    if (values.cols() < 1)
        throw std::invalid_argument("path needs at least one channel");
    if (!values.allFinite())
        throw std::invalid_argument("path contains non-finite values");
}

MultivariatePath restrict_to_indices(const MultivariatePath& path,
                                     const std::vector<int>& indices) {
    if (indices.size() < 2)
        throw std::invalid_argument("restriction needs at least 2 indices");
    TimeGrid grid;
    Eigen::MatrixXd values(indices.size(), path.dim());
    int prev = -1;
    for (std::size_t r = 0; r < indices.size(); ++r) {
        int idx = indices[r];
        if (idx <= prev || idx >= path.samples())
            throw std::invalid_argument("indices must be strictly increasing and in range");
        grid.push_back(path.grid[idx]);
        values.row(r) = path.values.row(idx);
        prev = idx;
    }
    return {std::move(grid), std::move(values), path.label};
}

Eigen::VectorXd interpolate_at(const MultivariatePath& path, double t) {
    if (t < path.t_begin() || t > path.t_end())
        throw std::out_of_range("interpolation time outside path interval");
    auto it = std::lower_bound(path.grid.begin(), path.grid.end(), t);
    std::size_t hi = static_cast<std::size_t>(it - path.grid.begin());
    if (hi < path.grid.size() && path.grid[hi] == t)
        return path.values.row(hi).transpose();
    std::size_t lo = hi - 1;
    double w = (t - path.grid[lo]) / (path.grid[hi] - path.grid[lo]);
    return (1.0 - w) * path.values.row(lo).transpose() +
           w * path.values.row(hi).transpose();
}

MultivariatePath project_channels(const MultivariatePath& path,
                                  const std::vector<int>& keep) {
    if (keep.empty())
        throw std::invalid_argument("channel projection needs a nonempty keep set");
    Eigen::MatrixXd values(path.samples(), keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c) {
        if (keep[c] < 0 || keep[c] >= path.dim())
            throw std::invalid_argument("channel index out of range");
        values.col(c) = path.values.col(keep[c]);
    }
    return {path.grid, std::move(values), path.label};
}

MultivariatePath zero_pad_augment(const MultivariatePath& path, int target_dim) {
    if (target_dim < path.dim())
        throw std::invalid_argument("target dimension below current channel count");
    Eigen::MatrixXd values = Eigen::MatrixXd::Zero(path.samples(), target_dim);
    values.leftCols(path.dim()) = path.values;
    return {path.grid, std::move(values), path.label};
}

MultivariatePath lead_lag(const MultivariatePath& path) {
    int n = path.samples();
    if (n < 2)
        throw std::invalid_argument("lead-lag needs at least 2 samples");
    int d = path.dim();
    int m = 2 * n - 1;
    TimeGrid grid(m);
    Eigen::MatrixXd values(m, 2 * d);
    for (int k = 0; k < n; ++k) {
        grid[2 * k] = path.grid[k];
        values.row(2 * k).head(d) = path.values.row(k);
        values.row(2 * k).tail(d) = path.values.row(k);
        if (k + 1 < n) {
            grid[2 * k + 1] = 0.5 * (path.grid[k] + path.grid[k + 1]);
            values.row(2 * k + 1).head(d) = path.values.row(k + 1);  // lead advances
            values.row(2 * k + 1).tail(d) = path.values.row(k);
        }
    }
    return {std::move(grid), std::move(values), path.label};
}

MultivariatePath time_augment(const MultivariatePath& path) {
    double a = path.t_begin(), b = path.t_end();
    Eigen::MatrixXd values(path.samples(), path.dim() + 1);
    for (int r = 0; r < path.samples(); ++r)
        values(r, 0) = (path.grid[r] - a) / (b - a);
    values.rightCols(path.dim()) = path.values;
    return {path.grid, std::move(values), path.label};
}

}  // namespace sigcx
