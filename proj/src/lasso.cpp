#include "lasso.hpp"

#include <cmath>
#include <stdexcept>

namespace sigcx {

namespace {

constexpr double kVarianceFloor = 1e-14;

double soft_threshold(double z, double lambda) {
    if (z > lambda) return z - lambda;
    if (z < -lambda) return z + lambda;
    return 0.0;
}

void check_finite(const Design& design) {
    if (!design.X.allFinite() || !design.y.allFinite())
        throw std::invalid_argument("design contains NaN or Inf");
    if (design.X.rows() < 2 || design.X.cols() < 1)
        throw std::invalid_argument("design needs L >= 2 observations and p >= 1 columns");
    if (design.y.size() != design.X.rows())
        throw std::invalid_argument("response length does not match design rows");
}

}  // namespace

Standardized standardize(const Design& design) {
    check_finite(design);
    const auto L = design.X.rows();
    const auto p = design.X.cols();
    Standardized out;
    out.X.resize(L, p);
    out.col_mean.resize(p);
    out.col_scale.resize(p);
    out.constant_column.assign(p, false);
    for (Eigen::Index j = 0; j < p; ++j) {
        double mean = design.X.col(j).mean();
        Eigen::VectorXd centered = design.X.col(j).array() - mean;
        double var = centered.squaredNorm() / static_cast<double>(L);
        out.col_mean(j) = mean;
        if (var < kVarianceFloor) {
            out.constant_column[j] = true;
            out.col_scale(j) = 1.0;
            out.X.col(j).setZero();
        } else {
            out.col_scale(j) = std::sqrt(var);
            out.X.col(j) = centered / out.col_scale(j);
        }
    }
    out.y_mean = design.y.mean();
    out.y = design.y.array() - out.y_mean;
    return out;
}

double lambda_max(const Design& design) {
    Standardized s = standardize(design);
    const double L = static_cast<double>(s.X.rows());
    double lmax = 0.0;
    for (Eigen::Index j = 0; j < s.X.cols(); ++j) {
        if (s.constant_column[j]) continue;
        lmax = std::max(lmax, std::abs(s.X.col(j).dot(s.y)) / L);
    }
    return lmax;
}

LassoFit lasso_fit(const Design& design, const LassoOptions& opts) {
    Standardized s = standardize(design);
    const auto L = s.X.rows();
    const auto p = s.X.cols();
    const double Ld = static_cast<double>(L);

    LassoFit fit;
    fit.beta = Eigen::VectorXd::Zero(p);

    double y_var = s.y.squaredNorm() / Ld;
    if (y_var < kVarianceFloor) {
        fit.degenerate = true;
        fit.lambda = 0.0;
        return fit;
    }

    double lambda = opts.lambda;
    if (lambda < 0.0) {
        double lmax = 0.0;
        for (Eigen::Index j = 0; j < p; ++j)
            if (!s.constant_column[j])
                lmax = std::max(lmax, std::abs(s.X.col(j).dot(s.y)) / Ld);
        lambda = opts.lambda_ratio * lmax;
    }
    fit.lambda = lambda;

    // cyclic coordinate descent with soft-thresholding; unit-variance columns
    // make every curvature term x_j^T x_j / L equal to 1
    Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
    Eigen::VectorXd residual = s.y;
    fit.converged = false;
    for (int it = 0; it < opts.max_iter; ++it) {
        double max_delta = 0.0;
        for (Eigen::Index j = 0; j < p; ++j) {
            if (s.constant_column[j]) continue;
            double rho = s.X.col(j).dot(residual) / Ld + beta(j);
            double updated = soft_threshold(rho, lambda);
            double delta = updated - beta(j);
            if (delta != 0.0) {
                residual -= delta * s.X.col(j);
                beta(j) = updated;
                max_delta = std::max(max_delta, std::abs(delta));
            }
        }
        if (opts.objective_trace)
            opts.objective_trace->push_back(
                residual.squaredNorm() / (2.0 * Ld) +
                lambda * beta.cwiseAbs().sum());
        if (max_delta < opts.tol) {
            fit.converged = true;
            break;
        }
    }

    for (Eigen::Index j = 0; j < p; ++j) {
        if (!s.constant_column[j] && std::abs(beta(j)) > opts.eps_nonzero) {
            fit.support.push_back(static_cast<int>(j));
            fit.beta(j) = beta(j) / s.col_scale(j);
        }
    }

    if (opts.refit_ols_r2 && !fit.support.empty()) {
        Eigen::MatrixXd Xs(L, fit.support.size());
        for (std::size_t c = 0; c < fit.support.size(); ++c)
            Xs.col(c) = s.X.col(fit.support[c]);
        Eigen::VectorXd b = Xs.colPivHouseholderQr().solve(s.y);
        Eigen::VectorXd res = s.y - Xs * b;
        fit.r2 = 1.0 - res.squaredNorm() / s.y.squaredNorm();
    } else {
        Eigen::VectorXd fitted_res = residual;
        fit.r2 = 1.0 - fitted_res.squaredNorm() / s.y.squaredNorm();
    }
    return fit;
}

double r_squared(const LassoFit& fit, const Design& design) {
    check_finite(design);
    if (fit.degenerate) return 0.0;
    const double L = static_cast<double>(design.X.rows());
    double y_mean = design.y.mean();
    Eigen::VectorXd yc = design.y.array() - y_mean;
    double ss_tot = yc.squaredNorm();
    if (ss_tot / L < kVarianceFloor) return 0.0;
    Eigen::VectorXd col_means = design.X.colwise().mean();
    Eigen::VectorXd yhat_c =
        (design.X.rowwise() - col_means.transpose()) * fit.beta;
    double ss_res = (yc - yhat_c).squaredNorm();
    return 1.0 - ss_res / ss_tot;
}

}  // namespace sigcx
