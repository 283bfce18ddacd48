/**
 * lasso.hpp — L1-penalized least squares by cyclic coordinate descent,
 * plus the R^2 model-quality gate used by the link predictor.
 */

#ifndef SIGCX_LASSO_HPP
#define SIGCX_LASSO_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace sigcx {

struct Design {
    Eigen::MatrixXd X;  // L observations x p candidates
    Eigen::VectorXd y;  // length L
    std::vector<std::string> labels;  // one per column, optional
};

struct LassoOptions {
    double lambda = -1.0;        // < 0: use lambda_ratio * lambda_max
    double lambda_ratio = 0.1;
    double tol = 1e-7;
    int max_iter = 100000;
    double eps_nonzero = 1e-8;   // support threshold on standardized scale
    bool refit_ols_r2 = false;   // R^2 from an OLS refit on the support
    // when set, the penalized objective is appended after every sweep
    std::vector<double>* objective_trace = nullptr;
};

struct LassoFit {
    Eigen::VectorXd beta;        // original scale
    std::vector<int> support;
    double r2 = 0.0;
    double lambda = 0.0;
    bool converged = true;
    bool degenerate = false;     // zero-variance response: gate must fail
};

struct Standardized {
    Eigen::MatrixXd X;
    Eigen::VectorXd col_mean;
    Eigen::VectorXd col_scale;          // 1.0 for constant columns
    std::vector<bool> constant_column;  // excluded from selection
    double y_mean = 0.0;
    Eigen::VectorXd y;                  // centered response
};

/// Center and unit-scale each column (population variance), center y.
/// Constant columns are zeroed out and flagged rather than rejected.
Standardized standardize(const Design& design);

LassoFit lasso_fit(const Design& design, const LassoOptions& opts = {});

/// 1 - SS_res/SS_tot for this fit on this design; 0 with the degenerate flag
/// when the response has no variance.
double r_squared(const LassoFit& fit, const Design& design);

/// max_j |x_j^T y| / L on standardized data: smallest lambda with empty support.
double lambda_max(const Design& design);

}  // namespace sigcx

#endif
