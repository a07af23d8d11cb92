#pragma once

#include "gofboot/dataset.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <string>
#include <vector>

namespace gofboot {

/// Maximum likelihood fit of y = X beta + e, e ~ N(0, sigma^2 I).
///
/// sigma2_hat uses the MLE divisor n (RSS / n), not the unbiased n - r that
/// most regression software reports. Everything downstream (the goodness-of-fit
/// term, the score vectors, the information matrix) is defined at this MLE.
struct FittedModel {
    Eigen::VectorXd beta_hat;  ///< intercept first when present
    double sigma2_hat = 0.0;
    Eigen::VectorXd residuals;
    std::size_t n = 0;
    std::size_t r = 0;
    double loglik = 0.0;
    Eigen::MatrixXd xtx_inverse;
    std::vector<std::string> coefficient_names;
    ModelSpec spec;  ///< empty response when fitted from a bare Design
};

/// Relative pivot tolerance of the rank-revealing QR.
inline constexpr double kRankTolerance = 1e-10;
/// sigma2_hat at or below this fraction of Var(y) (the mean of y^2 when y is
/// constant) is a DegenerateFit.
inline constexpr double kDegenerateVarianceRatio = 1e-12;

/// Fits the model with a column-pivoted Householder QR.
///
/// Throws InsufficientData when n <= r, RankDeficient when the design has
/// numerical rank < r, DegenerateFit when the residual variance vanishes.
FittedModel fit_mle(const Dataset& data, const ModelSpec& spec);

FittedModel fit_design(const Design& design);

/// -2 log L at the MLE: n log(2 pi) + n + n log(sigma2_hat).
double gof_term(const FittedModel& model);

/// Log-likelihood at the MLE.
double max_loglik(std::size_t n, double sigma2_hat);

/// AIC and BIC count r + 1 parameters (the mean coefficients plus sigma^2).
double aic(const FittedModel& model);
double bic(const FittedModel& model);

}  // namespace gofboot
