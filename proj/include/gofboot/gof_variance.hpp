#pragma once

#include "gofboot/dataset.hpp"
#include "gofboot/regression.hpp"

#include <Eigen/Dense>

#include <cstddef>

namespace gofboot {

/// Robust (sandwich) estimate of the variance of the goodness-of-fit term.
///
/// Parameters are ordered [beta (r entries), sigma^2]; all matrices are
/// (r+1) x (r+1) and evaluated at the MLE.
struct SandwichEstimate {
    Eigen::MatrixXd observed_info;    ///< I_n(theta_hat), the negated Hessian of log L
    Eigen::MatrixXd score_outer_sum;  ///< sum_i U_i U_i'
    Eigen::MatrixXd c_n;              ///< n I_n^-1 (sum_i U_i U_i') I_n^-1
    double s_n = 0.0;                 ///< bottom-right element of c_n
    double var_gof = 0.0;             ///< (n / sigma2_hat^2) s_n
};

/// Largest condition number of the (diagonally scaled) information matrix
/// accepted before SingularInformation is raised.
inline constexpr double kMaxInformationCondition = 1e12;

/// Per-observation score vectors, one row per observation:
/// [ e_i x_i / s2 , -1/(2 s2) + e_i^2 / (2 s2^2) ].
Eigen::MatrixXd score_components(const FittedModel& model, const Design& design);
Eigen::MatrixXd score_components(const FittedModel& model, const Dataset& data);

/// Observed information I_n(theta_hat). Throws SingularInformation when it
/// cannot be inverted reliably.
Eigen::MatrixXd observed_information(const FittedModel& model, const Design& design);
Eigen::MatrixXd observed_information(const FittedModel& model, const Dataset& data);

SandwichEstimate sandwich(const FittedModel& model, const Design& design);
SandwichEstimate sandwich(const FittedModel& model, const Dataset& data);

/// Asymptotic variance of -2 log L under correct specification: 2n.
double theoretical_var_gof(std::size_t n);

/// Finite-sample variance n^2 psi'((n - r) / 2) of -2 log L for a correctly
/// specified normal linear model with r mean parameters. Throws DomainError
/// unless n > r.
double exact_var_gof(std::size_t n, std::size_t r);

}  // namespace gofboot
