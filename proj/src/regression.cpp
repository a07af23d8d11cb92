#include "gofboot/regression.hpp"

#include "gofboot/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace gofboot {

double max_loglik(std::size_t n, double sigma2_hat) {
    const auto nd = static_cast<double>(n);
    return -0.5 * nd * std::log(2.0 * std::numbers::pi) - 0.5 * nd -
           0.5 * nd * std::log(sigma2_hat);
}

FittedModel fit_design(const Design& design) {
    const std::size_t n = design.n();
    const std::size_t r = design.r();
    if (n <= r) {
        throw InsufficientData("need more observations than mean parameters: n = " +
                               std::to_string(n) + ", r = " + std::to_string(r));
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design.x.rows(), design.x.cols());
    qr.setThreshold(kRankTolerance);
    qr.compute(design.x);
    const auto rank = static_cast<std::size_t>(qr.rank());
    if (rank < r) {
        throw RankDeficient(rank, r);
    }

    FittedModel fit;
    fit.n = n;
    fit.r = r;
    fit.coefficient_names = design.coefficient_names;
    fit.beta_hat = qr.solve(design.y);
    fit.residuals = design.y - design.x * fit.beta_hat;
    fit.sigma2_hat = fit.residuals.squaredNorm() / static_cast<double>(n);

    const double mean_y = design.y.mean();
    const double var_y = (design.y.array() - mean_y).square().mean();
    // A constant outcome has Var(y) = 0; fall back to its second moment.
    const double scale = var_y > 0.0 ? var_y : design.y.squaredNorm() / static_cast<double>(n);
    if (!(fit.sigma2_hat > kDegenerateVarianceRatio * scale)) {
        throw DegenerateFit("residual variance is zero to working precision (sigma2_hat = " +
                            std::to_string(fit.sigma2_hat) + ")");
    }

    // X P = Q R  =>  (X'X)^-1 = P R^-1 R^-T P'
    const auto ri = static_cast<Eigen::Index>(r);
    const Eigen::MatrixXd rinv = qr.matrixR()
                                     .topLeftCorner(ri, ri)
                                     .triangularView<Eigen::Upper>()
                                     .solve(Eigen::MatrixXd::Identity(ri, ri));
    const Eigen::MatrixXd permuted = rinv * rinv.transpose();
    const auto& perm = qr.colsPermutation();
    fit.xtx_inverse = perm * permuted * perm.transpose();

    fit.loglik = max_loglik(n, fit.sigma2_hat);
    return fit;
}

FittedModel fit_mle(const Dataset& data, const ModelSpec& spec) {
    FittedModel fit = fit_design(make_design(data, spec));
    fit.spec = spec;
    return fit;
}

double gof_term(const FittedModel& model) {
    const auto n = static_cast<double>(model.n);
    return n * std::log(2.0 * std::numbers::pi) + n + n * std::log(model.sigma2_hat);
}

double aic(const FittedModel& model) {
    return gof_term(model) + 2.0 * static_cast<double>(model.r + 1);
}

double bic(const FittedModel& model) {
    return gof_term(model) +
           std::log(static_cast<double>(model.n)) * static_cast<double>(model.r + 1);
}

}  // namespace gofboot
