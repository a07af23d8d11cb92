#include "gofboot/gof_variance.hpp"

#include "gofboot/errors.hpp"
#include "gofboot/special_fn.hpp"

#include <cmath>
#include <string>

namespace gofboot {

namespace {

Design design_for(const FittedModel& model, const Dataset& data) {
    if (model.spec.response.empty()) {
        throw DataError("model was fitted without a ModelSpec; pass its Design instead");
    }
    return make_design(data, model.spec);
}

void check_shapes(const FittedModel& model, const Design& design) {
    if (design.n() != model.n || design.r() != model.r) {
        throw DataError("design (" + std::to_string(design.n()) + " x " +
                        std::to_string(design.r()) + ") does not match the fitted model (" +
                        std::to_string(model.n) + " x " + std::to_string(model.r) + ")");
    }
}

// Inverse of a symmetric positive definite information matrix. The condition
// check runs on the unit-diagonal rescaling so that the units of sigma^2 do
// not register as ill-conditioning.
Eigen::MatrixXd invert_information(const Eigen::MatrixXd& info) {
    const Eigen::VectorXd diag = info.diagonal();
    if ((diag.array() <= 0.0).any() || !diag.allFinite()) {
        throw SingularInformation("information matrix has a non-positive diagonal");
    }
    const Eigen::VectorXd scale = diag.cwiseSqrt().cwiseInverse();
    const Eigen::MatrixXd scaled = scale.asDiagonal() * info * scale.asDiagonal();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(scaled, Eigen::EigenvaluesOnly);
    const double lo = eig.eigenvalues().minCoeff();
    const double hi = eig.eigenvalues().maxCoeff();
    if (!(lo > 0.0) || hi / lo > kMaxInformationCondition) {
        throw SingularInformation("information matrix is singular or ill-conditioned "
                                  "(scaled eigenvalues " +
                                  std::to_string(lo) + " .. " + std::to_string(hi) + ")");
    }
    const Eigen::LDLT<Eigen::MatrixXd> ldlt(scaled);
    const Eigen::MatrixXd scaled_inv =
        ldlt.solve(Eigen::MatrixXd::Identity(scaled.rows(), scaled.cols()));
    return scale.asDiagonal() * scaled_inv * scale.asDiagonal();
}

}  // namespace

Eigen::MatrixXd score_components(const FittedModel& model, const Design& design) {
    check_shapes(model, design);
    const auto n = static_cast<Eigen::Index>(model.n);
    const auto r = static_cast<Eigen::Index>(model.r);
    const double s2 = model.sigma2_hat;
    const Eigen::VectorXd& e = model.residuals;

    Eigen::MatrixXd scores(n, r + 1);
    scores.leftCols(r) = design.x.array().colwise() * (e.array() / s2);
    scores.col(r) = (-0.5 / s2) + e.array().square() / (2.0 * s2 * s2);
    return scores;
}

Eigen::MatrixXd score_components(const FittedModel& model, const Dataset& data) {
    return score_components(model, design_for(model, data));
}

Eigen::MatrixXd observed_information(const FittedModel& model, const Design& design) {
    check_shapes(model, design);
    const auto r = static_cast<Eigen::Index>(model.r);
    const auto n = static_cast<double>(model.n);
    const double s2 = model.sigma2_hat;
    const Eigen::VectorXd& e = model.residuals;

    Eigen::MatrixXd info(r + 1, r + 1);
    info.topLeftCorner(r, r) = design.x.transpose() * design.x / s2;
    const Eigen::VectorXd cross = design.x.transpose() * e / (s2 * s2);
    info.topRightCorner(r, 1) = cross;
    info.bottomLeftCorner(1, r) = cross.transpose();
    info(r, r) = -n / (2.0 * s2 * s2) + e.squaredNorm() / (s2 * s2 * s2);
    return info;
}

Eigen::MatrixXd observed_information(const FittedModel& model, const Dataset& data) {
    return observed_information(model, design_for(model, data));
}

SandwichEstimate sandwich(const FittedModel& model, const Design& design) {
    SandwichEstimate est;
    est.observed_info = observed_information(model, design);
    const Eigen::MatrixXd info_inv = invert_information(est.observed_info);

    const Eigen::MatrixXd scores = score_components(model, design);
    est.score_outer_sum = scores.transpose() * scores;

    const auto n = static_cast<double>(model.n);
    const Eigen::MatrixXd c = n * info_inv * est.score_outer_sum * info_inv;
    est.c_n = 0.5 * (c + c.transpose());

    const Eigen::Index last = est.c_n.rows() - 1;
    est.s_n = est.c_n(last, last);
    est.var_gof = n / (model.sigma2_hat * model.sigma2_hat) * est.s_n;
    return est;
}

SandwichEstimate sandwich(const FittedModel& model, const Dataset& data) {
    return sandwich(model, design_for(model, data));
}

double theoretical_var_gof(std::size_t n) {
    return 2.0 * static_cast<double>(n);
}

double exact_var_gof(std::size_t n, std::size_t r) {
    if (n <= r) {
        throw DomainError("exact variance needs n > r (n = " + std::to_string(n) +
                          ", r = " + std::to_string(r) + ")");
    }
    const auto nd = static_cast<double>(n);
    return nd * nd * trigamma(0.5 * static_cast<double>(n - r));
}

}  // namespace gofboot
