#pragma once

#include "gofboot/dataset.hpp"
#include "gofboot/rng.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace gofboot::fixtures {

/// x = (0, 1, 2), y = (0, 1, 3).
inline Dataset three_points() {
    return Dataset::from_columns({"y", "x"}, {{0.0, 1.0, 3.0}, {0.0, 1.0, 2.0}});
}

inline ModelSpec line_on(const std::string& x = "x") {
    return ModelSpec{"y", {x}, true};
}

/// y = 1 + sum_j 0.5 x_j + noise with heavy-tailed or skewed noise depending on
/// `style`, so that specification varies from correct to badly wrong.
inline Dataset random_dataset(RngStream& rng, std::size_t n, std::size_t covariates, int style) {
    std::vector<std::string> names{"y"};
    for (std::size_t j = 0; j < covariates; ++j) names.push_back("x" + std::to_string(j + 1));
    Eigen::MatrixXd values(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(covariates + 1));
    for (Eigen::Index i = 0; i < values.rows(); ++i) {
        double mean = 1.0;
        for (Eigen::Index j = 1; j < values.cols(); ++j) {
            values(i, j) = rng.uniform(-2.0, 3.0);
            mean += 0.5 * values(i, j);
        }
        double noise = rng.normal();
        if (style == 1) noise = noise * noise * noise;                  // heavy tails
        if (style == 2) noise *= 0.2 + std::fabs(values(i, std::min<Eigen::Index>(1, values.cols() - 1)));
        values(i, 0) = mean + noise;
    }
    return Dataset(names, values);
}

inline ModelSpec all_covariates(const Dataset& data, bool intercept = true) {
    ModelSpec spec{"y", {}, intercept};
    for (std::size_t j = 1; j < data.cols(); ++j) spec.covariates.push_back(data.names()[j]);
    return spec;
}

}  // namespace gofboot::fixtures
