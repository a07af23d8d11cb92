#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gofboot {

/// A rectangular table of named, finite numeric columns.
///
/// The outcome is an ordinary column; ModelSpec names which one plays that
/// role. Rows are the unit of resampling.
class Dataset {
public:
    Dataset() = default;

    /// Throws DataError on empty/duplicate names, length mismatch, n == 0 or
    /// non-finite values.
    Dataset(std::vector<std::string> names, Eigen::MatrixXd values);

    static Dataset from_columns(std::vector<std::string> names,
                                const std::vector<std::vector<double>>& columns);

    std::size_t rows() const noexcept { return static_cast<std::size_t>(values_.rows()); }
    std::size_t cols() const noexcept { return names_.size(); }

    const std::vector<std::string>& names() const noexcept { return names_; }
    const Eigen::MatrixXd& values() const noexcept { return values_; }

    std::optional<std::size_t> index_of(const std::string& name) const;

    /// Column by name; throws DataError if absent.
    Eigen::VectorXd column(const std::string& name) const;

    /// New dataset made of the given rows (repeats allowed), in that order.
    Dataset select_rows(const std::vector<std::size_t>& rows) const;

private:
    std::vector<std::string> names_;
    Eigen::MatrixXd values_;
};

/// Mean structure of a normal linear model: response ~ [1] + covariates.
struct ModelSpec {
    std::string response;
    std::vector<std::string> covariates;
    bool intercept = true;

    /// Number of mean parameters r.
    std::size_t mean_parameters() const noexcept {
        return covariates.size() + (intercept ? 1 : 0);
    }
};

/// Response vector and design matrix extracted from a dataset.
struct Design {
    Eigen::MatrixXd x;
    Eigen::VectorXd y;
    std::vector<std::string> coefficient_names;
    bool intercept = true;

    std::size_t n() const noexcept { return static_cast<std::size_t>(y.size()); }
    std::size_t r() const noexcept { return static_cast<std::size_t>(x.cols()); }
};

/// Validates the spec against the dataset and builds X (intercept column first).
Design make_design(const Dataset& data, const ModelSpec& spec);

}  // namespace gofboot
