#include "gofboot/dataset.hpp"

#include "gofboot/errors.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>
#include <utility>

namespace gofboot {

Dataset::Dataset(std::vector<std::string> names, Eigen::MatrixXd values)
    : names_(std::move(names)), values_(std::move(values)) {
    if (names_.empty()) {
        throw DataError("dataset has no columns");
    }
    if (static_cast<std::size_t>(values_.cols()) != names_.size()) {
        throw DataError("dataset has " + std::to_string(names_.size()) + " names but " +
                        std::to_string(values_.cols()) + " columns");
    }
    if (values_.rows() < 1) {
        throw DataError("dataset has no rows");
    }
    std::unordered_set<std::string> seen;
    for (const auto& name : names_) {
        if (name.empty()) {
            throw DataError("empty column name");
        }
        if (!seen.insert(name).second) {
            throw DataError("duplicate column name '" + name + "'");
        }
    }
    for (Eigen::Index j = 0; j < values_.cols(); ++j) {
        for (Eigen::Index i = 0; i < values_.rows(); ++i) {
            if (!std::isfinite(values_(i, j))) {
                throw DataError("non-finite value in column '" + names_[j] + "' at row " +
                                std::to_string(i + 1));
            }
        }
    }
}

Dataset Dataset::from_columns(std::vector<std::string> names,
                              const std::vector<std::vector<double>>& columns) {
    if (names.size() != columns.size()) {
        throw DataError("column name count does not match column count");
    }
    const std::size_t n = columns.empty() ? 0 : columns.front().size();
    Eigen::MatrixXd values(n, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != n) {
            throw DataError("column '" + names[j] + "' has length " +
                            std::to_string(columns[j].size()) + ", expected " +
                            std::to_string(n));
        }
        for (std::size_t i = 0; i < n; ++i) {
            values(i, j) = columns[j][i];
        }
    }
    return Dataset(std::move(names), std::move(values));
}

std::optional<std::size_t> Dataset::index_of(const std::string& name) const {
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - names_.begin());
}

Eigen::VectorXd Dataset::column(const std::string& name) const {
    const auto idx = index_of(name);
    if (!idx) {
        throw DataError("no column named '" + name + "'");
    }
    return values_.col(static_cast<Eigen::Index>(*idx));
}

Dataset Dataset::select_rows(const std::vector<std::size_t>& rows) const {
    Eigen::MatrixXd picked(rows.size(), values_.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        picked.row(static_cast<Eigen::Index>(i)) = values_.row(static_cast<Eigen::Index>(rows[i]));
    }
    Dataset out;
    out.names_ = names_;
    out.values_ = std::move(picked);
    return out;
}

Design make_design(const Dataset& data, const ModelSpec& spec) {
    const auto response = data.index_of(spec.response);
    if (!response) {
        throw DataError("response column '" + spec.response + "' not found");
    }
    std::unordered_set<std::string> seen;
    std::vector<std::size_t> columns;
    for (const auto& name : spec.covariates) {
        if (name == spec.response) {
            throw DataError("response '" + name + "' cannot also be a covariate");
        }
        if (!seen.insert(name).second) {
            throw DataError("covariate '" + name + "' listed twice");
        }
        const auto idx = data.index_of(name);
        if (!idx) {
            throw DataError("covariate column '" + name + "' not found");
        }
        columns.push_back(*idx);
    }
    if (spec.mean_parameters() == 0) {
        throw DataError("model has no mean parameters");
    }

    const auto n = static_cast<Eigen::Index>(data.rows());
    const Eigen::Index offset = spec.intercept ? 1 : 0;
    Design design;
    design.intercept = spec.intercept;
    design.y = data.values().col(static_cast<Eigen::Index>(*response));
    design.x.resize(n, offset + static_cast<Eigen::Index>(columns.size()));
    if (spec.intercept) {
        design.x.col(0).setOnes();
        design.coefficient_names.emplace_back("(Intercept)");
    }
    for (std::size_t j = 0; j < columns.size(); ++j) {
        design.x.col(offset + static_cast<Eigen::Index>(j)) =
            data.values().col(static_cast<Eigen::Index>(columns[j]));
        design.coefficient_names.push_back(spec.covariates[j]);
    }
    return design;
}

}  // namespace gofboot
