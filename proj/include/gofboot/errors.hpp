#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gofboot {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the documented domain of a numeric function.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed or inconsistent input data (CSV, dataset construction, model spec).
class DataError : public Error {
public:
    using Error::Error;
};

class InsufficientData : public Error {
public:
    using Error::Error;
};

/// Design matrix (or auxiliary design) does not have full column rank.
class RankDeficient : public Error {
public:
    RankDeficient(std::size_t rank, std::size_t columns)
        : Error("design matrix is rank deficient: rank " + std::to_string(rank) + " < " +
                std::to_string(columns) + " columns"),
          rank_(rank),
          columns_(columns) {}

    std::size_t rank() const noexcept { return rank_; }
    std::size_t columns() const noexcept { return columns_; }

private:
    std::size_t rank_;
    std::size_t columns_;
};

/// Residual variance vanished; log(sigma^2) is unusable.
class DegenerateFit : public Error {
public:
    using Error::Error;
};

class SingularInformation : public Error {
public:
    using Error::Error;
};

class RedrawLimitExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace gofboot
