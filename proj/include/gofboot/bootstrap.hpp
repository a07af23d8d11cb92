#pragma once

#include "gofboot/dataset.hpp"
#include "gofboot/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gofboot {

struct BootstrapConfig {
    std::size_t B = 1000;  ///< bootstrap iterations, >= 2
    double alpha = 0.05;   ///< test level in (0, 1)
    std::uint64_t seed = 0;
    std::size_t max_redraws = 100;  ///< per-iteration retries for degenerate resamples
    /// Worker cap (0 = hardware concurrency). Results do not depend on it.
    unsigned threads = 1;

    /// Throws DomainError if B < 2 or alpha is outside (0, 1).
    void validate() const;
};

struct PercentileInterval {
    double low = 0.0;
    double high = 0.0;
    std::size_t low_rank = 0;   ///< 1-based order statistic
    std::size_t high_rank = 0;  ///< 1-based order statistic
};

struct GofTestResult {
    double var_gof_observed = 0.0;
    std::vector<double> boot_values;  ///< in iteration order
    double interval_low = 0.0;
    double interval_high = 0.0;
    double reference = 0.0;  ///< 2n
    bool reject = false;
    std::size_t redraw_count = 0;
    double alpha = 0.05;
};

/// Case resampling: n rows drawn uniformly with replacement, each row keeping
/// its outcome and covariates together.
Dataset resample(const Dataset& data, RngStream& rng);

/// Row indices of one case resample of n rows.
std::vector<std::size_t> resample_indices(std::size_t n, RngStream& rng);

/// Percentile interval from order statistics ceil(B alpha/2) and
/// ceil(B (1 - alpha/2)) (1-based, clamped to [1, B]).
PercentileInterval percentile_interval(std::vector<double> values, double alpha);

/// Rejects when reference lies outside [low, high].
bool rejects(const PercentileInterval& interval, double reference);

/// Assembles a result from already computed bootstrap values.
GofTestResult summarize(double var_gof_observed, std::vector<double> boot_values,
                        std::size_t n, double alpha, std::size_t redraw_count);

/// Bootstrap goodness-of-fit test of a normal linear model.
///
/// Iteration b resamples rows with the stream derived from (cfg.seed, b),
/// refits the model and records the sandwich variance estimate of -2 log L.
/// Resamples whose fit fails (rank deficiency, zero residual variance,
/// singular information) are redrawn from the same stream; an iteration that
/// needs more than cfg.max_redraws redraws raises RedrawLimitExceeded. The
/// null of correct specification is rejected when the percentile interval
/// excludes 2n.
GofTestResult run_test(const Dataset& data, const ModelSpec& spec, const BootstrapConfig& cfg);

/// Same test on an already extracted design.
GofTestResult run_test(const Design& design, const BootstrapConfig& cfg);

}  // namespace gofboot
