#include "gofboot/bootstrap.hpp"

#include "gofboot/errors.hpp"
#include "gofboot/gof_variance.hpp"
#include "gofboot/parallel.hpp"
#include "gofboot/regression.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>

namespace gofboot {

namespace {

// ceil(x) that treats values within rounding noise of an integer as that
// integer, so 1000 * 0.975 maps to 975 rather than 976.
std::size_t ceil_rank(double x) {
    const double nearest = std::round(x);
    const double rank = std::fabs(x - nearest) < 1e-9 * std::max(1.0, std::fabs(x))
                            ? nearest
                            : std::ceil(x);
    return static_cast<std::size_t>(std::max(rank, 0.0));
}

std::optional<double> try_var_gof(const Design& design) {
    try {
        const FittedModel fit = fit_design(design);
        return sandwich(fit, design).var_gof;
    } catch (const RankDeficient&) {
    } catch (const DegenerateFit&) {
    } catch (const SingularInformation&) {
    }
    return std::nullopt;
}

void gather_rows(const Design& src, const std::vector<std::size_t>& rows, Design& dst) {
    const auto n = static_cast<Eigen::Index>(rows.size());
    dst.x.resize(n, src.x.cols());
    dst.y.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto row = static_cast<Eigen::Index>(rows[static_cast<std::size_t>(i)]);
        dst.x.row(i) = src.x.row(row);
        dst.y(i) = src.y(row);
    }
}

}  // namespace

void BootstrapConfig::validate() const {
    if (B < 2) {
        throw DomainError("bootstrap iterations must be at least 2, got " + std::to_string(B));
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw DomainError("alpha must lie in (0, 1), got " + std::to_string(alpha));
    }
}

std::vector<std::size_t> resample_indices(std::size_t n, RngStream& rng) {
    std::vector<std::size_t> rows(n);
    for (auto& row : rows) row = rng.below(n);
    return rows;
}

Dataset resample(const Dataset& data, RngStream& rng) {
    return data.select_rows(resample_indices(data.rows(), rng));
}

PercentileInterval percentile_interval(std::vector<double> values, double alpha) {
    if (values.empty()) {
        throw DomainError("percentile interval of an empty sample");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw DomainError("alpha must lie in (0, 1), got " + std::to_string(alpha));
    }
    std::sort(values.begin(), values.end());
    const auto count = values.size();
    const auto b = static_cast<double>(count);
    PercentileInterval out;
    out.low_rank = std::clamp<std::size_t>(ceil_rank(b * alpha / 2.0), 1, count);
    out.high_rank = std::clamp<std::size_t>(ceil_rank(b * (1.0 - alpha / 2.0)), 1, count);
    out.low = values[out.low_rank - 1];
    out.high = values[out.high_rank - 1];
    return out;
}

bool rejects(const PercentileInterval& interval, double reference) {
    return reference < interval.low || reference > interval.high;
}

GofTestResult summarize(double var_gof_observed, std::vector<double> boot_values,
                        std::size_t n, double alpha, std::size_t redraw_count) {
    GofTestResult result;
    const PercentileInterval interval = percentile_interval(boot_values, alpha);
    result.var_gof_observed = var_gof_observed;
    result.boot_values = std::move(boot_values);
    result.interval_low = interval.low;
    result.interval_high = interval.high;
    result.reference = theoretical_var_gof(n);
    result.reject = rejects(interval, result.reference);
    result.redraw_count = redraw_count;
    result.alpha = alpha;
    return result;
}

GofTestResult run_test(const Design& design, const BootstrapConfig& cfg) {
    cfg.validate();
    const FittedModel original = fit_design(design);
    const double observed = sandwich(original, design).var_gof;

    const std::size_t n = design.n();
    std::vector<double> values(cfg.B);
    std::vector<std::size_t> redraws(cfg.B, 0);

    parallel_for(cfg.B, cfg.threads, [&](std::size_t b) {
        RngStream rng(cfg.seed, b);
        Design boot;
        boot.intercept = design.intercept;
        for (std::size_t attempt = 0;; ++attempt) {
            gather_rows(design, resample_indices(n, rng), boot);
            if (const auto v = try_var_gof(boot)) {
                values[b] = *v;
                redraws[b] = attempt;
                return;
            }
            if (attempt >= cfg.max_redraws) {
                throw RedrawLimitExceeded("bootstrap iteration " + std::to_string(b) +
                                          " produced no usable resample after " +
                                          std::to_string(cfg.max_redraws) + " redraws");
            }
        }
    });

    std::size_t total_redraws = 0;
    for (const auto r : redraws) total_redraws += r;
    return summarize(observed, std::move(values), n, cfg.alpha, total_redraws);
}

GofTestResult run_test(const Dataset& data, const ModelSpec& spec, const BootstrapConfig& cfg) {
    return run_test(make_design(data, spec), cfg);
}

}  // namespace gofboot
