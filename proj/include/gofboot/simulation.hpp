#pragma once

#include "gofboot/bootstrap.hpp"
#include "gofboot/dataset.hpp"
#include "gofboot/rng.hpp"

#include <cstddef>
#include <cstdint>

namespace gofboot {

/// The four data-generating processes. All share
/// y = 2 + 2 x1 + 2 x2 + e with x_j ~ Uniform(0, 5) iid.
///   1: e ~ N(0, 4); fitted y ~ x1 + x2 (correct)
///   2: e ~ N(0, 4); fitted y ~ x1 (x2 omitted and unobserved)
///   3: e ~ N(0, (2 + x3)^2), x3 unobserved; fitted y ~ x1 + x2
///   4: e ~ N(0, (2 + 0.5 x2)^2); fitted y ~ x1 + x2
struct ScenarioSpec {
    int id = 1;
    std::size_t n = 100;

    /// Throws DomainError unless id is 1..4 and n >= 10.
    void validate() const;
};

/// Draws one dataset. Only the columns a fitted model may see are returned:
/// {y, x1} for scenario 2, {y, x1, x2} otherwise.
Dataset generate(const ScenarioSpec& spec, RngStream& rng);

ModelSpec fitted_spec_for(int id);

struct RejectionRates {
    double bootstrap = 0.0;
    double white = 0.0;
    double breusch_pagan = 0.0;
};

struct SimReport {
    int scenario = 1;
    std::size_t n = 0;
    std::size_t reps = 0;       ///< replicates requested
    std::size_t B = 0;
    double alpha = 0.05;
    std::uint64_t seed = 0;
    std::size_t excluded = 0;   ///< replicates dropped after a fit failure
    RejectionRates rates;
    RejectionRates mc_stderr;   ///< sqrt(p (1 - p) / used replicates)
};

/// Largest fraction of replicates that may fail before the run aborts.
inline constexpr double kMaxExcludedFraction = 0.001;

/// Monte Carlo rejection rates of the bootstrap, White and Breusch-Pagan tests.
///
/// Replicate k draws its data from the stream derived from (cfg.seed, k) and
/// seeds its bootstrap from that stream, so the report depends only on the
/// arguments. Replicates run on up to cfg.threads workers; the bootstrap
/// inside each replicate runs serially.
SimReport run_monte_carlo(int id, std::size_t n, std::size_t reps, const BootstrapConfig& cfg);

}  // namespace gofboot
