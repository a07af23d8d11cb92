#include "gofboot/simulation.hpp"

#include "gofboot/classical_tests.hpp"
#include "gofboot/errors.hpp"
#include "gofboot/parallel.hpp"
#include "gofboot/regression.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace gofboot {

namespace {

constexpr double kBeta = 2.0;
constexpr double kCovariateUpper = 5.0;

enum class Outcome : unsigned char { kExcluded, kDone };

struct ReplicateResult {
    Outcome outcome = Outcome::kExcluded;
    bool bootstrap = false;
    bool white = false;
    bool breusch_pagan = false;
};

double stderr_of(double p, std::size_t reps) {
    return std::sqrt(p * (1.0 - p) / static_cast<double>(reps));
}

}  // namespace

void ScenarioSpec::validate() const {
    if (id < 1 || id > 4) {
        throw DomainError("scenario id must be 1, 2, 3 or 4, got " + std::to_string(id));
    }
    if (n < 10) {
        throw DomainError("scenario sample size must be at least 10, got " + std::to_string(n));
    }
}

Dataset generate(const ScenarioSpec& spec, RngStream& rng) {
    spec.validate();
    const auto n = static_cast<Eigen::Index>(spec.n);
    const bool expose_x2 = spec.id != 2;
    Eigen::MatrixXd values(n, expose_x2 ? 3 : 2);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double x1 = kCovariateUpper * rng.uniform();
        const double x2 = kCovariateUpper * rng.uniform();
        double sd = 2.0;
        if (spec.id == 3) {
            const double x3 = kCovariateUpper * rng.uniform();
            sd = 2.0 + x3;
        } else if (spec.id == 4) {
            sd = 2.0 + 0.5 * x2;
        }
        const double eps = sd * rng.normal();
        values(i, 0) = kBeta + kBeta * x1 + kBeta * x2 + eps;
        values(i, 1) = x1;
        if (expose_x2) values(i, 2) = x2;
    }
    if (expose_x2) {
        return Dataset({"y", "x1", "x2"}, std::move(values));
    }
    return Dataset({"y", "x1"}, std::move(values));
}

ModelSpec fitted_spec_for(int id) {
    ScenarioSpec{id, 10}.validate();
    if (id == 2) {
        return ModelSpec{"y", {"x1"}, true};
    }
    return ModelSpec{"y", {"x1", "x2"}, true};
}

SimReport run_monte_carlo(int id, std::size_t n, std::size_t reps, const BootstrapConfig& cfg) {
    const ScenarioSpec scenario{id, n};
    scenario.validate();
    cfg.validate();
    if (reps < 1) {
        throw DomainError("at least one replicate is required");
    }
    const ModelSpec model_spec = fitted_spec_for(id);

    std::vector<ReplicateResult> results(reps);
    parallel_for(reps, cfg.threads, [&](std::size_t k) {
        RngStream rng(cfg.seed, k);
        const Dataset data = generate(scenario, rng);
        BootstrapConfig inner = cfg;
        inner.seed = rng.next_u64();
        inner.threads = 1;
        ReplicateResult& out = results[k];
        try {
            const Design design = make_design(data, model_spec);
            const FittedModel fit = fit_design(design);
            out.bootstrap = run_test(design, inner).reject;
            out.white = white_test(fit, design).reject_at(cfg.alpha);
            out.breusch_pagan = breusch_pagan(fit, design).reject_at(cfg.alpha);
            out.outcome = Outcome::kDone;
        } catch (const RankDeficient&) {
        } catch (const DegenerateFit&) {
        } catch (const SingularInformation&) {
        } catch (const RedrawLimitExceeded&) {
        }
    });

    SimReport report;
    report.scenario = id;
    report.n = n;
    report.reps = reps;
    report.B = cfg.B;
    report.alpha = cfg.alpha;
    report.seed = cfg.seed;

    std::size_t used = 0;
    std::size_t boot = 0;
    std::size_t white = 0;
    std::size_t bp = 0;
    for (const auto& r : results) {
        if (r.outcome != Outcome::kDone) {
            ++report.excluded;
            continue;
        }
        ++used;
        boot += r.bootstrap;
        white += r.white;
        bp += r.breusch_pagan;
    }
    if (static_cast<double>(report.excluded) > kMaxExcludedFraction * static_cast<double>(reps)) {
        throw Error("Monte Carlo run aborted: " + std::to_string(report.excluded) + " of " +
                    std::to_string(reps) + " replicates failed to fit");
    }

    const auto rate = [used](std::size_t hits) {
        return static_cast<double>(hits) / static_cast<double>(used);
    };
    report.rates = {rate(boot), rate(white), rate(bp)};
    report.mc_stderr = {stderr_of(report.rates.bootstrap, used),
                        stderr_of(report.rates.white, used),
                        stderr_of(report.rates.breusch_pagan, used)};
    return report;
}

}  // namespace gofboot
