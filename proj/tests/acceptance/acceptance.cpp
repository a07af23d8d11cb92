// Acceptance suite. Prints one PASS/FAIL line per criterion (with the measured
// values underneath) and exits non-zero if any criterion fails.
//
//   acceptance              criteria 1-9 plus the harness properties
//   acceptance --slow-only  full-scale rows (n = 2500, B = 1000)

#include "cli.hpp"

#include "gofboot/bootstrap.hpp"
#include "gofboot/gof_variance.hpp"
#include "gofboot/regression.hpp"
#include "gofboot/simulation.hpp"
#include "gofboot/special_fn.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

using namespace gofboot;

namespace {

constexpr std::uint64_t kSeed = 20261017;
constexpr std::size_t kReps = 500;
constexpr std::size_t kBoot = 500;
constexpr double kAlpha = 0.05;

class Criterion {
public:
    explicit Criterion(std::string title) : title_(std::move(title)) {}

    void within(const std::string& what, double value, double target, double tol) {
        const bool ok = std::fabs(value - target) <= tol + 1e-12;
        record(ok, what + " = " + fmt(value) + "  (target " + fmt(target) + " +/- " + fmt(tol) + ")");
    }
    void at_least(const std::string& what, double value, double bound) {
        record(value >= bound, what + " = " + fmt(value) + "  (need >= " + fmt(bound) + ")");
    }
    void at_most(const std::string& what, double value, double bound) {
        record(value <= bound, what + " = " + fmt(value) + "  (need <= " + fmt(bound) + ")");
    }
    void holds(const std::string& what, bool ok) { record(ok, what); }

    bool passed() const { return failures_ == 0; }

    void print() const {
        std::printf("[%s] %s\n", passed() ? "PASS" : "FAIL", title_.c_str());
        for (const auto& line : lines_) std::printf("         %s\n", line.c_str());
        std::fflush(stdout);
    }

private:
    static std::string fmt(double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6g", v);
        return buf;
    }
    void record(bool ok, const std::string& text) {
        if (!ok) ++failures_;
        lines_.push_back(std::string(ok ? "ok   " : "MISS ") + text);
    }

    std::string title_;
    std::vector<std::string> lines_;
    int failures_ = 0;
};

class Reports {
public:
    const SimReport& get(int scenario, std::size_t n, std::size_t boot = kBoot) {
        const auto key = std::make_tuple(scenario, n, boot);
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            BootstrapConfig cfg;
            cfg.B = boot;
            cfg.alpha = kAlpha;
            cfg.seed = kSeed;
            cfg.threads = 0;
            const auto start = std::chrono::steady_clock::now();
            SimReport report = run_monte_carlo(scenario, n, kReps, cfg);
            const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
            std::printf("  ran scenario %d, n = %zu, B = %zu: bootstrap %.3f  white %.3f  bp %.3f  (%.1fs)\n",
                        scenario, n, boot, report.rates.bootstrap, report.rates.white,
                        report.rates.breusch_pagan, took.count());
            std::fflush(stdout);
            it = cache_.emplace(key, report).first;
        }
        return it->second;
    }

private:
    std::map<std::tuple<int, std::size_t, std::size_t>, SimReport> cache_;
};

std::string row(int scenario, std::size_t n) {
    return "S" + std::to_string(scenario) + " n=" + std::to_string(n);
}

Criterion type_one_error(Reports& reports) {
    Criterion c("1. Type I error (scenario 1, reps=500, B=500)");
    struct Row { std::size_t n; double boot, white, bp; };
    for (const Row r : {Row{100, 0.094, 0.071, 0.059}, Row{500, 0.088, 0.045, 0.049}, Row{1000, 0.077, 0.053, 0.051}}) {
        const SimReport& s = reports.get(1, r.n);
        c.within(row(1, r.n) + " bootstrap", s.rates.bootstrap, r.boot, 0.04);
        c.within(row(1, r.n) + " white", s.rates.white, r.white, 0.03);
        c.within(row(1, r.n) + " breusch-pagan", s.rates.breusch_pagan, r.bp, 0.03);
    }
    return c;
}

Criterion mean_misspecification(Reports& reports) {
    Criterion c("2. Mean misspecification (scenario 2)");
    const SimReport& s100 = reports.get(2, 100);
    c.within(row(2, 100) + " bootstrap", s100.rates.bootstrap, 0.549, 0.07);
    c.within(row(2, 100) + " white", s100.rates.white, 0.050, 0.03);
    c.within(row(2, 100) + " breusch-pagan", s100.rates.breusch_pagan, 0.043, 0.03);
    const SimReport& s500 = reports.get(2, 500);
    c.at_least(row(2, 500) + " bootstrap", s500.rates.bootstrap, 0.93);
    c.within(row(2, 500) + " white", s500.rates.white, 0.053, 0.03);
    c.within(row(2, 500) + " breusch-pagan", s500.rates.breusch_pagan, 0.049, 0.03);
    return c;
}

Criterion unobserved_heteroskedasticity(Reports& reports) {
    Criterion c("3. Unobserved-covariate heteroskedasticity (scenario 3)");
    const SimReport& s500 = reports.get(3, 500);
    const SimReport& s1000 = reports.get(3, 1000);
    c.at_least(row(3, 500) + " bootstrap", s500.rates.bootstrap, 0.82);
    c.at_least(row(3, 1000) + " bootstrap", s1000.rates.bootstrap, 0.97);
    for (const SimReport* s : {&s500, &s1000}) {
        c.within(row(3, s->n) + " white", s->rates.white, 0.05, 0.03);
        c.within(row(3, s->n) + " breusch-pagan", s->rates.breusch_pagan, 0.05, 0.03);
    }
    return c;
}

Criterion observed_heteroskedasticity(Reports& reports) {
    Criterion c("4. Observed-covariate heteroskedasticity (scenario 4)");
    const SimReport& s100 = reports.get(4, 100);
    c.within(row(4, 100) + " breusch-pagan", s100.rates.breusch_pagan, 0.674, 0.07);
    c.within(row(4, 100) + " white", s100.rates.white, 0.462, 0.07);
    const SimReport& s500 = reports.get(4, 500);
    c.at_least(row(4, 500) + " breusch-pagan", s500.rates.breusch_pagan, 0.99);
    c.at_least(row(4, 500) + " white", s500.rates.white, 0.99);
    c.within(row(4, 500) + " bootstrap", s500.rates.bootstrap, 0.344, 0.06);
    return c;
}

Criterion sandwich_correctness() {
    Criterion c("5. Sandwich path equals closed form; information equals FD Hessian");
    RngStream rng(kSeed, 5);
    double worst_closed = 0.0;
    double worst_hessian = 0.0;
    constexpr int kDatasets = 24;
    for (int k = 0; k < kDatasets; ++k) {
        const std::size_t n = 10 + rng.below(41);
        const std::size_t r = 1 + static_cast<std::size_t>(k % 4);
        const Dataset data = fixtures::random_dataset(rng, n, std::max<std::size_t>(r - 1, 1), k % 3);
        ModelSpec spec = fixtures::all_covariates(data);
        if (r == 1) spec.covariates.clear();
        const Design design = make_design(data, spec);
        const FittedModel fit = fit_design(design);
        const double closed = oracle::var_gof_closed_form(fit.residuals);
        worst_closed = std::max(worst_closed, std::fabs(sandwich(fit, design).var_gof - closed) / closed);

        Eigen::VectorXd theta(fit.r + 1);
        theta << fit.beta_hat, fit.sigma2_hat;
        const Eigen::MatrixXd info = observed_information(fit, design);
        const Eigen::MatrixXd hess = oracle::loglik_hessian(design.x, design.y, theta);
        worst_hessian = std::max(worst_hessian, (info + hess).cwiseAbs().maxCoeff() / info.cwiseAbs().maxCoeff());
    }
    c.holds(std::to_string(kDatasets) + " datasets, n in [10, 50], r in [1, 4]", true);
    c.at_most("max relative |var_gof - closed form|", worst_closed, 1e-8);
    c.at_most("max relative |I_n + FD Hessian|", worst_hessian, 1e-5);
    return c;
}

Criterion asymptotic_consistency() {
    Criterion c("6. Mean var_gof / 2n under scenario 1 (n=2000, 200 replicates)");
    const ModelSpec spec = fitted_spec_for(1);
    double sum = 0.0;
    for (std::uint64_t k = 0; k < 200; ++k) {
        RngStream rng(kSeed ^ 0x6u, k);
        const Dataset data = generate(ScenarioSpec{1, 2000}, rng);
        sum += sandwich(fit_mle(data, spec), data).var_gof / theoretical_var_gof(2000);
    }
    const double mean = sum / 200.0;
    c.at_least("mean ratio", mean, 0.90);
    c.at_most("mean ratio", mean, 1.10);
    return c;
}

Criterion exact_variance() {
    Criterion c("7. Exact finite-sample variance n^2 psi'((n-r)/2)");
    const double oracle_value = 1e4 * oracle::trigamma_series(48.5);
    c.at_most("relative error of exact_var_gof(100, 3) vs series oracle " + std::to_string(oracle_value),
              std::fabs(exact_var_gof(100, 3) - oracle_value) / oracle_value, 1e-6);
    double prev = 1e300;
    bool decreasing = true;
    std::string ratios;
    for (const std::size_t n : {50u, 100u, 500u, 5000u}) {
        const double ratio = exact_var_gof(n, 3) / theoretical_var_gof(n);
        decreasing = decreasing && ratio < prev;
        prev = ratio;
        ratios += std::to_string(ratio) + " ";
    }
    c.holds("ratio to 2n decreasing over n = 50, 100, 500, 5000: " + ratios, decreasing);
    c.at_most("ratio at n = 10^4", exact_var_gof(10000, 3) / theoretical_var_gof(10000), 1.001);
    return c;
}

Criterion special_functions() {
    Criterion c("8. Special functions");
    const double pi2 = std::numbers::pi * std::numbers::pi;
    c.at_most("|trigamma(1) - pi^2/6|", std::fabs(trigamma(1.0) - pi2 / 6.0), 1e-10);
    c.at_most("|trigamma(0.5) - pi^2/2|", std::fabs(trigamma(0.5) - pi2 / 2.0), 1e-10);
    c.within("chi_squared_cdf(3.8414588, 1)", chi_squared_cdf(3.8414588, 1.0), 0.95, 1e-4);
    return c;
}

std::string cli_output(std::vector<std::string> args, int& status) {
    args.insert(args.begin(), "gofboot");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    status = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return out.str();
}

Criterion determinism() {
    Criterion c("9. Bit-identical results for a fixed seed across reruns and thread counts");
    RngStream rng(kSeed, 9);
    const Dataset data = generate(ScenarioSpec{4, 300}, rng);
    BootstrapConfig cfg;
    cfg.B = 400;
    cfg.seed = kSeed;
    std::vector<GofTestResult> runs;
    for (const unsigned threads : {1u, 2u, 5u, 1u}) {
        cfg.threads = threads;
        runs.push_back(run_test(data, fitted_spec_for(4), cfg));
    }
    bool same = true;
    for (const auto& r : runs) {
        same = same && r.boot_values == runs[0].boot_values && r.interval_low == runs[0].interval_low &&
               r.interval_high == runs[0].interval_high && r.reject == runs[0].reject;
    }
    c.holds("run_test with threads 1, 2, 5, 1", same);

    cfg.B = 50;
    cfg.threads = 1;
    const SimReport a = run_monte_carlo(3, 80, 30, cfg);
    cfg.threads = 4;
    const SimReport b = run_monte_carlo(3, 80, 30, cfg);
    c.holds("run_monte_carlo with threads 1 and 4",
            a.rates.bootstrap == b.rates.bootstrap && a.rates.white == b.rates.white &&
                a.rates.breusch_pagan == b.rates.breusch_pagan);

    const std::string csv = PROJECT_DATA_DIR "/heteroskedastic.csv";
    int s1 = 0, s2 = 0, s3 = 0;
    const std::vector<std::string> test_args{"test", "--data", csv, "--response", "y", "--covariates", "x1,x2",
                                             "--boot", "300", "--seed", "42", "--format", "json"};
    auto with = [](std::vector<std::string> args, const char* threads) {
        args.insert(args.end(), {"--threads", threads});
        return args;
    };
    const std::string t1 = cli_output(with(test_args, "1"), s1);
    const std::string t4 = cli_output(with(test_args, "4"), s2);
    const std::string t1b = cli_output(with(test_args, "1"), s3);
    c.holds("gofboot test output, threads 1 / 4 / 1", t1 == t4 && t1 == t1b && s1 == s2 && s1 == s3);

    const std::vector<std::string> sim_args{"simulate", "--scenario", "2", "--n", "100", "--reps", "20",
                                            "--boot", "60", "--seed", "7"};
    const std::string m1 = cli_output(with(sim_args, "1"), s1);
    const std::string m3 = cli_output(with(sim_args, "3"), s2);
    c.holds("gofboot simulate output, threads 1 / 3", m1 == m3 && s1 == 0 && s2 == 0);
    return c;
}

// Harness invariants measured on the same Monte Carlo runs.
Criterion harness_properties(Reports& reports) {
    Criterion c("P. Harness properties: scenario-1 rates near alpha; power grows with n");
    for (const std::size_t n : {500u, 1000u}) {
        const SimReport& s = reports.get(1, n);
        c.within(row(1, n) + " bootstrap", s.rates.bootstrap, 0.05, 0.05);
        c.within(row(1, n) + " white", s.rates.white, 0.05, 0.05);
        c.within(row(1, n) + " breusch-pagan", s.rates.breusch_pagan, 0.05, 0.05);
    }
    for (const int scenario : {2, 3, 4}) {
        int inversions = 0;
        bool large_inversion = false;
        const SimReport* prev = nullptr;
        std::string trend;
        for (const std::size_t n : {100u, 500u, 1000u}) {
            const SimReport& s = reports.get(scenario, n);
            trend += std::to_string(s.rates.bootstrap).substr(0, 5) + " ";
            if (prev && s.rates.bootstrap < prev->rates.bootstrap) {
                ++inversions;
                const double se = std::hypot(s.mc_stderr.bootstrap, prev->mc_stderr.bootstrap);
                large_inversion = large_inversion || prev->rates.bootstrap - s.rates.bootstrap > 2.0 * se;
            }
            prev = &s;
        }
        c.holds("scenario " + std::to_string(scenario) + " bootstrap power over n = 100/500/1000: " + trend,
                inversions <= 1 && !large_inversion);
    }
    return c;
}

Criterion slow_rows(Reports& reports) {
    Criterion c("S. Full-scale rows (scenario 1 n=2500; scenario 2 n=1000; scenario 1 n=500 with B=1000)");
    const SimReport& s2500 = reports.get(1, 2500);
    c.within(row(1, 2500) + " bootstrap", s2500.rates.bootstrap, 0.069, 0.04);
    c.within(row(1, 2500) + " white", s2500.rates.white, 0.046, 0.03);
    c.within(row(1, 2500) + " breusch-pagan", s2500.rates.breusch_pagan, 0.040, 0.03);
    const SimReport& s2 = reports.get(2, 1000);
    c.at_least(row(2, 1000) + " bootstrap", s2.rates.bootstrap, 0.98);
    c.within(row(2, 1000) + " white", s2.rates.white, 0.063, 0.04);
    const SimReport& b1000 = reports.get(1, 500, 1000);
    c.within(row(1, 500) + " B=1000 bootstrap", b1000.rates.bootstrap, 0.088, 0.04);
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    const bool slow_only = argc > 1 && std::string(argv[1]) == "--slow-only";
    Reports reports;
    std::vector<Criterion> results;
    const auto start = std::chrono::steady_clock::now();

    const auto record = [&results](Criterion c) {
        c.print();
        results.push_back(std::move(c));
    };
    if (slow_only) {
        record(slow_rows(reports));
    } else {
        record(special_functions());
        record(exact_variance());
        record(sandwich_correctness());
        record(asymptotic_consistency());
        record(determinism());
        record(type_one_error(reports));
        record(mean_misspecification(reports));
        record(unobserved_heteroskedasticity(reports));
        record(observed_heteroskedasticity(reports));
        record(harness_properties(reports));
    }

    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    int failed = 0;
    for (const auto& r : results) failed += !r.passed();
    std::printf("\n%zu criteria, %d failed (%.0fs)\n", results.size(), failed, took.count());
    return failed == 0 ? 0 : 1;
}
