#include "cli.hpp"

#include "gofboot/bootstrap.hpp"
#include "gofboot/classical_tests.hpp"
#include "gofboot/csv.hpp"
#include "gofboot/errors.hpp"
#include "gofboot/regression.hpp"
#include "gofboot/report.hpp"
#include "gofboot/simulation.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace gofboot::cli {

namespace {

enum class Format { kText, kJson };

struct DataOptions {
    std::string path;
    std::string response;
    std::vector<std::string> covariates;
    bool no_intercept = false;
};

struct Options {
    DataOptions data;
    double alpha = 0.05;
    std::size_t boot = 1000;
    std::optional<std::uint64_t> seed;
    std::size_t max_redraws = 100;
    unsigned threads = 0;
    int scenario = 1;
    std::size_t n = 0;
    std::size_t reps = 500;
    Format format = Format::kText;
};

void add_data_options(CLI::App* cmd, DataOptions& opt) {
    cmd->add_option("--data", opt.path, "CSV file with a header row")->required();
    cmd->add_option("--response", opt.response, "outcome column")->required();
    cmd->add_option("--covariates", opt.covariates, "comma-separated covariate columns")
        ->delimiter(',');
    cmd->add_flag("--no-intercept", opt.no_intercept, "fit without an intercept column");
}

void add_format_option(CLI::App* cmd, Format& format) {
    const std::map<std::string, Format> formats{{"text", Format::kText}, {"json", Format::kJson}};
    cmd->add_option("--format", format, "output format: text or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

ModelSpec model_spec(const DataOptions& opt) {
    return ModelSpec{opt.response, opt.covariates, !opt.no_intercept};
}

BootstrapConfig bootstrap_config(const Options& opt, std::uint64_t seed) {
    BootstrapConfig cfg;
    cfg.B = opt.boot;
    cfg.alpha = opt.alpha;
    cfg.seed = seed;
    cfg.max_redraws = opt.max_redraws;
    cfg.threads = opt.threads;
    return cfg;
}

int cmd_fit(const Options& opt, std::ostream& out) {
    const Dataset data = ingest_csv(opt.data.path);
    const ModelSpec spec = model_spec(opt.data);
    const Design design = make_design(data, spec);
    FittedModel model = fit_design(design);
    model.spec = spec;
    const FitSummary summary = summarize_fit(model, design);
    if (opt.format == Format::kJson) {
        out << fit_json(summary).dump(2) << "\n";
    } else {
        out << fit_text(summary);
    }
    return kNotRejected;
}

int cmd_test(const Options& opt, std::ostream& out) {
    const Dataset data = ingest_csv(opt.data.path);
    const ModelSpec spec = model_spec(opt.data);
    const Design design = make_design(data, spec);
    FittedModel model = fit_design(design);
    model.spec = spec;

    const std::uint64_t seed = opt.seed ? *opt.seed : [] {
        std::random_device rd;
        return (static_cast<std::uint64_t>(rd()) << 32) | rd();
    }();

    TestSummary summary;
    summary.fit = summarize_fit(model, design);
    summary.seed = seed;
    summary.B = opt.boot;
    summary.bootstrap = run_test(design, bootstrap_config(opt, seed));
    const bool has_covariates = design.r() > (design.intercept ? 1u : 0u);
    if (has_covariates) {
        try {
            summary.white = white_test(model, design);
            summary.breusch_pagan = breusch_pagan(model, design);
        } catch (const RankDeficient& e) {
            summary.white.reset();
            summary.breusch_pagan.reset();
            summary.classical_note = e.what();
        }
    } else {
        summary.classical_note = "model has no non-intercept covariates";
    }

    if (opt.format == Format::kJson) {
        out << test_json(summary).dump(2) << "\n";
    } else {
        out << test_text(summary);
    }
    return summary.bootstrap.reject ? kRejected : kNotRejected;
}

int cmd_simulate(const Options& opt, std::ostream& out) {
    const SimReport report =
        run_monte_carlo(opt.scenario, opt.n, opt.reps, bootstrap_config(opt, *opt.seed));
    if (opt.format == Format::kJson) {
        out << sim_json(report).dump(2) << "\n";
    } else {
        out << sim_text(report);
    }
    return kNotRejected;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bootstrap goodness-of-fit test for normal linear regression", "gofboot"};
    app.require_subcommand(1);
    Options opt;

    auto* fit = app.add_subcommand("fit", "fit a model and report likelihood quantities");
    add_data_options(fit, opt.data);
    add_format_option(fit, opt.format);

    auto* test = app.add_subcommand("test", "run the bootstrap, White and Breusch-Pagan tests");
    add_data_options(test, opt.data);
    add_format_option(test, opt.format);
    test->add_option("--alpha", opt.alpha, "test level")->check(CLI::Range(0.0, 1.0));
    test->add_option("--boot", opt.boot, "bootstrap iterations")->check(CLI::Range(2, 100000000));
    test->add_option("--seed", opt.seed, "master seed (random and printed if omitted)");
    test->add_option("--max-redraws", opt.max_redraws, "retries per degenerate resample");
    test->add_option("--threads", opt.threads, "worker threads (0 = all cores)");

    auto* sim = app.add_subcommand("simulate", "Monte Carlo rejection rates for a scenario");
    add_format_option(sim, opt.format);
    sim->add_option("--scenario", opt.scenario, "scenario 1-4")
        ->required()
        ->check(CLI::Range(1, 4));
    sim->add_option("--n", opt.n, "sample size")->required()->check(CLI::Range(10, 100000000));
    sim->add_option("--reps", opt.reps, "Monte Carlo replicates")->check(CLI::PositiveNumber);
    sim->add_option("--boot", opt.boot, "bootstrap iterations")->check(CLI::Range(2, 100000000));
    sim->add_option("--alpha", opt.alpha, "test level")->check(CLI::Range(0.0, 1.0));
    sim->add_option("--seed", opt.seed, "master seed")->required();
    sim->add_option("--max-redraws", opt.max_redraws, "retries per degenerate resample");
    sim->add_option("--threads", opt.threads, "worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kUsageError;
    }
    if (!(opt.alpha > 0.0 && opt.alpha < 1.0)) {
        err << "gofboot: --alpha must lie strictly between 0 and 1\n";
        return kUsageError;
    }

    try {
        if (fit->parsed()) return cmd_fit(opt, out);
        if (test->parsed()) return cmd_test(opt, out);
        return cmd_simulate(opt, out);
    } catch (const Error& e) {
        err << "gofboot: " << e.what() << "\n";
        return kDataError;
    } catch (const std::exception& e) {
        err << "gofboot: " << e.what() << "\n";
        return kDataError;
    }
}

}  // namespace gofboot::cli
