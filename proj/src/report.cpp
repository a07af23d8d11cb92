#include "gofboot/report.hpp"

#include <cstdio>
#include <sstream>
#include <string>

namespace gofboot {

namespace {

using nlohmann::ordered_json;

ordered_json aux_json(const AuxTestResult& r, double alpha) {
    ordered_json j;
    j["statistic"] = round_reported(r.statistic);
    j["df"] = r.df;
    j["p_value"] = round_reported(r.p_value);
    j["reject"] = r.reject_at(alpha);
    return j;
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string lpad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string decision(bool reject) {
    return reject ? "reject" : "fail to reject";
}

}  // namespace

std::string format_number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

double round_reported(double value) {
    return std::stod(format_number(value));
}

FitSummary summarize_fit(const FittedModel& model, const Design& design) {
    FitSummary s;
    s.model = model;
    s.gof = gof_term(model);
    s.aic = aic(model);
    s.bic = bic(model);
    s.var_gof = sandwich(model, design).var_gof;
    s.reference = theoretical_var_gof(model.n);
    s.exact_var = exact_var_gof(model.n, model.r);
    return s;
}

ordered_json fit_json(const FitSummary& fit) {
    ordered_json j;
    j["n"] = fit.model.n;
    j["r"] = fit.model.r;
    j["coefficients"] = fit.model.coefficient_names;
    ordered_json beta = ordered_json::array();
    for (Eigen::Index i = 0; i < fit.model.beta_hat.size(); ++i) {
        beta.push_back(round_reported(fit.model.beta_hat(i)));
    }
    j["beta_hat"] = beta;
    j["sigma2_hat"] = round_reported(fit.model.sigma2_hat);
    j["gof_term"] = round_reported(fit.gof);
    j["aic"] = round_reported(fit.aic);
    j["bic"] = round_reported(fit.bic);
    j["var_gof"] = round_reported(fit.var_gof);
    j["reference"] = round_reported(fit.reference);
    j["exact_var_gof"] = round_reported(fit.exact_var);
    return j;
}

ordered_json test_json(const TestSummary& test) {
    ordered_json j = fit_json(test.fit);
    const auto& b = test.bootstrap;
    j["var_gof"] = round_reported(b.var_gof_observed);
    j["interval"] = {round_reported(b.interval_low), round_reported(b.interval_high)};
    j["reference"] = round_reported(b.reference);
    j["reject"] = b.reject;
    j["redraw_count"] = b.redraw_count;
    j["seed"] = test.seed;
    j["B"] = test.B;
    j["alpha"] = round_reported(b.alpha);
    j["white"] = test.white ? aux_json(*test.white, b.alpha) : ordered_json(nullptr);
    j["breusch_pagan"] =
        test.breusch_pagan ? aux_json(*test.breusch_pagan, b.alpha) : ordered_json(nullptr);
    if (!test.classical_note.empty()) j["classical_note"] = test.classical_note;
    return j;
}

ordered_json sim_json(const SimReport& report) {
    ordered_json j;
    j["scenario"] = report.scenario;
    j["n"] = report.n;
    j["reps"] = report.reps;
    j["excluded"] = report.excluded;
    j["B"] = report.B;
    j["alpha"] = round_reported(report.alpha);
    j["seed"] = report.seed;
    j["rates"] = {{"bootstrap", round_reported(report.rates.bootstrap)},
                  {"white", round_reported(report.rates.white)},
                  {"breusch_pagan", round_reported(report.rates.breusch_pagan)}};
    j["mc_stderr"] = {{"bootstrap", round_reported(report.mc_stderr.bootstrap)},
                      {"white", round_reported(report.mc_stderr.white)},
                      {"breusch_pagan", round_reported(report.mc_stderr.breusch_pagan)}};
    return j;
}

std::string fit_text(const FitSummary& fit) {
    std::ostringstream out;
    const auto& m = fit.model;
    out << "n = " << m.n << ", r = " << m.r << "\n";
    out << "coefficients:\n";
    std::size_t width = 4;
    for (const auto& name : m.coefficient_names) width = std::max(width, name.size());
    for (std::size_t i = 0; i < m.coefficient_names.size(); ++i) {
        out << "  " << pad(m.coefficient_names[i], width) << "  "
            << format_number(m.beta_hat(static_cast<Eigen::Index>(i))) << "\n";
    }
    out << "sigma2_hat (MLE, divisor n)  " << format_number(m.sigma2_hat) << "\n";
    out << "-2 loglik (gof term)         " << format_number(fit.gof) << "\n";
    out << "AIC                          " << format_number(fit.aic) << "\n";
    out << "BIC                          " << format_number(fit.bic) << "\n";
    out << "var_gof (sandwich)           " << format_number(fit.var_gof) << "\n";
    out << "reference 2n                 " << format_number(fit.reference) << "\n";
    out << "exact variance               " << format_number(fit.exact_var) << "\n";
    return out.str();
}

std::string test_text(const TestSummary& test) {
    std::ostringstream out;
    out << fit_text(test.fit);
    const auto& b = test.bootstrap;
    const auto level = format_number(100.0 * (1.0 - b.alpha));
    out << "\nbootstrap goodness-of-fit test (B = " << test.B << ", seed = " << test.seed
        << ")\n";
    out << "  " << level << "% percentile interval  [" << format_number(b.interval_low) << ", "
        << format_number(b.interval_high) << "]\n";
    out << "  reference 2n                 " << format_number(b.reference) << "\n";
    out << "  redraws                      " << b.redraw_count << "\n";
    out << "  decision                     " << decision(b.reject) << "\n";
    const auto aux = [&](const char* name, const std::optional<AuxTestResult>& r) {
        out << "\n" << name << "\n";
        if (!r) {
            out << "  skipped: " << test.classical_note << "\n";
            return;
        }
        out << "  statistic (n R^2)            " << format_number(r->statistic) << "\n";
        out << "  df                           " << r->df << "\n";
        out << "  p-value                      " << format_number(r->p_value) << "\n";
        out << "  decision                     " << decision(r->reject_at(b.alpha)) << "\n";
    };
    aux("White test", test.white);
    aux("Breusch-Pagan test (studentized)", test.breusch_pagan);
    return out.str();
}

std::string sim_text(const SimReport& report) {
    std::ostringstream out;
    out << "scenario " << report.scenario << "  (reps = " << report.reps << ", B = " << report.B
        << ", alpha = " << format_number(report.alpha) << ", seed = " << report.seed;
    if (report.excluded != 0) out << ", excluded = " << report.excluded;
    out << ")\n";
    out << lpad("n", 6) << " | " << lpad("Bootstrap Test", 14) << " | " << lpad("White Test", 14)
        << " | " << lpad("Breusch-Pagan Test", 18) << "\n";
    out << std::string(6, '-') << "-+-" << std::string(14, '-') << "-+-" << std::string(14, '-')
        << "-+-" << std::string(18, '-') << "\n";
    char row[128];
    std::snprintf(row, sizeof row, "%6zu | %14.3f | %14.3f | %18.3f\n", report.n,
                  report.rates.bootstrap, report.rates.white, report.rates.breusch_pagan);
    out << row;
    std::snprintf(row, sizeof row, "%6s | %14.3f | %14.3f | %18.3f\n", "(se)",
                  report.mc_stderr.bootstrap, report.mc_stderr.white,
                  report.mc_stderr.breusch_pagan);
    out << row;
    return out.str();
}

}  // namespace gofboot
