#pragma once

#include "gofboot/bootstrap.hpp"
#include "gofboot/classical_tests.hpp"
#include "gofboot/gof_variance.hpp"
#include "gofboot/regression.hpp"
#include "gofboot/simulation.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace gofboot {

/// Every reported number goes through these: 6 significant digits, so the
/// text and JSON renderings agree and parse back to the printed value.
std::string format_number(double value);
double round_reported(double value);

/// Quantities printed by `gofboot fit`.
struct FitSummary {
    FittedModel model;
    double gof = 0.0;
    double aic = 0.0;
    double bic = 0.0;
    double var_gof = 0.0;
    double reference = 0.0;
    double exact_var = 0.0;
};

FitSummary summarize_fit(const FittedModel& model, const Design& design);

/// Everything `gofboot test` reports.
struct TestSummary {
    FitSummary fit;
    GofTestResult bootstrap;
    std::uint64_t seed = 0;
    std::size_t B = 0;
    std::optional<AuxTestResult> white;
    std::optional<AuxTestResult> breusch_pagan;
    std::string classical_note;  ///< why classical tests were skipped, if they were
};

nlohmann::ordered_json fit_json(const FitSummary& fit);
nlohmann::ordered_json test_json(const TestSummary& test);
nlohmann::ordered_json sim_json(const SimReport& report);

std::string fit_text(const FitSummary& fit);
std::string test_text(const TestSummary& test);
std::string sim_text(const SimReport& report);

}  // namespace gofboot
