#include "gofboot/bootstrap.hpp"
#include "gofboot/classical_tests.hpp"
#include "gofboot/csv.hpp"
#include "gofboot/dataset.hpp"
#include "gofboot/errors.hpp"
#include "gofboot/gof_variance.hpp"
#include "gofboot/regression.hpp"
#include "gofboot/simulation.hpp"
#include "gofboot/special_fn.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace gofboot;

namespace {

// {"y": array, "x1": array, ...} in insertion order.
Dataset dataset_from_mapping(const py::dict& columns) {
    std::vector<std::string> names;
    std::vector<std::vector<double>> values;
    for (const auto& [key, value] : columns) {
        names.push_back(py::cast<std::string>(key));
        values.push_back(py::cast<std::vector<double>>(value));
    }
    return Dataset::from_columns(std::move(names), values);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bootstrap goodness-of-fit test for normal linear regression";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<DataError>(m, "DataError", base.ptr());
    py::register_exception<InsufficientData>(m, "InsufficientData", base.ptr());
    py::register_exception<RankDeficient>(m, "RankDeficient", base.ptr());
    py::register_exception<DegenerateFit>(m, "DegenerateFit", base.ptr());
    py::register_exception<SingularInformation>(m, "SingularInformation", base.ptr());
    py::register_exception<RedrawLimitExceeded>(m, "RedrawLimitExceeded", base.ptr());

    m.def("trigamma", &trigamma, py::arg("x"));
    m.def("chi_squared_cdf", &chi_squared_cdf, py::arg("x"), py::arg("df"));

    py::class_<Dataset>(m, "Dataset")
        .def(py::init<std::vector<std::string>, Eigen::MatrixXd>(), py::arg("names"),
             py::arg("values"))
        .def(py::init(&dataset_from_mapping), py::arg("columns"))
        .def_property_readonly("names", &Dataset::names)
        .def_property_readonly("values", &Dataset::values)
        .def_property_readonly("n", &Dataset::rows)
        .def("column", &Dataset::column, py::arg("name"))
        .def("__len__", &Dataset::rows);

    py::class_<ModelSpec>(m, "ModelSpec")
        .def(py::init<std::string, std::vector<std::string>, bool>(), py::arg("response"),
             py::arg("covariates"), py::arg("intercept") = true)
        .def_readwrite("response", &ModelSpec::response)
        .def_readwrite("covariates", &ModelSpec::covariates)
        .def_readwrite("intercept", &ModelSpec::intercept);

    py::class_<FittedModel>(m, "FittedModel")
        .def_readonly("beta_hat", &FittedModel::beta_hat)
        .def_readonly("sigma2_hat", &FittedModel::sigma2_hat)
        .def_readonly("residuals", &FittedModel::residuals)
        .def_readonly("n", &FittedModel::n)
        .def_readonly("r", &FittedModel::r)
        .def_readonly("loglik", &FittedModel::loglik)
        .def_readonly("xtx_inverse", &FittedModel::xtx_inverse)
        .def_readonly("coefficient_names", &FittedModel::coefficient_names);

    py::class_<SandwichEstimate>(m, "SandwichEstimate")
        .def_readonly("observed_info", &SandwichEstimate::observed_info)
        .def_readonly("score_outer_sum", &SandwichEstimate::score_outer_sum)
        .def_readonly("c_n", &SandwichEstimate::c_n)
        .def_readonly("s_n", &SandwichEstimate::s_n)
        .def_readonly("var_gof", &SandwichEstimate::var_gof);

    py::class_<BootstrapConfig>(m, "BootstrapConfig")
        .def(py::init([](std::size_t B, double alpha, std::uint64_t seed,
                         std::size_t max_redraws, unsigned threads) {
                 BootstrapConfig cfg{B, alpha, seed, max_redraws, threads};
                 cfg.validate();
                 return cfg;
             }),
             py::arg("B") = 1000, py::arg("alpha") = 0.05, py::arg("seed") = 0,
             py::arg("max_redraws") = 100, py::arg("threads") = 1)
        .def_readwrite("B", &BootstrapConfig::B)
        .def_readwrite("alpha", &BootstrapConfig::alpha)
        .def_readwrite("seed", &BootstrapConfig::seed)
        .def_readwrite("max_redraws", &BootstrapConfig::max_redraws)
        .def_readwrite("threads", &BootstrapConfig::threads);

    py::class_<GofTestResult>(m, "GofTestResult")
        .def_readonly("var_gof_observed", &GofTestResult::var_gof_observed)
        .def_readonly("boot_values", &GofTestResult::boot_values)
        .def_readonly("interval_low", &GofTestResult::interval_low)
        .def_readonly("interval_high", &GofTestResult::interval_high)
        .def_readonly("reference", &GofTestResult::reference)
        .def_readonly("reject", &GofTestResult::reject)
        .def_readonly("redraw_count", &GofTestResult::redraw_count)
        .def_readonly("alpha", &GofTestResult::alpha);

    py::class_<AuxTestResult>(m, "AuxTestResult")
        .def_readonly("statistic", &AuxTestResult::statistic)
        .def_readonly("df", &AuxTestResult::df)
        .def_readonly("p_value", &AuxTestResult::p_value)
        .def_readonly("r_squared", &AuxTestResult::r_squared)
        .def_readonly("regressors", &AuxTestResult::regressors)
        .def("reject_at", &AuxTestResult::reject_at, py::arg("alpha"));

    py::class_<RejectionRates>(m, "RejectionRates")
        .def_readonly("bootstrap", &RejectionRates::bootstrap)
        .def_readonly("white", &RejectionRates::white)
        .def_readonly("breusch_pagan", &RejectionRates::breusch_pagan);

    py::class_<SimReport>(m, "SimReport")
        .def_readonly("scenario", &SimReport::scenario)
        .def_readonly("n", &SimReport::n)
        .def_readonly("reps", &SimReport::reps)
        .def_readonly("B", &SimReport::B)
        .def_readonly("alpha", &SimReport::alpha)
        .def_readonly("seed", &SimReport::seed)
        .def_readonly("excluded", &SimReport::excluded)
        .def_readonly("rates", &SimReport::rates)
        .def_readonly("mc_stderr", &SimReport::mc_stderr);

    m.def("read_csv", &ingest_csv, py::arg("path"));
    m.def("fit_mle", &fit_mle, py::arg("data"), py::arg("spec"));
    m.def("gof_term", &gof_term, py::arg("model"));
    m.def("aic", &aic, py::arg("model"));
    m.def("bic", &bic, py::arg("model"));
    m.def("score_components",
          py::overload_cast<const FittedModel&, const Dataset&>(&score_components),
          py::arg("model"), py::arg("data"));
    m.def("observed_information",
          py::overload_cast<const FittedModel&, const Dataset&>(&observed_information),
          py::arg("model"), py::arg("data"));
    m.def("sandwich", py::overload_cast<const FittedModel&, const Dataset&>(&sandwich),
          py::arg("model"), py::arg("data"));
    m.def("theoretical_var_gof", &theoretical_var_gof, py::arg("n"));
    m.def("exact_var_gof", &exact_var_gof, py::arg("n"), py::arg("r"));
    m.def("breusch_pagan", py::overload_cast<const FittedModel&, const Dataset&>(&breusch_pagan),
          py::arg("model"), py::arg("data"));
    m.def("white_test", py::overload_cast<const FittedModel&, const Dataset&>(&white_test),
          py::arg("model"), py::arg("data"));
    m.def("run_test",
          py::overload_cast<const Dataset&, const ModelSpec&, const BootstrapConfig&>(&run_test),
          py::arg("data"), py::arg("spec"), py::arg("config") = BootstrapConfig{},
          py::call_guard<py::gil_scoped_release>());
    m.def(
        "generate",
        [](int scenario, std::size_t n, std::uint64_t seed) {
            RngStream rng(seed);
            return generate(ScenarioSpec{scenario, n}, rng);
        },
        py::arg("scenario"), py::arg("n"), py::arg("seed"));
    m.def("fitted_spec_for", &fitted_spec_for, py::arg("scenario"));
    m.def("run_monte_carlo", &run_monte_carlo, py::arg("scenario"), py::arg("n"),
          py::arg("reps"), py::arg("config"), py::call_guard<py::gil_scoped_release>());
}
