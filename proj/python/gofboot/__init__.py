"""Bootstrap goodness-of-fit test for normal linear regression."""

from ._core import (
    AuxTestResult,
    BootstrapConfig,
    Dataset,
    DataError,
    DegenerateFit,
    DomainError,
    Error,
    FittedModel,
    GofTestResult,
    InsufficientData,
    ModelSpec,
    RankDeficient,
    RedrawLimitExceeded,
    RejectionRates,
    SandwichEstimate,
    SimReport,
    SingularInformation,
    aic,
    bic,
    breusch_pagan,
    chi_squared_cdf,
    exact_var_gof,
    fit_mle,
    fitted_spec_for,
    generate,
    gof_term,
    observed_information,
    read_csv,
    run_monte_carlo,
    run_test,
    sandwich,
    score_components,
    theoretical_var_gof,
    trigamma,
    white_test,
)

__all__ = [name for name in dir() if not name.startswith("_")]
