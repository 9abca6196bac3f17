"""Gaussian score models, K-S validation, z-score analytics and Monte Carlo
career simulation for stroke-play golf."""

from ._core import (  # noqa: F401
    CareerSimResult,
    DiscretizedGaussianModel,
    DistributionBin,
    DomainError,
    EmpiricalDistribution,
    EventModel,
    IoError,
    KsResult,
    LinearFit,
    QqSeries,
    SimPlayer,
    TrendFit,
    ValidationError,
    __version__,
    default_field,
    discretized_pmf,
    empirical_distribution,
    event_ks_test,
    field_hash,
    fit_moments,
    ks_pvalue,
    ks_statistic,
    ks_tail,
    money_list_regression,
    mu_sigma_regression,
    normal_cdf,
    normal_pdf,
    player_aggregate,
    pvalue_distribution_simulation,
    qq_points,
    sample_model,
    simulate_career,
    streak_probability_oracle,
    sweep_mu_z,
    synth_event_scores,
    trend_fit,
    two_sample_ks,
    zscores,
)
