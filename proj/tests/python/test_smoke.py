"""Smoke tests for the golfstats python module."""

import math

import pytest

import golfstats as gs


def test_version():
    assert gs.__version__


def test_fit_moments():
    m = gs.fit_moments([70, 72, 74])
    assert m.mu_s == 72.0
    assert abs(m.sigma_s - math.sqrt(8.0 / 3.0)) < 1e-12
    assert m.n_scores == 3
    flat = gs.fit_moments([72, 72, 72, 72], event_id="E1")
    assert flat.sigma_s == 0.0
    assert flat.event_id == "E1"


def test_fit_moments_errors():
    with pytest.raises(ValueError, match="insufficient data"):
        gs.fit_moments([70])
    with pytest.raises(ValueError):
        gs.fit_moments([70, -1])


def test_empirical_distribution():
    dist = gs.empirical_distribution([70, 70, 72, 74])
    assert dist.total_count == 4
    assert [b.score for b in dist.bins] == [70, 72, 74]
    assert dist.bins[0].probability == 0.5
    assert abs(sum(b.probability for b in dist.bins) - 1.0) < 1e-12


def test_sample_model_deterministic():
    a = gs.sample_model(70.8, 2.6, n_samples=2000, seed=7)
    b = gs.sample_model(70.8, 2.6, n_samples=2000, seed=7)
    assert a.samples == b.samples
    assert a.n_samples == 2000
    degenerate = gs.sample_model(70.5, 0.0, n_samples=5, seed=1)
    assert degenerate.samples == [71] * 5


def test_discretized_pmf():
    assert abs(gs.discretized_pmf(70.0, 1.0, 70) - 0.3829249225480262) < 1e-12
    total = sum(gs.discretized_pmf(70.0, 1.0, k) for k in range(60, 81))
    assert abs(total - 1.0) < 1e-12


def test_ks():
    assert gs.ks_statistic([1.0, 2.0, 3.0], [1.0, 2.0, 3.0]) == 0.0
    assert gs.ks_statistic([0.0, 0.0], [1.0, 1.0]) == 1.0
    assert abs(gs.ks_statistic([1.0, 2.0], [1.0, 2.0, 3.0]) - 1.0 / 3.0) < 1e-15
    assert gs.ks_pvalue(0.0, 10, 20) == 1.0
    assert abs(gs.ks_tail(1.0) - 0.27000) < 1e-4


def test_event_ks_roundtrip():
    model = gs.sample_model(70.8, 2.6, n_samples=2000, seed=3)
    result = gs.event_ks_test(model.samples, model)
    assert result.d_statistic == 0.0
    assert result.p_value == 1.0


def test_qq_points_monotone():
    scores = gs.synth_event_scores(70.8, 2.6, 500, seed=11)
    model = gs.sample_model(70.8, 2.6, n_samples=5000, seed=12)
    series = gs.qq_points([float(s) for s in scores],
                          [float(s) for s in model.samples])
    assert len(series.points) == 100
    assert not series.dithered
    xs = [p[0] for p in series.points]
    ys = [p[1] for p in series.points]
    assert xs == sorted(xs)
    assert ys == sorted(ys)


def test_pvalue_simulation_count():
    models = [gs.EventModel("E1", 70.8, 2.6, 100),
              gs.EventModel("E2", 73.0, 3.0, 80)]
    ps = gs.pvalue_distribution_simulation(models, iterations=3, seed=5,
                                           threads=2, model_samples=2000)
    assert len(ps) == 6
    assert all(0.0 <= p <= 1.0 for p in ps)


def test_zscore_surface():
    model = gs.EventModel("E1", 70.8, 2.6, 948)
    zs = gs.zscores(model, [68])
    assert abs(zs[0] - (68 - 70.8) / 2.6) < 1e-12
    agg = gs.player_aggregate("P1", [-0.5, -0.5])
    assert agg["mu_z"] == -0.5
    assert agg["sigma_z"] == 0.0
    trend = gs.trend_fit([0.41 - 0.1 * i for i in range(20)])
    assert trend.slope == pytest.approx(-0.1, abs=1e-10)


def test_regressions():
    models = [gs.EventModel(f"E{i}", 70 + 0.1 * i, 0.1 * (70 + 0.1 * i), 500)
              for i in range(40)]
    fit = gs.mu_sigma_regression(models)
    assert fit.slope == pytest.approx(0.1, abs=1e-12)
    pairs = [(r, 0.0023 * (r - 125)) for r in range(1, 201)]
    money = gs.money_list_regression(pairs)
    assert money.slope == pytest.approx(0.0023, abs=1e-12)


def test_streak_oracle():
    assert gs.streak_probability_oracle(0.5, 12, 11) == 3.0 / 4096.0
    assert gs.streak_probability_oracle(1.0, 20, 11) == 1.0
    assert gs.streak_probability_oracle(0.0, 20, 11) == 0.0


def test_career_simulation():
    field = gs.default_field()
    assert len(field) == 155
    fictitious = gs.SimPlayer("F", -1.5, 0.85)
    a = gs.simulate_career(field, fictitious, tournaments=40, careers=200,
                           master_seed=9, threads=1)
    b = gs.simulate_career(field, fictitious, tournaments=40, careers=200,
                           master_seed=9, threads=4)
    assert a.win_probability == b.win_probability
    assert a.prob_streak_ge_k == b.prob_streak_ge_k
    assert 0.0 <= a.win_probability <= 1.0


def test_sweep():
    field = gs.default_field()
    rows = gs.sweep_mu_z(field, 0.85, [-0.5, -1.5], tournaments=30,
                         careers=150, master_seed=4, threads=2)
    assert len(rows) == 2
    assert rows[0].win_probability < rows[1].win_probability
