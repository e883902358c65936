import numpy as np
import pytest

from flexarm.config import ControllerGains, ControllerKind, NetworkSettings
from flexarm.control import (
    AdaptiveCompensator,
    ExactCompensator,
    NeuralCompensator,
    ReferenceState,
    TrackingErrors,
    TruthSignals,
    adaptive_update,
    control_law,
    create_compensator,
    errors_from_estimates,
    errors_from_truth,
    list_kinds,
    reaching_diagnostic,
    s_r_dot,
    saturation,
    sliding_variable,
    switching_term,
    zero_dynamics_poles,
    zero_dynamics_stable,
)
from flexarm.core.errors import ConfigurationError, ContractViolation, EmptyLogError
from flexarm.estimation import DifferentiatorState, TipEstimatorState
from flexarm.plant import PlantState

ALL_ONES = TrackingErrors(1.0, 1.0, 1.0, 1.0, 1.0, 1.0)


# ── 滑模变量 ───────────────────────────────────────────────────────────────

def test_sliding_variable_cases():
    assert sliding_variable(TrackingErrors(), ControllerGains()) == 0.0
    assert sliding_variable(TrackingErrors(e_theta=1.0), ControllerGains(lambda_a=2.0)) == 4.0
    g = ControllerGains(alpha_a=1.0, alpha_u=0.5, lambda_a=1.0, lambda_u=1.0)
    assert sliding_variable(ALL_ONES, g) == pytest.approx(7.5)


def test_s_r_dot_cases():
    g = ControllerGains(alpha_a=1.0, lambda_a=3.0)
    assert s_r_dot(TrackingErrors(), ReferenceState(), g) == 0.0
    assert s_r_dot(TrackingErrors(), ReferenceState(theta_d_dddot=2.0), g) == -2.0
    assert s_r_dot(TrackingErrors(e_theta_ddot=1.0), ReferenceState(), g) == 6.0


def test_sliding_terms_are_linear_in_errors(gains):
    rng = np.random.default_rng(7)
    ref = ReferenceState()
    for _ in range(100):
        e1, e2 = rng.normal(size=6), rng.normal(size=6)
        a, b = rng.normal(size=2)
        combo = TrackingErrors(*(a * e1 + b * e2))
        for f in (lambda e: sliding_variable(e, gains), lambda e: s_r_dot(e, ref, gains)):
            expected = a * f(TrackingErrors(*e1)) + b * f(TrackingErrors(*e2))
            assert f(combo) == pytest.approx(expected, rel=1e-9, abs=1e-9)


def test_error_builders():
    ref = ReferenceState(theta_d=1.0, theta_d_dot=2.0, theta_d_ddot=3.0)
    hub = DifferentiatorState(z0=0.0, z1=2.5, z2=2.0)
    tip = TipEstimatorState(phi_hat=0.1, phi_dot_hat=0.2, phi_ddot_hat=0.3)
    est = errors_from_estimates(1.5, hub, tip, ref)
    assert est == TrackingErrors(0.5, 0.5, -1.0, 0.1, 0.2, 0.3)

    truth = errors_from_truth(PlantState(theta=0.0, phi=0.1, theta_dot=0.0, phi_dot=0.2), 3.0, 0.3, ref)
    assert truth == TrackingErrors(-1.0, -2.0, 0.0, 0.1, 0.2, 0.3)


# ── 控制律 ─────────────────────────────────────────────────────────────────

@pytest.mark.parametrize("x, expected", [(0.0, 0.0), (0.5, 0.5), (-3.0, -1.0), (1.0, 1.0), (7.0, 1.0)])
def test_saturation(x, expected):
    assert saturation(x) == expected


def test_control_law_cases():
    g = ControllerGains(m_s_hat=12.5, f_s_hat=0.0, kappa=10.0)
    assert control_law(0.0, 0.0, 0.0, g) == 0.0
    assert control_law(2 * g.phi_bl, 2.0, 1.0, g) == pytest.approx(-1.04)


def test_control_law_continuous_inside_boundary_layer(gains):
    eps = 1e-9
    assert control_law(eps, 0.0, 0.0, gains) == pytest.approx(control_law(-eps, 0.0, 0.0, gains), abs=1e-6)


def test_control_law_inverse_in_gain_estimate():
    g = ControllerGains(m_s_hat=12.5)
    doubled = ControllerGains(m_s_hat=25.0)
    assert control_law(1.0, 2.0, 3.0, doubled) == pytest.approx(control_law(1.0, 2.0, 3.0, g) / 2)


def test_switching_term_bounded(gains):
    for s in np.linspace(-100, 100, 401):
        assert abs(switching_term(s, gains)) <= gains.kappa


def test_zero_gain_estimate_rejected():
    with pytest.raises(ConfigurationError):
        ControllerGains(m_s_hat=0.0)


def test_adaptive_update_cases():
    assert adaptive_update(0.3, 0.0, 100.0, 1e-3) == 0.3
    assert adaptive_update(0.0, 0.5, 100.0, 1e-3) == pytest.approx(0.05)
    d_hat = 0.0
    for _ in range(250):
        d_hat = adaptive_update(d_hat, 0.2, 150.0, 1e-3)
    assert d_hat == pytest.approx(250 * 150.0 * 0.2 * 1e-3)


def test_adaptive_update_rejects_bad_arguments():
    with pytest.raises(ValueError):
        adaptive_update(0.0, 1.0, 100.0, 0.0)
    with pytest.raises(ValueError):
        adaptive_update(0.0, 1.0, -1.0, 1e-3)


# ── 趋近条件 ───────────────────────────────────────────────────────────────

def test_reaching_identically_zero():
    report = reaching_diagnostic(np.zeros(100), 1e-3, 2.0, 0.1)
    assert report.fraction == 1.0
    assert report.outside_count == 0


def test_reaching_exponential_decay():
    t = np.arange(0.0, 3.0, 1e-3)
    report = reaching_diagnostic(10.0 * np.exp(-t), 1e-3, 2.0, 0.1)
    assert report.outside_count > 0
    assert report.fraction == 1.0


def test_reaching_exponential_growth():
    t = np.arange(0.0, 3.0, 1e-3)
    report = reaching_diagnostic(3.0 * np.exp(t), 1e-3, 2.0, 0.1)
    assert report.fraction == 0.0


def test_reaching_empty_log():
    with pytest.raises(EmptyLogError):
        reaching_diagnostic([], 1e-3, 2.0, 0.1)


# ── 零动态 ─────────────────────────────────────────────────────────────────

def test_zero_dynamics_default_stable(plant_params, gains):
    poles = zero_dynamics_poles(plant_params, gains)
    assert len(poles) == 4
    np.testing.assert_allclose(np.poly(poles), np.array([0.44, 6.9, 147.2, 1458.0, 4320.0]) / 0.44, rtol=1e-8)
    assert zero_dynamics_stable(plant_params, gains)


def test_zero_dynamics_fast_tip_bandwidth_unstable(plant_params):
    assert not zero_dynamics_stable(plant_params, ControllerGains(lambda_u=6.0))


# ── 补偿器 ─────────────────────────────────────────────────────────────────

@pytest.mark.parametrize("kind, cls", [
    (ControllerKind.INTELLIGENT, NeuralCompensator),
    (ControllerKind.ADAPTIVE, AdaptiveCompensator),
    (ControllerKind.EXACT, ExactCompensator),
])
def test_create_compensator(kind, cls, gains):
    compensator = create_compensator(kind, gains)
    assert isinstance(compensator, cls)
    assert compensator.kind is kind


def test_every_kind_has_a_compensator():
    assert list_kinds() == list(ControllerKind)


def test_neural_compensator_learns(gains):
    compensator = create_compensator(ControllerKind.INTELLIGENT, gains, NetworkSettings())
    assert compensator.estimate(1.0, 0.0) == 0.0
    compensator.learn(1.0, 1e-3)
    assert compensator.weight_norm > 0.0
    assert compensator.estimate(1.0, 0.0) > 0.0


def test_neural_compensator_requires_estimate_first(gains):
    with pytest.raises(ContractViolation):
        create_compensator(ControllerKind.INTELLIGENT, gains).learn(1.0, 1e-3)


def test_adaptive_compensator_shares_network_rate(gains):
    compensator = create_compensator(ControllerKind.ADAPTIVE, gains, NetworkSettings(nu=100.0))
    compensator.estimate(0.5, 0.0)
    compensator.learn(0.5, 1e-3)
    assert compensator.estimate(0.5, 0.0) == pytest.approx(0.05)
    assert compensator.weight_norm == pytest.approx(0.05)


def test_exact_compensator_cancels_uncertainty(gains):
    compensator = create_compensator(ControllerKind.EXACT, gains)
    truth = TruthSignals(drift=-3.2, m_s=10.58)
    for s, srd in ((0.5, 1.0), (5.0, -2.0), (-7.0, 0.3)):
        d_hat = compensator.estimate(s, srd, truth)
        u = control_law(s, srd, d_hat, gains)
        expected = -(truth.drift + srd + switching_term(s, gains)) / truth.m_s
        assert u == pytest.approx(expected, rel=1e-12, abs=1e-12)


def test_exact_compensator_needs_truth(gains):
    with pytest.raises(ContractViolation):
        create_compensator(ControllerKind.EXACT, gains).estimate(0.0, 0.0)
