import math

import numpy as np
import pytest

from flexarm.config import PlantParams, SensorModel
from flexarm.core.errors import ConfigurationError, IntegrationBlowupError
from flexarm.plant import (
    PlantState,
    accelerations,
    actuator_rate,
    jerks,
    make_rng,
    measure,
    mechanical_energy,
    quantize,
    sliding_terms,
    step,
    true_control_gain,
)


def _mass_matrix(p: PlantParams) -> np.ndarray:
    return np.array([[p.m_aa, p.m_au], [p.m_au, p.m_uu]])


def _integrate(state, u, params, dt, duration):
    for _ in range(int(round(duration / dt))):
        state = step(state, u, params, dt)
    return state


# ── 动力学 ─────────────────────────────────────────────────────────────────

def test_rest_is_equilibrium(plant_params):
    assert accelerations(PlantState(), plant_params) == (0.0, 0.0)
    assert step(PlantState(), 0.0, plant_params, 1e-3) == PlantState()


def test_accelerations_match_linear_solve():
    """Cramer 法则与 np.linalg.solve 一致"""
    rng = np.random.default_rng(1234)
    for _ in range(1000):
        m_aa, m_uu = rng.uniform(0.5, 5.0, size=2)
        m_au = rng.uniform(-0.9, 0.9) * math.sqrt(m_aa * m_uu)
        params = PlantParams(
            m_aa=m_aa, m_au=m_au, m_uu=m_uu,
            k_phi=rng.uniform(0.0, 500.0), c_phi=rng.uniform(0.0, 5.0), gamma=25.0,
        )
        state = PlantState(*rng.normal(size=5))
        d_a, d_u = rng.normal(size=2)

        got = accelerations(state, params, (d_a, d_u))
        rhs = np.array([state.tau + d_a, -params.k_phi * state.phi - params.c_phi * state.phi_dot + d_u])
        expected = np.linalg.solve(_mass_matrix(params), rhs)
        np.testing.assert_allclose(got, expected, rtol=1e-10, atol=1e-12)


def test_actuator_rate():
    assert actuator_rate(0.0, 0.0, 25.0) == 0.0
    assert actuator_rate(0.0, 1.0, 25.0) == 25.0
    assert actuator_rate(2.0, 1.0, 10.0) == -10.0


def test_jerks_match_finite_difference(plant_params):
    state = PlantState(theta=0.3, phi=0.02, theta_dot=-0.5, phi_dot=0.4, tau=1.2)
    u, h = 0.7, 1e-6
    a0 = np.array(accelerations(state, plant_params))
    a1 = np.array(accelerations(step(state, u, plant_params, h), plant_params))
    np.testing.assert_allclose(jerks(state, u, plant_params), (a1 - a0) / h, rtol=1e-4, atol=1e-4)


def test_true_control_gain_default(plant_params):
    m_s = true_control_gain(plant_params, 1.0, 0.4)
    assert m_s == pytest.approx(25.0 * (0.6 - 0.16) / 1.04)
    assert 12.5 / m_s == pytest.approx(1.18, abs=0.01)


def test_sliding_terms_split_drift_and_gain(plant_params):
    """α·q⃛ = drift + M_s·u"""
    state = PlantState(theta=0.1, phi=-0.03, theta_dot=0.2, phi_dot=1.0, tau=-0.4)
    alpha_a, alpha_u, u = 1.0, 0.4, 2.5
    drift, m_s = sliding_terms(state, plant_params, alpha_a, alpha_u)
    theta_jerk, phi_jerk = jerks(state, u, plant_params)
    assert alpha_a * theta_jerk + alpha_u * phi_jerk == pytest.approx(drift + m_s * u, rel=1e-10)


def test_singular_inertia_rejected():
    with pytest.raises(ConfigurationError):
        PlantParams(m_aa=1.0, m_au=1.0, m_uu=1.0)


# ── 积分器 ─────────────────────────────────────────────────────────────────

def test_energy_conserved_unforced_undamped():
    params = PlantParams(c_phi=0.0)
    state = PlantState(phi=0.05, theta_dot=0.3)
    e0 = mechanical_energy(state, params)
    e1 = mechanical_energy(_integrate(state, 0.0, params, 1e-3, 10.0), params)
    assert abs(e1 - e0) / e0 < 1e-6


def test_energy_decreases_with_damping(plant_params):
    state = PlantState(phi=0.05)
    energies = []
    for _ in range(2000):
        state = step(state, 0.0, plant_params, 1e-3)
        energies.append(mechanical_energy(state, plant_params))
    assert energies[-1] < energies[0]


def test_rk4_self_convergence_order(plant_params):
    """步长减半误差约降为 1/16"""
    start = PlantState(theta=0.2, phi=0.01)
    reference = _integrate(start, 1.0, plant_params, 1e-4, 1.0).to_array()
    coarse = _integrate(start, 1.0, plant_params, 4e-3, 1.0).to_array()
    fine = _integrate(start, 1.0, plant_params, 2e-3, 1.0).to_array()
    order = math.log2(np.max(np.abs(coarse - reference)) / np.max(np.abs(fine - reference)))
    assert order >= 3.8


def test_step_rejects_bad_dt(plant_params):
    with pytest.raises(ValueError):
        step(PlantState(), 0.0, plant_params, 0.0)


def test_step_detects_blowup(plant_params):
    with pytest.raises(IntegrationBlowupError) as info:
        step(PlantState(), 1e308, plant_params, 1e-3)
    assert info.value.previous == PlantState()


# ── 传感器 ─────────────────────────────────────────────────────────────────

def test_quantize():
    assert quantize(0.26, 0.1) == pytest.approx(0.3)
    assert quantize(-0.24, 0.1) == pytest.approx(-0.2)
    assert quantize(0.123, 0.0) == 0.123


def test_encoder_reading_is_quantized():
    model = SensorModel(encoder_step=0.01, accel_noise_std=0.0)
    reading = measure(PlantState(theta=0.0123), 0.0, 0.0, model, make_rng(model))
    assert reading.theta_meas == pytest.approx(0.01)


def test_noise_free_measurement_is_exact():
    model = SensorModel(encoder_step=0.0, accel_noise_std=0.0)
    reading = measure(PlantState(theta=0.5), 1.5, -0.25, model, make_rng(model))
    assert reading.theta_meas == 0.5
    assert reading.tip_acc_meas == 1.25


def test_measurement_noise_is_seeded():
    model = SensorModel(accel_noise_std=2.0)
    state = PlantState(theta=0.1)

    def sample(seed):
        rng = make_rng(model, seed)
        return [measure(state, 0.0, 0.0, model, rng).tip_acc_meas for _ in range(200)]

    first, again, other = sample(3), sample(3), sample(4)
    assert first == again
    assert first != other
    assert np.std(first) == pytest.approx(2.0, rel=0.3)
