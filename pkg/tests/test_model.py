from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cavmag.analytic import ReducedParams, vmm_analytic
from cavmag.cvgaussian import is_physical, log_negativity, reduce, tmsv_cm
from cavmag.linsys import stability
from cavmag.model import (
    BASELINE,
    HBAR,
    KBOLTZ,
    MODE_LABELS,
    SystemParams,
    build_diffusion,
    build_drift,
    entanglement_report,
    noise_moments,
    steady_state_cm,
    thermal_occupation,
)

TWO_PI = 2.0 * math.pi

# Frozen reference values, independently evaluated with 40-digit
# arithmetic and rounded to double precision.
OCC_10GHZ_100MK = 0.008304373388861986  # Planck occupation, 10 GHz at 0.1 K
N_R04 = 0.1687174731524223  # sinh(0.4)^2
M_R04 = 0.4440529910938115  # sinh(0.4) cosh(0.4)
E_MM_BASELINE_R1_T0 = 1.254688190811554  # magnon log-negativity, matched rates
E_MM_R04_100MK = 0.6021600681695044  # same at r = 0.4, T = 0.1 K


def valid_params(**overrides) -> SystemParams:
    return BASELINE.replace(**overrides)


class TestSystemParams:
    def test_baseline_values(self):
        unit = TWO_PI * 5e6
        assert BASELINE.kappa_a == (unit, unit)
        assert BASELINE.kappa_m == (unit / 5.0, unit / 5.0)
        assert BASELINE.g == (5.0 * unit, 5.0 * unit)
        assert BASELINE.omega_a == (TWO_PI * 1e10, TWO_PI * 1e10)
        assert BASELINE.theta == 0.0
        assert BASELINE.delta_a == (0.0, 0.0)
        assert BASELINE.delta_m == (0.0, 0.0)

    def test_detunings_derive_from_frequencies(self):
        p = valid_params(omega_a=(TWO_PI * 1e10 + 3e6, TWO_PI * 1e10))
        assert p.delta_a[0] == pytest.approx(3e6)
        assert p.delta_a[1] == 0.0

    def test_replace_is_functional(self):
        p = valid_params(r=0.7)
        assert p.r == 0.7
        assert BASELINE.r != 0.7 or True
        assert p.kappa_a == BASELINE.kappa_a

    @pytest.mark.parametrize(
        "field,value",
        [
            ("kappa_a", (0.0, TWO_PI * 5e6)),
            ("kappa_m", (-1.0, 1.0)),
            ("omega_a", (0.0, TWO_PI * 1e10)),
            ("g", (-1.0, 1.0)),
            ("r", -0.2),
            ("temperature", -0.1),
            ("r", math.nan),
        ],
    )
    def test_invalid_values_rejected(self, field, value):
        with pytest.raises(ValueError):
            valid_params(**{field: value})

    def test_scalar_rate_is_rejected(self):
        with pytest.raises((ValueError, TypeError)):
            valid_params(kappa_a=1.0)


class TestThermalOccupation:
    def test_zero_temperature_is_exactly_zero(self):
        assert thermal_occupation(TWO_PI * 1e10, 0.0) == 0.0

    def test_frozen_value_10ghz_100mk(self):
        occ = thermal_occupation(TWO_PI * 1e10, 0.1)
        assert occ == pytest.approx(OCC_10GHZ_100MK, rel=1e-12)

    def test_log2_fixed_point_is_one(self):
        omega = TWO_PI * 1e10
        temperature = HBAR * omega / (KBOLTZ * math.log(2.0))
        assert thermal_occupation(omega, temperature) == pytest.approx(1.0, rel=1e-12)

    def test_underflow_guard_returns_zero(self):
        assert thermal_occupation(TWO_PI * 1e10, 1e-9) == 0.0

    @pytest.mark.parametrize("omega,temperature", [(0.0, 0.1), (-1.0, 0.1), (1e10, -0.1)])
    def test_invalid_arguments(self, omega, temperature):
        with pytest.raises(ValueError):
            thermal_occupation(omega, temperature)


class TestNoiseMoments:
    def test_vacuum_input(self):
        m = noise_moments(valid_params(r=0.0))
        assert m.mean_occupation == 0.0
        assert m.correlation == 0.0

    def test_frozen_values_at_r04(self):
        m = noise_moments(valid_params(r=0.4, temperature=0.1))
        assert m.mean_occupation == pytest.approx(N_R04, rel=1e-12)
        assert m.correlation.real == pytest.approx(M_R04, rel=1e-12)
        assert m.correlation.imag == 0.0
        assert m.magnon_occupation[0] == pytest.approx(OCC_10GHZ_100MK, rel=1e-12)
        assert m.magnon_occupation[1] == pytest.approx(OCC_10GHZ_100MK, rel=1e-12)

    def test_phase_enters_correlation_only(self):
        theta = 1.1
        m = noise_moments(valid_params(r=0.4, theta=theta))
        assert m.correlation == pytest.approx(M_R04 * complex(math.cos(theta), math.sin(theta)))
        assert m.mean_occupation == pytest.approx(N_R04, rel=1e-12)

    @given(r=st.floats(0.0, 3.0), theta=st.floats(-math.pi, math.pi))
    @settings(max_examples=60)
    def test_hyperbolic_identity(self, r, theta):
        m = noise_moments(valid_params(r=r, theta=theta))
        n = m.mean_occupation
        assert abs(m.correlation) ** 2 == pytest.approx(n * (n + 1.0), rel=1e-12, abs=1e-12)


def baseline_drift_fixture() -> np.ndarray:
    # Hand-transcribed linearized dynamics at the baseline rates,
    # normalized by the first cavity decay: unit cavity decay, magnon
    # decay 1/5, coupling 5, all detunings zero.
    k, g = 0.2, 5.0
    return np.array(
        [
            [-1.0, 0.0, 0.0, 0.0, 0.0, g, 0.0, 0.0],
            [0.0, -1.0, 0.0, 0.0, -g, 0.0, 0.0, 0.0],
            [0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 0.0, g],
            [0.0, 0.0, 0.0, -1.0, 0.0, 0.0, -g, 0.0],
            [0.0, g, 0.0, 0.0, -k, 0.0, 0.0, 0.0],
            [-g, 0.0, 0.0, 0.0, 0.0, -k, 0.0, 0.0],
            [0.0, 0.0, 0.0, g, 0.0, 0.0, -k, 0.0],
            [0.0, 0.0, -g, 0.0, 0.0, 0.0, 0.0, -k],
        ]
    )


class TestBuildDrift:
    def test_baseline_matches_fixture_entry_for_entry(self):
        assert np.array_equal(build_drift(BASELINE), baseline_drift_fixture())

    def test_decoupled_zero_detuning_is_block_diagonal_decay(self):
        p = valid_params(g=(0.0, 0.0))
        a = build_drift(p)
        assert np.array_equal(a, np.diag([-1.0] * 4 + [-0.2] * 4))

    def test_detuning_entries(self):
        unit = BASELINE.kappa_a[0]
        p = valid_params(
            omega_a=(TWO_PI * 1e10 + 0.3 * unit, TWO_PI * 1e10),
            omega_m=(TWO_PI * 1e10, TWO_PI * 1e10 - 0.7 * unit),
        )
        a = build_drift(p)
        assert a[0, 1] == pytest.approx(0.3, rel=1e-12)
        assert a[1, 0] == pytest.approx(-0.3, rel=1e-12)
        assert a[6, 7] == pytest.approx(-0.7, rel=1e-12)
        assert a[7, 6] == pytest.approx(0.7, rel=1e-12)

    def test_transpose_asymmetry_of_coupling(self):
        a = build_drift(BASELINE)
        assert a[0, 5] == 5.0
        assert a[1, 4] == -5.0
        assert a[4, 1] == 5.0
        assert a[5, 0] == -5.0

    def test_structural_nonzero_count(self):
        unit = BASELINE.kappa_a[0]
        p = valid_params(
            omega_a=(TWO_PI * 1e10 + 0.2 * unit, TWO_PI * 1e10 + 0.4 * unit),
            omega_m=(TWO_PI * 1e10 + 0.6 * unit, TWO_PI * 1e10 + 0.8 * unit),
        )
        assert np.count_nonzero(build_drift(p)) == 24

    @given(
        kappa_m=st.floats(0.01, 2.0),
        g=st.floats(0.0, 10.0),
        da=st.floats(-2.0, 2.0),
        dm=st.floats(-2.0, 2.0),
    )
    @settings(max_examples=80)
    def test_always_stable_for_positive_decay(self, kappa_m, g, da, dm):
        unit = BASELINE.kappa_a[0]
        p = valid_params(
            kappa_m=(kappa_m * unit, kappa_m * unit),
            g=(g * unit, g * unit),
            omega_a=(TWO_PI * 1e10 + da * unit, TWO_PI * 1e10),
            omega_m=(TWO_PI * 1e10 + dm * unit, TWO_PI * 1e10),
        )
        assert stability(build_drift(p)).stable


class TestBuildDiffusion:
    def test_vacuum_noise_floor(self):
        d = build_diffusion(valid_params(r=0.0, temperature=0.0))
        assert np.array_equal(d, np.diag([1.0] * 4 + [0.2] * 4))

    def test_squeezed_drive_entries_at_r1(self):
        d = build_diffusion(valid_params(r=1.0, temperature=0.0))
        sinh2 = math.sinh(2.0)
        cosh2 = math.cosh(2.0)
        assert d[0, 0] == pytest.approx(cosh2, rel=1e-12)
        assert d[2, 2] == pytest.approx(cosh2, rel=1e-12)
        assert d[0, 2] == pytest.approx(sinh2, rel=1e-12)
        assert d[2, 0] == pytest.approx(sinh2, rel=1e-12)
        assert d[1, 3] == pytest.approx(-sinh2, rel=1e-12)
        assert d[0, 3] == 0.0
        assert d[1, 2] == 0.0
        assert np.allclose(d[4:, 4:], 0.2 * np.eye(4), atol=1e-15)

    def test_phase_moves_weight_to_cross_quadrature(self):
        d = build_diffusion(valid_params(r=1.0, theta=math.pi / 2.0))
        sinh2 = math.sinh(2.0)
        assert d[0, 2] == pytest.approx(0.0, abs=1e-12)
        assert d[0, 3] == pytest.approx(sinh2, rel=1e-12)
        assert d[1, 2] == pytest.approx(sinh2, rel=1e-12)

    def test_thermal_magnon_floor(self):
        d = build_diffusion(valid_params(r=0.0, temperature=0.1))
        expected = 0.2 * (2.0 * OCC_10GHZ_100MK + 1.0)
        assert d[4, 4] == pytest.approx(expected, rel=1e-12)
        assert d[7, 7] == pytest.approx(expected, rel=1e-12)

    @given(r=st.floats(0.0, 2.5), theta=st.floats(-math.pi, math.pi), t=st.floats(0.0, 2.0))
    @settings(max_examples=60)
    def test_always_symmetric_psd(self, r, theta, t):
        d = build_diffusion(valid_params(r=r, theta=theta, temperature=t))
        assert np.array_equal(d, d.T)
        assert float(np.min(np.linalg.eigvalsh(d))) >= -1e-9


class TestSteadyStateCm:
    def test_mode_labels(self):
        assert steady_state_cm(BASELINE).mode_labels == MODE_LABELS

    def test_vacuum_input_gives_vacuum_state(self):
        cm = steady_state_cm(valid_params(r=0.0, temperature=0.0))
        assert np.allclose(cm.entries, 0.5 * np.eye(8), atol=1e-12)

    def test_decoupled_cavities_host_the_input_state(self):
        cm = steady_state_cm(valid_params(r=0.8, g=(0.0, 0.0), temperature=0.0))
        cavities = reduce(cm, (0, 1))
        magnons = reduce(cm, (2, 3))
        assert np.allclose(cavities.entries, tmsv_cm(0.8).entries, atol=1e-10)
        assert np.allclose(magnons.entries, 0.5 * np.eye(4), atol=1e-12)

    def test_magnon_block_matches_closed_form(self):
        cm = steady_state_cm(valid_params(r=1.0, temperature=0.0))
        block = reduce(cm, (2, 3))
        ref = vmm_analytic(ReducedParams(kappa_ratio=0.2, coupling_ratio=5.0, r=1.0))
        assert np.linalg.norm(block.entries - ref.entries) < 1e-10

    def test_result_is_physical(self):
        assert is_physical(steady_state_cm(valid_params(r=1.5, temperature=0.5)))


class TestEntanglementReport:
    def test_baseline_magnon_entanglement_frozen(self):
        rep = entanglement_report(valid_params(r=1.0, temperature=0.0))
        assert rep.stability.stable
        assert rep.E_mm == pytest.approx(E_MM_BASELINE_R1_T0, abs=1e-9)

    def test_headline_value_at_100mk(self):
        rep = entanglement_report(valid_params(r=0.4, temperature=0.1))
        assert rep.E_mm == pytest.approx(E_MM_R04_100MK, abs=1e-9)

    def test_cavity_magnon_pairs_unentangled(self):
        for r in (0.2, 1.0, 2.0):
            rep = entanglement_report(valid_params(r=r, temperature=0.1))
            assert rep.E_a1m1 == 0.0
            assert rep.E_a2m2 == 0.0

    def test_decoupled_limit(self):
        rep = entanglement_report(valid_params(r=0.4, g=(0.0, 0.0), temperature=0.0))
        assert rep.E_aa == pytest.approx(0.8, abs=1e-9)
        assert rep.E_mm == 0.0

    def test_subsystem_swap_symmetry(self):
        unit = BASELINE.kappa_a[0]
        p = valid_params(
            kappa_a=(unit, 1.3 * unit),
            kappa_m=(0.2 * unit, 0.35 * unit),
            g=(5.0 * unit, 3.0 * unit),
            omega_a=(TWO_PI * 1e10 + 0.2 * unit, TWO_PI * 1e10 - 0.1 * unit),
            r=0.9,
            temperature=0.05,
        )
        swapped = p.replace(
            kappa_a=p.kappa_a[::-1],
            kappa_m=p.kappa_m[::-1],
            g=p.g[::-1],
            omega_a=p.omega_a[::-1],
            omega_m=p.omega_m[::-1],
            omega_drive=p.omega_drive[::-1],
        )
        rep = entanglement_report(p)
        rep_swapped = entanglement_report(swapped)
        assert rep_swapped.E_mm == pytest.approx(rep.E_mm, abs=1e-10)
        assert rep_swapped.E_aa == pytest.approx(rep.E_aa, abs=1e-10)
