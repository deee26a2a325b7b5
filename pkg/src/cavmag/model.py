"""Two microwave cavities, each coupled to one magnon mode, driven by a
two-mode squeezed vacuum microwave field.

Each cavity mode couples to its own magnon mode at a beamsplitter rate
g_j (linearized magnetic-dipole coupling), while the squeezed drive
entering the two cavity ports carries cross-port correlations set by the
squeezing strength r and phase theta. In frames rotating at the
respective drive frequencies the linearized fluctuation dynamics close on
the quadrature vector

    u = (X1, Y1, X2, Y2, x1, y1, x2, y2),

cavity quadratures first, magnon quadratures second, with du = A u dt +
noise. Drift and diffusion matrices are returned dimensionless,
normalized by the first cavity linewidth; the steady-state covariance is
invariant under that common rescaling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np
from numpy.typing import NDArray

from .cvgaussian import CovarianceMatrix, log_negativity, reduce
from .errors import UnstableSystemError
from .linsys import MARGINAL_REAL_PART, StabilityReport, solve_lyapunov, stability

HBAR = 1.054571817e-34  # J s, CODATA 2018
KBOLTZ = 1.380649e-23  # J / K, exact SI value

MODE_LABELS = ("cavity1", "cavity2", "magnon1", "magnon2")


@dataclass(frozen=True)
class SystemParams:
    """Physical parameters of the driven two-cavity, two-magnon system.

    All frequencies and rates are angular (rad/s). Index 0 refers to the
    first cavity/magnon pair, index 1 to the second.

    Attributes
    ----------
    omega_a, omega_m, omega_drive:
        Cavity, magnon and drive angular frequencies per subsystem.
        Detunings are derived: delta_a = omega_a - omega_drive and
        delta_m = omega_m - omega_drive.
    kappa_a, kappa_m:
        Cavity and magnon amplitude decay rates, strictly positive.
    g:
        Cavity-magnon beamsplitter coupling rates, nonnegative.
    r, theta:
        Squeezing strength (dimensionless, >= 0) and phase (rad) of the
        two-mode squeezed drive.
    temperature:
        Bath temperature in kelvin, >= 0. Sets the magnon thermal
        occupation; the drive field is taken at its squeezed-vacuum
        moments.
    """

    omega_a: tuple[float, float]
    omega_m: tuple[float, float]
    omega_drive: tuple[float, float]
    kappa_a: tuple[float, float]
    kappa_m: tuple[float, float]
    g: tuple[float, float]
    r: float
    theta: float
    temperature: float

    def __post_init__(self):
        for name in ("omega_a", "omega_m", "omega_drive", "kappa_a", "kappa_m", "g"):
            pair = tuple(float(x) for x in getattr(self, name))
            if len(pair) != 2:
                raise ValueError(f"{name} must hold exactly two values")
            if not all(math.isfinite(x) for x in pair):
                raise ValueError(f"{name} must be finite")
            object.__setattr__(self, name, pair)
        for name in ("omega_a", "omega_m"):
            if any(x <= 0 for x in getattr(self, name)):
                raise ValueError(f"{name} must be strictly positive")
        for name in ("kappa_a", "kappa_m"):
            if any(x <= 0 for x in getattr(self, name)):
                raise ValueError(f"{name} must be strictly positive")
        if any(x < 0 for x in self.g):
            raise ValueError("coupling rates must be nonnegative")
        for name in ("r", "theta", "temperature"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite")
            object.__setattr__(self, name, value)
        if self.r < 0:
            raise ValueError("squeezing parameter r must be nonnegative")
        if self.temperature < 0:
            raise ValueError("temperature must be nonnegative")

    @property
    def delta_a(self) -> tuple[float, float]:
        return (
            self.omega_a[0] - self.omega_drive[0],
            self.omega_a[1] - self.omega_drive[1],
        )

    @property
    def delta_m(self) -> tuple[float, float]:
        return (
            self.omega_m[0] - self.omega_drive[0],
            self.omega_m[1] - self.omega_drive[1],
        )

    def replace(self, **changes) -> "SystemParams":
        return replace(self, **changes)


def _resonant_baseline() -> SystemParams:
    omega = 2.0 * math.pi * 10e9
    kappa_a = 2.0 * math.pi * 5e6
    return SystemParams(
        omega_a=(omega, omega),
        omega_m=(omega, omega),
        omega_drive=(omega, omega),
        kappa_a=(kappa_a, kappa_a),
        kappa_m=(kappa_a / 5.0, kappa_a / 5.0),
        g=(5.0 * kappa_a, 5.0 * kappa_a),
        r=1.0,
        theta=0.0,
        temperature=0.0,
    )


# Matched resonant operating point: 10 GHz modes driven on resonance,
# cavity linewidth 2*pi*5 MHz, magnon linewidth a fifth of that, both
# couplings at five cavity linewidths, unit squeezing, zero temperature.
BASELINE = _resonant_baseline()


@dataclass(frozen=True)
class NoiseMoments:
    """Second moments of the input noise operators.

    ``mean_occupation`` (N) and ``correlation`` (M, complex) describe the
    two-mode squeezed drive hitting the cavity ports;
    ``magnon_occupation`` holds the thermal occupation of each magnon
    bath.
    """

    mean_occupation: float
    correlation: complex
    magnon_occupation: tuple[float, float]


def thermal_occupation(omega: float, temperature: float) -> float:
    """Bose-Einstein occupation of a mode at angular frequency ``omega``.

    Returns 0.0 at zero temperature. ``omega`` must be positive.
    """
    omega = float(omega)
    temperature = float(temperature)
    if not (math.isfinite(omega) and omega > 0):
        raise ValueError("omega must be positive and finite")
    if not math.isfinite(temperature) or temperature < 0:
        raise ValueError("temperature must be nonnegative and finite")
    if temperature == 0.0:
        return 0.0
    # divide by temperature last: KBOLTZ * temperature underflows to zero
    # for subnormal temperatures
    x = (HBAR * omega / KBOLTZ) / temperature
    if x > 700.0:
        # exp would overflow; the occupation is far below double precision
        return 0.0
    return 1.0 / math.expm1(x)


def noise_moments(params: SystemParams) -> NoiseMoments:
    """Input-noise moments implied by the drive squeezing and temperature.

    N = sinh(r)^2, M = e^{i theta} sinh(r) cosh(r), which saturate
    |M|^2 = N (N + 1) for the pure squeezed drive. Magnon occupations are
    evaluated at each magnon frequency.
    """
    sh = math.sinh(params.r)
    ch = math.cosh(params.r)
    n_drive = sh * sh
    m_drive = complex(math.cos(params.theta), math.sin(params.theta)) * sh * ch
    n_magnon = tuple(
        thermal_occupation(params.omega_m[j], params.temperature) for j in range(2)
    )
    return NoiseMoments(
        mean_occupation=n_drive,
        correlation=m_drive,
        magnon_occupation=n_magnon,
    )


def build_drift(params: SystemParams) -> NDArray[np.float64]:
    """Drift matrix of the linearized dynamics, normalized by kappa_a1.

    Each 2x2 diagonal block is -kappa + detuning rotation; the
    cavity-magnon coupling enters as the transpose-asymmetric pattern
    (+g on the X-row/y-column, -g on the Y-row/x-column and back),
    reflecting the beamsplitter form of the interaction.
    """
    unit = params.kappa_a[0]
    ka = [k / unit for k in params.kappa_a]
    km = [k / unit for k in params.kappa_m]
    da = [d / unit for d in params.delta_a]
    dm = [d / unit for d in params.delta_m]
    g = [x / unit for x in params.g]
    a = np.zeros((8, 8))
    for j in range(2):
        ca = 2 * j  # cavity block offset
        mg = 4 + 2 * j  # magnon block offset
        a[ca, ca] = -ka[j]
        a[ca, ca + 1] = da[j]
        a[ca + 1, ca] = -da[j]
        a[ca + 1, ca + 1] = -ka[j]
        a[mg, mg] = -km[j]
        a[mg, mg + 1] = dm[j]
        a[mg + 1, mg] = -dm[j]
        a[mg + 1, mg + 1] = -km[j]
        a[ca, mg + 1] = g[j]
        a[ca + 1, mg] = -g[j]
        a[mg, ca + 1] = g[j]
        a[mg + 1, ca] = -g[j]
    return a


def build_diffusion(params: SystemParams) -> NDArray[np.float64]:
    """Diffusion matrix of the input noise, normalized by kappa_a1.

    The cavity block carries the squeezed-drive moments: diagonal entries
    kappa_aj (2N + 1) and cross-port correlations
    sqrt(kappa_a1 kappa_a2) * (2 Re M, 2 Im M) arranged so that at
    theta = 0 the X-X correlation is +sinh(2r) and Y-Y is -sinh(2r) (in
    kappa units). Magnon blocks are thermal: kappa_mj (2 N_mj + 1) * I.
    The normalization leaves the vacuum fixed point at V = I/2.
    """
    unit = params.kappa_a[0]
    moments = noise_moments(params)
    n = moments.mean_occupation
    m = moments.correlation
    ka = [k / unit for k in params.kappa_a]
    km = [k / unit for k in params.kappa_m]
    cross = math.sqrt(ka[0] * ka[1])
    # 2 Re M = M + M*, 2 Im M = i (M* - M) as real numbers
    c_xx = cross * 2.0 * m.real
    c_xy = cross * 2.0 * m.imag
    d = np.zeros((8, 8))
    for j in range(2):
        ca = 2 * j
        d[ca, ca] = ka[j] * (2.0 * n + 1.0)
        d[ca + 1, ca + 1] = ka[j] * (2.0 * n + 1.0)
        mg = 4 + 2 * j
        therm = km[j] * (2.0 * moments.magnon_occupation[j] + 1.0)
        d[mg, mg] = therm
        d[mg + 1, mg + 1] = therm
    d[0, 2] = d[2, 0] = c_xx
    d[1, 3] = d[3, 1] = -c_xx
    d[0, 3] = d[3, 0] = c_xy
    d[1, 2] = d[2, 1] = c_xy
    return d


def steady_state_cm(params: SystemParams) -> CovarianceMatrix:
    """Steady-state covariance matrix of the four-mode system.

    Mode order: cavity1, cavity2, magnon1, magnon2.
    """
    v = solve_lyapunov(build_drift(params), build_diffusion(params))
    return CovarianceMatrix(v, MODE_LABELS)


@dataclass(frozen=True)
class EntanglementReport:
    """Steady-state bipartite entanglement summary.

    Logarithmic negativities of the four physically interesting
    bipartitions. Entanglement fields and ``cm`` are None when the drift
    is unstable (``stability.stable`` False or marginal).
    """

    stability: StabilityReport
    cm: CovarianceMatrix | None
    E_aa: float | None
    E_mm: float | None
    E_a1m1: float | None
    E_a2m2: float | None


def entanglement_report(params: SystemParams) -> EntanglementReport:
    """Solve for the steady state and quantify its bipartite entanglement.

    E_aa: the two cavity modes; E_mm: the two magnon modes;
    E_a1m1 / E_a2m2: each cavity with its own magnon.
    """
    drift = build_drift(params)
    report = stability(drift)
    if report.max_real_part >= MARGINAL_REAL_PART:
        return EntanglementReport(
            stability=report, cm=None, E_aa=None, E_mm=None, E_a1m1=None, E_a2m2=None
        )
    try:
        cm = steady_state_cm(params)
    except UnstableSystemError as exc:
        return EntanglementReport(
            stability=exc.report, cm=None, E_aa=None, E_mm=None, E_a1m1=None, E_a2m2=None
        )
    return EntanglementReport(
        stability=report,
        cm=cm,
        E_aa=log_negativity(reduce(cm, (0, 1))),
        E_mm=log_negativity(reduce(cm, (2, 3))),
        E_a1m1=log_negativity(reduce(cm, (0, 2))),
        E_a2m2=log_negativity(reduce(cm, (1, 3))),
    )
