"""Closed-form steady-state covariance blocks in the resonant matched
regime.

Valid when both subsystems are driven on resonance (all detunings zero),
the two cavities share a linewidth, the two magnon modes share a
linewidth, the couplings match, and the magnon baths are cold enough that
their thermal occupation is negligible. Everything then depends only on
the two rate ratios and the squeezing strength, collected in
:class:`ReducedParams`. These expressions serve as independent oracles
for the numerical pipeline and as the data source for the
coupling-ratio figure presets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cvgaussian import (
    CovarianceMatrix,
    partial_transpose,
    two_mode_symplectic_eigenvalues,
)


@dataclass(frozen=True)
class ReducedParams:
    """Dimensionless parameters of the resonant matched regime.

    kappa_ratio:
        Magnon over cavity linewidth, strictly positive.
    coupling_ratio:
        Coupling over cavity linewidth, nonnegative.
    r:
        Squeezing strength of the drive, nonnegative.
    """

    kappa_ratio: float
    coupling_ratio: float
    r: float

    def __post_init__(self):
        for name in ("kappa_ratio", "coupling_ratio", "r"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite")
            object.__setattr__(self, name, value)
        if self.kappa_ratio <= 0:
            raise ValueError("kappa_ratio must be strictly positive")
        if self.coupling_ratio < 0:
            raise ValueError("coupling_ratio must be nonnegative")
        if self.r < 0:
            raise ValueError("r must be nonnegative")


def vaa_analytic(r: float) -> CovarianceMatrix:
    """Cavity-pair covariance at zero coupling: the drive's own state.

    Diagonal cosh(2r)/2, correlations +-sinh(2r)/2 with positive X-X and
    negative Y-Y entries.
    """
    if not math.isfinite(r) or r < 0:
        raise ValueError("r must be nonnegative and finite")
    ch = 0.5 * math.cosh(2.0 * r)
    sh = 0.5 * math.sinh(2.0 * r)
    v = np.diag([ch, ch, ch, ch])
    v[0, 2] = v[2, 0] = sh
    v[1, 3] = v[3, 1] = -sh
    return CovarianceMatrix(v, ("cavity1", "cavity2"))


def eaa_analytic(r: float) -> float:
    """Cavity-pair logarithmic negativity at zero coupling.

    max(0, -ln(min(|cosh r - sinh r|^2, |cosh r + sinh r|^2))), which
    evaluates to 2r.
    """
    if not math.isfinite(r) or r < 0:
        raise ValueError("r must be nonnegative and finite")
    ch = math.cosh(r)
    sh = math.sinh(r)
    smallest = min(abs(ch - sh) ** 2, abs(ch + sh) ** 2)
    return max(0.0, -math.log(smallest))


def _prefactor(p: ReducedParams) -> float:
    a = p.kappa_ratio
    b = p.coupling_ratio
    return 1.0 / (2.0 * (1.0 + a) * (a + b * b))


def vmm_analytic(p: ReducedParams) -> CovarianceMatrix:
    """Magnon-pair covariance in the resonant matched regime (cold baths).

    Diagonal [a (1 + a + b^2) + b^2 cosh(2r)] / (2 (1 + a) (a + b^2)),
    X-X correlation -b^2 sinh(2r) and Y-Y correlation +b^2 sinh(2r) times
    the same prefactor; a and b are the linewidth and coupling ratios.
    The correlation signs are inverted relative to the driving field
    because each magnon mode locks to its cavity a quarter cycle out of
    phase.
    """
    a = p.kappa_ratio
    b = p.coupling_ratio
    pref = _prefactor(p)
    diag = (a * (1.0 + a + b * b) + b * b * math.cosh(2.0 * p.r)) * pref
    corr = b * b * math.sinh(2.0 * p.r) * pref
    v = np.diag([diag, diag, diag, diag])
    v[0, 2] = v[2, 0] = -corr
    v[1, 3] = v[3, 1] = corr
    return CovarianceMatrix(v, ("magnon1", "magnon2"))


def vam_analytic(p: ReducedParams) -> CovarianceMatrix:
    """Covariance of one cavity with its own magnon mode, same regime.

    Mode order (cavity, magnon). The cavity-magnon correlations occupy
    the anti-diagonal of the off-diagonal block with entries
    -+ 2 a b sinh(r)^2 times the common prefactor: X-y negative, Y-x
    positive.
    """
    a = p.kappa_ratio
    b = p.coupling_ratio
    pref = _prefactor(p)
    cav = (a * b * b + (a + a * a + b * b) * math.cosh(2.0 * p.r)) * pref
    mag = (a * (1.0 + a + b * b) + b * b * math.cosh(2.0 * p.r)) * pref
    corr = 2.0 * a * b * math.sinh(p.r) ** 2 * pref
    v = np.diag([cav, cav, mag, mag])
    v[0, 3] = v[3, 0] = -corr
    v[1, 2] = v[2, 1] = corr
    return CovarianceMatrix(v, ("cavity1", "magnon1"))


def cavity_magnon_N(p: ReducedParams) -> float:
    """Unclamped negativity indicator -ln(2 nu_min) for the cavity-magnon
    pair within one subsystem.

    Computed from :func:`vam_analytic` via partial transposition and the
    two-mode closed-form symplectic spectrum. Nonpositive throughout the
    physical parameter range: a cavity never entangles with its own
    magnon mode under this beamsplitter coupling, it only swaps states
    with it.
    """
    flipped = partial_transpose(vam_analytic(p), 0)
    nu_min = float(two_mode_symplectic_eigenvalues(flipped)[0])
    return -math.log(2.0 * nu_min)
