"""Steady-state solver for linear stochastic (Langevin) systems.

The stationary covariance V of dx = A x dt + n(t), with white noise of
diffusion matrix D, solves the continuous-time Lyapunov equation

    A V + V A^T + D = 0.

The solver vectorizes this into the 64-dimensional (for 8 x 8 inputs)
linear system (A (x) I + I (x) A) vec(V) = -vec(D) and solves it densely;
an integral quadrature of e^{At} D e^{A^T t} is provided as an
independent oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray
from scipy.linalg import expm, get_lapack_funcs, lu_factor, lu_solve

from .errors import NearSingularError, NumericalFailureError, UnstableSystemError

RESIDUAL_RTOL = 1e-9
# Spectra this close to the imaginary axis are treated as unstable: the
# steady state would be dominated by round-off rather than physics.
MARGINAL_REAL_PART = -1e-12
CONDITION_LIMIT = 1e12


@dataclass(frozen=True)
class StabilityReport:
    """Spectral stability summary of a drift matrix."""

    stable: bool
    max_real_part: float
    eigenvalues: tuple[complex, ...]

    @property
    def spectral_radius(self) -> float:
        return max(abs(ev) for ev in self.eigenvalues)


def _square_matrix(m, name: str) -> NDArray[np.float64]:
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise ValueError(f"{name} must be a nonempty square matrix")
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{name} must have finite entries")
    return a


def _check_diffusion(d: NDArray[np.float64]) -> None:
    scale = max(float(np.max(np.abs(d))), 1.0)
    if np.max(np.abs(d - d.T)) > 1e-12 * scale:
        raise ValueError("diffusion matrix must be symmetric")
    min_eig = float(np.linalg.eigvalsh(0.5 * (d + d.T)).min())
    if min_eig < -1e-10 * scale:
        raise ValueError(
            f"diffusion matrix must be positive semidefinite (min eigenvalue {min_eig:.3e})"
        )


def stability(a) -> StabilityReport:
    """Eigenvalue stability report for a drift matrix.

    ``stable`` is True iff every eigenvalue has a strictly negative real
    part. Eigenvalues are sorted by (real, imag) for reproducibility.
    """
    a = _square_matrix(a, "drift matrix")
    evals = np.linalg.eigvals(a)
    order = np.lexsort((evals.imag, evals.real))
    evals = evals[order]
    max_real = float(np.max(evals.real))
    return StabilityReport(
        stable=max_real < 0.0,
        max_real_part=max_real,
        eigenvalues=tuple(complex(ev) for ev in evals),
    )


def solve_lyapunov(a, d) -> NDArray[np.float64]:
    """Solve A V + V A^T + D = 0 for the steady-state covariance V.

    Parameters
    ----------
    a:
        Square real drift matrix, strictly stable (all eigenvalue real
        parts below -1e-12).
    d:
        Symmetric positive semidefinite diffusion matrix of equal shape.

    Returns
    -------
    V, symmetrized as (V + V^T)/2, with residual Frobenius norm
    ``|| A V + V A^T + D ||_F <= 1e-9 * ||D||_F`` guaranteed.

    Raises
    ------
    UnstableSystemError
        If ``a`` is not strictly stable (marginal spectra included).
    NearSingularError
        If the vectorized system has a 1-norm condition estimate above
        1e12.
    NumericalFailureError
        If the residual bound is violated by the computed solution.
    """
    a = _square_matrix(a, "drift matrix")
    d = _square_matrix(d, "diffusion matrix")
    if a.shape != d.shape:
        raise ValueError("drift and diffusion matrices must have the same shape")
    _check_diffusion(d)
    report = stability(a)
    if report.max_real_part >= MARGINAL_REAL_PART:
        raise UnstableSystemError(report)
    n = a.shape[0]
    eye = np.eye(n)
    system = np.kron(a, eye) + np.kron(eye, a)
    try:
        lu, piv = lu_factor(system)
    except np.linalg.LinAlgError as exc:
        raise NearSingularError(f"vectorized Lyapunov system is singular: {exc}") from exc
    (gecon,) = get_lapack_funcs(("gecon",), (system,))
    rcond, info = gecon(lu, np.linalg.norm(system, 1))
    if info != 0 or rcond <= 0.0 or 1.0 / rcond > CONDITION_LIMIT:
        cond = math.inf if rcond <= 0.0 else 1.0 / rcond
        raise NearSingularError(
            f"vectorized Lyapunov system is near singular (condition estimate {cond:.3e})"
        )
    v = lu_solve((lu, piv), -d.ravel()).reshape(n, n)
    v = 0.5 * (v + v.T)
    d_norm = float(np.linalg.norm(d, "fro"))
    residual = float(np.linalg.norm(a @ v + v @ a.T + d, "fro"))
    if residual > RESIDUAL_RTOL * max(d_norm, np.finfo(float).tiny):
        raise NumericalFailureError(
            f"Lyapunov residual {residual:.3e} exceeds {RESIDUAL_RTOL:.1e} * ||D||"
        )
    return v


def integrate_lyapunov_oracle(a, d, horizon: float, step: float) -> NDArray[np.float64]:
    """Steady-state covariance by direct quadrature, as an independent check.

    Approximates V = integral of e^{At} D e^{A^T t} over [0, horizon] with
    composite Simpson quadrature, stepping the propagator by a single
    matrix exponential per step. Truncation error decays like
    exp(max_real_part * horizon).

    Preconditions: ``horizon >= 10 / |max_real_part|`` and
    ``step <= 0.01 / spectral_radius(a)``. Deliberately slow and simple;
    use :func:`solve_lyapunov` for production work.
    """
    a = _square_matrix(a, "drift matrix")
    d = _square_matrix(d, "diffusion matrix")
    if a.shape != d.shape:
        raise ValueError("drift and diffusion matrices must have the same shape")
    _check_diffusion(d)
    report = stability(a)
    if report.max_real_part >= MARGINAL_REAL_PART:
        raise UnstableSystemError(report)
    if not (horizon > 0 and np.isfinite(horizon)):
        raise ValueError("horizon must be positive and finite")
    if not (step > 0 and np.isfinite(step)):
        raise ValueError("step must be positive and finite")
    decay = abs(report.max_real_part)
    if horizon < 10.0 / decay:
        raise ValueError(
            f"horizon {horizon:.6g} too short for decay rate {decay:.6g}; "
            f"need at least {10.0 / decay:.6g}"
        )
    radius = report.spectral_radius
    if radius > 0 and step > 0.01 / radius:
        raise ValueError(
            f"step {step:.6g} too coarse for spectral radius {radius:.6g}; "
            f"need at most {0.01 / radius:.6g}"
        )
    n_steps = int(math.ceil(horizon / step))
    if n_steps % 2 == 1:
        n_steps += 1
    h = horizon / n_steps
    propagator = expm(a * h)
    phi = np.eye(a.shape[0])
    acc = d.copy()
    for k in range(1, n_steps + 1):
        phi = propagator @ phi
        f = phi @ d @ phi.T
        if k == n_steps:
            acc += f
        elif k % 2 == 1:
            acc += 4.0 * f
        else:
            acc += 2.0 * f
    v = acc * (h / 3.0)
    return 0.5 * (v + v.T)
