"""Covariance-matrix algebra for Gaussian continuous-variable states.

Quadratures are ordered (X_1, Y_1, ..., X_n, Y_n) and covariance matrices
use the convention with vacuum variance 1/2, i.e. the vacuum state of n
modes has V = I/2. Entanglement of two-mode states is quantified by the
logarithmic negativity computed from the partially transposed covariance
matrix, with natural logarithms throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from numpy.typing import NDArray

from .errors import NumericalFailureError, UnphysicalStateError

# Tolerances used by this module. Symmetry is relative, eigenvalue checks
# are absolute in quadrature units.
SYMMETRY_RTOL = 1e-12
CROSSCHECK_ATOL = 1e-9
COMPLEX_RESIDUE_ATOL = 1e-8
PHYSICALITY_SLACK = 1e-9
STATE_CHECK_SLACK = 1e-6
# Round-off guard at the separability boundary: negativity is clamped to
# exactly 0.0 already when 2*nu_min >= 1 - SEPARABLE_SLACK, so product
# states solved numerically cannot leak spurious 1e-16 entanglement.
SEPARABLE_SLACK = 1e-12


_OMEGA_CACHE: dict[int, NDArray[np.float64]] = {}


def _omega(n_modes: int) -> NDArray[np.float64]:
    cached = _OMEGA_CACHE.get(n_modes)
    if cached is None:
        block = np.array([[0.0, 1.0], [-1.0, 0.0]])
        cached = np.kron(np.eye(n_modes), block)
        cached.flags.writeable = False
        _OMEGA_CACHE[n_modes] = cached
    return cached


def symplectic_form(n_modes: int) -> NDArray[np.float64]:
    """Return the 2n x 2n symplectic form for ``n_modes`` modes.

    Block diagonal with [[0, 1], [-1, 0]] per mode, matching the
    (X_1, Y_1, ..., X_n, Y_n) quadrature ordering.
    """
    if not isinstance(n_modes, (int, np.integer)):
        raise ValueError("n_modes must be an integer")
    if n_modes < 1:
        raise ValueError("n_modes must be at least 1")
    return np.array(_omega(int(n_modes)))


@dataclass(frozen=True)
class CovarianceMatrix:
    """Symmetric covariance matrix of an n-mode Gaussian state.

    Parameters
    ----------
    entries:
        Real 2n x 2n array, symmetric to a relative tolerance of 1e-12.
        A read-only copy is stored.
    mode_labels:
        Optional names for the n modes, e.g. ("cavity1", "magnon1").
        Defaults to ("mode0", "mode1", ...).
    """

    entries: NDArray[np.float64]
    mode_labels: tuple[str, ...] = ()

    def __post_init__(self):
        m = np.array(self.entries, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("covariance matrix must be square")
        dim = m.shape[0]
        if dim == 0 or dim % 2 != 0:
            raise ValueError("covariance matrix dimension must be 2n with n >= 1")
        if not np.all(np.isfinite(m)):
            raise ValueError("covariance matrix entries must be finite")
        scale = max(1.0, float(np.max(np.abs(m))))
        if float(np.max(np.abs(m - m.T))) > SYMMETRY_RTOL * scale:
            raise ValueError("covariance matrix must be symmetric")
        n = dim // 2
        labels = tuple(self.mode_labels) or tuple(f"mode{i}" for i in range(n))
        if len(labels) != n:
            raise ValueError(f"expected {n} mode labels, got {len(labels)}")
        m.flags.writeable = False
        object.__setattr__(self, "entries", m)
        object.__setattr__(self, "mode_labels", labels)

    @property
    def n_modes(self) -> int:
        return self.entries.shape[0] // 2


def reduce(cm: CovarianceMatrix, modes) -> CovarianceMatrix:
    """Covariance matrix of a subset of modes (Gaussian partial trace).

    Keeps the rows and columns of the requested modes, in the order given,
    preserving the (X, Y) quadrature pair of each kept mode.
    """
    kept = [int(k) for k in modes]
    if len(kept) == 0:
        raise ValueError("at least one mode must be kept")
    if len(set(kept)) != len(kept):
        raise ValueError("duplicate mode indices")
    for k in kept:
        if not 0 <= k < cm.n_modes:
            raise ValueError(f"mode index {k} out of range for {cm.n_modes} modes")
    idx = np.array([q for k in kept for q in (2 * k, 2 * k + 1)])
    sub = cm.entries[np.ix_(idx, idx)]
    labels = tuple(cm.mode_labels[k] for k in kept)
    return CovarianceMatrix(sub, labels)


def partial_transpose(cm: CovarianceMatrix, transposed_mode: int) -> CovarianceMatrix:
    """Partial transposition of a two-mode state at the covariance level.

    Implemented as the momentum-quadrature sign flip of the transposed
    mode: V -> P V P with P = diag(1, -1, 1, 1) or diag(1, 1, 1, -1).
    The operation is involutive.
    """
    if cm.n_modes != 2:
        raise ValueError("partial transposition is defined here for two-mode states")
    if transposed_mode not in (0, 1):
        raise ValueError("transposed_mode must be 0 or 1")
    p = np.ones(4)
    p[2 * transposed_mode + 1] = -1.0
    flipped = cm.entries * np.outer(p, p)
    return CovarianceMatrix(flipped, cm.mode_labels)


def _exact_det(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * _exact_det(minor)
        total += term if j % 2 == 0 else -term
    return total


def _scaled_integer_entries(v: NDArray[np.float64]) -> tuple[list[list[int]], int]:
    # Doubles are binary rationals n / 2^k; putting all entries over the
    # largest power-of-two denominator turns determinants into exact
    # integer arithmetic without per-operation gcd cost.
    ratios = [[float(x).as_integer_ratio() for x in row] for row in v]
    denom = 1
    for row in ratios:
        for _, d in row:
            if d > denom:
                denom = d
    ints = [[n * (denom // d) for n, d in row] for row in ratios]
    return ints, denom


def two_mode_symplectic_eigenvalues(cm: CovarianceMatrix) -> NDArray[np.float64]:
    """Closed-form symplectic spectrum of a two-mode covariance matrix.

    For V = [[A, C], [C^T, B]] in 2x2 blocks the two symplectic
    eigenvalues satisfy

        nu_{+-}^2 = (delta +- sqrt(delta^2 - 4 det V)) / 2,
        delta = det A + det B + 2 det C,

    where the invariants are those of the input matrix itself. The small
    root is evaluated subtraction-free as 2 det V / (delta + sqrt(...)) so
    it stays accurate when det V is many orders below delta^2. Near a
    degenerate spectrum the discriminant cancels catastrophically in
    floating point (absolute round-off of order eps*delta^2 turns into a
    ~1e-8 eigenvalue split after the square root); since the stored
    entries are exact binary rationals, the invariants are then recomputed
    in exact rational arithmetic, which keeps this route accurate to
    machine precision even at exact degeneracy.
    """
    if cm.n_modes != 2:
        raise ValueError("closed form requires a two-mode covariance matrix")
    v = cm.entries
    m = v.tolist()
    s0 = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    s1 = m[0][0] * m[1][2] - m[0][2] * m[1][0]
    s2 = m[0][0] * m[1][3] - m[0][3] * m[1][0]
    s3 = m[0][1] * m[1][2] - m[0][2] * m[1][1]
    s4 = m[0][1] * m[1][3] - m[0][3] * m[1][1]
    s5 = m[0][2] * m[1][3] - m[0][3] * m[1][2]
    c5 = m[2][2] * m[3][3] - m[2][3] * m[3][2]
    c4 = m[2][1] * m[3][3] - m[2][3] * m[3][1]
    c3 = m[2][1] * m[3][2] - m[2][2] * m[3][1]
    c2 = m[2][0] * m[3][3] - m[2][3] * m[3][0]
    c1 = m[2][0] * m[3][2] - m[2][2] * m[3][0]
    c0 = m[2][0] * m[3][1] - m[2][1] * m[3][0]
    det_a = s0
    det_b = c5
    det_c = s5
    delta = det_a + det_b + 2.0 * det_c
    det_v = s0 * c5 - s1 * c4 + s2 * c3 + s3 * c2 - s4 * c1 + s5 * c0
    disc = delta * delta - 4.0 * det_v
    scale = max(delta * delta, abs(4.0 * det_v), 1e-300)
    if disc < 1e-6 * scale:
        ints, denom = _scaled_integer_entries(v)
        det_a_i = _exact_det([r[:2] for r in ints[:2]])
        det_b_i = _exact_det([r[2:] for r in ints[2:]])
        det_c_i = _exact_det([r[2:] for r in ints[:2]])
        det_v_i = _exact_det(ints)
        delta_i = det_a_i + det_b_i + 2 * det_c_i
        sq = denom * denom
        delta = float(Fraction(delta_i, sq))
        det_v = float(Fraction(det_v_i, sq * sq))
        disc = float(Fraction(delta_i * delta_i - 4 * det_v_i, sq * sq))
    root = float(np.sqrt(max(disc, 0.0)))
    hi_sq = 0.5 * (delta + root)
    if hi_sq <= 0.0:
        return np.array([0.0, 0.0])
    lo_sq = max(2.0 * det_v / (delta + root), 0.0)
    lo = float(np.sqrt(lo_sq))
    hi = float(np.sqrt(hi_sq))
    return np.array([lo, hi])


def symplectic_eigenvalues(cm: CovarianceMatrix) -> NDArray[np.float64]:
    """Symplectic eigenvalues of a covariance matrix, ascending.

    Returns the n moduli of the eigenvalues of i*Omega*V. Those come in
    +-nu pairs; each pair is reported once (partners are averaged to damp
    round-off). For two-mode inputs the closed-form route of
    :func:`two_mode_symplectic_eigenvalues` is evaluated as a mandatory
    cross-check and any discrepancy above 1e-9 raises
    :class:`NumericalFailureError`.
    """
    v = cm.entries
    omega = _omega(cm.n_modes)
    # Eigenvalues of i*Omega*V are i times those of the real matrix
    # Omega @ V, so the real solve carries the same information at lower
    # cost; the residue measured here equals the imaginary residue of the
    # i*Omega*V spectrum.
    evals = np.linalg.eigvals(omega @ v)
    residue = float(np.max(np.abs(evals.real)))
    if residue > COMPLEX_RESIDUE_ATOL:
        raise NumericalFailureError(
            f"eigen-solve of i*Omega*V left a complex residue of {residue:.3e}; "
            "input is not a valid covariance matrix or numerics failed"
        )
    mods = np.sort(np.abs(evals))
    nus = 0.5 * (mods[0::2] + mods[1::2])
    if cm.n_modes == 2:
        closed = two_mode_symplectic_eigenvalues(cm)
        gap = float(np.max(np.abs(nus - closed)))
        if gap > CROSSCHECK_ATOL:
            raise NumericalFailureError(
                "symplectic eigenvalue routes disagree: eigen-solve "
                f"{nus} vs closed form {closed} (gap {gap:.3e})"
            )
    return nus


def is_physical(cm: CovarianceMatrix, slack: float = PHYSICALITY_SLACK) -> bool:
    """True when all symplectic eigenvalues are >= 1/2 - slack."""
    return bool(symplectic_eigenvalues(cm)[0] >= 0.5 - slack)


def log_negativity(cm: CovarianceMatrix) -> float:
    """Logarithmic negativity of a two-mode Gaussian state.

    E = max(0, -ln(2 nu_min)) with nu_min the smallest symplectic
    eigenvalue of the partially transposed covariance matrix and ln the
    natural logarithm. Separable states return exactly 0.0.

    Raises
    ------
    UnphysicalStateError
        If the input itself has a symplectic eigenvalue below
        1/2 - 1e-6, i.e. is not a quantum state to begin with.
    """
    if cm.n_modes != 2:
        raise ValueError("logarithmic negativity is defined here for two-mode states")
    nu_state = symplectic_eigenvalues(cm)[0]
    if nu_state < 0.5 - STATE_CHECK_SLACK:
        raise UnphysicalStateError(
            f"covariance matrix is unphysical (min symplectic eigenvalue {nu_state:.9g})"
        )
    nu_min = symplectic_eigenvalues(partial_transpose(cm, 0))[0]
    doubled = 2.0 * nu_min
    if doubled >= 1.0 - SEPARABLE_SLACK:
        return 0.0
    return float(-np.log(doubled))


def tmsv_cm(r: float, theta: float = 0.0) -> CovarianceMatrix:
    """Covariance matrix of a two-mode squeezed vacuum state.

    Diagonal blocks cosh(2r)/2 * I and correlation block

        sinh(2r)/2 * [[cos(theta), sin(theta)], [sin(theta), -cos(theta)]]

    where theta is the squeezing phase. The state is pure: both
    symplectic eigenvalues equal 1/2 and det V = 1/16 for any (r, theta).
    """
    if not np.isfinite(r) or not np.isfinite(theta):
        raise ValueError("r and theta must be finite")
    if r < 0:
        raise ValueError("squeezing parameter r must be nonnegative")
    ch = 0.5 * np.cosh(2.0 * r)
    sh = 0.5 * np.sinh(2.0 * r)
    ct, st = np.cos(theta), np.sin(theta)
    corr = sh * np.array([[ct, st], [st, -ct]])
    v = np.block([[ch * np.eye(2), corr], [corr.T, ch * np.eye(2)]])
    return CovarianceMatrix(v)
