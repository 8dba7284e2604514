"""Dense complex linear algebra kernel.

Operators live in plain complex numpy arrays. Dimensions in scope stay at
or below 4096, so everything is dense. All functions are pure and never
mutate their inputs; values can be shared freely between threads.
"""

from __future__ import annotations

import numpy as np

from .errors import PreconditionError
from .tolerances import TOLERANCES

_GOLDEN = (np.sqrt(5.0) - 1.0) / 2.0


def as_matrix(m) -> np.ndarray:
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2:
        raise PreconditionError(f"expected a matrix, got an array of ndim {arr.ndim}")
    return arr


def require_square(m) -> np.ndarray:
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise PreconditionError(f"matrix is not square: shape {m.shape}")
    return m


def hermiticity_defect(m) -> float:
    """Entrywise max norm of m - m^dagger."""
    m = require_square(m)
    return float(np.abs(m - m.conj().T).max(initial=0.0))


def hermitian_part(m) -> np.ndarray:
    m = require_square(m)
    return (m + m.conj().T) / 2


def require_hermitian(m, tol: float = TOLERANCES.hermiticity) -> np.ndarray:
    m = require_square(m)
    defect = float(np.abs(m - m.conj().T).max(initial=0.0))
    if defect > tol:
        raise PreconditionError(
            f"matrix is not Hermitian: max |m - m^dagger| = {defect:.3e} exceeds {tol:.1e}"
        )
    return m


def hermitian_eigenvalues(m) -> np.ndarray:
    """All eigenvalues of a Hermitian matrix, in descending order.

    Rejects non-square or non-Hermitian input with a diagnostic naming the
    violated check. Results are deterministic for identical input bit
    patterns: the LAPACK driver behind numpy uses a fixed iteration order.
    """
    return np.linalg.eigvalsh(require_hermitian(m))[::-1]


def hermitian_eigensystem(m) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (descending) and matching eigenvectors (as columns)."""
    vals, vecs = np.linalg.eigh(require_hermitian(m))
    return vals[::-1], vecs[:, ::-1]


def operator_norm(m) -> float:
    """Largest singular value; for Hermitian input, the largest |eigenvalue|."""
    m = require_square(m)
    if not m.any():
        return 0.0
    return float(np.linalg.norm(m, 2))


def tensor(a, b) -> np.ndarray:
    """Kronecker product. Satisfies (a(x)b)(c(x)d) = ac (x) bd."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def _rotated_top_eigenvalue(m: np.ndarray, theta: float) -> float:
    h = np.exp(1j * theta) * m
    return float(np.linalg.eigvalsh((h + h.conj().T) / 2)[-1])


def numerical_radius(m, angular_resolution: int = 720) -> float:
    """Max over unit vectors of |<v, m v>|, from below.

    Evaluates the top eigenvalue of the Hermitian part of e^{i theta} m on
    a uniform theta grid over [0, 2pi), then refines around the best grid
    point with a golden-section search. The result is always a lower bound
    on the radius (it is a max of sampled values) and converges to it as
    the grid refines; at resolution 720 the value is accurate to better
    than 1e-7 away from degenerate spectra. For Hermitian input the grid
    hits theta = 0 and pi, so the value equals max |eigenvalue| exactly.
    """
    m = require_square(m)
    if angular_resolution < 8:
        raise PreconditionError(
            f"angular_resolution must be at least 8, got {angular_resolution}"
        )
    if not m.any():
        return 0.0
    thetas = np.linspace(0.0, 2.0 * np.pi, angular_resolution, endpoint=False)
    phases = np.exp(1j * thetas)
    rotated = phases[:, None, None] * m[None, :, :]
    rotated = (rotated + rotated.conj().transpose(0, 2, 1)) / 2
    grid_vals = np.linalg.eigvalsh(rotated)[:, -1]
    j = int(np.argmax(grid_vals))
    best = float(grid_vals[j])

    # Local refinement on the bracket spanned by the neighbours of the
    # best grid point; keeps the lower-bound guarantee.
    step = 2.0 * np.pi / angular_resolution
    a = thetas[j] - step
    b = thetas[j] + step
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc = _rotated_top_eigenvalue(m, c)
    fd = _rotated_top_eigenvalue(m, d)
    while b - a > 1e-12:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = _rotated_top_eigenvalue(m, c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = _rotated_top_eigenvalue(m, d)
        best = max(best, fc, fd)
    return best
