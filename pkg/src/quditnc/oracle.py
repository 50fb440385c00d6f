"""Dense-matrix reference evaluations used to cross-check the closed forms.

Everything here works directly on explicit operator matrices.  Expectation
values embed the state in a space large enough that a truncated ladder
operator acts exactly like the untruncated one on the occupied levels, so
these routines are slow but have no truncation bias.
"""

from __future__ import annotations

import numpy as np
from scipy.linalg import expm

from .fock import FockVector

MAX_ORACLE_ORDER = 8


def ladder_matrix(dim: int) -> np.ndarray:
    """Annihilation operator on dim levels: sqrt(n) at entry (n-1, n)."""
    if dim < 1:
        raise ValueError("dim must be at least 1")
    return np.diag(np.sqrt(np.arange(1.0, dim)), k=1).astype(complex)


def displacement_exponential(d: int, alpha: complex) -> FockVector:
    """exp(alpha a+ - alpha* a) |0> with the ladder operators cut to d levels."""
    if d < 1:
        raise ValueError("dim must be at least 1")
    a = ladder_matrix(d)
    gen = alpha * a.conj().T - np.conj(alpha) * a
    return FockVector(expm(gen)[:, 0])


def _embedded(state: FockVector, extra: int) -> np.ndarray:
    vec = np.zeros(state.dim + extra, dtype=complex)
    vec[: state.dim] = state.amps
    return vec


def normal_ordered_expectation(state: FockVector, p: int, q: int) -> complex:
    """<a+^p a^q> evaluated with dense matrices in an enlarged space."""
    if not (0 <= p <= MAX_ORACLE_ORDER and 0 <= q <= MAX_ORACLE_ORDER):
        raise ValueError(f"orders must be within 0..{MAX_ORACLE_ORDER}")
    vec = _embedded(state, max(p, q))
    a = ladder_matrix(vec.size)
    op = np.linalg.matrix_power(a.conj().T, p) @ np.linalg.matrix_power(a, q)
    return complex(np.vdot(vec, op @ vec))


def central_quadrature_moment(state: FockVector, n: int) -> float:
    """<(X - <X>)^n> for the quadrature X = (a + a+)/sqrt(2), dense route."""
    if n % 2 != 0 or not 2 <= n <= MAX_ORACLE_ORDER:
        raise ValueError(f"order must be even and within 2..{MAX_ORACLE_ORDER}")
    vec = _embedded(state, n)
    a = ladder_matrix(vec.size)
    x = (a + a.conj().T) / np.sqrt(2.0)
    xbar = np.vdot(vec, x @ vec).real
    centered = x - xbar * np.eye(vec.size)
    val = np.vdot(vec, np.linalg.matrix_power(centered, n) @ vec)
    return float(val.real)
