"""Quantitative nonclassicality measures via a balanced beam splitter.

A single-mode state sent through a 50:50 beam splitter (vacuum in the other
port) becomes two-mode; its entanglement quantifies the nonclassicality of
the input.  Two routes are provided for both negativity and concurrence:
an entrywise closed form, and the exact evaluation from the two-mode
amplitudes.  The closed forms coincide with the exact values on number
states and upper-bound them on superpositions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fock import FockVector, binomial, photon_probabilities

TWO_MODE_NORM_TOL = 1e-9


@dataclass(frozen=True)
class TwoModeAmplitudes:
    """Two-mode amplitudes after the splitter; entry [j, i] pairs |j> with |i>.

    Total photon number is conserved, so everything below the main
    anti-diagonal (j + i > dim - 1) is exactly zero.
    """

    dim: int
    amps: np.ndarray

    def __post_init__(self) -> None:
        a = np.asarray(self.amps, dtype=complex)
        if a.shape != (self.dim, self.dim):
            raise ValueError("amplitude matrix shape must be (dim, dim)")
        norm = float(np.linalg.norm(a))
        if abs(norm - 1.0) > TWO_MODE_NORM_TOL:
            raise ValueError(f"two-mode norm {norm!r} deviates from 1")
        a = a.copy()
        a.setflags(write=False)
        object.__setattr__(self, "amps", a)


def beamsplit(state: FockVector) -> TwoModeAmplitudes:
    """Send the state through a balanced splitter with vacuum in port two.

    |n> splits into a binomial superposition over (j, n-j) with amplitude
    2^(-n/2) sqrt(C(n, j)).
    """
    d = state.dim
    out = np.zeros((d, d), dtype=complex)
    for n in range(d):
        scale = state.amps[n] * 2.0 ** (-0.5 * n)
        for j in range(n + 1):
            out[j, n - j] = scale * math.sqrt(binomial(n, j))
    return TwoModeAmplitudes(dim=d, amps=out)


def negativity_potential_closed_form(state: FockVector) -> float:
    """Logarithmic negativity of the split state, entrywise closed form.

    2 log2 of the absolute sum of the two-mode amplitudes.  Exact on number
    states; an upper bound on superpositions (the absolute entry sum
    dominates the trace norm).
    """
    total = 0.0
    for n in range(state.dim):
        row = sum(math.sqrt(binomial(n, j)) for j in range(n + 1))
        total += abs(state.amps[n]) * 2.0 ** (-0.5 * n) * row
    return 2.0 * math.log2(total)


def log_negativity_exact(two_mode: TwoModeAmplitudes) -> float:
    """Exact logarithmic negativity: 2 log2 of the singular-value sum.

    For a pure two-mode state the trace norm of the partial transpose is
    the squared sum of Schmidt coefficients, i.e. of singular values of the
    amplitude matrix.
    """
    sigma = np.linalg.svd(two_mode.amps, compute_uv=False)
    return 2.0 * math.log2(float(sigma.sum()))


def _purity_proxy(state: FockVector) -> float:
    # Diagonal-in-n part of the reduced purity: sum |c_n|^4 4^-n sum_j C(n,j)^2.
    total = 0.0
    for n in range(state.dim):
        row = sum(binomial(n, j) ** 2 for j in range(n + 1))
        total += abs(state.amps[n]) ** 4 * 4.0 ** (-n) * row
    return total


def concurrence_closed_form(state: FockVector) -> float:
    """Concurrence of the split state from the closed-form purity proxy.

    sqrt(2 (1 - T)) where T keeps only the diagonal-in-n part of the
    reduced purity; exact on number states, an overestimate otherwise.
    """
    return math.sqrt(max(2.0 * (1.0 - _purity_proxy(state)), 0.0))


def concurrence_exact(two_mode: TwoModeAmplitudes) -> float:
    """Concurrence from the exact reduced purity of one output mode."""
    rho = two_mode.amps @ two_mode.amps.conj().T
    purity = float(np.sum(np.abs(rho) ** 2))
    return math.sqrt(max(2.0 * (1.0 - purity), 0.0))


def anticlassicality(state: FockVector, exclude_vacuum: bool) -> tuple[float, int]:
    """Largest number-state population and where it sits.

    With exclude_vacuum the search starts at level 1 (the vacuum population
    is not counted as nonclassical).  Ties resolve to the smaller level.
    """
    p = photon_probabilities(state)
    if exclude_vacuum:
        if state.dim < 2:
            raise ValueError("excluding the vacuum needs at least two levels")
        idx = 1 + int(np.argmax(p[1:]))
    else:
        idx = int(np.argmax(p))
    return float(p[idx]), idx


@dataclass(frozen=True)
class MeasureReport:
    """All measures for one state, both closed-form and exact routes."""

    negativity_closed_form: float
    negativity_exact: float
    concurrence_closed_form: float
    concurrence_exact: float
    anticlassicality: float
    anticlassicality_excl_vacuum: float
    argmax_n: int

    def as_dict(self) -> dict:
        return {
            "negativity_closed_form": self.negativity_closed_form,
            "negativity_exact": self.negativity_exact,
            "concurrence_closed_form": self.concurrence_closed_form,
            "concurrence_exact": self.concurrence_exact,
            "anticlassicality": self.anticlassicality,
            "anticlassicality_excl_vacuum": self.anticlassicality_excl_vacuum,
            "argmax_n": self.argmax_n,
        }


def measure_report(state: FockVector) -> MeasureReport:
    two_mode = beamsplit(state)
    a_all, _ = anticlassicality(state, exclude_vacuum=False)
    a_one, argmax_n = anticlassicality(state, exclude_vacuum=True)
    return MeasureReport(
        negativity_closed_form=negativity_potential_closed_form(state),
        negativity_exact=log_negativity_exact(two_mode),
        concurrence_closed_form=concurrence_closed_form(state),
        concurrence_exact=concurrence_exact(two_mode),
        anticlassicality=a_all,
        anticlassicality_excl_vacuum=a_one,
        argmax_n=argmax_n,
    )
