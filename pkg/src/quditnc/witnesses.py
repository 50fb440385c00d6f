"""Moment-based nonclassicality witnesses.

Sign convention: every witness here is built so that a negative value
certifies nonclassicality and classical (coherent, Poissonian) statistics
drive it to zero or above.  A value of exactly zero is not flagged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .fock import (
    FockVector,
    binomial,
    build_moment_table,
    double_factorial,
    falling_factorial,
    mean_photon,
    photon_probabilities,
    stirling2,
)

#: Below this the difference of moment-matrix determinants counts as singular.
A3_SINGULAR_TOL = 1e-12


class SingularMomentMatrix(ArithmeticError):
    """The moment-matrix ratio is undefined: its denominator vanishes."""


def _factorial_moment_excess(state: FockVector, order: int) -> float:
    # <N(N-1)..(N-order)> - <N>^(order+1); identically zero at order -1.
    if order < 0:
        return 0.0
    p = photon_probabilities(state)
    m = sum(falling_factorial(j, order + 1) * p[j] for j in range(state.dim))
    return float(m - mean_photon(state) ** (order + 1))


def hoa(state: FockVector, l: int) -> float:
    """Antibunching witness of order l: factorial moment minus mean power.

    Negative values mean the (l+1)-quantum coincidences fall below what the
    mean photon number alone would give.
    """
    if l < 1:
        raise ValueError("order must be at least 1")
    return _factorial_moment_excess(state, l)


def _quadrature_first_moment(state: FockVector) -> float:
    c = state.amps
    m = np.arange(state.dim - 1)
    overlap = np.sum(np.sqrt(m + 1.0) * (c[:-1] * np.conj(c[1:]) + np.conj(c[:-1]) * c[1:]))
    return float(overlap.real)


def _normal_ordered_sum(state: FockVector, p: int, q: int) -> complex:
    # <a+^p a^q> by direct index summation over the finite support.
    c = state.amps
    top = state.dim - max(p, q)
    if top <= 0:
        return 0j
    j = np.arange(top)
    log_f = 0.5 * (gammaln(j + p + 1.0) + gammaln(j + q + 1.0)) - gammaln(j + 1.0)
    return complex(np.sum(np.conj(c[j + p]) * c[j + q] * np.exp(log_f)))


def hm_quadrature_moment(state: FockVector, n: int) -> float:
    """Central quadrature moment <(X - <X>)^n>, X = (a + a+)/sqrt(2).

    Expanded combinatorially into normal-ordered moments: the outer index
    runs over powers of the first moment, the middle one over vacuum
    contractions (hence the double factorial), the inner one over orderings.
    """
    if n % 2 != 0 or not 2 <= n <= 8:
        raise ValueError("order must be even and within 2..8")
    first = _quadrature_first_moment(state)
    scale = 2.0 ** (-0.5 * n)
    total = 0j
    for r in range(n + 1):
        outer = binomial(n, r) * (-1.0 if r % 2 else 1.0) * first ** (n - r)
        if outer == 0.0:
            continue
        for i in range(r // 2 + 1):
            coeff = outer * scale * double_factorial(2 * i - 1) * binomial(r, 2 * i)
            for k in range(r - 2 * i + 1):
                total += coeff * binomial(r - 2 * i, k) * _normal_ordered_sum(
                    state, k, r - 2 * i - k
                )
    return float(total.real)


def hos_witness(state: FockVector, n: int) -> float:
    """Squeezing witness: the n-th central quadrature moment minus its
    coherent-state value (n-1)!! / 2^(n/2).  Negative means squeezed."""
    return hm_quadrature_moment(state, n) - double_factorial(n - 1) / 2.0 ** (0.5 * n)


def hosps(state: FockVector, l: int) -> float:
    """Sub-Poissonian witness of order l.

    A signed Stirling/binomial resummation of the antibunching excesses;
    at l = 2 it reduces to variance minus mean of the photon number.
    """
    if l < 1:
        raise ValueError("order must be at least 1")
    mean = mean_photon(state)
    total = 0.0
    for r in range(l + 1):
        shell = binomial(l, r) * (-1.0 if r % 2 else 1.0) * mean ** (l - r)
        for k in range(1, r + 1):
            s2 = stirling2(r, k)
            if s2 == 0.0:
                continue
            total += shell * s2 * _factorial_moment_excess(state, k - 1)
    return total


def _hankel3(first: float, moments: tuple[float, float, float, float]) -> np.ndarray:
    x1, x2, x3, x4 = moments
    return np.array(
        [[first, x1, x2], [x1, x2, x3], [x2, x3, x4]],
        dtype=float,
    )


def agarwal_tara(state: FockVector) -> float:
    """Normalized moment-matrix criterion built from 3x3 Hankel determinants.

    Returns det(m) / (det(mu) - det(m)) where m collects normal-ordered
    moments and mu photon-number moments.  Raises SingularMomentMatrix when
    the denominator is below A3_SINGULAR_TOL in magnitude.
    """
    table = build_moment_table(state)
    det_m = float(np.linalg.det(_hankel3(1.0, table.m)))
    det_mu = float(np.linalg.det(_hankel3(1.0, table.mu)))
    denom = det_mu - det_m
    if abs(denom) <= A3_SINGULAR_TOL:
        raise SingularMomentMatrix(
            f"moment-matrix denominator {denom!r} is numerically singular"
        )
    return det_m / denom


def klyshko(state: FockVector, n: int) -> float:
    """Three-level probability test (n+2) p_n p_(n+2) - (n+1) p_(n+1)^2.

    Probabilities beyond the supported levels read as zero.
    """
    if n < 0:
        raise ValueError("level index must be non-negative")
    p = photon_probabilities(state)

    def at(i: int) -> float:
        return float(p[i]) if i < state.dim else 0.0

    return (n + 2) * at(n) * at(n + 2) - (n + 1) * at(n + 1) ** 2


@dataclass(frozen=True)
class WitnessEntry:
    name: str
    order: int | None
    value: float
    nonclassical: bool


@dataclass(frozen=True)
class WitnessReport:
    """A bundle of witness evaluations for one state."""

    entries: tuple[WitnessEntry, ...]

    def as_dicts(self) -> list[dict]:
        return [
            {
                "name": e.name,
                "order": e.order,
                "value": e.value,
                "nonclassical": e.nonclassical,
            }
            for e in self.entries
        ]


def witness_report(
    state: FockVector,
    hoa_orders=(1, 2, 3),
    hos_orders=(2, 4),
    hosps_orders=(2, 3, 4),
    klyshko_orders=None,
) -> WitnessReport:
    """Evaluate the standard witness battery on one state.

    The moment-matrix entry is omitted when its denominator is singular
    (for example on single-level number states), so every reported value
    is finite.  Flags are strict: zero does not count as nonclassical.
    """
    entries: list[WitnessEntry] = []

    def add(name: str, order: int | None, value: float) -> None:
        entries.append(WitnessEntry(name, order, value, value < 0.0))

    for l in hoa_orders:
        add("hoa", l, hoa(state, l))
    for n in hos_orders:
        add("hos", n, hos_witness(state, n))
    for l in hosps_orders:
        add("hosps", l, hosps(state, l))
    try:
        add("a3", None, agarwal_tara(state))
    except SingularMomentMatrix:
        pass
    if klyshko_orders is None:
        klyshko_orders = range(max(state.dim - 2, 1))
    for n in klyshko_orders:
        add("klyshko", n, klyshko(state, n))
    return WitnessReport(entries=tuple(entries))
