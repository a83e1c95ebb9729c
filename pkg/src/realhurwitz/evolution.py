"""Evolution of the disconnected generating series and derived tables.

The disconnected series starts from exp(p_1^+ + p_1^- + q_1) and evolves by
the plus cut-and-join operator, one derivative in u per step. Both graded
pieces of every bidegree block evolve independently, so the series truncated
to total degree d is exact for all coefficients of degree at most d. The
connected series is its formal logarithm. The genus-0 layer keeps the
top Euler characteristic part, forgets signs, and checks the quadratic flow
equation it satisfies.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, NamedTuple

from .model import (
    Bidegree,
    RamificationType,
    bidegree,
    canonical_key,
    enumerate_bidegrees,
    euler_characteristic,
    rtype,
)
from .operators import (
    G0_P2,
    G0Type,
    OperatorKind,
    apply,
    g0_from_type,
    genus0_cut,
    genus0_join,
    genus0_qterm,
)
from .poly import PolyVector, USeries, series_log


def initial_vector(b: Bidegree) -> PolyVector:
    """Bidegree-b piece of exp(p_1^+ + p_1^- + q_1)."""
    b = Bidegree(*b)
    terms: dict[RamificationType, Fraction] = {}
    for k in range(min(b.n_plus, b.n_minus) + 1):
        i, j = b.n_plus - k, b.n_minus - k
        mu = rtype((1,) * i, (1,) * j, (1,) * k)
        terms[mu] = Fraction(1, factorial(i) * factorial(j) * factorial(k))
    return PolyVector(terms)


@lru_cache(maxsize=None)
def evolve_block(b: Bidegree, max_m: int) -> tuple[PolyVector, ...]:
    """Block coefficients of the disconnected series at u^m/m!, m <= max_m.

    Entry m equals the m-th power of the plus operator block matrix applied
    to the initial vector; the minus and mean operators give the same values.
    """
    b = Bidegree(*b)
    if max_m == 0:
        return (initial_vector(b),)
    prev = evolve_block(b, max_m - 1)
    return prev + (apply(OperatorKind.WPLUS, prev[-1]),)


def disconnected_series(max_degree: int, max_m: int, threads: int = 1) -> USeries:
    """Exponential generating series of disconnected counts, truncated to
    total degree max_degree and order max_m in u."""
    blocks = enumerate_bidegrees(max_degree)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            evolved = list(pool.map(lambda b: evolve_block(b, max_m), blocks))
    else:
        evolved = [evolve_block(b, max_m) for b in blocks]
    # merge in block order, independent of completion order
    coeffs = []
    for m in range(max_m + 1):
        total = PolyVector()
        for vectors in evolved:
            total = total + vectors[m]
        coeffs.append(total)
    return USeries(tuple(coeffs), connected=False)


@lru_cache(maxsize=None)
def _disconnected_cached(max_degree: int, max_m: int) -> USeries:
    return disconnected_series(max_degree, max_m)


@lru_cache(maxsize=None)
def _connected_cached(max_degree: int, max_m: int) -> USeries:
    return series_log(_disconnected_cached(max_degree, max_m), max_m, max_degree)


def connected_series(max_degree: int, max_m: int, threads: int = 1) -> USeries:
    """Formal logarithm of the disconnected series, same truncation."""
    if threads > 1:
        big_h = disconnected_series(max_degree, max_m, threads)
        return series_log(big_h, max_m, max_degree)
    return _connected_cached(max_degree, max_m)


def hurwitz_value(mu: RamificationType, m: int, connected: bool = True) -> Fraction:
    """One framed count: coefficient of p_mu u^m/m! in the chosen series."""
    series = (_connected_cached if connected else _disconnected_cached)(mu.degree, m)
    return series.coeff(m).coeff(mu)


class HurwitzRow(NamedTuple):
    m: int
    mu: RamificationType
    chi: int
    connected: bool
    value: Fraction


def table_rows(block_cap: int, max_m: int, connected: bool = True,
               threads: int = 1) -> list[HurwitzRow]:
    """Nonzero counts for all types with max(n_plus, n_minus) <= block_cap,
    ordered by m and then by canonical type order."""
    series_fn = connected_series if connected else disconnected_series
    series = series_fn(2 * block_cap, max_m, threads)
    rows = []
    for m in range(max_m + 1):
        keys = [mu for mu, _ in series.coeff(m)]
        for mu in sorted(keys, key=canonical_key):
            b = bidegree(mu)
            if max(b.n_plus, b.n_minus) > block_cap:
                continue
            rows.append(HurwitzRow(m, mu, euler_characteristic(mu, m),
                                   connected, series.coeff(m).coeff(mu)))
    return rows


def genus0_series(max_m: int, max_degree: int) -> USeries:
    """Unsigned genus-zero series: half the chi = 2 part of the connected
    series, with both signed variable families collapsed to one."""
    conn = _connected_cached(max_degree, max_m)
    coeffs = []
    for m in range(max_m + 1):
        kept = {mu: c for mu, c in conn.coeff(m)
                if euler_characteristic(mu, m) == 2}
        collapsed = PolyVector(kept).map_keys(g0_from_type).scale(Fraction(1, 2))
        coeffs.append(collapsed)
    return USeries(tuple(coeffs), connected=True)


def genus0_unit_values(max_m: int) -> list[Fraction]:
    """Evaluation of the genus-zero series at p_1 = q_1 = 1, rest zero."""
    # every contributing monomial has parts of size one only, and chi = 2
    # forces its degree to be exactly (m + 2) / 2, so this cap loses nothing
    series = genus0_series(max_m, (max_m + 2) // 2)
    values = []
    for m in range(max_m + 1):
        total = Fraction(0)
        for key, c in series.coeff(m):
            if all(p == 1 for p in key.p_parts) and all(q == 1 for q in key.q_parts):
                total += c
        values.append(total)
    return values


def genus0_single_part_values(n_max: int) -> list[Fraction]:
    """Coefficient of p_n at u^(n-1)/(n-1)! in the genus-zero series,
    for n = 1 .. n_max."""
    series = genus0_series(n_max - 1, n_max)
    return [series.coeff(n - 1).coeff(G0Type((n,), ())) for n in range(1, n_max + 1)]


class PDEResidualReport(NamedTuple):
    """Residuals of the genus-zero flow equation, one per checked order."""

    max_m: int
    max_degree: int
    residuals: tuple[PolyVector, ...]

    @property
    def is_zero(self) -> bool:
        return all(not r for r in self.residuals)

    @property
    def offending(self) -> tuple[int, G0Type, Fraction] | None:
        for m, r in enumerate(self.residuals):
            for key, c in sorted(r, key=lambda item: item[0]):
                return (m, key, c)
        return None


def genus0_pde_residuals(h: USeries, max_m: int, max_degree: int) -> PDEResidualReport:
    """Residual h_{m+1} - rhs_m for any candidate genus-zero series h.

    The right side convolves the quadratic join over u-orders with binomial
    weights and adds half of p_2 at order zero. h must supply coefficients
    through max_m + 1.
    """
    residuals = []
    for m in range(max_m + 1):
        rhs = genus0_cut(h.coeff(m)) + genus0_qterm(h.coeff(m))
        for k in range(m + 1):
            j = genus0_join(h.coeff(k), h.coeff(m - k), max_degree)
            rhs = rhs + j.scale(Fraction(comb(m, k)))
        if m == 0:
            rhs = rhs + G0_P2
        residual = (h.coeff(m + 1) - rhs.scale(Fraction(1, 2))).restrict_degree(max_degree)
        residuals.append(residual)
    return PDEResidualReport(max_m, max_degree, tuple(residuals))


def verify_genus0_pde(max_m: int, max_degree: int) -> PDEResidualReport:
    """Check the computed genus-zero series against its flow equation."""
    h = genus0_series(max_m + 1, max_degree)
    return genus0_pde_residuals(h, max_m, max_degree)
