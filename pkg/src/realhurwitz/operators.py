"""Cut-and-join operators on ramification-type polynomials.

The plus operator acts on a monomial p_mu by four term families, summed over
ordered pairs (i, j) of positive integers, with s(i) = '+' for even i and '-'
for odd i:

  cut:   p_i^{s(i)} p_j^+ d/dp_{i+j}^{s(i)}   (chi shift 0)
  join:  p_{i+j}^{s(i)} d^2/(dp_i^{s(i)} dp_j^+)   (chi shift -2)
  real to complex pair:  i q-removal  i p_{2i}^+ d/dq_i   (chi shift -2)
  complex pair to real:  q_i d/dp_{2i}^+   (chi shift 0)

The minus operator conjugates the plus one by the sign swap p_k^+ <-> p_k^-,
and the mean is their half sum. All three preserve degree and bidegree, so
they restrict to matrices on each bidegree block. The genus-0 right-hand side
operator on unsigned variables lives here as well.
"""

from __future__ import annotations

from collections import Counter
from enum import Enum
from fractions import Fraction
from typing import Iterator, NamedTuple

from .model import (
    Bidegree,
    Partition,
    RamificationType,
    bidegree,
    enumerate_types,
    merge_partitions,
)
from .poly import PolyVector


class OperatorKind(Enum):
    WPLUS = "wplus"
    WMINUS = "wminus"
    WMEAN = "wmean"


# chi(mu', m+1) - chi(mu, m) for images of each term family
CHI_SHIFTS = {"cut": 0, "join": -2, "real_to_pair": -2, "pair_to_real": 0}


def _without(p: Partition, *parts: int) -> Partition:
    items = list(p)
    for k in parts:
        items.remove(k)
    return tuple(items)


def wplus_images(mu: RamificationType) -> Iterator[tuple[RamificationType, int, int]]:
    """Images of the plus operator on the monomial p_mu.

    Yields (type, integer multiplier, chi shift); repeated types may appear
    and must be summed by the caller.
    """
    kp, km, lam = mu.kappa_plus, mu.kappa_minus, mu.lam
    kp_counts = Counter(kp)
    km_counts = Counter(km)
    # cut differentiating a plus part: i even, both new parts positive
    for n, mult in kp_counts.items():
        for i in range(2, n, 2):
            yield (RamificationType(merge_partitions(_without(kp, n), (i, n - i)), km, lam),
                   mult, CHI_SHIFTS["cut"])
    # cut differentiating a minus part: i odd stays negative, j positive
    for n, mult in km_counts.items():
        for i in range(1, n, 2):
            yield (RamificationType(merge_partitions(kp, (n - i,)),
                                    merge_partitions(_without(km, n), (i,)), lam),
                   mult, CHI_SHIFTS["cut"])
    # join of two plus parts (i even): result positive
    for i in kp_counts:
        if i % 2:
            continue
        for j in kp_counts:
            mult = kp_counts[i] * (kp_counts[j] - (1 if i == j else 0))
            if mult:
                yield (RamificationType(merge_partitions(_without(kp, i, j), (i + j,)), km, lam),
                       mult, CHI_SHIFTS["join"])
    # join of a minus part (i odd) with a plus part: result negative
    for i in km_counts:
        if i % 2 == 0:
            continue
        for j in kp_counts:
            yield (RamificationType(_without(kp, j),
                                    merge_partitions(_without(km, i), (i + j,)), lam),
                   km_counts[i] * kp_counts[j], CHI_SHIFTS["join"])
    # complex pair of order l becomes a positive real part 2l, weight l
    for l, mult in Counter(lam).items():
        yield (RamificationType(merge_partitions(kp, (2 * l,)), km, _without(lam, l)),
               l * mult, CHI_SHIFTS["real_to_pair"])
    # even positive real part 2l becomes a complex pair of order l
    for n, mult in kp_counts.items():
        if n % 2 == 0:
            yield (RamificationType(_without(kp, n), km, merge_partitions(lam, (n // 2,))),
                   mult, CHI_SHIFTS["pair_to_real"])


def apply(kind: OperatorKind, v: PolyVector) -> PolyVector:
    """Linear extension of the chosen operator to a polynomial vector."""
    if kind is OperatorKind.WMEAN:
        plus = apply(OperatorKind.WPLUS, v)
        minus = apply(OperatorKind.WMINUS, v)
        return (plus + minus).scale(Fraction(1, 2))
    if kind is OperatorKind.WMINUS:
        swapped = v.map_keys(lambda mu: mu.swap_signs())
        return apply(OperatorKind.WPLUS, swapped).map_keys(lambda mu: mu.swap_signs())
    out: dict[RamificationType, Fraction] = {}
    for mu, c in v:
        for nu, mult, _ in wplus_images(mu):
            s = out.get(nu, 0) + c * mult
            if s:
                out[nu] = s
            else:
                del out[nu]
    return PolyVector(out)


class BlockMatrix(NamedTuple):
    """Operator restricted to one bidegree block, over the canonical basis."""

    bidegree: Bidegree
    basis: tuple[RamificationType, ...]
    entries: tuple[tuple[Fraction, ...], ...]  # entries[row][col]; column = image

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.entries)

    def matvec(self, vec: list[Fraction]) -> list[Fraction]:
        return [sum(row[j] * vec[j] for j in range(len(vec))) for row in self.entries]


def block_matrix(kind: OperatorKind, b: Bidegree) -> BlockMatrix:
    """Matrix of apply(kind, .) on the enumerate_types(b) basis."""
    b = Bidegree(*b)
    basis = enumerate_types(b)
    index = {mu: i for i, mu in enumerate(basis)}
    size = len(basis)
    entries = [[Fraction(0)] * size for _ in range(size)]
    for j, mu in enumerate(basis):
        image = apply(kind, PolyVector.monomial(mu))
        for nu, c in image:
            if nu not in index:
                raise RuntimeError(
                    f"operator image {nu!r} of {mu!r} leaves block {b}: "
                    f"bidegree {bidegree(nu)}")
            entries[index[nu]][j] = c
    return BlockMatrix(b, basis, tuple(tuple(row) for row in entries))


class G0Type(NamedTuple):
    """Monomial index in the unsigned genus-0 variables p_k, q_k."""

    p_parts: Partition
    q_parts: Partition

    @property
    def degree(self) -> int:
        return sum(self.p_parts) + 2 * sum(self.q_parts)

    def union(self, other: "G0Type") -> "G0Type":
        return G0Type(merge_partitions(self.p_parts, other.p_parts),
                      merge_partitions(self.q_parts, other.q_parts))

    @property
    def is_empty(self) -> bool:
        return not (self.p_parts or self.q_parts)


G0_EMPTY = G0Type((), ())


def g0_from_type(mu: RamificationType) -> G0Type:
    """Forget signs: both real-part lists merge, complex pairs stay."""
    return G0Type(merge_partitions(mu.kappa_plus, mu.kappa_minus), mu.lam)


def genus0_p_derivative(v: PolyVector, i: int) -> PolyVector:
    """Formal d/dp_i on polynomials in unsigned variables."""
    out: dict[G0Type, Fraction] = {}
    for key, c in v:
        mult = key.p_parts.count(i)
        if mult:
            nu = G0Type(_without(key.p_parts, i), key.q_parts)
            out[nu] = out.get(nu, 0) + c * mult
    return PolyVector(out)


def genus0_cut(v: PolyVector) -> PolyVector:
    """Sum over ordered (i, j) of p_i p_j d/dp_{i+j}, without the half factor."""
    out: dict[G0Type, Fraction] = {}
    for key, c in v:
        for n, mult in Counter(key.p_parts).items():
            base = _without(key.p_parts, n)
            for i in range(1, n):
                nu = G0Type(merge_partitions(base, (i, n - i)), key.q_parts)
                out[nu] = out.get(nu, 0) + c * mult
    return PolyVector(out)


def genus0_join(f: PolyVector, g: PolyVector, max_degree: int | None = None) -> PolyVector:
    """Sum over ordered (i, j) of p_{i+j} (df/dp_i)(dg/dp_j), without the half."""
    f_parts = {i for key, _ in f for i in key.p_parts}
    g_parts = {j for key, _ in g for j in key.p_parts}
    out = PolyVector()
    for i in sorted(f_parts):
        df = genus0_p_derivative(f, i)
        for j in sorted(g_parts):
            dg = genus0_p_derivative(g, j)
            prod = df.mul(dg, max_degree - i - j if max_degree is not None else None)
            if prod:
                grown = prod.map_keys(
                    lambda key, k=i + j: G0Type(merge_partitions(key.p_parts, (k,)),
                                                key.q_parts))
                out = out + grown
    return out


def genus0_qterm(v: PolyVector) -> PolyVector:
    """Sum over i of q_i d/dp_{2i}, without the half factor."""
    out: dict[G0Type, Fraction] = {}
    for key, c in v:
        for n, mult in Counter(key.p_parts).items():
            if n % 2 == 0:
                nu = G0Type(_without(key.p_parts, n),
                            merge_partitions(key.q_parts, (n // 2,)))
                out[nu] = out.get(nu, 0) + c * mult
    return PolyVector(out)


G0_P2 = PolyVector.monomial(G0Type((2,), ()))


def genus0_rhs(v: PolyVector) -> PolyVector:
    """Right-hand side of the genus-0 flow applied to a single polynomial.

    Returns (cut(v) + join(v, v) + qterm(v)) / 2 + p_2 / 2. The quadratic
    self-term makes this nonlinear; the series residual check convolves the
    join over u-coefficients instead of calling this directly.
    """
    total = genus0_cut(v) + genus0_join(v, v) + genus0_qterm(v) + G0_P2
    return total.scale(Fraction(1, 2))
