"""Partitions, ramification types, and the numeric functionals indexing everything else.

Partitions are plain tuples of positive integers sorted non-increasing.
A ramification type is a triple of partitions (kappa_plus, kappa_minus, lam):
orders of positive real poles, negative real poles, and conjugate pole pairs.
Monomials correspond to types via p_mu = prod p_k^+ prod p_k^- prod q_l with
deg p_k^{+-} = k and deg q_l = 2l.
"""

from __future__ import annotations

import re
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, NamedTuple

Partition = tuple[int, ...]

EMPTY_PARTITION: Partition = ()


def partition(parts: Iterable[int]) -> Partition:
    """Normalize an iterable of positive integers into a partition tuple."""
    t = tuple(sorted(parts, reverse=True))
    if any(not isinstance(p, int) or p <= 0 for p in t):
        raise ValueError(f"partition parts must be positive integers, got {t!r}")
    return t


def partitions_of(n: int) -> Iterator[Partition]:
    """Yield all partitions of n in non-increasing part order."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return

    def gen(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    yield from gen(n, n)


def aut_order(p: Partition) -> int:
    """Order of the automorphism group: product of factorials of part multiplicities."""
    result = 1
    run = 1
    for i in range(1, len(p)):
        if p[i] == p[i - 1]:
            run += 1
        else:
            result *= factorial(run)
            run = 1
    if p:
        result *= factorial(run)
    return result


def merge_partitions(a: Partition, b: Partition) -> Partition:
    """Disjoint union of parts, kept non-increasing."""
    return tuple(sorted(a + b, reverse=True))


class Bidegree(NamedTuple):
    n_plus: int
    n_minus: int


class RamificationType(NamedTuple):
    """Monomial index p_mu: pole orders at infinity, split by sign and reality."""

    kappa_plus: Partition
    kappa_minus: Partition
    lam: Partition

    @property
    def degree(self) -> int:
        return sum(self.kappa_plus) + sum(self.kappa_minus) + 2 * sum(self.lam)

    @property
    def length_sum(self) -> int:
        return len(self.kappa_plus) + len(self.kappa_minus) + 2 * len(self.lam)

    def union(self, other: "RamificationType") -> "RamificationType":
        return RamificationType(
            merge_partitions(self.kappa_plus, other.kappa_plus),
            merge_partitions(self.kappa_minus, other.kappa_minus),
            merge_partitions(self.lam, other.lam),
        )

    def swap_signs(self) -> "RamificationType":
        return RamificationType(self.kappa_minus, self.kappa_plus, self.lam)

    @property
    def is_empty(self) -> bool:
        return not (self.kappa_plus or self.kappa_minus or self.lam)


EMPTY_TYPE = RamificationType((), (), ())


def rtype(kappa_plus: Iterable[int] = (), kappa_minus: Iterable[int] = (),
          lam: Iterable[int] = ()) -> RamificationType:
    """Build a ramification type from arbitrary part iterables."""
    return RamificationType(partition(kappa_plus), partition(kappa_minus), partition(lam))


def p_plus(k: int) -> RamificationType:
    return RamificationType((k,), (), ())


def p_minus(k: int) -> RamificationType:
    return RamificationType((), (k,), ())


def q_var(k: int) -> RamificationType:
    return RamificationType((), (), (k,))


def bidegree(mu: RamificationType) -> Bidegree:
    """Signed element counts (n+, n-) of any transition of this type.

    Each part k of kappa_plus contributes (ceil(k/2), floor(k/2)), of
    kappa_minus the swap, and each part l of lam contributes (l, l).
    """
    n_plus = sum((k + 1) // 2 for k in mu.kappa_plus) + sum(k // 2 for k in mu.kappa_minus)
    n_minus = sum(k // 2 for k in mu.kappa_plus) + sum((k + 1) // 2 for k in mu.kappa_minus)
    l_total = sum(mu.lam)
    return Bidegree(n_plus + l_total, n_minus + l_total)


def euler_characteristic(mu: RamificationType, m: int) -> int:
    """Euler characteristic of the source surface: degree + total pole length - m."""
    return mu.degree + mu.length_sum - m


def zeta(mu: RamificationType) -> int:
    """Stabilizer order of a transition of type mu under S(n+) x S(n-)."""
    result = aut_order(mu.kappa_plus) * aut_order(mu.kappa_minus) * aut_order(mu.lam)
    for l in mu.lam:
        result *= l
    return result


def class_size_formula(mu: RamificationType) -> int:
    """Number of distinct transitions of type mu: n+! n-! / zeta(mu)."""
    b = bidegree(mu)
    num = factorial(b.n_plus) * factorial(b.n_minus)
    z = zeta(mu)
    if num % z:
        raise ArithmeticError(f"zeta({mu}) = {z} does not divide {num}")
    return num // z


def canonical_key(mu: RamificationType) -> tuple:
    """Deterministic sort key: (degree, kappa_plus, kappa_minus, lam)."""
    return (mu.degree, mu.kappa_plus, mu.kappa_minus, mu.lam)


@lru_cache(maxsize=None)
def enumerate_types(b: Bidegree) -> tuple[RamificationType, ...]:
    """All ramification types of the given bidegree, in canonical order."""
    b = Bidegree(*b)
    if b.n_plus < 0 or b.n_minus < 0:
        raise ValueError(f"bidegree components must be nonnegative, got {b}")
    found: list[RamificationType] = []
    # Each lam part l contributes (l, l), so sum(lam) <= min(n+, n-).
    for l_total in range(min(b.n_plus, b.n_minus) + 1):
        rem_plus = b.n_plus - l_total
        rem_minus = b.n_minus - l_total
        for lam in partitions_of(l_total):
            for kp_weight in range(rem_plus + rem_minus + 1):
                for kp in partitions_of(kp_weight):
                    kp_p = sum((k + 1) // 2 for k in kp)
                    kp_m = sum(k // 2 for k in kp)
                    need_floor = rem_plus - kp_p  # kappa_minus floor-sum
                    need_ceil = rem_minus - kp_m  # kappa_minus ceil-sum
                    if need_floor < 0 or need_ceil < 0:
                        continue
                    km_weight = rem_plus + rem_minus - kp_weight
                    for km in partitions_of(km_weight):
                        if (sum(k // 2 for k in km) == need_floor
                                and sum((k + 1) // 2 for k in km) == need_ceil):
                            found.append(RamificationType(kp, km, lam))
    found.sort(key=canonical_key)
    return tuple(found)


def enumerate_bidegrees(max_degree: int) -> list[Bidegree]:
    """All bidegrees with n+ + n- <= max_degree, ordered by (total, n+)."""
    out = []
    for total in range(max_degree + 1):
        for n_plus in range(total + 1):
            out.append(Bidegree(n_plus, total - n_plus))
    return out


def dimension_series(max_total: int) -> dict[tuple[int, int], int]:
    """Coefficients of prod_k (1-x^k y^k)^-3 (1-x^k y^(k-1))^-1 (1-x^(k-1) y^k)^-1.

    Returns {(a, b): coefficient} for a + b <= max_total; the coefficient at
    (a, b) is the number of ramification types of bidegree (a, b).
    """
    series: dict[tuple[int, int], int] = {(0, 0): 1}

    def mul_geometric(cur: dict[tuple[int, int], int], step: tuple[int, int],
                      power: int) -> dict[tuple[int, int], int]:
        # Multiply by (1 - x^sa y^sb)^-power = sum_n C(n+power-1, power-1) (x^sa y^sb)^n.
        sa, sb = step
        out: dict[tuple[int, int], int] = {}
        for (a, b), c in cur.items():
            n = 0
            coeff = 1
            while a + n * sa + b + n * sb <= max_total:
                key = (a + n * sa, b + n * sb)
                out[key] = out.get(key, 0) + c * coeff
                n += 1
                coeff = coeff * (n + power - 1) // n
        return out

    for k in range(1, max_total + 1):
        if 2 * k > max_total and (2 * k - 1) > max_total:
            break
        series = mul_geometric(series, (k, k), 3)
        series = mul_geometric(series, (k, k - 1), 1)
        series = mul_geometric(series, (k - 1, k), 1)
    return {key: c for key, c in series.items() if sum(key) <= max_total}


_PARTITION_RE = re.compile(r"^\s*$|^\s*\d+(\s+\d+)*\s*$")
_MULT_TERM_RE = re.compile(r"^(\d+)\^(\d+)$")


def format_partition(p: Partition) -> str:
    return "[" + " ".join(str(k) for k in p) + "]"


def parse_partition(text: str) -> Partition:
    """Parse '[3 1 1]' or multiplicative '[1^2 3^1]' (also without brackets)."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    body = body.strip()
    if not body:
        return ()
    parts: list[int] = []
    for token in body.split():
        m = _MULT_TERM_RE.match(token)
        if m:
            part, mult = int(m.group(1)), int(m.group(2))
            parts.extend([part] * mult)
        elif token.isdigit():
            parts.append(int(token))
        else:
            raise ValueError(f"cannot parse partition token {token!r}")
    return partition(parts)


def format_type(mu: RamificationType) -> str:
    """Canonical text form: k+:[...] k-:[...] l:[...]."""
    return (f"k+:{format_partition(mu.kappa_plus)} "
            f"k-:{format_partition(mu.kappa_minus)} "
            f"l:{format_partition(mu.lam)}")


_TYPE_RE = re.compile(r"^\s*k\+:\[([^\]]*)\]\s+k-:\[([^\]]*)\]\s+l:\[([^\]]*)\]\s*$")


def parse_type(text: str) -> RamificationType:
    m = _TYPE_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse ramification type {text!r}")
    return RamificationType(*(parse_partition(g) for g in m.groups()))
