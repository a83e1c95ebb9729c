"""Unsigned transition model for simple real functions on curves that need
not separate.

States are involutive partial matchings on one unsigned ground set of n
elements; a real pole carries a sign only when its order is even, so
ramification data is a quadruple: even positive real poles, even negative
real poles, odd real poles, and conjugate pole pairs. The evolution operator
on the invariant algebra is defined as left multiplication by the class sum
of transpositions; it preserves the total degree but not a bidegree. A
symbolic expansion of the transcribed differential-operator form is kept for
per-entry comparison, since several superscripts of that transcription are
visibly garbled; the matrix derived from walks is authoritative.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator, NamedTuple

from .model import Partition, aut_order, merge_partitions, partition, partitions_of
from .poly import PolyVector, USeries, series_log

TildeState = frozenset
TildeTransition = tuple[TildeState, TildeState]


class TildeType(NamedTuple):
    """Ramification quadruple; signs exist for even-order real poles only."""

    kappa_plus: Partition   # even parts
    kappa_minus: Partition  # even parts
    kappa_odd: Partition    # odd parts
    lam: Partition

    @property
    def degree(self) -> int:
        return (sum(self.kappa_plus) + sum(self.kappa_minus)
                + sum(self.kappa_odd) + 2 * sum(self.lam))

    def union(self, other: "TildeType") -> "TildeType":
        return TildeType(merge_partitions(self.kappa_plus, other.kappa_plus),
                         merge_partitions(self.kappa_minus, other.kappa_minus),
                         merge_partitions(self.kappa_odd, other.kappa_odd),
                         merge_partitions(self.lam, other.lam))

    @property
    def is_empty(self) -> bool:
        return not (self.kappa_plus or self.kappa_minus
                    or self.kappa_odd or self.lam)


TILDE_EMPTY = TildeType((), (), (), ())


def ttype(kappa_plus=(), kappa_minus=(), kappa_odd=(), lam=()) -> TildeType:
    """Validated constructor: even parts in the signed slots, odd in kappa."""
    kp, km = partition(kappa_plus), partition(kappa_minus)
    ko, lm = partition(kappa_odd), partition(lam)
    if any(k % 2 for k in kp) or any(k % 2 for k in km):
        raise ValueError("signed real poles must have even order")
    if any(k % 2 == 0 for k in ko):
        raise ValueError("unsigned real poles must have odd order")
    return TildeType(kp, km, ko, lm)


def tilde_canonical_key(mu: TildeType):
    return (mu.degree, mu.kappa_plus, mu.kappa_minus, mu.kappa_odd, mu.lam)


def tilde_zeta(mu: TildeType) -> int:
    """Stabilizer order of a transition of type mu inside S(n)."""
    out = (aut_order(mu.kappa_plus) * aut_order(mu.kappa_minus)
           * aut_order(mu.kappa_odd) * aut_order(mu.lam))
    for l in mu.lam:
        out *= 2 * l
    return out * 2 ** (len(mu.kappa_plus) + len(mu.kappa_minus))


def tilde_euler_characteristic(mu: TildeType, m: int) -> int:
    """Source-curve Euler characteristic: degree plus pole count minus m,
    with conjugate pairs counting twice."""
    return (mu.degree + len(mu.kappa_plus) + len(mu.kappa_minus)
            + len(mu.kappa_odd) + 2 * len(mu.lam) - m)


def tilde_class_size_formula(mu: TildeType) -> int:
    n = mu.degree
    z = tilde_zeta(mu)
    size, rem = divmod(factorial(n), z)
    if rem:
        raise ArithmeticError(f"stabilizer order {z} does not divide {n}!")
    return size


@lru_cache(maxsize=None)
def tilde_enumerate_types(n: int) -> tuple[TildeType, ...]:
    """All quadruples of total degree n, in canonical order."""
    out = []
    for lam_weight in range(n // 2 + 1):
        rest = n - 2 * lam_weight
        for lam in partitions_of(lam_weight):
            for wp in range(rest + 1):
                for kp in partitions_of(wp):
                    if any(k % 2 for k in kp):
                        continue
                    for wm in range(rest - wp + 1):
                        for km in partitions_of(wm):
                            if any(k % 2 for k in km):
                                continue
                            for ko in partitions_of(rest - wp - wm):
                                if any(k % 2 == 0 for k in ko):
                                    continue
                                out.append(TildeType(kp, km, ko, lam))
    return tuple(sorted(out, key=tilde_canonical_key))


@lru_cache(maxsize=None)
def tilde_states(n: int) -> tuple[TildeState, ...]:
    """Involutive partial matchings on range(n)."""

    def matchings(elems: tuple[int, ...]) -> Iterator[frozenset]:
        if not elems:
            yield frozenset()
            return
        first, rest = elems[0], elems[1:]
        yield from matchings(rest)  # first stays single
        for k, other in enumerate(rest):
            remaining = rest[:k] + rest[k + 1:]
            for m in matchings(remaining):
                yield m | {(first, other)}

    return tuple(sorted(matchings(tuple(range(n))),
                        key=lambda s: (len(s), sorted(s))))


def tilde_neighbors(s: TildeState, n: int) -> Iterator[TildeState]:
    """States one transposition away: one pair removed or one pair added."""
    for pair in sorted(s):
        yield s - {pair}
    used = {i for pair in s for i in pair}
    free = [i for i in range(n) if i not in used]
    for a in range(len(free)):
        for b in range(a + 1, len(free)):
            yield s | {(free[a], free[b])}


def tilde_classify(t: TildeTransition, n: int) -> TildeType:
    """Ramification type from the chain/cycle decomposition of a transition.

    Cycles of length 2l give a conjugate pair of order l. Odd chains give an
    unsigned real pole. Even chains give a positive pole when both end edges
    lie in the final matching (ends unmatched initially), negative when both
    lie in the initial one.
    """
    initial, final = t
    edges: dict[int, list[tuple[int, int]]] = {v: [] for v in range(n)}
    for side, matching in enumerate((initial, final)):
        for a, b in matching:
            edges[a].append((b, side))
            edges[b].append((a, side))
    seen: set[int] = set()
    kp, km, ko, lam = [], [], [], []
    for start in range(n):
        if start in seen:
            continue
        component = [start]
        seen.add(start)
        queue = [start]
        while queue:
            v = queue.pop()
            for w, _ in edges[v]:
                if w not in seen:
                    seen.add(w)
                    component.append(w)
                    queue.append(w)
        k = len(component)
        edge_count = sum(len(edges[v]) for v in component) // 2
        if edge_count == k:  # cycle; length is even by alternation
            lam.append(k // 2)
        elif k % 2:
            ko.append(k)
        else:
            end_sides = {side for v in component if len(edges[v]) == 1
                         for _, side in edges[v]}
            assert len(end_sides) == 1, t
            (kp if end_sides == {1} else km).append(k)
    return TildeType(partition(kp), partition(km), partition(ko), partition(lam))


def tilde_representative(mu: TildeType) -> TildeTransition:
    """One transition of type mu on range(degree)."""
    initial: list[tuple[int, int]] = []
    final: list[tuple[int, int]] = []
    offset = 0

    def chain(k: int, first_side: list) -> None:
        nonlocal offset
        sides = [first_side, final if first_side is initial else initial]
        for t in range(k - 1):
            sides[t % 2].append((offset + t, offset + t + 1))
        offset += k

    for l in mu.lam:
        verts = list(range(offset, offset + 2 * l))
        for t in range(0, 2 * l, 2):
            initial.append((verts[t], verts[t + 1]))
        for t in range(1, 2 * l, 2):
            a, b = verts[t], verts[(t + 1) % (2 * l)]
            final.append((min(a, b), max(a, b)))
        offset += 2 * l
    for k in mu.kappa_odd:
        chain(k, initial)
    for k in mu.kappa_plus:
        chain(k, final)  # end edges in the final matching
    for k in mu.kappa_minus:
        chain(k, initial)
    t = (frozenset(initial), frozenset(final))
    assert tilde_classify(t, mu.degree) == mu, mu
    return t


@lru_cache(maxsize=None)
def tilde_class_members(mu: TildeType) -> tuple[TildeTransition, ...]:
    n = mu.degree
    all_states = tilde_states(n)
    return tuple((s, t) for s in all_states for t in all_states
                 if tilde_classify((s, t), n) == mu)


def tilde_class_size(mu: TildeType) -> int:
    return len(tilde_class_members(mu))


def tilde_invert(t: TildeTransition) -> TildeTransition:
    return (t[1], t[0])


class TildeMatrix(NamedTuple):
    """Left multiplication by the transposition class sum on degree n."""

    n: int
    basis: tuple[TildeType, ...]
    entries: tuple[tuple[Fraction, ...], ...]  # entries[row][col]

    def matvec(self, vec: list[Fraction]) -> list[Fraction]:
        return [sum(row[j] * vec[j] for j in range(len(vec))) for row in self.entries]


@lru_cache(maxsize=None)
def tilde_operator_matrix(n: int) -> TildeMatrix:
    """Matrix of the evolution operator on the degree-n invariant algebra,
    derived from exhaustive walks and averaged over each class."""
    basis = tilde_enumerate_types(n)
    index = {mu: i for i, mu in enumerate(basis)}
    size = len(basis)
    entries = [[Fraction(0)] * size for _ in range(size)]
    for j, mu in enumerate(basis):
        members = tilde_class_members(mu)
        counts: dict[TildeType, int] = {}
        for initial, final in members:
            for s in tilde_neighbors(initial, n):
                res = tilde_classify((s, final), n)
                counts[res] = counts.get(res, 0) + 1
        for res, count in counts.items():
            entries[index[res]][j] = Fraction(count, len(members))
    return TildeMatrix(n, basis, tuple(tuple(row) for row in entries))


def _without(p: Partition, *parts: int) -> Partition:
    items = list(p)
    for k in parts:
        items.remove(k)
    return tuple(items)


def tilde_reference_images(mu: TildeType) -> PolyVector:
    """Symbolic expansion of the transcribed differential form of the
    operator, with garbled superscripts repaired: odd-order variables carry
    no sign, and the join prefactors are 2, 1/2, 2. Kept for comparison only."""
    from collections import Counter

    out: dict[TildeType, Fraction] = {}

    def add(nu: TildeType, c: Fraction) -> None:
        s = out.get(nu, Fraction(0)) + c
        if s:
            out[nu] = s
        else:
            out.pop(nu, None)

    kp, km, ko, lam = mu.kappa_plus, mu.kappa_minus, mu.kappa_odd, mu.lam
    kp_counts, km_counts = Counter(kp), Counter(km)
    ko_counts, lam_counts = Counter(ko), Counter(lam)
    # join of an odd pole with a positive even pole, prefactor 2
    for a in ko_counts:
        for b in kp_counts:
            nu = TildeType(_without(kp, b), km,
                           merge_partitions(_without(ko, a), (a + b,)), lam)
            add(nu, Fraction(2 * ko_counts[a] * kp_counts[b]))
    # join of two odd poles into a negative even pole, prefactor 1/2
    for a in ko_counts:
        for b in ko_counts:
            mult = ko_counts[a] * (ko_counts[b] - (1 if a == b else 0))
            if mult:
                nu = TildeType(kp, merge_partitions(km, (a + b,)),
                               _without(ko, a, b), lam)
                add(nu, Fraction(mult, 2))
    # join of two positive even poles, prefactor 2
    for a in kp_counts:
        for b in kp_counts:
            mult = kp_counts[a] * (kp_counts[b] - (1 if a == b else 0))
            if mult:
                nu = TildeType(merge_partitions(_without(kp, a, b), (a + b,)),
                               km, ko, lam)
                add(nu, Fraction(2 * mult))
    # cut of a negative even pole into two odd ones
    for n_part, mult in km_counts.items():
        for a in range(1, n_part, 2):
            nu = TildeType(kp, _without(km, n_part),
                           merge_partitions(ko, (a, n_part - a)), lam)
            add(nu, Fraction(mult))
    # cut of an odd pole into an odd and a positive even one
    for n_part, mult in ko_counts.items():
        for a in range(1, n_part - 1, 2):
            nu = TildeType(merge_partitions(kp, (n_part - a,)), km,
                           merge_partitions(_without(ko, n_part), (a,)), lam)
            add(nu, Fraction(mult))
    # cut of a positive even pole into two positive even ones
    for n_part, mult in kp_counts.items():
        for a in range(2, n_part - 1, 2):
            nu = TildeType(merge_partitions(_without(kp, n_part), (a, n_part - a)),
                           km, ko, lam)
            add(nu, Fraction(mult))
    # conjugate pair of order l to a positive pole of order 2l, weight l
    for l, mult in lam_counts.items():
        nu = TildeType(merge_partitions(kp, (2 * l,)), km, ko, _without(lam, l))
        add(nu, Fraction(l * mult))
    # positive even pole to a conjugate pair of half the order
    for n_part, mult in kp_counts.items():
        nu = TildeType(_without(kp, n_part), km, ko,
                       merge_partitions(lam, (n_part // 2,)))
        add(nu, Fraction(mult))
    return PolyVector(out)


class TildeOperatorComparison(NamedTuple):
    """Per-entry diff between the walk-derived matrix and the transcribed
    differential form. Disagreements are recorded, never raised."""

    n: int
    basis: tuple[TildeType, ...]
    walk_entries: tuple[tuple[Fraction, ...], ...]
    symbolic_entries: tuple[tuple[Fraction, ...], ...]
    mismatches: tuple[tuple[TildeType, TildeType, Fraction, Fraction], ...]

    @property
    def agrees(self) -> bool:
        return not self.mismatches


def tilde_compare_operator(n: int) -> TildeOperatorComparison:
    walk = tilde_operator_matrix(n)
    basis = walk.basis
    index = {mu: i for i, mu in enumerate(basis)}
    size = len(basis)
    symbolic = [[Fraction(0)] * size for _ in range(size)]
    for j, mu in enumerate(basis):
        for nu, c in tilde_reference_images(mu):
            symbolic[index[nu]][j] = c
    mismatches = []
    for i in range(size):
        for j in range(size):
            if walk.entries[i][j] != symbolic[i][j]:
                mismatches.append((basis[i], basis[j],
                                   walk.entries[i][j], symbolic[i][j]))
    return TildeOperatorComparison(n, basis, walk.entries,
                                   tuple(tuple(row) for row in symbolic),
                                   tuple(mismatches))


def tilde_initial_vector(n: int) -> PolyVector:
    """Degree-n piece of the evolution start: the class of the identity
    transition on a singles and b pairs weighs 1/(a! b! 2^b)."""
    terms: dict[TildeType, Fraction] = {}
    for b in range(n // 2 + 1):
        a = n - 2 * b
        mu = TildeType((), (), (1,) * a, (1,) * b)
        terms[mu] = Fraction(1, factorial(a) * factorial(b) * 2 ** b)
    return PolyVector(terms)


@lru_cache(maxsize=None)
def tilde_evolve(n: int, max_m: int) -> tuple[PolyVector, ...]:
    """Coefficients at u^m/m! of the disconnected degree-n evolution."""
    if max_m == 0:
        return (tilde_initial_vector(n),)
    prev = tilde_evolve(n, max_m - 1)
    matrix = tilde_operator_matrix(n)
    vec = [prev[-1].coeff(mu) for mu in matrix.basis]
    image = matrix.matvec(vec)
    nxt = PolyVector({mu: c for mu, c in zip(matrix.basis, image) if c})
    return prev + (nxt,)


@lru_cache(maxsize=None)
def _tilde_adjacency_power(n: int, m: int) -> tuple[tuple[int, ...], ...]:
    all_states = tilde_states(n)
    index = {s: i for i, s in enumerate(all_states)}
    size = len(all_states)
    if m == 0:
        return tuple(tuple(int(i == j) for j in range(size)) for i in range(size))
    if m == 1:
        adj = [[0] * size for _ in range(size)]
        for i, s in enumerate(all_states):
            for t in tilde_neighbors(s, n):
                adj[i][index[t]] = 1
        return tuple(tuple(row) for row in adj)
    prev = _tilde_adjacency_power(n, m - 1)
    adj = _tilde_adjacency_power(n, 1)
    return tuple(tuple(sum(prev[i][k] * adj[k][j] for k in range(size))
                       for j in range(size)) for i in range(size))


def tilde_hurwitz(n: int, m: int) -> dict[TildeType, Fraction]:
    """Disconnected counts at u^m/m! on n elements: walk totals over n!."""
    all_states = tilde_states(n)
    power = _tilde_adjacency_power(n, m)
    totals: dict[TildeType, int] = {}
    for i, s in enumerate(all_states):
        for j, t in enumerate(all_states):
            if power[i][j]:
                mu = tilde_classify((s, t), n)
                totals[mu] = totals.get(mu, 0) + power[i][j]
    return {mu: Fraction(total, factorial(n)) for mu, total in totals.items()}


def tilde_disconnected_series(max_n: int, max_m: int) -> USeries:
    evolved = [tilde_evolve(n, max_m) for n in range(max_n + 1)]
    coeffs = []
    for m in range(max_m + 1):
        total = PolyVector()
        for vectors in evolved:
            total = total + vectors[m]
        coeffs.append(total)
    return USeries(tuple(coeffs), connected=False)


@lru_cache(maxsize=None)
def tilde_connected_series(max_n: int, max_m: int) -> USeries:
    return series_log(tilde_disconnected_series(max_n, max_m), max_m, max_n)


def tilde_connected_value(mu: TildeType, m: int) -> Fraction:
    return tilde_connected_series(mu.degree, m).coeff(m).coeff(mu)


class TildeRow(NamedTuple):
    m: int
    mu: TildeType
    chi: int
    connected: bool
    value: Fraction


def tilde_table_rows(max_n: int, max_m: int, connected: bool = True) -> list[TildeRow]:
    series = (tilde_connected_series(max_n, max_m) if connected
              else tilde_disconnected_series(max_n, max_m))
    rows = []
    for m in range(max_m + 1):
        keys = [mu for mu, _ in series.coeff(m)]
        for mu in sorted(keys, key=tilde_canonical_key):
            rows.append(TildeRow(m, mu, tilde_euler_characteristic(mu, m),
                                 connected, series.coeff(m).coeff(mu)))
    return rows
