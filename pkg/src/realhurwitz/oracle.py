"""Brute-force transition model on signed partial matchings.

A state on the block (n+, n-) is a partial matching between two labeled sets;
a transition is an ordered pair of states. The alternating chains and cycles
of a transition encode a ramification type, transpositions are the transitions
whose states differ by a single matched pair, and multiplying by the class sum
of transpositions gives matrices that the cut-and-join operators must equal.
Everything here is enumerated exhaustively; this module is the independent
check on the operator route, so it shares no code with it.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from itertools import combinations, permutations
from typing import Iterator

from .model import (
    Bidegree,
    RamificationType,
    bidegree,
    enumerate_types,
    partition,
    zeta,
)

State = frozenset
Transition = tuple[State, State]


@lru_cache(maxsize=None)
def states(n_plus: int, n_minus: int) -> tuple[State, ...]:
    """All partial matchings between {0..n+-1} and {0..n--1}, in a fixed order."""
    found = []
    for k in range(min(n_plus, n_minus) + 1):
        for plus_side in combinations(range(n_plus), k):
            for minus_side in permutations(range(n_minus), k):
                found.append(frozenset(zip(plus_side, minus_side)))
    found.sort(key=lambda s: sorted(s))
    found.sort(key=len)
    return tuple(found)


def transitions(n_plus: int, n_minus: int) -> Iterator[Transition]:
    for initial in states(n_plus, n_minus):
        for final in states(n_plus, n_minus):
            yield (initial, final)


def invert(t: Transition) -> Transition:
    return (t[1], t[0])


def compose(t1: Transition, t2: Transition) -> Transition | None:
    """Groupoid product: defined only when the first final equals the second initial."""
    if t1[1] != t2[0]:
        return None
    return (t1[0], t2[1])


def is_transposition(t: Transition) -> bool:
    """A transposition adds or removes exactly one matched pair."""
    return len(t[0] ^ t[1]) == 1


def neighbor_states(s: State, n_plus: int, n_minus: int) -> Iterator[State]:
    """States differing from s by one pair: every removal, then every addition."""
    for pair in sorted(s):
        yield s - {pair}
    used_plus = {i for i, _ in s}
    used_minus = {j for _, j in s}
    for i in range(n_plus):
        if i in used_plus:
            continue
        for j in range(n_minus):
            if j not in used_minus:
                yield s | {(i, j)}


def classify(t: Transition, n_plus: int, n_minus: int) -> RamificationType:
    """Ramification type of a transition, from its chain decomposition.

    The two matchings overlay to a graph whose components are alternating
    cycles and chains. A cycle on 2l vertices gives a part l of lam. A chain
    on k vertices gives a part k: for odd k in the kappa of the side holding
    both ends, for even k in kappa_plus when the ends are unmatched in the
    initial state and in kappa_minus when unmatched in the final state.
    """
    initial, final = t
    adj: dict[tuple[str, int], list[tuple[int, tuple[str, int]]]] = {}
    for i in range(n_plus):
        adj[("+", i)] = []
    for j in range(n_minus):
        adj[("-", j)] = []
    for which, s in ((0, initial), (1, final)):
        for i, j in s:
            adj[("+", i)].append((which, ("-", j)))
            adj[("-", j)].append((which, ("+", i)))
    kappa_plus: list[int] = []
    kappa_minus: list[int] = []
    lam: list[int] = []
    seen: set[tuple[str, int]] = set()
    for start in adj:
        if start in seen:
            continue
        component = [start]
        seen.add(start)
        frontier = [start]
        edge_count = 0
        while frontier:
            v = frontier.pop()
            for _, w in adj[v]:
                edge_count += 1
                if w not in seen:
                    seen.add(w)
                    component.append(w)
                    frontier.append(w)
        edge_count //= 2  # each edge seen from both endpoints
        k = len(component)
        if edge_count == k:
            if k % 2:
                raise AssertionError(f"odd cycle in transition {t!r}")
            lam.append(k // 2)
            continue
        if edge_count != k - 1:
            raise AssertionError(f"component of {t!r} is neither chain nor cycle")
        ends = [v for v in component if len(adj[v]) < 2]
        if k == 1:
            kind = ends[0][0]
            (kappa_plus if kind == "+" else kappa_minus).append(1)
        elif k % 2:
            sides = {v[0] for v in ends}
            if len(sides) != 1:
                raise AssertionError(f"odd chain of {t!r} with mixed end sides")
            (kappa_plus if sides == {"+"} else kappa_minus).append(k)
        else:
            end_edge_kinds = {which for v in ends for which, _ in adj[v]}
            if len(end_edge_kinds) != 1:
                raise AssertionError(f"even chain of {t!r} with mixed end matchings")
            # Ends carried only by the final matching are free in the initial one.
            (kappa_plus if end_edge_kinds == {1} else kappa_minus).append(k)
    return RamificationType(partition(kappa_plus), partition(kappa_minus), partition(lam))


def representative(mu: RamificationType) -> Transition:
    """One transition of type mu on the block bidegree(mu)."""
    initial: set[tuple[int, int]] = set()
    final: set[tuple[int, int]] = set()
    next_plus = 0
    next_minus = 0

    def fresh(count_plus: int, count_minus: int) -> tuple[list[int], list[int]]:
        nonlocal next_plus, next_minus
        ps = list(range(next_plus, next_plus + count_plus))
        ms = list(range(next_minus, next_minus + count_minus))
        next_plus += count_plus
        next_minus += count_minus
        return ps, ms

    for l in mu.lam:
        ps, ms = fresh(l, l)
        for t in range(l):
            initial.add((ps[t], ms[t]))
            final.add((ps[(t + 1) % l], ms[t]))
    for k in mu.kappa_plus:
        if k % 2:
            ps, ms = fresh((k + 1) // 2, (k - 1) // 2)
            for t in range(len(ms)):
                initial.add((ps[t], ms[t]))
                final.add((ps[t + 1], ms[t]))
        else:
            ps, ms = fresh(k // 2, k // 2)
            for t in range(len(ps)):
                final.add((ps[t], ms[t]))
            for t in range(len(ps) - 1):
                initial.add((ps[t + 1], ms[t]))
    for k in mu.kappa_minus:
        if k % 2:
            ps, ms = fresh((k - 1) // 2, (k + 1) // 2)
            for t in range(len(ps)):
                initial.add((ps[t], ms[t]))
                final.add((ps[t], ms[t + 1]))
        else:
            ps, ms = fresh(k // 2, k // 2)
            for t in range(len(ps)):
                initial.add((ps[t], ms[t]))
            for t in range(len(ps) - 1):
                final.add((ps[t + 1], ms[t]))
    b = bidegree(mu)
    if (next_plus, next_minus) != (b.n_plus, b.n_minus):
        raise AssertionError(f"representative of {mu!r} used wrong block size")
    return (frozenset(initial), frozenset(final))


def class_members(mu: RamificationType) -> list[Transition]:
    """Every transition of type mu, by exhaustive classification of its block."""
    b = bidegree(mu)
    return [t for t in transitions(b.n_plus, b.n_minus)
            if classify(t, b.n_plus, b.n_minus) == mu]


def class_size(mu: RamificationType) -> int:
    return len(class_members(mu))


@lru_cache(maxsize=None)
def mult_c2_matrix(b: Bidegree, side: str = "left") -> tuple[tuple[Fraction, ...], ...]:
    """Matrix of multiplication by the transposition class sum on the block b.

    Computed in the basis of class sums scaled by inverse class size, which is
    the image of the monomial basis, over enumerate_types(b) in order. Entry
    [row][col] is the coefficient of types[row] in the product with types[col].
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    b = Bidegree(*b)
    types = enumerate_types(b)
    index = {mu: i for i, mu in enumerate(types)}
    columns = []
    for mu in types:
        counts = [0] * len(types)
        members = class_members(mu)
        for initial, final in members:
            if side == "left":
                results = ((s, final) for s in neighbor_states(initial, *b))
            else:
                results = ((initial, s) for s in neighbor_states(final, *b))
            for r in results:
                counts[index[classify(r, *b)]] += 1
        columns.append([Fraction(c, len(members)) for c in counts])
    return tuple(tuple(columns[j][i] for j in range(len(types))) for i in range(len(types)))


@lru_cache(maxsize=None)
def _adjacency_power(n_plus: int, n_minus: int, m: int) -> tuple[tuple[int, ...], ...]:
    """m-th power of the state adjacency matrix, with exact integers."""
    all_states = states(n_plus, n_minus)
    index = {s: i for i, s in enumerate(all_states)}
    size = len(all_states)
    if m == 0:
        return tuple(tuple(int(i == j) for j in range(size)) for i in range(size))
    if m == 1:
        adj = [[0] * size for _ in range(size)]
        for i, s in enumerate(all_states):
            for t in neighbor_states(s, n_plus, n_minus):
                adj[i][index[t]] = 1
        return tuple(tuple(row) for row in adj)
    prev = _adjacency_power(n_plus, n_minus, m - 1)
    adj = _adjacency_power(n_plus, n_minus, 1)
    out = [[sum(prev[i][k] * adj[k][j] for k in range(size)) for j in range(size)]
           for i in range(size)]
    return tuple(tuple(row) for row in out)


def walk_count(mu: RamificationType, m: int) -> int:
    """Number of m-step transposition walks linking the states of one
    representative transition of type mu."""
    b = bidegree(mu)
    all_states = states(b.n_plus, b.n_minus)
    index = {s: i for i, s in enumerate(all_states)}
    initial, final = representative(mu)
    power = _adjacency_power(b.n_plus, b.n_minus, m)
    return power[index[initial]][index[final]]


def hurwitz_by_paths(b: Bidegree, m: int) -> dict[RamificationType, Fraction]:
    """Disconnected counts at u^m/m! for every type on the ground set b.

    Sums m-step walk counts between all ordered state pairs, grouped by the
    type of the pair, and divides by n_plus! n_minus!. Equals walk_count over
    zeta for each type, since walks between pairs in one class agree.
    """
    b = Bidegree(*b)
    all_states = states(b.n_plus, b.n_minus)
    power = _adjacency_power(b.n_plus, b.n_minus, m)
    totals: dict[RamificationType, int] = {}
    for i, s in enumerate(all_states):
        for j, t in enumerate(all_states):
            count = power[i][j]
            if count:
                mu = classify((s, t), b.n_plus, b.n_minus)
                totals[mu] = totals.get(mu, 0) + count
    denom = factorial(b.n_plus) * factorial(b.n_minus)
    return {mu: Fraction(total, denom) for mu, total in totals.items()}
