"""Exact sparse polynomials indexed by monomial keys, and exp/log of u-series.

A PolyVector is a finitely supported map key -> Fraction. Keys must be hashable
and provide `.degree` (int), `.union(other)` (monomial product), and
`.is_empty` (True for the constant monomial); RamificationType satisfies this,
as do the tilde and genus-0 key types.

A USeries stores the coefficients of u^m/m!, so series products use binomial
convolution and exp/log are the exponential-generating-function transforms
relating disconnected and connected counts.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Iterator

from .model import EMPTY_TYPE, RamificationType, bidegree, zeta

Rational = Fraction


class PolyVector:
    """Immutable finitely supported map from monomial keys to exact rationals."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | Iterable[tuple[object, Fraction]] = ()):
        data: dict = dict(terms)
        self.terms = {k: Fraction(c) for k, c in data.items() if c != 0}

    @classmethod
    def monomial(cls, key, coeff: Fraction | int = 1) -> "PolyVector":
        return cls({key: Fraction(coeff)})

    @classmethod
    def zero(cls) -> "PolyVector":
        return cls()

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyVector) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __iter__(self) -> Iterator[tuple[object, Fraction]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def coeff(self, key) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def __add__(self, other: "PolyVector") -> "PolyVector":
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return PolyVector(out)

    def __sub__(self, other: "PolyVector") -> "PolyVector":
        return self + other.scale(-1)

    def scale(self, c: Fraction | int) -> "PolyVector":
        c = Fraction(c)
        if not c:
            return PolyVector()
        return PolyVector({k: v * c for k, v in self.terms.items()})

    def mul(self, other: "PolyVector", max_degree: int | None = None) -> "PolyVector":
        """Bilinear monomial product; keys combine by part-wise union."""
        if not self.terms or not other.terms:
            return PolyVector()
        out: dict = {}
        for da, a_terms in _by_degree(self).items():
            for db, b_terms in _by_degree(other).items():
                if max_degree is not None and da + db > max_degree:
                    continue
                for ka, ca in a_terms:
                    for kb, cb in b_terms:
                        key = ka.union(kb)
                        s = out.get(key, 0) + ca * cb
                        if s:
                            out[key] = s
                        else:
                            del out[key]
        return PolyVector(out)

    def restrict_degree(self, max_degree: int) -> "PolyVector":
        return PolyVector({k: c for k, c in self.terms.items() if k.degree <= max_degree})

    def map_keys(self, f) -> "PolyVector":
        out: dict = {}
        for k, c in self.terms.items():
            key = f(k)
            out[key] = out.get(key, 0) + c
        return PolyVector(out)

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}: {c}" for k, c in sorted(
            self.terms.items(), key=lambda item: repr(item[0])))
        return f"PolyVector({{{inner}}})"


def _by_degree(v: PolyVector) -> dict[int, list[tuple[object, Fraction]]]:
    buckets: dict[int, list[tuple[object, Fraction]]] = {}
    for k, c in v.terms.items():
        buckets.setdefault(k.degree, []).append((k, c))
    return buckets


def vector_bidegree(v: PolyVector):
    """Common bidegree tag of all supported types, or None if empty or mixed."""
    tags = set()
    for k, _ in v:
        if not isinstance(k, RamificationType):
            return None
        tags.add(bidegree(k))
    if len(tags) == 1:
        return tags.pop()
    return None


def scalar_product(a: PolyVector, b: PolyVector) -> Fraction:
    """Bilinear extension of (p_mu, p_nu) = delta_{mu,nu} zeta(mu)."""
    if len(b.terms) < len(a.terms):
        a, b = b, a
    total = Fraction(0)
    for k, c in a:
        cb = b.coeff(k)
        if cb:
            total += c * cb * zeta(k)
    return total


class USeries:
    """Coefficients of u^m/m!; index m holds a PolyVector."""

    __slots__ = ("coeffs", "connected")

    def __init__(self, coeffs: Iterable[PolyVector], connected: bool = False):
        self.coeffs = list(coeffs)
        self.connected = connected

    @property
    def max_m(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, m: int) -> PolyVector:
        if 0 <= m < len(self.coeffs):
            return self.coeffs[m]
        return PolyVector()

    def __eq__(self, other) -> bool:
        if not isinstance(other, USeries):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return all(self.coeff(m) == other.coeff(m) for m in range(n))

    def map_coeffs(self, f) -> "USeries":
        return USeries([f(v) for v in self.coeffs], connected=self.connected)


def series_mul(a: USeries, b: USeries, max_m: int, max_degree: int) -> USeries:
    """Product of u-series in the u^m/m! normalization (binomial convolution)."""
    out = []
    for m in range(max_m + 1):
        acc = PolyVector()
        for k in range(m + 1):
            ak = a.coeff(k)
            bk = b.coeff(m - k)
            if ak and bk:
                acc = acc + ak.mul(bk, max_degree).scale(comb(m, k))
        out.append(acc)
    return USeries(out)


def _constant_coeff(v: PolyVector) -> Fraction:
    for k, c in v:
        if k.is_empty:
            return c
    return Fraction(0)


def _strip_constant(v: PolyVector) -> PolyVector:
    return PolyVector({k: c for k, c in v if not k.is_empty})


def series_exp(h: USeries, max_m: int, max_degree: int,
               empty_key=EMPTY_TYPE) -> USeries:
    """exp of a series with no constant-monomial term, truncated to the caps.

    The result's constant monomial (coefficient 1 at m=0) is indexed by
    empty_key, which must match the key type of h.
    """
    for m, v in enumerate(h.coeffs):
        if _constant_coeff(v):
            raise ValueError(f"series_exp input has a constant-monomial term at m={m}")
    result = [h.coeff(m).restrict_degree(max_degree) for m in range(max_m + 1)]
    power = USeries(list(result))
    # Accumulate H^n/n!; every monomial of H has degree >= 1, so n caps at max_degree.
    for n in range(2, max_degree + 1):
        power = series_mul(power, h, max_m, max_degree)
        power = power.map_coeffs(lambda v: v.scale(Fraction(1, n)))
        if not any(power.coeffs):
            break
        for m in range(max_m + 1):
            result[m] = result[m] + power.coeff(m)
    result[0] = result[0] + PolyVector.monomial(empty_key, 1)
    return USeries(result, connected=False)


def series_log(big_h: USeries, max_m: int, max_degree: int) -> USeries:
    """log of a series whose m=0 coefficient has constant term 1 (and 0 for m>0)."""
    if _constant_coeff(big_h.coeff(0)) != 1:
        raise ValueError("series_log input must have constant-monomial coefficient 1 at m=0")
    for m in range(1, len(big_h.coeffs)):
        if _constant_coeff(big_h.coeff(m)):
            raise ValueError(f"series_log input has a constant-monomial term at m={m}")
    x = USeries([_strip_constant(big_h.coeff(m)).restrict_degree(max_degree)
                 for m in range(max_m + 1)])
    result = [x.coeff(m) for m in range(max_m + 1)]
    power = USeries(list(result))
    sign = 1
    # log(1+X) = sum (-1)^(n+1) X^n / n; X has minimum degree 1 in every coefficient.
    for n in range(2, max_degree + 1):
        power = series_mul(power, x, max_m, max_degree)
        if not any(power.coeffs):
            break
        sign = -sign
        for m in range(max_m + 1):
            result[m] = result[m] + power.coeff(m).scale(Fraction(sign, n))
    return USeries(result, connected=True)
