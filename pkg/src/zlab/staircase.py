"""Monomial m-primary ideals of k[x, y] encoded by column sequences.

An ideal I with x^d in I (d minimal) is stored as a(I) = (a_0, ..., a_d) where
a_i is the least j with x^(d-i) y^j in I.  Everything else (generators,
products, colons, integral closure) is computed on that vector.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import ceil
from typing import Iterable, Sequence

Generators = list[tuple[int, int]]


class ColumnSequence(tuple):
    """Immutable column sequence a_0 = 0 < a_1 <= ... <= a_d."""

    def __new__(cls, values: Iterable[int]):
        vals = tuple(int(v) for v in values)
        if not vals:
            raise ValueError("column sequence must be non-empty")
        if vals[0] != 0:
            raise ValueError(f"a_0 must be 0, got {vals[0]}")
        if len(vals) > 1 and vals[1] < 1:
            raise ValueError("a_1 must be >= 1 (x^(d-1) would lie in the ideal)")
        if any(x > y for x, y in zip(vals, vals[1:])):
            raise ValueError(f"column sequence must be nondecreasing: {vals}")
        return super().__new__(cls, vals)

    @property
    def d(self) -> int:
        return len(self) - 1

    @property
    def b(self) -> tuple[int, ...]:
        """Differences sequence b_1..b_d."""
        return tuple(self[i] - self[i - 1] for i in range(1, len(self)))

    def __repr__(self) -> str:
        return f"ColumnSequence({list(self)})"

    def __str__(self) -> str:
        return "a:" + ",".join(map(str, self))


UNIT = ColumnSequence((0,))


def maximal_power(d: int) -> ColumnSequence:
    """m^d."""
    return ColumnSequence(range(d + 1))


def is_lex(a: Sequence[int]) -> bool:
    return all(x < y for x, y in zip(a, a[1:]))


def _from_profile(c: Sequence[int]) -> ColumnSequence:
    # c[u] = least v with x^u y^v in the ideal; nonincreasing, reaches 0
    d = next(u for u, v in enumerate(c) if v == 0)
    return ColumnSequence(c[d - i] for i in range(d + 1))


def _profile(a: Sequence[int], length: int) -> list[int]:
    d = len(a) - 1
    return [a[d - u] if u <= d else 0 for u in range(length)]


def from_generators(gens: Iterable[tuple[int, int]]) -> ColumnSequence:
    gens = [(int(u), int(v)) for u, v in gens]
    if any(u < 0 or v < 0 for u, v in gens):
        raise ValueError("exponents must be nonnegative")
    xs = [u for u, v in gens if v == 0]
    ys = [v for u, v in gens if u == 0]
    if not xs or not ys:
        raise ValueError("ideal is not m-primary: needs a pure power of x and of y")
    d = min(xs)
    a = []
    for i in range(d + 1):
        a.append(min(v for u, v in gens if u <= d - i))
    return ColumnSequence(a)


def minimal_generators(a: Sequence[int]) -> Generators:
    d = len(a) - 1
    return [(d - i, a[i]) for i in range(d + 1) if i == d or a[i] < a[i + 1]]


def transpose(a: Sequence[int]) -> ColumnSequence:
    """Swap the roles of x and y."""
    return from_generators((v, u) for u, v in minimal_generators(a))


def mu(a: Sequence[int]) -> int:
    return len(minimal_generators(a))


def order(a: Sequence[int]) -> int:
    return min(u + v for u, v in minimal_generators(a))


def colength(a: Sequence[int]) -> int:
    return sum(a)


def is_contracted_monomial(a: Sequence[int]) -> bool:
    return mu(a) == order(a) + 1


def min_plus_product(a: Sequence[int], b: Sequence[int]) -> ColumnSequence:
    out = [None] * (len(a) + len(b) - 1)
    for j, x in enumerate(a):
        for k, y in enumerate(b):
            s = x + y
            cur = out[j + k]
            if cur is None or s < cur:
                out[j + k] = s
    return ColumnSequence(out)


def power(a: Sequence[int], n: int) -> ColumnSequence:
    if n < 0:
        raise ValueError("power must be nonnegative")
    result: Sequence[int] = UNIT
    base: Sequence[int] = a
    while n:
        if n & 1:
            result = min_plus_product(result, base)
        n >>= 1
        if n:
            base = min_plus_product(base, base)
    return ColumnSequence(result)


def product(*seqs: Sequence[int]) -> ColumnSequence:
    out: Sequence[int] = UNIT
    for s in seqs:
        out = min_plus_product(out, s)
    return ColumnSequence(out)


def contains(a: Sequence[int], u: int, v: int) -> bool:
    """Is x^u y^v in the ideal?"""
    d = len(a) - 1
    return u >= d or v >= a[d - u]


def is_subset(a: Sequence[int], b: Sequence[int]) -> bool:
    """Is the ideal of a contained in the ideal of b?"""
    return all(contains(b, u, v) for u, v in minimal_generators(a))


def intersection(a: Sequence[int], b: Sequence[int]) -> ColumnSequence:
    n = max(len(a), len(b))
    pa, pb = _profile(a, n), _profile(b, n)
    return _from_profile([max(x, y) for x, y in zip(pa, pb)])


def ideal_sum(a: Sequence[int], b: Sequence[int]) -> ColumnSequence:
    n = max(len(a), len(b))
    pa, pb = _profile(a, n), _profile(b, n)
    return _from_profile([min(x, y) for x, y in zip(pa, pb)])


def colon(a: Sequence[int], b: Sequence[int]) -> ColumnSequence:
    """(A : B), intersecting (A : g) over the minimal generators g of B."""
    n = len(a)
    prof = [0] * n
    for p, q in minimal_generators(b):
        for u in range(n):
            w = u + p
            need = a[n - 1 - w] if w < n else 0
            prof[u] = max(prof[u], need - q, 0)
    return _from_profile(prof)


def _lower_hull(points: list[tuple[int, int]]) -> list[tuple[int, int]]:
    pts = sorted(set(points))
    hull: list[tuple[int, int]] = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop hull[-1] unless it makes a strict left turn
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def integral_closure(a: Sequence[int]) -> ColumnSequence:
    """Lattice points of the Newton polyhedron conv(gens) + R^2_{>=0}."""
    gens = minimal_generators(a)
    hull = _lower_hull(gens)
    d = len(a) - 1
    prof = []
    for u in range(d + 1):
        # hull vertices are sorted by u with decreasing v; find the segment over u
        for (u1, v1), (u2, v2) in zip(hull, hull[1:]):
            if u1 <= u <= u2:
                val = Fraction(v1) + Fraction(v2 - v1, u2 - u1) * (u - u1)
                prof.append(max(ceil(val), 0))
                break
        else:
            prof.append(hull[0][1] if u <= hull[0][0] else 0)
    return _from_profile(prof)


def is_integrally_closed(a: Sequence[int]) -> bool:
    return integral_closure(a) == tuple(a)


# ---------------------------------------------------------------- text format

_GEN_RE = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_ideal(text: str) -> ColumnSequence:
    """Parse ``a:0,3,3,5`` or ``g:(3,0)(1,3)(0,5)``."""
    text = text.strip()
    if text.startswith("a:"):
        body = text[2:].strip()
        return ColumnSequence(int(t) for t in body.split(",") if t.strip())
    if text.startswith("g:"):
        body = text[2:]
        gens = [(int(u), int(v)) for u, v in _GEN_RE.findall(body)]
        if not gens or _GEN_RE.sub("", body).strip():
            raise ValueError(f"bad generator list: {text!r}")
        return from_generators(gens)
    raise ValueError(f"ideal must start with 'a:' or 'g:': {text!r}")


def format_generators(gens: Iterable[tuple[int, int]], xvar: str = "x", yvar: str = "y") -> str:
    def mono(u: int, v: int) -> str:
        parts = []
        if u:
            parts.append(xvar if u == 1 else f"{xvar}^{u}")
        if v:
            parts.append(yvar if v == 1 else f"{yvar}^{v}")
        return "*".join(parts) or "1"

    return "(" + ", ".join(mono(u, v) for u, v in gens) + ")"
