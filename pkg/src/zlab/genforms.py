"""Hilbert series of generic forms in k[x, y] and their lex-segment ideals."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import staircase as st


def truncate_positive(f: Sequence[int]) -> list[int]:
    """Keep coefficients while every prefix is positive, zero from the first failure on."""
    out = []
    for c in f:
        if c <= 0:
            break
        out.append(int(c))
    return out


def delta(f: Sequence[int]) -> list[int]:
    """Coefficients of (1 - z) f(z)."""
    f = list(f)
    return [c - (f[i - 1] if i else 0) for i, c in enumerate(f + [0])]


def _poly_mul(f: list[int], g: list[int]) -> list[int]:
    out = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        if x:
            for j, y in enumerate(g):
                out[i + j] += x * y
    return out


def generic_hs(degrees: Sequence[int]) -> list[int]:
    """| prod (1 - z^d_i) / (1 - z)^2 |, the Hilbert series of R/(generic forms)."""
    degs = sorted(int(x) for x in degrees)
    if len(degs) < 2:
        raise ValueError("need at least two forms for an artinian quotient")
    if degs[0] < 1:
        raise ValueError("degrees must be positive")
    num = [1]
    for d in degs:
        num = _poly_mul(num, [1] + [0] * (d - 1) + [-1])
    # divide by (1-z)^2: two running sums
    for _ in range(2):
        acc, run = [], 0
        for c in num:
            run += c
            acc.append(run)
        num = acc
    return truncate_positive(num)


@dataclass(frozen=True)
class DeltaProfile:
    """Delta H = 1 + ... + z^(d1-1) - p_1 z^d1 - ... - p_s z^(d1+s-1) - c z^(d1+s)."""

    d1: int
    p: tuple[int, ...]
    c: int

    def validate(self) -> None:
        p = self.p
        ok = (
            bool(p)
            and p[0] >= 0
            and all(x <= y for x, y in zip(p, p[1:]))
            and 0 <= self.c < p[-1]
            and sum(p) + self.c == self.d1
        )
        if not ok:
            raise AssertionError(f"profile violates the generic-form constraints: {self}")

    def coefficients(self) -> list[int]:
        out = [1] * self.d1 + [-x for x in self.p]
        if self.c:
            out.append(-self.c)
        return out


def delta_profile(hs: Sequence[int]) -> DeltaProfile:
    dh = delta(hs)
    while dh and dh[-1] == 0:
        dh.pop()
    d1 = 0
    while d1 < len(dh) and dh[d1] == 1:
        d1 += 1
    tail = [-x for x in dh[d1:]]
    if len(tail) >= 2 and tail[-1] < tail[-2]:
        prof = DeltaProfile(d1, tuple(tail[:-1]), tail[-1])
    else:
        prof = DeltaProfile(d1, tuple(tail), 0)
    prof.validate()
    return prof


def lex_from_profile(prof: DeltaProfile) -> st.ColumnSequence:
    """p_1 + 1 generators in degree d, p_i in degree d+i-1, c in degree d+s."""
    d = prof.d1
    degrees = [d] * (prof.p[0] + 1)
    for i, cnt in enumerate(prof.p[1:], start=1):
        degrees += [d + i] * cnt
    degrees += [d + len(prof.p)] * prof.c
    assert len(degrees) == d + 1, (prof, degrees)
    return st.ColumnSequence(deg - d + i for i, deg in enumerate(degrees))


def generic_lex(degrees: Sequence[int]) -> st.ColumnSequence:
    return lex_from_profile(delta_profile(generic_hs(degrees)))


def lex_from_graded_hf(hf: Sequence[int]) -> st.ColumnSequence:
    """Lex ideal with L_h = x^(s_h) R_(h - s_h), s_h = dim (R/I)_h."""
    hf = list(hf)
    o = next(t for t, v in enumerate(hf + [0]) if v < t + 1)

    def s(h: int) -> int:
        return hf[h] if h < len(hf) else 0

    # a_i = least v with x^(o-i) y^v in L, i.e. s(o - i + v) <= o - i
    a = []
    for i in range(o + 1):
        v = i
        while s(o - i + v) > o - i:
            v += 1
        a.append(v)
    return st.ColumnSequence(a)


def reconstruct_degrees(prof: DeltaProfile) -> list[int]:
    """Degrees of generic forms realising ``prof`` (the converse recursion)."""
    prof.validate()
    p, c, d1 = list(prof.p), prof.c, prof.d1
    s = len(p)
    if p[-1] == 1:
        zeros = sum(1 for x in p if x == 0)
        return [d1, d1 + zeros]
    padded = [0] + p
    j = max(n for n in range(1, s + 1) if padded[n] > padded[n - 1])
    q, r = divmod(c + s - j + 1, p[-1] - 1)
    new_p = p[: j - 1] + [p[j - 1] - 1] * (s - j + 1 + q)
    rest = reconstruct_degrees(DeltaProfile(d1, tuple(new_p), r))
    return sorted(rest + [d1 + j - 1])


def equal_degree_shape(d: int, r: int) -> tuple[int, list[int], int]:
    """Generators of Lex for r generic forms of degree d: (initial count, per-degree counts, c)."""
    if r < 2:
        raise ValueError("need r >= 2")
    if r - 1 >= d:
        return d + 1, [], 0
    q = d // (r - 1)
    return r, [r - 1] * (q - 1), d - (r - 1) * q
