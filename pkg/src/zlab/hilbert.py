"""Hilbert-Samuel functions, Hilbert series and h-vectors of monomial ideals."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb
from typing import Optional, Sequence

from . import staircase as st


class StabilizationError(RuntimeError):
    """Raised when the h-vector did not settle inside the iteration budget."""

    def __init__(self, message: str, lengths: list[int]):
        super().__init__(message)
        self.lengths = lengths


@dataclass(frozen=True)
class HilbertSeries:
    """HS(z) = h(z) / (1 - z)^2 for an m-primary ideal of k[x, y]."""

    h: tuple[int, ...]
    stabilized_at: Optional[int] = field(default=None, compare=False)

    def __post_init__(self):
        h = tuple(int(c) for c in self.h)
        while len(h) > 1 and h[-1] == 0:
            h = h[:-1]
        object.__setattr__(self, "h", h)

    @property
    def lam(self) -> int:
        return self.h[0]

    @property
    def e(self) -> int:
        return sum(self.h)

    @property
    def s(self) -> int:
        return len(self.h) - 1

    def coeff(self, k: int) -> int:
        return self.h[k] if 0 <= k < len(self.h) else 0

    def hf(self, n: int) -> int:
        """lambda(I^n / I^(n+1))."""
        return sum(c * (n - k + 1) for k, c in enumerate(self.h) if k <= n)

    def samuel(self, n: int) -> int:
        """lambda(R / I^n)."""
        return sum(self.hf(k) for k in range(n))

    def is_cm(self) -> bool:
        return self.s <= 1

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.h):
            if c == 0 and k > 0:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            mag = abs(c)
            body = f"{mag}{mono}" if (mag != 1 or not mono) else mono
            if not terms:
                terms.append(("-" if c < 0 else "") + body)
            else:
                terms.append(("- " if c < 0 else "+ ") + body)
        return "(" + " ".join(terms) + ")/(1-z)^2"

    def to_dict(self) -> dict:
        return {"h": list(self.h), "e": self.e, "lambda": self.lam}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def hilbert_samuel(a: Sequence[int], n: int) -> int:
    """lambda(R / I^n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return st.colength(st.power(a, n))


def _h_from_lengths(lengths: list[int]) -> list[int]:
    # lengths[n] = lambda(R/I^n); h = (1-z)^3 * sum lambda(R/I^(n+1)) z^n
    hf = [lengths[n + 1] - lengths[n] for n in range(len(lengths) - 1)]
    h = []
    for k in range(len(hf)):
        h.append(hf[k] - 2 * (hf[k - 1] if k >= 1 else 0) + (hf[k - 2] if k >= 2 else 0))
    return h


def hilbert_series(a: Sequence[int], window: int = 3, max_n: int = 400) -> HilbertSeries:
    """Iterate powers until the h-vector tail has been zero for ``window`` degrees.

    One extra power is computed after that as a check; if it is nonzero the
    plateau was false and the iteration resumes.
    """
    if window < 1:
        raise ValueError("window must be >= 1")
    lengths = [0]
    cur: Sequence[int] = st.UNIT
    zeros = 0
    n = 0
    while True:
        if n >= max_n:
            raise StabilizationError(
                f"h-vector of {st.ColumnSequence(a)} not stable after {max_n} powers", lengths
            )
        cur = st.min_plus_product(cur, a)
        lengths.append(st.colength(cur))
        n += 1
        if n < 3:
            continue
        h = _h_from_lengths(lengths)
        zeros = zeros + 1 if h[-1] == 0 else 0
        if zeros == window + 1:  # window zeros plus the verification step
            return HilbertSeries(tuple(h), stabilized_at=n)


def multiplicity(a: Sequence[int]) -> int:
    return hilbert_series(a).e


def cm_test(hs: HilbertSeries) -> bool:
    return hs.is_cm()


def closed_form_monotone(a: Sequence[int]) -> HilbertSeries:
    b = st.ColumnSequence(a).b
    lam, d = st.colength(a), len(a) - 1
    a_d = a[-1]
    if all(x <= y for x, y in zip(b, b[1:])):
        return HilbertSeries((lam, lam - a_d))
    if all(x >= y for x, y in zip(b, b[1:])):
        return HilbertSeries((lam, d * a_d - lam))
    raise ValueError(f"differences sequence {b} is not monotone")


@dataclass(frozen=True)
class HFComparison:
    relation: str  # "dominates" | "dominated" | "incomparable"
    first_violation: Optional[int]  # first n with HF_lhs(n) > HF_rhs(n)
    first_deficit: Optional[int]  # first n with HF_lhs(n) < HF_rhs(n)


def _first_sign(diff, horizon: int, de: int, sign: int) -> Optional[int]:
    for n in range(horizon + 1):
        if sign * diff(n) > 0:
            return n
    # beyond the horizon the difference is linear with slope de
    if sign * de > 0:
        n = horizon + 1
        while sign * diff(n) <= 0:
            n += 1
        return n
    return None


def compare_hf(lhs: HilbertSeries, rhs: HilbertSeries) -> HFComparison:
    """Pointwise comparison of HF_lhs and HF_rhs over all n >= 0."""
    horizon = max(lhs.s, rhs.s) + 1

    def diff(n: int) -> int:
        return lhs.hf(n) - rhs.hf(n)

    de = lhs.e - rhs.e
    up = _first_sign(diff, horizon, de, +1)
    down = _first_sign(diff, horizon, de, -1)
    if up is None:
        rel = "dominated" if down is not None else "dominates"
    elif down is None:
        rel = "dominates"
    else:
        rel = "incomparable"
    return HFComparison(rel, up, down)


def h1_bound_check(a: Sequence[int]) -> bool:
    return hilbert_series(a).coeff(1) >= comb(st.mu(a) - 1, 2)


def h2_report(a: Sequence[int]) -> int:
    return hilbert_series(a).coeff(2)


# ------------------------------------------------------------------ oracles


def brute_force_colength(a: Sequence[int], n: int) -> int:
    """lambda(R/I^n) by multiplying generators and counting lattice points."""
    gens = {(0, 0)}
    base = st.minimal_generators(a)
    for _ in range(n):
        prods = {(u + p, v + q) for u, v in gens for p, q in base}
        gens = {g for g in prods if not any(h != g and h[0] <= g[0] and h[1] <= g[1] for h in prods)}
    umax = max(u for u, v in gens if v == 0)
    vmax = max(v for u, v in gens if u == 0)
    count = 0
    for u in range(umax + 1):
        for v in range(vmax + 1):
            if not any(p <= u and q <= v for p, q in gens):
                count += 1
    return count


def graded_hf(a: Sequence[int]) -> list[int]:
    """dim_k (R/I)_t for t = 0, 1, ... (finite since I is m-primary)."""
    out = []
    t = 0
    while True:
        cnt = sum(1 for u in range(t + 1) if not st.contains(a, u, t - u))
        if cnt == 0:
            return out
        out.append(cnt)
        t += 1
