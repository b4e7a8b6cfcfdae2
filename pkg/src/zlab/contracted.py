"""Contracted ideals via divisor ledgers: Hilbert-Burch data, Zariski factorization,
composite colength, Hilbert series and depth.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional, Sequence

from . import hilbert as hs
from . import lexseg
from . import staircase as st


@dataclass(frozen=True, order=True)
class LinearForm:
    """x + alpha*y, or the form y itself when alpha is None."""

    alpha: Optional[Fraction]

    @classmethod
    def parse(cls, text: str) -> "LinearForm":
        t = text.replace(" ", "")
        if t == "y":
            return cls(None)
        if t == "x":
            return cls(Fraction(0))
        m = re.fullmatch(r"x([+-][0-9/]*)\*?y", t)
        if not m:
            raise ValueError(f"bad linear form {text!r}")
        coef = m.group(1)
        if coef in ("+", "-"):
            coef += "1"
        return cls(Fraction(coef))

    def __str__(self) -> str:
        if self.alpha is None:
            return "y"
        if self.alpha == 0:
            return "x"
        sign = "+" if self.alpha > 0 else "-"
        return f"x{sign}{abs(self.alpha)}y"


X_FORM = LinearForm(Fraction(0))
Y_FORM = LinearForm(None)


@dataclass(frozen=True)
class DivisorLedger:
    """Order d and, per linear form, its exponent in GCD(I_(d+j)) for j = 0, 1, ..."""

    d: int
    exps: tuple[tuple[LinearForm, tuple[int, ...]], ...]

    def __post_init__(self):
        clean = []
        for form, seq in self.exps:
            seq = list(seq)
            while seq and seq[-1] == 0:
                seq.pop()
            if any(x < y for x, y in zip(seq, seq[1:])):
                raise ValueError(f"exponents of {form} must be nonincreasing: {seq}")
            if any(x < 0 for x in seq):
                raise ValueError("exponents must be nonnegative")
            if seq:
                clean.append((form, tuple(seq)))
        forms = [f for f, _ in clean]
        if len(set(forms)) != len(forms):
            raise ValueError("forms must be distinct")
        object.__setattr__(self, "exps", tuple(sorted(clean, key=lambda fe: (fe[0].alpha is None, fe[0].alpha or 0))))
        if self.s_seq() and self.s_seq()[0] > self.d:
            raise ValueError("degree of the characteristic form exceeds the order")

    def exponent(self, form: LinearForm, j: int) -> int:
        for f, seq in self.exps:
            if f == form:
                return seq[j] if j < len(seq) else 0
        return 0

    def s_seq(self) -> list[int]:
        n = max((len(seq) for _, seq in self.exps), default=0)
        return [sum(seq[j] if j < len(seq) else 0 for _, seq in self.exps) for j in range(n)]

    @property
    def s(self) -> int:
        seq = self.s_seq()
        return seq[0] if seq else 0

    def betas(self) -> list[int]:
        return [seq[0] for _, seq in self.exps]

    def __str__(self) -> str:
        parts = [f"d={self.d}"]
        for form, seq in self.exps:
            parts.append(f"form {form}: " + ",".join(map(str, seq)))
        return "; ".join(parts)


def parse_ledger(text: str) -> DivisorLedger:
    """``d=5; form x+2y: 3,2,1; form x-1y: 2,2,0``."""
    chunks = [c.strip() for c in text.split(";") if c.strip()]
    if not chunks or not chunks[0].startswith("d="):
        raise ValueError(f"ledger must start with d=<order>: {text!r}")
    d = int(chunks[0][2:])
    exps = []
    for chunk in chunks[1:]:
        m = re.fullmatch(r"form\s+(.+?)\s*:\s*([0-9,\s]*)", chunk)
        if not m:
            raise ValueError(f"bad ledger entry {chunk!r}")
        seq = tuple(int(t) for t in m.group(2).split(",") if t.strip())
        exps.append((LinearForm.parse(m.group(1)), seq))
    return DivisorLedger(d, tuple(exps))


@dataclass(frozen=True)
class HilbertBurchData:
    """Bidiagonal matrix with y^(b_i) on the diagonal and x + alpha_i y beside it."""

    b: tuple[int, ...]
    alpha: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.b) != len(self.alpha) or not self.b:
            raise ValueError("b and alpha must have the same positive length")
        if any(x < 1 for x in self.b):
            raise ValueError("b_i must be >= 1")
        object.__setattr__(self, "alpha", tuple(Fraction(x) for x in self.alpha))

    @property
    def d(self) -> int:
        return len(self.b)

    def a(self) -> list[int]:
        out = [0]
        for x in self.b:
            out.append(out[-1] + x)
        return out

    def minor_data(self) -> list[tuple[int, tuple[Fraction, ...]]]:
        """Minor deleting column k (0-based) is y^(a_k) * prod_{j > k} (x + alpha_j y)."""
        a = self.a()
        return [(a[k], self.alpha[k:]) for k in range(self.d + 1)]


def ledger_from_hilbert_burch(hb: HilbertBurchData) -> DivisorLedger:
    d = hb.d
    minors = hb.minor_data()
    forms = sorted(set(hb.alpha))
    degs = [ya + len(fs) for ya, fs in minors]
    top = max(degs) - d
    exps = []
    for alpha in forms:
        seq = []
        for j in range(top + 1):
            mult = [fs.count(alpha) for (ya, fs), deg in zip(minors, degs) if deg <= d + j]
            seq.append(min(mult))
        exps.append((LinearForm(alpha), tuple(seq)))
    return DivisorLedger(d, tuple(exps))


def ledger_from_monomial(a: Sequence[int]) -> DivisorLedger:
    if not st.is_contracted_monomial(a):
        raise ValueError(f"{st.ColumnSequence(a)} is not contracted")
    o = st.order(a)
    xs, ys = [], []
    h = o
    while True:
        inside = [u for u in range(h + 1) if st.contains(a, u, h - u)]
        px, qy = min(inside), h - max(inside)
        if px == 0 and qy == 0:
            break
        xs.append(px)
        ys.append(qy)
        h += 1
    return DivisorLedger(o, ((X_FORM, tuple(xs)), (Y_FORM, tuple(ys))))


def lex_factor(exps: Sequence[int]) -> st.ColumnSequence:
    """Lex ideal of order beta whose GCD in degree beta + j is g^(exps[j])."""
    beta = exps[0] if exps else 0

    def e(j: int) -> int:
        return exps[j] if j < len(exps) else 0

    a = []
    for i in range(beta + 1):
        j = 0
        while e(j) > beta - i:
            j += 1
        a.append(i + j)
    return st.ColumnSequence(a)


@dataclass(frozen=True)
class Factorization:
    m_exp: int
    factors: tuple[tuple[LinearForm, st.ColumnSequence], ...]
    d: int

    @property
    def betas(self) -> list[int]:
        return [f.d for _, f in self.factors]


def zariski_factor(ledger: DivisorLedger) -> Factorization:
    factors = tuple((form, lex_factor(seq)) for form, seq in ledger.exps)
    fac = Factorization(ledger.d - ledger.s, factors, ledger.d)
    assert sum(fac.betas) == ledger.s
    return fac


def reconstruct_monomial(fac: Factorization) -> st.ColumnSequence:
    """m^(d-s) * L_x * L_y^T for a factorization over the forms x and y."""
    out = st.maximal_power(fac.m_exp)
    for form, seq in fac.factors:
        if form == X_FORM:
            out = st.min_plus_product(out, seq)
        elif form == Y_FORM:
            out = st.min_plus_product(out, st.transpose(seq))
        else:
            raise ValueError(f"factor along {form} has no monomial avatar")
    return out


def colength_composite(ledger: DivisorLedger) -> int:
    """lambda(R/I) via the factors, cross-checked against the GCD-degree sum."""
    fac = zariski_factor(ledger)
    d = ledger.d
    via_factors = (
        sum(st.colength(f) for _, f in fac.factors) + comb(d + 1, 2) - sum(comb(b + 1, 2) for b in fac.betas)
    )
    via_degrees = comb(d + 1, 2) + sum(ledger.s_seq())
    if via_factors != via_degrees:
        raise AssertionError(f"colength routes disagree for {ledger}: {via_factors} != {via_degrees}")
    return via_factors


def hilbert_series_composite(ledger: DivisorLedger) -> hs.HilbertSeries:
    fac = zariski_factor(ledger)
    d = ledger.d
    h = [comb(d + 1, 2), comb(d, 2)]
    for beta in fac.betas:
        h[0] -= comb(beta + 1, 2)
        h[1] -= comb(beta, 2)
    for _, f in fac.factors:
        fh = hs.hilbert_series(f).h
        h += [0] * (len(fh) - len(h))
        for k, c in enumerate(fh):
            h[k] += c
    return hs.HilbertSeries(tuple(h))


def depth_composite(ledger: DivisorLedger, window: int = 6) -> lexseg.DepthVerdict:
    fac = zariski_factor(ledger)
    if not fac.factors:
        return lexseg.DepthVerdict(2, "exact", "power of m")
    verdicts = [(form, lexseg.depth_classify(f, window)) for form, f in fac.factors]
    exact_zero = [(f, v) for f, v in verdicts if v.depth == 0 and v.certainty == "exact"]
    if exact_zero:
        form, v = exact_zero[0]
        return lexseg.DepthVerdict(0, "exact", f"factor {form}: {v.certificate}", v.window)
    form, worst = min(verdicts, key=lambda fv: fv[1].depth)
    certainty = "exact" if all(v.certainty == "exact" for _, v in verdicts) else "heuristic"
    if certainty != "exact" and all(v.certainty != "heuristic" for _, v in verdicts):
        certainty = "lower-bound"
    return lexseg.DepthVerdict(worst.depth, certainty, f"min over factors, {form}: {worst.certificate}", worst.window)


def lex_of(a: Sequence[int]) -> st.ColumnSequence:
    """Lex(I): the lex ideal with the same graded Hilbert function."""
    from .genforms import lex_from_graded_hf

    return lex_from_graded_hf(hs.graded_hf(a))
