"""Binomial Groebner bases for the presentation ideal H = ker psi of the Rees
algebra of a lex-segment ideal, with independent verification routes.

Monomials of S = k[x, y, T_0..T_d] are exponent tuples (x, y, T_0, ..., T_d).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import NamedTuple, Optional, Sequence

import numpy as np

from . import hilbert as hs
from . import staircase as st
from .contracted import HilbertBurchData


class ReesMonomial(tuple):
    """Exponent vector (x, y, T_0, ..., T_d)."""

    def __new__(cls, exps):
        vals = tuple(int(e) for e in exps)
        if len(vals) < 3 or any(e < 0 for e in vals):
            raise ValueError(f"bad Rees monomial {vals}")
        return super().__new__(cls, vals)

    @classmethod
    def build(cls, d: int, x: int = 0, y: int = 0, t: Optional[dict] = None) -> "ReesMonomial":
        e = [x, y] + [0] * (d + 1)
        for i, k in (t or {}).items():
            e[2 + i] += k
        return cls(e)

    @property
    def d(self) -> int:
        return len(self) - 3

    @property
    def tdeg(self) -> int:
        return sum(self[2:])

    def divides(self, other: "ReesMonomial") -> bool:
        return all(p <= q for p, q in zip(self, other))

    def __mul__(self, other):
        return ReesMonomial(p + q for p, q in zip(self, other))

    def quotient(self, other: "ReesMonomial") -> "ReesMonomial":
        return ReesMonomial(p - q for p, q in zip(self, other))

    def lcm(self, other: "ReesMonomial") -> "ReesMonomial":
        return ReesMonomial(max(p, q) for p, q in zip(self, other))

    def is_square_free(self) -> bool:
        return all(e <= 1 for e in self)

    def __str__(self) -> str:
        names = ["x", "y"] + [f"T{i}" for i in range(self.d + 1)]
        parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, self) if e]
        return "*".join(parts) or "1"


class Binomial(NamedTuple):
    lead: ReesMonomial
    trail: ReesMonomial

    def __str__(self) -> str:
        return f"{self.lead} - {self.trail}"


def psi(m: Sequence[int], a: Sequence[int]) -> tuple[int, int, int]:
    """Image exponents (x, y, t) of m under T_i -> x^(d-i) y^(a_i) t."""
    d = len(a) - 1
    if len(m) != d + 3:
        raise ValueError("monomial and ideal have different d")
    ts = m[2:]
    return (
        m[0] + sum(k * (d - i) for i, k in enumerate(ts)),
        m[1] + sum(k * a[i] for i, k in enumerate(ts)),
        sum(ts),
    )


@dataclass(frozen=True)
class WeightOrder:
    """Weight first, then total degree, then lex with x > y > T_0 > ... > T_d."""

    weights: tuple[int, ...]

    def __post_init__(self):
        if any(w < 0 for w in self.weights):
            raise ValueError("weights must be nonnegative for a well-order")

    def key(self, m: Sequence[int]):
        return (sum(w * e for w, e in zip(self.weights, m)), sum(m), tuple(m))

    def greater(self, m1: Sequence[int], m2: Sequence[int]) -> bool:
        return self.key(m1) > self.key(m2)


def convex_order(d: int) -> WeightOrder:
    # w(T_k) = k^2 makes T_i T_(j-1) beat T_(i-1) T_j whenever i > j
    return WeightOrder((d * d + 1, 0) + tuple(k * k for k in range(d + 1)))


def concave_order(d: int) -> WeightOrder:
    # w(T_k) = k(2d+1-k): the differences are 2(j-i), 2ij and 2(d-i)(d-j)
    return WeightOrder((d * d + 1, 0) + tuple(k * (2 * d + 1 - k) for k in range(d + 1)))


FAMILIES = ("increasing", "decreasing", "generic")


def is_generic_c0p0(a: Sequence[int]) -> bool:
    """Generic lex-segment ideal whose profile has c = p_1 = 0."""
    from .genforms import delta_profile

    if not st.is_lex(a):
        return False
    try:
        prof = delta_profile(hs.graded_hf(a))
    except AssertionError:
        return False
    return prof.p[0] == 0 and prof.c == 0


def eligible_families(a: Sequence[int]) -> list[str]:
    if not st.is_lex(a):
        return []
    b = st.ColumnSequence(a).b
    out = []
    if all(x <= y for x, y in zip(b, b[1:])):
        out.append("increasing")
    if all(x >= y for x, y in zip(b, b[1:])):
        out.append("decreasing")
    if is_generic_c0p0(a):
        out.append("generic")
    return out


def gb_family(a: Sequence[int], family: str = "auto") -> tuple[list[Binomial], WeightOrder]:
    """The claimed Groebner basis of H for one of the three families, with its term order."""
    a = st.ColumnSequence(a)
    d = a.d
    elig = eligible_families(a)
    if family == "auto":
        if not elig:
            raise ValueError(f"{a} belongs to none of the families {FAMILIES}")
        family = elig[0]
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if family not in elig:
        raise ValueError(f"{a} does not satisfy the {family} precondition")
    b = (0,) + a.b  # 1-based

    def T(*idx, y: int = 0, x: int = 0) -> ReesMonomial:
        t = {}
        for i in idx:
            t[i] = t.get(i, 0) + 1
        return ReesMonomial.build(d, x=x, y=y, t=t)

    basis = [Binomial(T(i, x=1), T(i - 1, y=b[i])) for i in range(1, d + 1)]
    if family == "increasing":
        order = convex_order(d)
        for i in range(1, d + 1):
            for j in range(1, i):
                basis.append(Binomial(T(i, j - 1), T(i - 1, j, y=b[i] - b[j])))
    elif family == "decreasing":
        order = concave_order(d)
        for i in range(1, d + 1):
            for j in range(i + 1, d + 1):
                basis.append(Binomial(T(i, j - 1), T(i - 1, j, y=b[i] - b[j])))
    else:
        order = concave_order(d)
        for i in range(1, d):
            for j in range(i, d):
                if i + j <= d:
                    alpha = a[i] + a[j] - a[i + j]
                    basis.append(Binomial(T(i, j), T(0, i + j, y=alpha)))
                else:
                    beta = a[i] + a[j] - (a[i + j - d] + a[d])
                    basis.append(Binomial(T(i, j), T(i + j - d, d, y=beta)))

    for g in basis:
        if psi(g.lead, a) != psi(g.trail, a):
            raise AssertionError(f"{g} is not in ker psi for {a}")
        if not order.greater(g.lead, g.trail):
            raise AssertionError(f"order does not put {g.lead} first in {g}")
    return basis, order


# ----------------------------------------------------------- reduction engine


def normal_form(m: ReesMonomial, basis: Sequence[Binomial], order: WeightOrder, max_steps: int = 100000) -> ReesMonomial:
    """Rewrite m by lead -> trail until no lead divides it."""
    steps = 0
    while True:
        for g in basis:
            if g.lead.divides(m):
                nxt = m.quotient(g.lead) * g.trail
                if not order.greater(m, nxt):
                    raise AssertionError(f"reduction by {g} did not decrease {m}")
                m = nxt
                break
        else:
            return m
        steps += 1
        if steps > max_steps:
            raise RuntimeError(f"reduction exceeded {max_steps} steps")


def reduces_to_zero(lhs: ReesMonomial, rhs: ReesMonomial, basis, order) -> bool:
    # a difference of monomials stays a difference of monomials under reduction
    return normal_form(lhs, basis, order) == normal_form(rhs, basis, order)


def s_pair(f: Binomial, g: Binomial) -> tuple[ReesMonomial, ReesMonomial]:
    l = f.lead.lcm(g.lead)
    return l.quotient(f.lead) * f.trail, l.quotient(g.lead) * g.trail


def buchberger_verify(basis: Sequence[Binomial], order: WeightOrder, coprime_skip: bool = True) -> bool:
    """True iff every S-polynomial reduces to zero modulo the basis."""
    for g in basis:
        if not order.greater(g.lead, g.trail):
            raise ValueError(f"{g} is not written lead first")
    for f, g in itertools.combinations(basis, 2):
        if coprime_skip and all(p == 0 or q == 0 for p, q in zip(f.lead, g.lead)):
            continue
        u, v = s_pair(f, g)
        if not reduces_to_zero(u, v, basis, order):
            return False
    return True


# ---------------------------------------------------------- toric sampling


def _t_monomials(d: int, tdeg: int):
    for combo in itertools.combinations_with_replacement(range(d + 1), tdeg):
        e = [0] * (d + 1)
        for i in combo:
            e[i] += 1
        yield tuple(e)


@dataclass(frozen=True)
class ToricViolation:
    fiber: tuple[int, int, int]
    standard: tuple[ReesMonomial, ...]

    def binomials(self) -> list[Binomial]:
        first = self.standard[0]
        return [Binomial(m, first) for m in self.standard[1:]]


def toric_membership_sample(
    a: Sequence[int], basis: Sequence[Binomial], order: Optional[WeightOrder] = None, tdeg_cap: int = 4, xy_cap: Optional[int] = None
) -> list[ToricViolation]:
    """Fibers of psi inside the caps holding more than one monomial free of every lead.

    Each fiber of psi is one-dimensional in the Rees algebra, so a Groebner basis
    leaves exactly one standard monomial per fiber.  Two standard monomials in
    one fiber give an element of H that does not reduce to zero.
    """
    a = st.ColumnSequence(a)
    d = a.d
    if xy_cap is None:
        xy_cap = a[-1] + d
    if tdeg_cap < 2 or xy_cap < 2:
        raise ValueError("caps must be >= 2")
    side = xy_cap + 1
    violations = []
    for n in range(tdeg_cap + 1):
        tmons = list(_t_monomials(d, n))
        xs = np.array([sum(k * (d - i) for i, k in enumerate(t)) for t in tmons], dtype=np.int64)
        ys = np.array([sum(k * a[i] for i, k in enumerate(t)) for t in tmons], dtype=np.int64)
        counts = np.zeros((xy_cap + n * d + 1, xy_cap + n * a[-1] + 1), dtype=np.int64)
        masks = []
        for t, X, Y in zip(tmons, xs, ys):
            mask = np.ones((side, side), dtype=bool)
            for g in basis:
                if all(p <= q for p, q in zip(g.lead[2:], t)):
                    mask[g.lead[0]:, g.lead[1]:] = False
            counts[X : X + side, Y : Y + side] += mask
            masks.append(mask)
        for X, Y in zip(*np.nonzero(counts > 1)):
            std = []
            for t, tx, ty, mask in zip(tmons, xs, ys, masks):
                u, v = X - tx, Y - ty
                if 0 <= u < side and 0 <= v < side and mask[u, v]:
                    std.append(ReesMonomial((int(u), int(v)) + t))
            violations.append(ToricViolation((int(X), int(Y), n), tuple(std)))
    return violations


def toric_reduction_sample(a: Sequence[int], basis, order: WeightOrder, tdeg_cap: int = 3, xy_cap: Optional[int] = None) -> list[Binomial]:
    """Kernel binomials m - m0 within the caps whose normal forms differ.

    Slower companion to the fiber count: it uses the reducer rather than lead
    divisibility, so the two routes share no code past psi.
    """
    a = st.ColumnSequence(a)
    d = a.d
    if xy_cap is None:
        xy_cap = a[-1] + d
    fibers: dict = {}
    for n in range(tdeg_cap + 1):
        for t in _t_monomials(d, n):
            for u in range(xy_cap + 1):
                for v in range(xy_cap + 1):
                    m = ReesMonomial((u, v) + t)
                    fibers.setdefault(psi(m, a), []).append(m)
    bad = []
    for mons in fibers.values():
        nf0 = normal_form(mons[0], basis, order)
        for m in mons[1:]:
            if normal_form(m, basis, order) != nf0:
                bad.append(Binomial(m, mons[0]))
    return bad


# --------------------------------------------------------------- normality


def normality_certificate(basis: Sequence[Binomial], order: Optional[WeightOrder] = None) -> bool:
    """Square-free initial terms force a normal toric ring."""
    return all(g.lead.is_square_free() for g in basis)


def crosscheck_integral_closedness(a: Sequence[int]) -> bool:
    return st.is_integrally_closed(a)


def forbidden_shape_search(a: Sequence[int], emax: int = 8) -> list[Binomial]:
    """Nonzero kernel elements of the three shapes H is known to avoid, searched exhaustively."""
    a = st.ColumnSequence(a)
    d = a.d
    hits = []
    rng = range(emax + 1)

    def match(left, rights):
        # rights: monomials without y, indexed by (x-image, t-image); y balances psi
        pl = psi(left, a)
        for ry, r in rights.get((pl[0], pl[2]), ()):
            gap = pl[1] - ry
            if 0 <= gap <= emax:
                full = ReesMonomial((r[0], r[1] + gap) + tuple(r[2:]))
                if full != left:
                    hits.append(Binomial(left, full))

    def index(mons):
        out: dict = {}
        for m in mons:
            x, y, t = psi(m, a)
            out.setdefault((x, t), []).append((y, m))
        return out

    def tm(pairs, y=0):
        e = [0, y] + [0] * (d + 1)
        for i, k in pairs:
            e[2 + i] += k
        return ReesMonomial(e)

    # T_i^a T_(i+1)^b vs y^c T_j^f T_(j+1)^g, 1 <= i, j <= d-1
    rights = index(tm([(j, f), (j + 1, g)]) for j in range(1, d) for f in rng for g in rng)
    for i in range(1, d):
        for p, q in itertools.product(rng, rng):
            match(tm([(i, p), (i + 1, q)]), rights)
    # y^a T_i^b T_(i+1)^c vs y^f T_j^g, 0 <= i, j <= d-1
    rights = index(tm([(j, g)]) for j in range(d) for g in rng)
    for i in range(d):
        for ya, p, q in itertools.product(rng, rng, rng):
            match(tm([(i, p), (i + 1, q)], y=ya), rights)
    # T_0^a T_d^b T_j^l vs y^c T_0^f T_d^g T_k^h, 1 <= j != k <= d-1, l, h <= 1
    mids = range(1, d)
    for j, k in itertools.permutations(mids, 2):
        rights = index(tm([(0, f), (d, g), (k, h)]) for f in rng for g in rng for h in (0, 1))
        for p, q, l in itertools.product(rng, rng, (0, 1)):
            match(tm([(0, p), (d, q), (j, l)]), rights)
    return hits


# ------------------------------------------------------ Hilbert-Burch side


Poly = dict  # {(i, j): Fraction} for sum c x^i y^j


def poly_mul(f: Poly, g: Poly) -> Poly:
    out: Poly = {}
    for (i1, j1), c1 in f.items():
        for (i2, j2), c2 in g.items():
            key = (i1 + i2, j1 + j2)
            out[key] = out.get(key, 0) + c1 * c2
    return {k: v for k, v in out.items() if v != 0}


def poly_add(f: Poly, g: Poly, scale=1) -> Poly:
    out = dict(f)
    for k, v in g.items():
        out[k] = out.get(k, 0) + scale * v
    return {k: v for k, v in out.items() if v != 0}


def hb_minor(hb: HilbertBurchData, k: int) -> Poly:
    """Maximal minor deleting column k (0-based): y^(a_k) prod_(j > k) (x + alpha_j y)."""
    ya, forms = hb.minor_data()[k]
    out: Poly = {(0, ya): Fraction(1)}
    for al in forms:
        out = poly_mul(out, {(1, 0): Fraction(1), (0, 1): Fraction(al)})
    return out


# a matrix entry is {t_index or None: Poly}; None is the constant part
Entry = dict


@dataclass(frozen=True)
class ReesMatrixReport:
    top: tuple
    bottom: tuple
    minors_vanish: bool
    fiber_top: tuple
    fiber_bottom: tuple
    fiber_minor_count: int
    codim: int
    fiber_vanishes_on_minors: bool
    t_factor_witness: Optional[tuple[int, int, int]]  # (k, col_i, col_j)

    def to_dict(self) -> dict:
        return {
            "matrix": [[_entry_str(e) for e in self.top], [_entry_str(e) for e in self.bottom]],
            "minors_vanish": self.minors_vanish,
            "fiber_matrix": [[_entry_str(e) for e in self.fiber_top], [_entry_str(e) for e in self.fiber_bottom]],
            "fiber_minor_count": self.fiber_minor_count,
            "codim": self.codim,
            "fiber_vanishes_on_minors": self.fiber_vanishes_on_minors,
            "t_factor_witness": self.t_factor_witness,
        }


def _poly_str(p: Poly) -> str:
    if not p:
        return "0"
    terms = []
    for (i, j), c in sorted(p.items(), reverse=True):
        mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in (("x", i), ("y", j)) if e)
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        elif c == -1:
            terms.append("-" + mono)
        else:
            terms.append(f"{c}*{mono}")
    return " + ".join(terms).replace("+ -", "- ")


def _entry_str(e: Entry) -> str:
    parts = []
    for k in sorted(e, key=lambda k: -1 if k is None else k):
        coef = _poly_str(e[k])
        if k is None:
            parts.append(coef)
        else:
            parts.append(f"t{k}" if coef == "1" else f"({coef})*t{k}")
    return " + ".join(parts) or "0"


def _evaluate(e: Entry, images: list[Poly]) -> Poly:
    out: Poly = {}
    for k, coef in e.items():
        out = poly_add(out, coef if k is None else poly_mul(coef, images[k]))
    return out


def _minor(top, bottom, i, j, images) -> Poly:
    return poly_add(
        poly_mul(_evaluate(top[i], images), _evaluate(bottom[j], images)),
        poly_mul(_evaluate(top[j], images), _evaluate(bottom[i], images)),
        scale=-1,
    )


def expected_rees_matrix(hb: HilbertBurchData) -> ReesMatrixReport:
    """The 2 x (d+1) matrix whose 2-minors present the Rees algebra when the
    characteristic form is square-free, checked under t_i -> (-1)^i M_i."""
    d = hb.d
    if len(set(hb.alpha)) != d:
        raise ValueError("the alpha_i must be distinct (square-free characteristic form)")
    one = Fraction(1)
    top: list[Entry] = [{None: {(1, 0): one}}]
    bottom: list[Entry] = [{None: {(0, 1): -one}}]
    for i in range(1, d + 1):
        al, bi = hb.alpha[i - 1], hb.b[i - 1]
        entry: Entry = {i - 1: {(0, bi - 1): one}}
        if al != 0:
            entry[i] = {(0, 0): al}
        top.append(entry)
        bottom.append({i: {(0, 0): one}})
    images = [{k: (-1) ** i * v for k, v in hb_minor(hb, i).items()} for i in range(d + 1)]
    vanish = all(not _minor(top, bottom, i, j, images) for i, j in itertools.combinations(range(d + 1), 2))

    # fiber cone: x, y -> 0 drops column 0 and every y^(b_i - 1) with b_i > 1
    ftop, fbot = [], []
    for i in range(1, d + 1):
        entry = {k: {key: c for key, c in p.items() if key == (0, 0)} for k, p in top[i].items()}
        ftop.append({k: p for k, p in entry.items() if p})
        fbot.append(bottom[i])
    pairs = list(itertools.combinations(range(d), 2))
    # a fiber quadric q is a relation of F(I) iff q(M) lies in m I^2
    m_i2 = [poly_mul(v, poly_mul(f, g)) for v in ({(1, 0): one}, {(0, 1): one}) for f, g in itertools.combinations_with_replacement(images, 2)]
    cache: dict = {}
    fiber_ok = all(in_homogeneous_ideal(_minor(ftop, fbot, i, j, images), m_i2, cache) for i, j in pairs)
    witness = None
    for i, j in pairs:
        for k in range(d + 1):
            if _t_divides_minor(ftop, fbot, i, j, k):
                witness = (k, i + 1, j + 1)
                break
        if witness:
            break
    return ReesMatrixReport(tuple(top), tuple(bottom), vanish, tuple(ftop), tuple(fbot), len(pairs), d - 1, fiber_ok, witness)


def in_homogeneous_ideal(f: Poly, gens: Sequence[Poly], _cache: Optional[dict] = None) -> bool:
    """Membership of f in the ideal of k[x, y] generated by homogeneous ``gens``, degree by degree."""
    cache = {} if _cache is None else _cache
    by_deg: dict = {}
    for key, c in f.items():
        by_deg.setdefault(sum(key), {})[key] = c
    for t, part in by_deg.items():
        if t not in cache:
            cache[t] = _echelon(gens, t)
        if any(_reduce(_int_row(part, t), cache[t])):
            return False
    return True


def _int_row(p: Poly, t: int) -> list:
    # coefficient vector of the degree-t part, scaled to coprime integers
    v = [Fraction(p.get((u, t - u), 0)) for u in range(t + 1)]
    den = 1
    for c in v:
        den = den * c.denominator // gcd(den, c.denominator)
    return _primitive([int(c * den) for c in v])


def _primitive(v: list) -> list:
    g = 0
    for c in v:
        g = gcd(g, c)
    return [c // g for c in v] if g > 1 else v


def _echelon(gens: Sequence[Poly], t: int) -> dict:
    # fraction-free row echelon basis of the degree-t part, keyed by pivot column
    basis: dict = {}
    for g in gens:
        if not g:
            continue
        dg = sum(next(iter(g)))
        for i in range(t - dg + 1):
            if len(basis) == t + 1:
                return basis
            v = _reduce(_int_row(poly_mul(g, {(i, t - dg - i): 1}), t), basis)
            piv = next((k for k, c in enumerate(v) if c), None)
            if piv is not None:
                basis[piv] = v
    return basis


def _reduce(v: list, basis: dict) -> list:
    for piv in sorted(basis):
        if v[piv]:
            r = basis[piv]
            c, p = v[piv], r[piv]
            v = _primitive([a * p - c * b for a, b in zip(v, r)])
    return v


def _t_divides_minor(top, bottom, i, j, k) -> bool:
    """Does t_k divide the quadric top[i]*bottom[j] - top[j]*bottom[i] (nonzero)?"""
    quad: dict = {}
    for (e1, e2, sign) in ((top[i], bottom[j], 1), (top[j], bottom[i], -1)):
        for k1, c1 in e1.items():
            for k2, c2 in e2.items():
                key = tuple(sorted((k1, k2)))
                quad[key] = quad.get(key, 0) + sign * c1.get((0, 0), 0) * c2.get((0, 0), 0)
    quad = {key: c for key, c in quad.items() if c != 0}
    return bool(quad) and all(k in key for key in quad)


def fiber_is_veronese_count(d: int) -> int:
    """Number of quadrics cutting out the rational normal curve of degree d."""
    return comb(d, 2)
