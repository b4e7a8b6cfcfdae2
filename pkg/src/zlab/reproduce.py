"""Reproduction manifest: every published numeric claim the library can check."""

from __future__ import annotations

import itertools
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable

from . import contracted as ct
from . import genforms as gf
from . import hilbert as hs
from . import lexseg
from . import rees
from . import staircase as st

EX_A_INITIAL = st.ColumnSequence((0, 2, 5, 7, 8, 10))
EX_A_SERIES_I = hs.HilbertSeries((32, 14, 6, -2))  # I itself is not monomial; its series is taken as printed
EX_B_IDEAL = st.ColumnSequence((0, 1, 1, 3, 5, 12, 13, 14, 17, 19))
EX_B_LEX = st.from_generators([(8, 0), (7, 2), (6, 3), (5, 5), (4, 12), (3, 13), (2, 14), (1, 17), (0, 19)])
TRANSFORM_EX = st.from_generators([(4, 0), (3, 1), (2, 3), (1, 4), (0, 10)])
GEN_A = (5, 7, 8)
GEN_A_GENS = [(5, 0), (4, 3), (3, 5), (2, 6), (1, 8), (0, 9)]
GEN_B = (10, 12, 13, 15, 15)
GEN_B_GENS = [(10, 0), (9, 3), (8, 5), (7, 6), (6, 8), (5, 9), (4, 11), (3, 12), (2, 13), (1, 14), (0, 16)]


@dataclass
class Check:
    id: str
    location: str
    expected: str
    computed: str = ""
    passed: bool = False
    error: str = ""


@dataclass
class ReproductionManifest:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {"ok": self.ok, "checks": [asdict(c) for c in self.checks]}

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            tag = "PASS" if c.passed else "FAIL"
            line = f"{tag} {c.id}: expected {c.expected}; computed {c.computed}"
            if c.error:
                line += f" [error: {c.error}]"
            out.append(line)
        return out


REGISTRY: list[tuple[str, str, str, Callable[[], tuple[object, bool]]]] = []


def check(id: str, location: str, expected: str):
    def deco(fn):
        REGISTRY.append((id, location, expected, fn))
        return fn

    return deco


def lex_census(dmax: int, admax: int):
    for d in range(1, dmax + 1):
        for c in itertools.combinations(range(1, admax + 1), d):
            yield st.ColumnSequence((0,) + c)


def monomial_census(dmax: int, admax: int):
    for d in range(1, dmax + 1):
        for c in itertools.combinations_with_replacement(range(1, admax + 1), d):
            yield st.ColumnSequence((0,) + c)


def _monotone(a, up: bool):
    b = a.b
    return all((x <= y) if up else (x >= y) for x, y in zip(b, b[1:]))


def _all(pop, pred):
    bad = [str(a) for a in pop if not pred(a)]
    return (f"{len(bad)} failures" + (f", first {bad[0]}" if bad else "")), not bad


# ------------------------------------------------------------ staircase


@check("gens-to-columns-small", "column sequence of (x^3, xy^3, y^5)", "a:0,3,3,5")
def _():
    a = st.from_generators([(3, 0), (1, 3), (0, 5)])
    return a, a == (0, 3, 3, 5)


@check("gens-to-columns-lex", "column sequence of (x^4, x^3y, x^2y^4, xy^7, y^9)", "a:0,1,4,7,9")
def _():
    a = st.from_generators([(4, 0), (3, 1), (2, 4), (1, 7), (0, 9)])
    return a, a == (0, 1, 4, 7, 9)


@check("columns-to-gens-small", "generators of a:0,3,3,5", "[(3,0),(1,3),(0,5)]")
def _():
    g = st.minimal_generators((0, 3, 3, 5))
    return g, g == [(3, 0), (1, 3), (0, 5)]


@check("contracted-ideal-mu", "minimal generators of the order-8 contracted ideal", "9")
def _():
    m = st.mu(EX_B_IDEAL)
    return m, m == 9


@check("contracted-ideal-order", "order and contractedness of the same ideal", "o=8, mu=9, contracted")
def _():
    o, m = st.order(EX_B_IDEAL), st.mu(EX_B_IDEAL)
    return f"o={o}, mu={m}", o == 8 and m == 9 and st.is_contracted_monomial(EX_B_IDEAL)


@check("increasing-b-powers", "a_i(I^n) = (n-r)a_q + r a_(q+1), i = qn+r, for nondecreasing b", "formula on census d<=4, a_d<=8, n<=4")
def _():
    def ok(a):
        for n in range(1, 5):
            p = st.power(a, n)
            for i in range(len(p)):
                q, r = divmod(i, n)
                val = (n - r) * a[q] + (r * a[q + 1] if r else 0)
                if p[i] != val:
                    return False
        return True

    return _all([a for a in monomial_census(4, 8) if _monotone(a, True)], ok)


@check("decreasing-b-powers", "a_i(I^n) = q a_d + a_r, i = qd+r, for nonincreasing b", "formula on census d<=4, a_d<=8, n<=4")
def _():
    def ok(a):
        d = a.d
        for n in range(1, 5):
            p = st.power(a, n)
            for i in range(len(p)):
                q, r = divmod(i, d)
                if p[i] != q * a[d] + a[r]:
                    return False
        return True

    return _all([a for a in monomial_census(4, 8) if _monotone(a, False)], ok)


@check("colength-contracted", "colength of the order-8 contracted ideal", "85")
def _():
    v = st.colength(EX_B_IDEAL)
    return v, v == 85


@check("colength-initial", "colength of the initial ideal (x^5, x^4y^2, x^3y^5, x^2y^7, xy^8, y^10)", "32")
def _():
    v = st.colength(EX_A_INITIAL)
    return v, v == 32


@check("increasing-b-closed", "nondecreasing b gives an integrally closed ideal", "a:0,1,3 closed; census d<=4, a_d<=8 closed")
def _():
    msg, ok = _all([a for a in monomial_census(4, 8) if _monotone(a, True)], st.is_integrally_closed)
    return msg, ok and st.is_integrally_closed((0, 1, 3))


@check("increasing-b-samuel", "|a(I^n)| = n^2|a(I)| - C(n,2) a_d for nondecreasing b", "identity on census d<=4, a_d<=8, n<=5")
def _():
    def ok(a):
        return all(hs.hilbert_samuel(a, n) == n * n * sum(a) - comb(n, 2) * a[-1] for n in range(1, 6))

    return _all([a for a in monomial_census(4, 8) if _monotone(a, True)], ok)


# ------------------------------------------------------------- series


@check("series-contracted", "Hilbert series of the order-8 contracted ideal", "(85 + 42z + 10z^2 - 3z^3)/(1-z)^2")
def _():
    s = hs.hilbert_series(EX_B_IDEAL)
    return s, s.h == (85, 42, 10, -3)


@check("series-lex-of-contracted", "Hilbert series of its lex-segment ideal", "(85 + 43z + 7z^2 - z^3)/(1-z)^2")
def _():
    s = hs.hilbert_series(EX_B_LEX)
    return s, s.h == (85, 43, 7, -1)


@check("series-initial", "Hilbert series of the depth-zero initial ideal", "(32 + 16z + 4z^2 - 2z^3)/(1-z)^2")
def _():
    s = hs.hilbert_series(EX_A_INITIAL)
    return s, s.h == (32, 16, 4, -2)


@check("contracted-not-cm", "the order-8 contracted ideal is not Cohen-Macaulay", "CM false, s=3")
def _():
    s = hs.hilbert_series(EX_B_IDEAL)
    return f"CM {s.is_cm()}, s={s.s}", (not s.is_cm()) and s.s == 3


@check("decreasing-b-series", "h = (lambda, d a_d - lambda) for nonincreasing b", "closed form on census d<=4, a_d<=8")
def _():
    def ok(a):
        s = hs.hilbert_series(a)
        return s == hs.HilbertSeries((sum(a), a.d * a[-1] - sum(a))) and s.is_cm()

    return _all([a for a in monomial_census(4, 8) if _monotone(a, False)], ok)


@check("hf-initial-vs-ideal", "HF_I(2) = 130 > 128 = HF_in(I)(2), equal for n >= 3", "incomparable, violation at 2, 130 vs 128")
def _():
    ini = hs.hilbert_series(EX_A_INITIAL)
    cmp = hs.compare_hf(EX_A_SERIES_I, ini)
    tail = all(EX_A_SERIES_I.hf(n) == ini.hf(n) for n in range(3, 30))
    got = f"{cmp.relation}, violation at {cmp.first_violation}, {EX_A_SERIES_I.hf(2)} vs {ini.hf(2)}, tail equal {tail}"
    return got, (cmp.first_violation == 2 and EX_A_SERIES_I.hf(2) == 130 and ini.hf(2) == 128 and tail and EX_A_SERIES_I.e == ini.e)


@check("hf-contracted-vs-lex", "HF_I(2) = 349 > 348 = HF_L(2)", "violation at 2, 349 vs 348")
def _():
    i, l = hs.hilbert_series(EX_B_IDEAL), hs.hilbert_series(EX_B_LEX)
    cmp = hs.compare_hf(i, l)
    return f"{cmp.relation}, violation at {cmp.first_violation}, {i.hf(2)} vs {l.hf(2)}", (
        cmp.first_violation == 2 and i.hf(2) == 349 and l.hf(2) == 348
    )


@check("h1-bound-contracted", "h_1 >= C(mu-1, 2) on the order-8 contracted ideal", "42 >= 28")
def _():
    s = hs.hilbert_series(EX_B_IDEAL)
    bound = comb(st.mu(EX_B_IDEAL) - 1, 2)
    return f"{s.coeff(1)} >= {bound}", s.coeff(1) == 42 and bound == 28 and hs.h1_bound_check(EX_B_IDEAL)


@check("h2-boundary", "h_2 of the 11-generator generic lex ideal", "h = (97, 58, 0, 1), h_2 = 0")
def _():
    s = hs.hilbert_series(gf.generic_lex(GEN_B))
    return s.h, s.h == (97, 58, 0, 1)


# --------------------------------------------------------------- lexseg


@check("blocks-generic-a", "block profile of generic_lex(5,7,8)", "p = (0,0,1,2,2), c = 0")
def _():
    prof = lexseg.blocks(gf.generic_lex(GEN_A))
    return f"p={prof.p}, c={prof.c}", prof.p == (0, 0, 1, 2, 2) and prof.c == 0


@check("transform-example", "T(x^4, x^3y, x^2y^3, xy^4, y^10)", "(z^3, y*z, y^6)")
def _():
    t = lexseg.transform(TRANSFORM_EX)
    text = st.format_generators(st.minimal_generators(t), "z", "y")
    return text, t == st.from_generators([(3, 0), (1, 1), (0, 6)]) == lexseg.transform_by_substitution(TRANSFORM_EX)


def _generic_population():
    seen = {}
    for r in range(2, 5):
        for ds in itertools.combinations_with_replacement(range(2, 9), r):
            seen.setdefault(gf.generic_lex(ds), ds)
    return seen


@check("transform-differences", "generic L with p_2 > 0: T(L) lex in y with differences (p_(s+1), p_s, ..., p_2)", "all generic lex from <= 4 forms of degree <= 8")
def _():
    def ok(L):
        prof = lexseg.blocks(L)
        t = lexseg.transform(L)
        if t is None:
            return True
        ty = st.transpose(t)
        want = (prof.c,) + tuple(reversed(prof.head[1:]))
        if prof.c == 0:
            want = want[1:]  # y^(a_d-d-1) z^0 absorbs the first generator
        return st.is_lex(ty) and ty.b == want

    pop = [L for L in _generic_population() if len(lexseg.blocks(L).p) > 1 and lexseg.blocks(L).p[1] > 0]
    return _all(pop, ok)


@check("transform-lex-in-y", "all p_2, ... >= 1 makes T(L) lex in y", "lex census d<=6, a_d<=12")
def _():
    def ok(L):
        prof = lexseg.blocks(L)
        t = lexseg.transform(L)
        return t is None or st.is_lex(st.transpose(t))

    pop = [L for L in lex_census(6, 12) if lexseg.transform_is_lex(lexseg.blocks(L)) in ("lex-in-y", "both")]
    return _all(pop, ok)


@check("transform-lex-in-z", "all p_i <= 1 makes T(L) lex in z", "lex census d<=6, a_d<=12")
def _():
    def ok(L):
        t = lexseg.transform(L)
        return t is None or st.is_lex(t)

    pop = [L for L in lex_census(6, 12) if lexseg.transform_is_lex(lexseg.blocks(L)) in ("lex-in-z", "both")]
    return _all(pop, ok)


@check("reduction-generic-a", "L^2 = (x^5, y^9)L for generic_lex(5,7,8)", "true")
def _():
    L = gf.generic_lex(GEN_A)
    v = lexseg.reduction_equality(L, [(5, 0), (0, 9)])
    return v, v


@check("decreasing-b-reduction", "I^2 = (x^d, y^a_d) I for nonincreasing b", "census d<=4, a_d<=8")
def _():
    def ok(a):
        return st.power(a, 2) == st.min_plus_product(st.from_generators([(a.d, 0), (0, a[-1])]), a)

    return _all([a for a in monomial_census(4, 8) if _monotone(a, False)], ok)


@check("depth-initial", "depth gr of the initial ideal", "0")
def _():
    v = lexseg.depth_classify(EX_A_INITIAL)
    return f"{v.depth} ({v.certainty}: {v.certificate})", v.depth == 0 and v.certainty == "exact"


@check("depth-contracted", "depth gr of the order-8 contracted monomial ideal", "0")
def _():
    v = lexseg.depth_classify(EX_B_IDEAL)
    return f"{v.depth} ({v.certainty}: {v.certificate})", v.depth == 0 and v.certainty == "exact"


@check("depth-generic-b", "depth gr of the 11-generator generic lex ideal", "1")
def _():
    v = lexseg.depth_classify(gf.generic_lex(GEN_B))
    return f"{v.depth} ({v.certainty}: {v.certificate})", v.depth == 1 and v.certainty == "exact"


# ----------------------------------------------------------- contracted


def _random_hb(rng: random.Random, distinct: bool = True):
    d = rng.randint(1, 6)
    b = tuple(rng.randint(1, 3) for _ in range(d))
    pool = sorted({Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(40)})
    alpha = tuple(rng.sample(pool, d)) if distinct else tuple(rng.choice(pool[:2]) for _ in range(d))
    return ct.HilbertBurchData(b, alpha)


def _hb_population(n: int = 50, seed: int = 7):
    rng = random.Random(seed)
    return [_random_hb(rng) for _ in range(n)]


@check("sqfree-factors-order1", "square-free characteristic form: all factors have order 1", "50 random inputs")
def _():
    def ok(hb):
        fac = ct.zariski_factor(ct.ledger_from_hilbert_burch(hb))
        return all(f.d == 1 for _, f in fac.factors)

    return _all(_hb_population(), ok)


@check("colength-two-routes", "colength 85 of the order-8 contracted ideal by both routes", "85")
def _():
    v = ct.colength_composite(ct.ledger_from_monomial(EX_B_IDEAL))
    return v, v == 85 == st.colength(EX_B_IDEAL)


@check("sqfree-series", "square-free characteristic form: h = (lambda, C(d,2))", "50 random inputs")
def _():
    def ok(hb):
        L = ct.ledger_from_hilbert_burch(hb)
        s = ct.hilbert_series_composite(L)
        return s == hs.HilbertSeries((ct.colength_composite(L), comb(hb.d, 2)))

    return _all(_hb_population(), ok)


@check("small-factors-cm", "all Zariski factors of order <= 2 give depth 2", "contracted census d<=5, a_d<=10")
def _():
    pop = []
    for a in monomial_census(5, 10):
        if st.is_contracted_monomial(a):
            fac = ct.zariski_factor(ct.ledger_from_monomial(a))
            if all(f.d <= 2 for _, f in fac.factors):
                pop.append(a)

    def ok(a):
        return ct.depth_composite(ct.ledger_from_monomial(a)).depth == 2 and hs.hilbert_series(a).is_cm()

    return _all(pop, ok)


@check("sqfree-depth", "square-free characteristic form gives depth 2", "50 random inputs")
def _():
    return _all(_hb_population(), lambda hb: ct.depth_composite(ct.ledger_from_hilbert_burch(hb)).depth == 2)


# ------------------------------------------------------------- genforms


@check("two-form-series", "(1-z^5)(1-z^7)/(1-z)^2 rises to 5 then falls", "1,2,3,4,5,5,5,4,3,2,1")
def _():
    h = gf.generic_hs((5, 7))
    return h, h == [1, 2, 3, 4, 5, 5, 5, 4, 3, 2, 1]


@check("delta-generic-a", "Delta H for forms of degrees 5, 7, 8", "[1,1,1,1,1,0,0,-1,-2,-2]")
def _():
    dh = gf.delta(gf.generic_hs(GEN_A))
    while dh and dh[-1] == 0:
        dh.pop()
    return dh, dh == [1, 1, 1, 1, 1, 0, 0, -1, -2, -2]


@check("series-generic-a", "Hilbert series of R/(generic forms of degrees 5, 7, 8)", "[1,2,3,4,5,5,5,4,2]")
def _():
    h = gf.generic_hs(GEN_A)
    return h, h == [1, 2, 3, 4, 5, 5, 5, 4, 2]


@check("lex-generic-a", "lex ideal of generic forms of degrees 5, 7, 8", "(x^5, x^4y^3, x^3y^5, x^2y^6, xy^8, y^9)")
def _():
    L = gf.generic_lex(GEN_A)
    return st.format_generators(st.minimal_generators(L)), st.minimal_generators(L) == GEN_A_GENS


@check("lex-generic-b", "lex ideal of generic forms of degrees 10, 12, 13, 15, 15", "11 printed generators")
def _():
    L = gf.generic_lex(GEN_B)
    return st.format_generators(st.minimal_generators(L)), st.minimal_generators(L) == GEN_B_GENS


@check("equal-degree-shape", "r forms of degree d: r gens, then r-1 per degree floor(d/(r-1)) times, then c", "2 <= r <= 6, r-1 <= d <= 14")
def _():
    def ok(rd):
        r, d = rd
        L = gf.generic_lex([d] * r)
        prof = lexseg.blocks(L)
        first, per, c = gf.equal_degree_shape(d, r)
        counts = [prof.p[0] + 1] + list(prof.p[1:])
        want = [first] + per + ([c] if c else [])
        return counts == want

    pop = [(r, d) for r in range(2, 7) for d in range(r - 1, 15)]
    bad = [p for p in pop if not ok(p)]
    return f"{len(bad)} failures", not bad


@check("two-form-reconstruction", "profile with p_s = 1, c = 0 comes from two forms (d1, d1 + #zeros)", "d1 <= d2 <= 12")
def _():
    bad = []
    for d1 in range(1, 13):
        for d2 in range(d1, 13):
            prof = gf.delta_profile(gf.generic_hs((d1, d2)))
            zeros = sum(1 for x in prof.p if x == 0)
            if prof.p[-1] != 1 or prof.c != 0 or gf.reconstruct_degrees(prof) != [d1, d1 + zeros] or d1 + zeros != d2:
                bad.append((d1, d2))
    return f"{len(bad)} failures", not bad


# ----------------------------------------------------------------- rees


@check("psi-first-family", "psi(x T_i) = psi(y^b_i T_(i-1))", "lex census d<=5, a_d<=10")
def _():
    def ok(a):
        d, b = a.d, (0,) + a.b
        return all(
            rees.psi(rees.ReesMonomial.build(d, x=1, t={i: 1}), a) == rees.psi(rees.ReesMonomial.build(d, y=b[i], t={i - 1: 1}), a)
            for i in range(1, d + 1)
        )

    return _all(list(lex_census(5, 10)), ok)


@check("psi-veronese-shape", "psi(T_i T_j) = psi(y^alpha T_0 T_(i+j)), alpha = a_i + a_j - a_(i+j) >= 0", "lex census d<=5, a_d<=10")
def _():
    def ok(a):
        d = a.d
        for i in range(1, d):
            for j in range(i, d - i + 1):
                al = a[i] + a[j] - a[i + j]
                if al < 0:
                    continue
                lhs = rees.ReesMonomial.build(d, t={i: 1, j: 1} if i != j else {i: 2})
                rhs = rees.ReesMonomial.build(d, y=al, t={0: 1, i + j: 1})
                if rees.psi(lhs, a) != rees.psi(rhs, a):
                    return False
        return True

    return _all(list(lex_census(5, 10)), ok)


@check("increasing-family-shape", "increasing b: {xT_i - y^b_i T_(i-1)} and {T_i T_(j-1) - y^(b_i-b_j) T_(i-1) T_j, i > j}", "a:0,1,3,6 basis, Groebner")
def _():
    a = st.ColumnSequence((0, 1, 3, 6))
    basis, order = rees.gb_family(a, "increasing")
    T = lambda **k: rees.ReesMonomial.build(3, **k)  # noqa: E731
    want = {
        (T(x=1, t={1: 1}), T(y=1, t={0: 1})),
        (T(x=1, t={2: 1}), T(y=2, t={1: 1})),
        (T(x=1, t={3: 1}), T(y=3, t={2: 1})),
        (T(t={2: 1, 0: 1}), T(y=1, t={1: 2})),
        (T(t={3: 1, 0: 1}), T(y=2, t={2: 1, 1: 1})),
        (T(t={3: 1, 1: 1}), T(y=1, t={2: 2})),
    }
    got = {tuple(g) for g in basis}
    return ", ".join(map(str, basis)), got == want and rees.buchberger_verify(basis, order)


@check("generic-family-third-block", "T_i T_j - y^beta T_(i+j-d) T_d, beta = a_i + a_j - a_(i+j-d) - a_d", "generic c = p_1 = 0 lex census d<=6, a_d<=12")
def _():
    def ok(a):
        d = a.d
        basis, _ = rees.gb_family(a, "generic")
        third = [g for g in basis if g.trail[2 + d] == 1 and g.trail[2] == 0 and g.lead[0] == 0]
        want = 0
        for i in range(1, d):
            for j in range(i, d):
                if i + j > d:
                    want += 1
                    beta = a[i] + a[j] - a[i + j - d] - a[d]
                    lead = rees.ReesMonomial.build(d, t={i: 1, j: 1} if i != j else {i: 2})
                    trail = rees.ReesMonomial.build(d, y=beta, t={i + j - d: 1, d: 1})
                    if rees.Binomial(lead, trail) not in basis:
                        return False
        return len(third) >= want

    return _all([a for a in lex_census(6, 12) if rees.is_generic_c0p0(a)], ok)


@check("forbidden-shapes", "H contains no nonzero binomial of the three excluded shapes", "20 random lex ideals, exponents <= 8")
def _():
    rng = random.Random(11)
    pop = []
    for _ in range(20):
        d = rng.randint(2, 6)
        pop.append(st.ColumnSequence((0,) + tuple(sorted(rng.sample(range(1, 13), d)))))
    return _all(pop, lambda a: not rees.forbidden_shape_search(a))


@check("increasing-family-normal", "increasing b: square-free leads, Rees algebra normal", "census d<=6, a_d<=12")
def _():
    def ok(a):
        basis, order = rees.gb_family(a, "increasing")
        return rees.normality_certificate(basis, order) and rees.crosscheck_integral_closedness(a)

    return _all([a for a in lex_census(6, 12) if "increasing" in rees.eligible_families(a)], ok)


@check("generic-family-normal", "generic c = p_1 = 0: Rees algebra normal, hence L integrally closed", "census d<=6, a_d<=12")
def _():
    return _all([a for a in lex_census(6, 12) if rees.is_generic_c0p0(a)], st.is_integrally_closed)


@check("decreasing-family-not-normal", "decreasing b: normality not certified, closure can fail", "no square-free certificate for d >= 2; a:0,3,4 not closed")
def _():
    pop = [a for a in lex_census(6, 12) if a.d >= 2 and "decreasing" in rees.eligible_families(a)]
    msg, ok = _all(pop, lambda a: not rees.normality_certificate(*rees.gb_family(a, "decreasing")))
    return msg, ok and not st.is_integrally_closed((0, 3, 4))


@check("veronese-fiber", "I = m^d: fiber cone relations are the C(d,2) Veronese quadrics", "d <= 6")
def _():
    bad = []
    for d in range(2, 7):
        hb = ct.HilbertBurchData((1,) * d, tuple(Fraction(k) for k in range(d)))
        rep = rees.expected_rees_matrix(hb)
        ideal_ok = ct.zariski_factor(ct.ledger_from_hilbert_burch(hb)).factors == ()
        if not (rep.fiber_vanishes_on_minors and rep.fiber_minor_count == comb(d, 2) and rep.t_factor_witness is None and ideal_ok):
            bad.append(d)
    return f"{len(bad)} failures", not bad


@check("fiber-t-factor", "some b_k > 1: a fiber cone relation has t_k as a factor", "50 random inputs with d >= 2")
def _():
    pop = [hb for hb in _hb_population(80, 3) if hb.d >= 2 and max(hb.b) > 1][:50]

    def ok(hb):
        w = rees.expected_rees_matrix(hb).t_factor_witness
        return w is not None and w[0] >= 1 and hb.b[w[0] - 1] > 1

    return _all(pop, ok)


def run_manifest(only: list[str] | None = None) -> ReproductionManifest:
    man = ReproductionManifest()
    for id, loc, expected, fn in REGISTRY:
        if only and id not in only:
            continue
        c = Check(id, loc, expected)
        try:
            computed, passed = fn()
            c.computed, c.passed = str(computed), bool(passed)
        except Exception as exc:  # a crash is a failed check, not a crashed run
            c.error = f"{type(exc).__name__}: {exc}"
        man.checks.append(c)
    return man
