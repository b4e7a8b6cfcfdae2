"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py`` (lines appear in the terminal
summary) or ``python3 tests/test_acceptance.py``.  Tolerances are exact
integer equality throughout; the time limits are part of the criteria.
"""

import random
import sys
import time
from math import comb
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from zlab import contracted as ct
from zlab import genforms as gf
from zlab import hilbert as hs
from zlab import lexseg
from zlab import rees
from zlab import staircase as st
from zlab.scan import ScanConfig, run_scan

import oracles
from test_contracted import random_hb

RESULTS: dict[int, str] = {}

CONTRACTED_EX = st.ColumnSequence((0, 1, 1, 3, 5, 12, 13, 14, 17, 19))
CONTRACTED_LEX = st.from_generators([(8, 0), (7, 2), (6, 3), (5, 5), (4, 12), (3, 13), (2, 14), (1, 17), (0, 19)])
DEPTH_ZERO_INITIAL = st.ColumnSequence((0, 2, 5, 7, 8, 10))
TRANSFORM_EX = st.from_generators([(4, 0), (3, 1), (2, 3), (1, 4), (0, 10)])


def lex_census(dmax, admax):
    import itertools

    for d in range(1, dmax + 1):
        for c in itertools.combinations(range(1, admax + 1), d):
            yield st.ColumnSequence((0,) + c)


def monomial_census(dmax, admax):
    import itertools

    for d in range(1, dmax + 1):
        for c in itertools.combinations_with_replacement(range(1, admax + 1), d):
            yield st.ColumnSequence((0,) + c)


def record(n, parts, start, limit=None):
    """parts: list of (label, ok, detail)."""
    elapsed = time.perf_counter() - start
    ok = all(p[1] for p in parts)
    if limit is not None and elapsed >= limit:
        ok = False
        parts = parts + [("runtime", False, f"{elapsed:.2f}s >= {limit}s")]
    bad = [f"{label}: {detail}" for label, good, detail in parts if not good]
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'} ({elapsed:.2f}s)"
    if bad:
        line += " | " + "; ".join(bad)
    RESULTS[n] = line
    print(line)
    assert ok, line


def test_criterion_1():
    t = time.perf_counter()
    si, sl = hs.hilbert_series(CONTRACTED_EX), hs.hilbert_series(CONTRACTED_LEX)
    cmp = hs.compare_hf(si, sl)
    parts = [
        ("lex is the lex ideal of I", ct.lex_of(CONTRACTED_EX) == CONTRACTED_LEX, str(ct.lex_of(CONTRACTED_EX))),
        ("series of I", si.h == (85, 42, 10, -3), f"computed {si}"),
        ("series of Lex(I)", sl.h == (85, 43, 7, -1), f"expected (85 + 43z + 7z^2 - z^3)/(1-z)^2, computed {sl}"),
        ("first violation", cmp.first_violation == 2 and si.hf(2) == 349 and sl.hf(2) == 348,
         f"n={cmp.first_violation}, {si.hf(2)} vs {sl.hf(2)}"),
    ]
    record(1, parts, t, limit=1.0)


def test_criterion_2():
    t = time.perf_counter()
    s = hs.hilbert_series(DEPTH_ZERO_INITIAL)
    v = lexseg.depth_classify(DEPTH_ZERO_INITIAL)
    # independent route for the certificate: I^3 : I^2 by lattice membership
    sq = oracles.seq_of(oracles.power_gens(DEPTH_ZERO_INITIAL, 2))
    cube = oracles.seq_of(oracles.power_gens(DEPTH_ZERO_INITIAL, 3))
    col = oracles.colon_seq(cube, sq)
    parts = [
        ("series of in(I)", s.h == (32, 16, 4, -2), f"expected (32 + 16z + 4z^2 - 2z^3)/(1-z)^2, computed {s}"),
        ("depth", v.depth == 0 and v.certainty == "exact", str(v)),
        ("certificate", v.certificate.startswith("ratliff-rush"), v.certificate),
        ("colon-chain oracle", col != tuple(DEPTH_ZERO_INITIAL) and st.is_subset(DEPTH_ZERO_INITIAL, col), str(col)),
    ]
    record(2, parts, t)


def test_criterion_3():
    t = time.perf_counter()
    tr = lexseg.transform(TRANSFORM_EX)
    parts = [
        ("transform", tr is not None and st.minimal_generators(tr) == [(3, 0), (1, 1), (0, 6)], str(tr)),
        ("substitution route", tr == lexseg.transform_by_substitution(TRANSFORM_EX), ""),
    ]
    record(3, parts, t)


def test_criterion_4():
    t = time.perf_counter()
    L = gf.generic_lex((5, 7, 8))
    dH = gf.delta(gf.generic_hs((5, 7, 8)))
    v = lexseg.depth_classify(L)
    parts = [
        ("generators", st.minimal_generators(L) == [(5, 0), (4, 3), (3, 5), (2, 6), (1, 8), (0, 9)], str(L)),
        ("delta H", dH == [1, 1, 1, 1, 1, 0, 0, -1, -2, -2], str(dH)),
        ("reduction", lexseg.reduction_equality(L, [(5, 0), (0, 9)]), ""),
        ("depth", v.depth == 2 and v.certainty == "exact", str(v)),
    ]
    record(4, parts, t)


def test_criterion_5():
    t = time.perf_counter()
    L = gf.generic_lex((10, 12, 13, 15, 15))
    gens = [(10, 0), (9, 3), (8, 5), (7, 6), (6, 8), (5, 9), (4, 11), (3, 12), (2, 13), (1, 14), (0, 16)]
    s = hs.hilbert_series(L)
    v = lexseg.depth_classify(L)
    parts = [
        ("generators", st.minimal_generators(L) == gens, str(L)),
        ("series", s.h == (97, 58, 0, 1), str(s)),
        ("depth", v.depth == 1 and v.certainty == "exact", str(v)),
    ]
    record(5, parts, t)


def test_criterion_6():
    t = time.perf_counter()
    rng = random.Random(2024)
    bad = []
    for _ in range(50):
        hb = random_hb(rng, dmax=6, bmax=3)
        led = ct.ledger_from_hilbert_burch(hb)
        s = ct.hilbert_series_composite(led)
        v = ct.depth_composite(led)
        rep = rees.expected_rees_matrix(hb)
        ok = (
            s == hs.HilbertSeries((ct.colength_composite(led), comb(hb.d, 2)))
            and (v.depth, v.certainty) == (2, "exact")
            and rep.minors_vanish
        )
        if not ok:
            bad.append(str(hb))
    record(6, [("50 random inputs", not bad, f"{len(bad)} failures, e.g. {bad[:2]}")], t)


def test_criterion_7():
    t = time.perf_counter()
    bad = {"reconstruction": [], "colength": [], "multiplicity": []}
    n = 0
    for a in monomial_census(6, 12):
        if not st.is_contracted_monomial(a):
            continue
        n += 1
        led = ct.ledger_from_monomial(a)
        fac = ct.zariski_factor(led)
        if ct.reconstruct_monomial(fac) != a:
            bad["reconstruction"].append(str(a))
        if ct.colength_composite(led) != st.colength(a):
            bad["colength"].append(str(a))
        e = hs.hilbert_series(a).e
        o = led.d
        if e != sum(hs.multiplicity(f) for _, f in fac.factors) + o * o - sum(b * b for b in fac.betas):
            bad["multiplicity"].append(str(a))
    parts = [(k, not v, f"{len(v)} of {n} fail, e.g. {v[:2]}") for k, v in bad.items()]
    parts.append(("census size", n > 0, str(n)))
    record(7, parts, t, limit=60.0)


def test_criterion_8():
    t = time.perf_counter()
    rng = random.Random(8)
    bad = []
    for _ in range(200):
        a = st.ColumnSequence(oracles.random_seq(rng, dmax=6, admax=12))
        n = rng.randint(1, 4)
        if hs.hilbert_samuel(a, n) != oracles.count_outside(oracles.power_gens(a, n)):
            bad.append((str(a), n))
    record(8, [("200 random ideals", not bad, f"{len(bad)} mismatches, e.g. {bad[:2]}")], t)


def test_criterion_9():
    t = time.perf_counter()
    basis_bad, cert_bad, coincide_bad = [], [], []
    n = 0
    for a in lex_census(6, 12):
        for fam in rees.eligible_families(a):
            n += 1
            basis, order = rees.gb_family(a, fam)
            ok = all(rees.psi(g.lead, a) == rees.psi(g.trail, a) and order.greater(g.lead, g.trail) for g in basis)
            ok = ok and rees.buchberger_verify(basis, order)
            ok = ok and not rees.toric_membership_sample(a, basis, order, tdeg_cap=4)
            if not ok:
                basis_bad.append(f"{a} {fam}")
            if fam in ("increasing", "generic"):
                cert = rees.normality_certificate(basis, order)
                if not cert:
                    cert_bad.append(f"{a} {fam}")
                if cert != rees.crosscheck_integral_closedness(a):
                    coincide_bad.append(f"{a} {fam}")
    parts = [
        ("basis checks", not basis_bad, f"{len(basis_bad)} of {n}, e.g. {basis_bad[:2]}"),
        ("square-free leads", not cert_bad, f"{len(cert_bad)} without, e.g. {cert_bad[:3]}"),
        ("coincides with closedness", not coincide_bad, f"{len(coincide_bad)} mismatches, e.g. {coincide_bad[:3]}"),
    ]
    record(9, parts, t, limit=300.0)


def test_criterion_10():
    t = time.perf_counter()
    lex5 = list(lex_census(5, 10))
    h1_bad = [str(a) for a in lex5 if not hs.h1_bound_check(a)]

    rng = random.Random(10)
    pos_bad = []
    for _ in range(100):
        degs = [rng.randint(1, 15) for _ in range(rng.randint(2, 6))]
        v = lexseg.depth_classify(gf.generic_lex(degs))
        if not (v.depth >= 1 and v.certainty == "exact"):
            pos_bad.append(degs)

    eq_bad = []
    for d in range(2, 13):
        for r in range(2, d + 3):
            v = lexseg.depth_classify(gf.generic_lex([d] * r))
            if (v.depth, v.certainty) != (2, "exact"):
                eq_bad.append((d, r))
    pi_bad, pi_n = [], 0
    eqd_bad, eqd_n = [], 0
    for a in lex_census(6, 12):
        if lexseg.monotone_blocks_condition(lexseg.blocks(a)):
            pi_n += 1
            v = lexseg.depth_classify(a)
            if (v.depth, v.certainty) != (2, "exact"):
                pi_bad.append(str(a))
        tr = lexseg.transform(a)
        if tr is not None:
            va, vt = lexseg.depth_classify(a), lexseg.depth_classify(tr)
            if va.certainty == "exact" and vt.certainty == "exact":
                eqd_n += 1
                if va.depth != vt.depth:
                    eqd_bad.append(str(a))

    h2 = run_scan("h2", ScanConfig(d_max=5, a_d_max=10))
    parts = [
        ("h1 bound", not h1_bad, f"{len(h1_bad)} of {len(lex5)}"),
        ("positive depth", not pos_bad, f"{len(pos_bad)} of 100"),
        ("equal degrees", not eq_bad, str(eq_bad[:3])),
        ("monotone block profiles", not pi_bad and pi_n > 0, f"{len(pi_bad)} of {pi_n}"),
        ("transform depth equality", not eqd_bad and eqd_n > 0, f"{len(eqd_bad)} of {eqd_n}"),
        ("h2 scan completes", h2["summary"]["ideals"] > 0, str(h2["summary"])[:200]),
    ]
    record(10, parts, t)


if __name__ == "__main__":
    failed = 0
    for n in range(1, 11):
        try:
            globals()[f"test_criterion_{n}"]()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
