import itertools
import random
from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import given, settings
import hypothesis.strategies as hst

from zlab import contracted as ct
from zlab import hilbert as hs
from zlab import lexseg
from zlab import staircase as st

import oracles
from test_hilbert import monomial_census

CONTRACTED_EX = st.ColumnSequence((0, 1, 1, 3, 5, 12, 13, 14, 17, 19))
CONTRACTED_LEDGER = "d=8; form x: 7,6,5,5,5,5,5,5,2,2,1; form y: 1"

X, Y = sympy.symbols("x y")


def contracted_census(dmax, admax):
    return [a for a in monomial_census(dmax, admax) if st.is_contracted_monomial(a)]


@hst.composite
def hb_data(draw, dmax=6, bmax=3, distinct=True):
    d = draw(hst.integers(1, dmax))
    b = draw(hst.lists(hst.integers(1, bmax), min_size=d, max_size=d))
    alphas = hst.fractions(min_value=-3, max_value=3, max_denominator=3)
    al = draw(hst.lists(alphas, min_size=d, max_size=d, unique=distinct))
    return ct.HilbertBurchData(tuple(b), tuple(al))


def random_hb(rng, dmax=6, bmax=3):
    d = rng.randint(1, dmax)
    al = rng.sample(sorted({Fraction(n, q) for n in range(-6, 7) for q in (1, 2, 3)}), d)
    return ct.HilbertBurchData(tuple(rng.randint(1, bmax) for _ in range(d)), tuple(al))


def test_linear_form_parsing():
    assert ct.LinearForm.parse("x") == ct.X_FORM
    assert ct.LinearForm.parse("y") == ct.Y_FORM
    assert ct.LinearForm.parse("x+2y").alpha == 2
    assert ct.LinearForm.parse("x-1y").alpha == -1
    assert ct.LinearForm.parse("x - y").alpha == -1
    assert ct.LinearForm.parse("x+1/2y").alpha == Fraction(1, 2)
    assert str(ct.LinearForm.parse("x-3y")) == "x-3y"
    with pytest.raises(ValueError):
        ct.LinearForm.parse("2x+y")


def test_ledger_parsing():
    led = ct.parse_ledger("d=5; form x+2y: 3,2,1; form x-1y: 2,2,0")
    assert led.d == 5
    assert led.betas() == [2, 3]  # sorted by alpha
    assert led.exponent(ct.LinearForm.parse("x+2y"), 1) == 2
    assert led.exponent(ct.LinearForm.parse("x+2y"), 7) == 0
    assert ct.parse_ledger(str(led)) == led


@pytest.mark.parametrize(
    "bad",
    [
        "d=2; form x: 3",  # exponent above the order
        "d=4; form x: 1,2",  # increasing
        "d=4; form x: 1; form x: 1",  # repeated form
        "form x: 1",
        "d=4; form 3x: 1",
    ],
)
def test_ledger_rejects(bad):
    with pytest.raises(ValueError):
        ct.parse_ledger(bad)


def test_monomial_ledger_of_contracted_example():
    led = ct.ledger_from_monomial(CONTRACTED_EX)
    assert led == ct.parse_ledger(CONTRACTED_LEDGER)
    assert ct.colength_composite(led) == st.colength(CONTRACTED_EX) == 85
    assert ct.hilbert_series_composite(led).h == (85, 42, 10, -3)
    assert ct.hilbert_series_composite(led) == hs.hilbert_series(CONTRACTED_EX)
    fac = ct.zariski_factor(led)
    assert fac.m_exp == 0 and fac.betas == [7, 1]
    assert ct.reconstruct_monomial(fac) == CONTRACTED_EX


def test_non_contracted_monomial_is_rejected():
    with pytest.raises(ValueError):
        ct.ledger_from_monomial((0, 3, 3, 5))


def test_lex_factor_by_hand():
    # GCD x^3 in degree 3, x^2 in degree 4, 1 from degree 5 on: (x^3, x^2 y^2, x y^4, y^5)
    assert ct.lex_factor((3, 2)) == (0, 2, 4, 5)
    assert ct.lex_factor(()) == (0,)


@settings(max_examples=60, deadline=None)
@given(hb_data(distinct=False))
def test_minors_by_cofactor_expansion(hb):
    d = hb.d
    mat = sympy.zeros(d, d + 1)
    for i in range(d):
        mat[i, i] = Y ** hb.b[i]
        mat[i, i + 1] = X + sympy.Rational(hb.alpha[i].numerator, hb.alpha[i].denominator) * Y
    for k, (ya, forms) in enumerate(hb.minor_data()):
        minor = mat[:, [j for j in range(d + 1) if j != k]].det(method="berkowitz")
        closed = Y**ya
        for al in forms:
            closed *= X + sympy.Rational(al.numerator, al.denominator) * Y
        diff = sympy.expand(minor - closed)
        summ = sympy.expand(minor + closed)
        assert diff == 0 or summ == 0, (hb, k)


def test_hb_colength_by_linear_algebra():
    rng = random.Random(5)
    for _ in range(40):
        hb = random_hb(rng, dmax=4, bmax=3)
        led = ct.ledger_from_hilbert_burch(hb)
        assert ct.colength_composite(led) == oracles.homogeneous_colength(oracles.hb_forms(hb.b, hb.alpha)), hb


def test_hb_second_power_by_linear_algebra():
    rng = random.Random(6)
    for _ in range(12):
        hb = random_hb(rng, dmax=3, bmax=2)
        s = ct.hilbert_series_composite(ct.ledger_from_hilbert_burch(hb))
        sq = oracles.products(oracles.hb_forms(hb.b, hb.alpha), 2)
        assert s.samuel(2) == oracles.homogeneous_colength(sq), hb


@settings(max_examples=80, deadline=None)
@given(hb_data())
def test_square_free_series(hb):
    led = ct.ledger_from_hilbert_burch(hb)
    lam = ct.colength_composite(led)
    d = hb.d
    s = ct.hilbert_series_composite(led)
    assert s == hs.HilbertSeries((lam, comb(d, 2)))
    v = ct.depth_composite(led)
    assert (v.depth, v.certainty) == (2, "exact")


def test_all_forms_distinct_unit_steps_gives_power_of_m():
    hb = ct.HilbertBurchData((1, 1, 1), (0, 1, 2))
    led = ct.ledger_from_hilbert_burch(hb)
    assert led.s == 0
    fac = ct.zariski_factor(led)
    assert fac.m_exp == 3 and fac.factors == ()


def test_repeated_forms_count_with_multiplicity():
    # the degree-3 minor is x (x+y)^2, so x+y enters the ledger twice
    hb = ct.HilbertBurchData((2, 1, 1), (1, 1, 0))
    led = ct.ledger_from_hilbert_burch(hb)
    assert led.exponent(ct.LinearForm(Fraction(1)), 0) == 2
    assert led.exponent(ct.X_FORM, 0) == 1
    assert ct.colength_composite(led) == oracles.homogeneous_colength(oracles.hb_forms(hb.b, hb.alpha))


def test_contracted_census_identities():
    n = 0
    for a in contracted_census(5, 10):
        led = ct.ledger_from_monomial(a)
        fac = ct.zariski_factor(led)
        assert ct.reconstruct_monomial(fac) == a
        assert ct.colength_composite(led) == st.colength(a)
        s = ct.hilbert_series_composite(led)
        assert s == hs.hilbert_series(a), a
        o = led.d
        assert s.e == sum(hs.multiplicity(f) for _, f in fac.factors) + o * o - sum(b * b for b in fac.betas)
        assert st.mu(ct.lex_of(a)) == st.mu(a)  # Gotzmann
        n += 1
    assert n == 894


def test_small_factors_give_depth_two():
    for a in contracted_census(5, 10):
        fac = ct.zariski_factor(ct.ledger_from_monomial(a))
        if all(b <= 2 for b in fac.betas):
            v = ct.depth_composite(ct.ledger_from_monomial(a))
            assert (v.depth, v.certainty) == (2, "exact"), a
            assert hs.hilbert_series(a).is_cm()


def test_samuel_function_below_lex():
    for a in contracted_census(5, 10):
        L = ct.lex_of(a)
        v = lexseg.depth_classify(L)
        if v.depth > 0 and v.certainty == "exact":
            assert all(hs.hilbert_samuel(a, n) <= hs.hilbert_samuel(L, n) for n in range(1, 6)), a


def test_composite_depth_takes_the_minimum():
    led = ct.parse_ledger("d=6; form x: 5,4,2,2,1; form x+1y: 1")
    fac = ct.zariski_factor(led)
    lx = dict((str(f), L) for f, L in fac.factors)["x"]
    v = ct.depth_composite(led)
    assert v.depth == lexseg.depth_classify(lx).depth


def test_power_of_m_ledger():
    led = ct.parse_ledger("d=4")
    assert ct.colength_composite(led) == 10
    assert ct.hilbert_series_composite(led).h == (10, 6)
    assert ct.depth_composite(led).depth == 2
