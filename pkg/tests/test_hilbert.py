import itertools
from math import comb

import pytest
from hypothesis import given, settings
import hypothesis.strategies as hst

from zlab import hilbert as hs
from zlab import staircase as st

from test_staircase import seqs


def monomial_census(dmax, admax):
    for d in range(1, dmax + 1):
        for c in itertools.combinations_with_replacement(range(1, admax + 1), d):
            yield st.ColumnSequence((0,) + c)


def lex_census(dmax, admax):
    for d in range(1, dmax + 1):
        for c in itertools.combinations(range(1, admax + 1), d):
            yield st.ColumnSequence((0,) + c)


def test_powers_of_m():
    for d in range(1, 7):
        s = hs.hilbert_series(st.maximal_power(d))
        assert s == hs.HilbertSeries((comb(d + 1, 2), comb(d, 2)))
        assert s.e == d * d and s.is_cm()


def test_printing_and_json():
    s = hs.HilbertSeries((32, 14, 6, -2, 0, 0))
    assert s.h == (32, 14, 6, -2)
    assert str(s) == "(32 + 14z + 6z^2 - 2z^3)/(1-z)^2"
    assert s.to_dict() == {"h": [32, 14, 6, -2], "e": 50, "lambda": 32}


@settings(max_examples=80)
@given(seqs(), hst.integers(1, 4))
def test_samuel_matches_brute_force(a, n):
    assert hs.hilbert_samuel(a, n) == hs.brute_force_colength(a, n)


@given(seqs())
def test_series_reproduces_samples(a):
    s = hs.hilbert_series(a)
    lengths = [hs.hilbert_samuel(a, n) for n in range(s.stabilized_at + 3)]
    assert all(s.samuel(n) == lengths[n] for n in range(len(lengths)))
    assert all(x < y for x, y in zip(lengths, lengths[1:]))
    # eventually quadratic with leading coefficient e/2
    second = [lengths[n + 2] - 2 * lengths[n + 1] + lengths[n] for n in range(len(lengths) - 2)]
    assert second[-1] == s.e
    assert s.lam == st.colength(a) and s.e > 0


def test_window_three_agrees_with_wide_window():
    for a in monomial_census(5, 10):
        assert hs.hilbert_series(a, window=3) == hs.hilbert_series(a, window=10), a


def test_false_plateau():
    # three zero coefficients inside the h-vector: a window of 2 stops too early
    a = st.ColumnSequence((0, 2, 5, 7, 9, 11, 12))
    assert hs.hilbert_series(a, window=2).h == (46, 25)
    assert hs.hilbert_series(a).h == (46, 25, 0, 0, 0, 1)
    assert hs.hilbert_series(a, window=12).h == (46, 25, 0, 0, 0, 1)


def test_stabilization_budget():
    with pytest.raises(hs.StabilizationError):
        hs.hilbert_series(st.ColumnSequence((0, 2, 5, 7, 9, 11, 12)), max_n=4)


def test_closed_form_monotone():
    n = 0
    for d in range(1, 9):
        for c in itertools.combinations_with_replacement(range(1, 17), d):
            a = st.ColumnSequence((0,) + c)
            b = a.b
            if all(x <= y for x, y in zip(b, b[1:])) or all(x >= y for x, y in zip(b, b[1:])):
                assert hs.closed_form_monotone(a) == hs.hilbert_series(a), a
                n += 1
    assert n == 4071


def test_closed_form_rejects_non_monotone():
    with pytest.raises(ValueError):
        hs.closed_form_monotone((0, 2, 3, 5, 9))


def test_h1_bound_on_lex_census():
    bad = [a for a in lex_census(5, 10) if not hs.h1_bound_check(a)]
    assert bad == []


def test_h1_bound_is_sharp_for_powers_of_m():
    for d in range(1, 7):
        s = hs.hilbert_series(st.maximal_power(d))
        assert s.coeff(1) == comb(st.mu(st.maximal_power(d)) - 1, 2)


def test_compare_hf_relations():
    small, big = hs.HilbertSeries((3, 1)), hs.HilbertSeries((6, 3))
    assert hs.compare_hf(small, big).relation == "dominated"
    assert hs.compare_hf(big, small).relation == "dominates"
    # equal e, crossing once
    p, q = hs.HilbertSeries((5, 3, -2, 1)), hs.HilbertSeries((5, 2, 1, -1))
    cmp = hs.compare_hf(p, q)
    assert cmp.relation == "incomparable"
    assert cmp.first_violation == 1 and cmp.first_deficit == 2


@given(seqs(), seqs())
def test_compare_hf_pointwise(a, b):
    p, q = hs.hilbert_series(a), hs.hilbert_series(b)
    cmp = hs.compare_hf(p, q)
    horizon = max(p.s, q.s) + 60
    ups = [n for n in range(horizon) if p.hf(n) > q.hf(n)]
    downs = [n for n in range(horizon) if p.hf(n) < q.hf(n)]
    assert cmp.first_violation == (ups[0] if ups else None)
    assert cmp.first_deficit == (downs[0] if downs else None)


def test_graded_hf_sums_to_colength():
    for a in monomial_census(4, 6):
        assert sum(hs.graded_hf(a)) == st.colength(a)
