import random

import pytest
from hypothesis import given, settings, strategies as st

from gbeatty.gbs import (A, B, GBS, FitError, Underdetermined, compose_A, compose_B, csh_compose,
                         difference_word, fib, fit_from_terms, gbs_from_difference_word, hom_image,
                         is_consistent_prefix)
from gbeatty.quadratic import PHI, SQRT2, SQRT8, QuadraticIrrational
from gbeatty.words import fibonacci_word_on
from oracles import fib_word_naive

THREE_MINUS_PHI = QuadraticIrrational(5, -1, 2, 5)


def test_eval():
    assert GBS(1, 0, 0).eval(5) == 8
    assert GBS(-1, 3, -1)(1) == 1
    assert GBS(5, 4, 3).eval(2) == 26
    assert GBS(5, 4, 3, start=0).eval(0) == 3
    with pytest.raises(ValueError):
        GBS(1, 0, 0).eval(0)


def test_terms_and_text():
    v = GBS(2, -1, 2)
    assert v.terms(4) == [3, 6, 7, 10]
    assert GBS.parse(v.to_text()) == v
    w = GBS(4, 3, 2, SQRT8, 0)
    assert GBS.parse(w.to_text()) == w
    assert GBS.parse("1,4,-1", alpha=SQRT8) == GBS(1, 4, -1, SQRT8)
    assert str(GBS(1, 2, 1, start=0)) == "(1,2,1)@0"


def test_difference_word():
    assert difference_word(GBS(1, 0, 0), 6) == [2, 1, 2, 2, 1]
    assert difference_word(GBS(0, 3, 5), 6) == [3] * 5
    assert difference_word(GBS(2, -1, 2), 6) == [3, 1, 3, 3, 1]


def test_difference_word_is_fibonacci_word():
    # differences of (p, q, r) over phi: x_F on {2p+q, p+q}
    rng = random.Random(20240517)
    n = 10**4
    fw = fib_word_naive(n)
    for _ in range(200):
        p = rng.choice([x for x in range(-30, 31) if x])
        q, r = rng.randint(-50, 50), rng.randint(-50, 50)
        want = [2 * p + q if x == "0" else p + q for x in fw[:n - 1]]
        assert difference_word(GBS(p, q, r), n) == want
        assert fibonacci_word_on(2 * p + q, p + q, n - 1) == want


@pytest.mark.parametrize("alpha", [PHI, SQRT2, THREE_MINUS_PHI])
def test_no_three_term_progression(alpha):
    rng = random.Random(7)
    for _ in range(200):
        p = rng.choice([x for x in range(-40, 41) if x])
        v = GBS(p, rng.randint(-60, 60), rng.randint(-60, 60), alpha)
        t = v.terms(4)
        assert t[1] - t[0] != t[2] - t[1]
        assert t[2] - t[1] != t[3] - t[2]


def test_fit_examples():
    assert fit_from_terms(PHI, [1, 3, 4]).params == (1, 0, 0)
    assert fit_from_terms(PHI, [1, 2, 4]).params == (-1, 3, -1)
    assert fit_from_terms(PHI, [1, 2, 5]).params == (-2, 5, -2)


@given(st.integers(-100, 100), st.integers(-100, 100), st.integers(-100, 100))
def test_fit_closed_form_golden(v1, v2, v3):
    # the explicit inversion for 3/2 < alpha < 5/3, start 1
    v = fit_from_terms(PHI, [v1, v2, v3])
    assert v.params == (-v1 + 2 * v2 - v3, v1 - 3 * v2 + 2 * v3, v1 + v2 - v3)


@settings(max_examples=200)
@given(st.sampled_from([PHI, SQRT2, SQRT8, THREE_MINUS_PHI]),
       st.integers(-50, 50).filter(bool), st.integers(-50, 50), st.integers(-50, 50), st.sampled_from([0, 1]))
def test_fit_inverts_eval(alpha, p, q, r, start):
    v = GBS(p, q, r, alpha, start)
    assert fit_from_terms(alpha, v.terms(8), start) == v


def test_fit_errors():
    with pytest.raises(Underdetermined):
        fit_from_terms(PHI, [1, 2])
    with pytest.raises(FitError) as exc:
        fit_from_terms(PHI, [1, 3, 4, 6, 9])
    assert exc.value.index == 5
    # sqrt 8: floor(n sqrt 8) for n=1,2,3 is 2,5,8, an AP, so three terms are not enough
    with pytest.raises(Underdetermined):
        fit_from_terms(SQRT8, [5, 14, 23])
    assert is_consistent_prefix(SQRT8, [5, 14, 23])
    assert not is_consistent_prefix(SQRT8, [5, 14, 24])


def test_gbs_from_difference_word():
    assert gbs_from_difference_word(11, 7, 9).params == (4, 3, 2)
    assert gbs_from_difference_word(2, 1, 1).params == (1, 0, 0)
    assert gbs_from_difference_word(3, 3, 5).params == (0, 3, 2)


@given(st.integers(1, 40), st.integers(1, 40), st.integers(-50, 50))
def test_gbs_from_difference_word_property(a, b, first):
    v = gbs_from_difference_word(a, b, first)
    assert v.eval(1) == first
    assert difference_word(v, 60) == fibonacci_word_on(a, b, 59)


def test_compose():
    assert compose_A(GBS(1, 0, 0)).params == (1, 1, -1)
    assert compose_B(GBS(1, 0, 0)).params == (2, 1, 0)
    assert compose_A(GBS(2, -1, 0)).params == (1, 2, -2)
    with pytest.raises(ValueError):
        compose_A(GBS(1, 0, 0, SQRT2))


@given(st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20), st.integers(1, 300))
def test_compose_matches_nesting(p, q, r, n):
    v = GBS(p, q, r)
    assert compose_A(v).eval(n) == v.eval(A.eval(n))
    assert compose_B(v).eval(n) == v.eval(B.eval(n))


def test_csh_examples():
    v, res = csh_compose("AA")
    assert (res.coeff_A, res.coeff_id, res.lam) == (1, 1, 1)
    v, res = csh_compose("AB")
    assert (res.coeff_A, res.coeff_id, res.lam) == (2, 1, 0)
    v, _ = csh_compose("BB")
    assert v.params == (3, 2, 0)
    with pytest.raises(ValueError):
        csh_compose("AC")


def test_fib():
    assert [fib(k) for k in range(10)] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]


def _digit_sums(a, b, max_len=14):
    x = fib_word_naive(5000)
    ws = {x[i:i + m] for m in range(1, max_len + 1) for i in range(len(x) - m)}
    return {a * w.count("0") + b * w.count("1") for w in ws}


def test_hom_image_examples():
    assert [g.params for g in hom_image(3, 1)] == [(2, -1, 0), (2, -1, 2)]
    assert [g.params for g in hom_image(1, 1)] == [(0, 1, 0), (0, 1, 0)]
    assert [g.params for g in hom_image(2, 1)] == [(1, 0, 0), (1, 0, 1)]


@pytest.mark.parametrize("a,b", [(3, 1), (2, 1), (5, 2)])
def test_hom_image_vs_factor_enumeration(a, b):
    # words longer than 14 give values above 14*min(a, b), so below that the set is complete
    bound = 14 * min(a, b)
    sums = {s for s in _digit_sums(a, b) if s <= bound}
    union = set()
    for g in hom_image(a, b):
        union |= {v for _, v in g.values_upto(bound)}
    assert sums == union
