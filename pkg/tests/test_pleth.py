from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from charvar.arith import FieldElem, ZWPoly
from charvar.errors import ValidationError
from charvar.partitions import partitions
from charvar.pleth import MultiSymFunc, SymSeries, adams, mobius, pair_multi, pleth_exp, pleth_log
from charvar.symfunc import SymFunc1, convert, schur, to_p

ZE = FieldElem(ZWPoly.z())


def single(k, keys_coeffs):
    return MultiSymFunc(k, keys_coeffs)


def p1(k):
    return single(k, {((1,),) * k: 1})


def test_mobius_values():
    assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]


def test_adams_examples():
    f = SymSeries(1, 3, [MultiSymFunc(1), single(1, {((1,),): ZE})])
    assert adams(1, f) == f
    got = adams(2, f)
    assert got[2] == single(1, {((2,),): FieldElem(ZWPoly.monomial(2, 0))})
    assert got[1].is_zero()
    g = SymSeries(2, 2, [MultiSymFunc(2), p1(2)])
    assert adams(2, g)[2] == single(2, {((2,), (2,)): 1})


def test_exp_of_zero_is_one():
    assert pleth_exp(SymSeries(1, 3)) == SymSeries.one(1, 3)


def test_exp_of_p1_gives_complete_functions():
    got = pleth_exp(SymSeries(1, 3, [MultiSymFunc(1), p1(1)]))
    for d in range(4):
        want = {(lam,): c for lam, c in to_p("h", (d,) if d else ()).items()}
        assert got[d].coeffs == want


def test_log_of_one_is_zero():
    assert all(c.is_zero() for c in pleth_log(SymSeries.one(2, 3)).coeffs)


def test_bad_constant_terms():
    with pytest.raises(ValidationError):
        pleth_exp(SymSeries(1, 2, [MultiSymFunc.one(1)]))
    with pytest.raises(ValidationError):
        pleth_log(SymSeries(1, 2))


def test_pair_multi_examples():
    assert pair_multi(p1(2), p1(2)) == 1
    p2 = single(1, {((2,),): 1})
    assert pair_multi(p2, p2) == 2
    f = MultiSymFunc.from_factors([schur((1, 1)), schur((2,))])
    assert pair_multi(f, f) == 1
    with pytest.raises(ValidationError):
        pair_multi(p1(1), p1(2))


# random series: each alphabet carries degree d at s^d

coef = st.sampled_from([1, -1, 2, Fraction(1, 2), ZE, FieldElem(ZWPoly.w()), FieldElem(1, ZWPoly({(0, 0): 1, (1, 0): 1}))])


@st.composite
def series(draw, k=2, n=3, constant=0):
    coeffs = [MultiSymFunc.one(k) if constant else MultiSymFunc(k)]
    for d in range(1, n + 1):
        terms = {}
        for _ in range(draw(st.integers(0, 2))):
            key = tuple(draw(st.sampled_from(partitions(d))) for _ in range(k))
            terms[key] = draw(coef)
        coeffs.append(MultiSymFunc(k, terms))
    return SymSeries(k, n, coeffs)


@settings(max_examples=25, deadline=None)
@given(series())
def test_log_inverts_exp(g):
    assert pleth_log(pleth_exp(g)) == g


@settings(max_examples=25, deadline=None)
@given(series(), series())
def test_exp_is_additive(f, g):
    assert pleth_exp(f + g) == pleth_exp(f) * pleth_exp(g)


@settings(max_examples=25, deadline=None)
@given(series(constant=1), series(constant=1))
def test_log_is_multiplicative(f, g):
    assert pleth_log(f * g) == pleth_log(f) + pleth_log(g)


@settings(max_examples=25, deadline=None)
@given(series(n=4), series(n=4), st.integers(1, 2), st.integers(1, 2))
def test_adams_composition_and_ring_morphism(f, g, m, n):
    assert adams(m, adams(n, f)) == adams(m * n, f)
    assert adams(n, f * g) == adams(n, f) * adams(n, g)


@settings(max_examples=25, deadline=None)
@given(series(), series())
def test_exp_preserves_homogeneity(f, g):
    assert pleth_exp(f + g).is_homogeneous()


def test_from_factors_matches_p_dicts():
    a = MultiSymFunc.from_factors([schur((2, 1)), SymFunc1.basis_element("h", (2, 1))])
    b = MultiSymFunc.from_p_dicts([to_p("s", (2, 1)), to_p("h", (2, 1))])
    assert a == b
    assert convert(schur((2, 1)), "p").coeffs == to_p("s", (2, 1))
