from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from charvar.arith import UniPoly, ZWPoly
from charvar.errors import GenericityError, ValidationError
from charvar.kernel import hlv_kernel, specialize_pair
from charvar.partitions import all_etas, eta_class_size
from charvar.pleth import MultiSymFunc
from charvar.symfunc import to_p
from charvar.varieties import (EigenvalueSpec, PunctureData, SurfaceData, auto_surface, dim_charvar, dim_class,
                               e_polynomial, h_mu_prime, is_generic, jordan_data, mixed_hodge_at_q1,
                               mixed_hodge_at_v, mixed_hodge_conjectural, multiplicity_dim, poincare_ih, poincare_ss,
                               probe_polynomial, resolution_identity_check, resolution_identity_report, s_mu_prime,
                               surface_from_json, surface_to_json, trivial_eta_for, twisted_poincare)

from test_acceptance import weyl_average_holds, weyl_group_order

MINUS_ONE = EigenvalueSpec(Fraction(1, 2))
ONE = EigenvalueSpec()


def torus(g):
    return (UniPoly([1, 1]) ** (2 * g)).shift(2 * g)


def cayley():
    return SurfaceData(0, [PunctureData([(MINUS_ONE, 2, (2,))])] + [PunctureData([(ONE, 2, (2,))])] * 3)


def rs(genus, k, n=2):
    return auto_surface(genus, [[(1,)] * n] * k)


# genericity and dimensions

def test_is_generic_examples():
    assert is_generic(cayley())
    pair = PunctureData([(ONE, 1, (1,)), (MINUS_ONE, 1, (1,))])
    assert not is_generic(SurfaceData(0, [pair, pair]))
    assert is_generic(SurfaceData(0, [PunctureData([(ONE, 1, (1,))])]))


def test_total_product_must_be_one():
    s = SurfaceData(0, [PunctureData([(EigenvalueSpec(0, [1]), 1, (1,))])])
    assert not is_generic(s)
    with pytest.raises(GenericityError):
        dim_charvar(s)


@settings(max_examples=50)
@given(st.lists(st.tuples(st.fractions(0, 1, max_denominator=6), st.lists(st.integers(-3, 3), max_size=3)),
                min_size=1, max_size=4))
def test_eigenvalue_product_is_one_iff_torsion_and_free_cancel(vals):
    specs = [EigenvalueSpec(t, f) for t, f in vals]
    total = specs[0]
    for s in specs[1:]:
        total = total * s
    torsion = sum(Fraction(t) for t, _ in vals)
    n = max(len(f) for _, f in vals)
    free = [sum(f[i] if i < len(f) else 0 for _, f in vals) for i in range(n)]
    assert total.is_one() == (torsion.denominator == 1 and not any(free))


def test_auto_surface_always_generic():
    for n in range(1, 4):
        for layout in jordan_data(n):
            assert is_generic(auto_surface(0, [list(layout)] * 3))


def test_dim_class_examples():
    assert dim_class(PunctureData([(ONE, 2, (1, 1))])) == 0
    assert dim_class(PunctureData([(ONE, 1, (1,)), (MINUS_ONE, 1, (1,))])) == 2
    assert dim_class(PunctureData([(ONE, 2, (2,))])) == 2


def test_dim_charvar_examples():
    for g in range(3):
        assert dim_charvar(auto_surface(g, [[(1,)]] * 2)) == 2 * g
    assert dim_charvar(rs(0, 4)) == 2
    assert dim_charvar(rs(1, 1)) == 4
    assert dim_charvar(cayley()) == 2


def test_puncture_validation():
    with pytest.raises(ValidationError):
        PunctureData([(ONE, 2, (1,))])
    with pytest.raises(ValidationError):
        PunctureData([(ONE, 1, (1,)), (ONE, 1, (1,))])
    with pytest.raises(ValidationError):
        SurfaceData(0, [PunctureData([(ONE, 1, (1,))]), PunctureData([(ONE, 2, (2,))])])


def test_s_mu_prime_examples():
    assert s_mu_prime(rs(0, 1)) == MultiSymFunc.from_p_dicts([to_p("h", (1, 1))])
    assert s_mu_prime(SurfaceData(0, [PunctureData([(ONE, 2, (2,))])])) == MultiSymFunc.from_p_dicts(
        [to_p("s", (1, 1))])
    assert s_mu_prime(SurfaceData(0, [PunctureData([(ONE, 3, (1, 1, 1))])])) == MultiSymFunc.from_p_dicts(
        [to_p("s", (3,))])


# Poincare polynomials

def test_rank_one_poincare():
    for g in range(4):
        for k in range(1, 4):
            assert poincare_ih(auto_surface(g, [[(1,)]] * k)) == torus(g)
            assert poincare_ss(g, [(1,)] * k) == torus(g)


def test_four_punctured_sphere():
    p = poincare_ih(rs(0, 4))
    assert p(-1) == 6
    assert p == UniPoly([0, 0, 5, 0, 1])
    c = poincare_ih(cayley())
    assert c.degree() == 4 and c.lead() == 1


def test_semisimple_equals_regular_intersection():
    for g in range(2):
        for k in range(1, 4):
            for n in range(1, 4):
                s = rs(g, k, n)
                if dim_charvar(s) < 0:
                    continue
                assert poincare_ss(g, [(1,) * n] * k) == poincare_ih(s)
    assert poincare_ss(0, [(1, 1)] * 4)(-1) == 6


def test_poincare_shape():
    for n in range(1, 4):
        for g in range(2):
            for k in range(1, 4):
                for layout in jordan_data(n):
                    s = auto_surface(g, [list(layout)] * k)
                    d = dim_charvar(s)
                    if d < 0:
                        continue
                    p = poincare_ih(s)
                    assert p.degree() == 2 * d and p.lead() == 1
                    assert all(c >= 0 and Fraction(c).denominator == 1 for c in p.coeffs)


# multiplicity spaces and strata

def test_multiplicity_dim_examples():
    mu = (((2, 1),),)
    assert multiplicity_dim(mu, mu) == 1
    assert multiplicity_dim((((2,),),), (((1, 1),),)) == 1
    assert multiplicity_dim((((1, 1),),), (((2,),),)) == 0
    with pytest.raises(ValidationError):
        multiplicity_dim((((2,),),), (((2, 1),),))


def test_resolution_identity_examples():
    assert resolution_identity_check(auto_surface(1, [[(1,)]]))
    rep = resolution_identity_report(auto_surface(1, [[(2,)]]))
    assert rep["ok"] and len(rep["terms"]) == 2
    rep = resolution_identity_report(auto_surface(1, [[(2, 1)]]))
    assert rep["ok"]
    # strata rho' in {(2,1), (3)}, each with Kostka number one
    assert sorted((t["rho"], t["mult"]) for t in rep["terms"]) == [((((1, 1, 1),),), 1), ((((2, 1),),), 1)]


# twisted polynomials

def test_twisted_trivial_eta_is_h_probe():
    for layout in ([(2,)], [(2,), (1,)], [(2, 1)], [(3,)]):
        s = auto_surface(1, [layout])
        assert twisted_poincare(s, trivial_eta_for(s)) == probe_polynomial(s, h_mu_prime(s))


def test_twisted_two_cycle():
    s = auto_surface(1, [[(2,)]])
    d = dim_charvar(s)
    p2 = MultiSymFunc(1, {((2,),): 1})
    want = specialize_pair(hlv_kernel(2, 1, 1), p2, -1, UniPoly.v()).shift(d) * -1
    assert twisted_poincare(s, [[[(2,)]]]) == want


def test_weyl_average_small_groups():
    cases = [auto_surface(1, [[(2,)]]), auto_surface(1, [[(2,), (1,)]]), auto_surface(1, [[(2,)], [(2,)]]),
             auto_surface(0, [[(2,)], [(2,)], [(1,), (1,)], [(1,), (1,)]])]
    for s in cases:
        assert 1 < weyl_group_order(s) <= 4
        assert weyl_average_holds(s)


def test_weyl_class_sizes_sum():
    s = auto_surface(1, [[(2,)], [(2,)]])
    total = 0
    for e1 in all_etas((2,)):
        for e2 in all_etas((2,)):
            total += eta_class_size((2,), e1) * eta_class_size((2,), e2)
    assert total == weyl_group_order(s) == 4


def test_bad_eta_shape():
    s = auto_surface(1, [[(2,)]])
    with pytest.raises(ValidationError):
        twisted_poincare(s, [[[(1,)]]])
    with pytest.raises(ValidationError):
        twisted_poincare(s, [])


# mixed Hodge and E-polynomials

def test_rank_one_mixed_hodge():
    for g in range(3):
        h = mixed_hodge_conjectural(auto_surface(g, [[(1,)]]))
        # v^(2g) (1 + q v)^(2g)
        want = (ZWPoly({(0, 0): 1, (1, 1): 1}) ** (2 * g)).shift(0, 2 * g)
        assert h == want
        assert e_polynomial(auto_surface(g, [[(1,)]])) == UniPoly([-1, 1]) ** (2 * g)


def test_e_polynomial_examples():
    assert e_polynomial(rs(0, 4)) == UniPoly([1, 4, 1])
    assert e_polynomial(auto_surface(0, [[(1,)]])) == UniPoly([1])
    assert e_polynomial(cayley()) == UniPoly([1, 0, 1])


def test_mixed_hodge_slices():
    for n in range(1, 4):
        for g in range(2):
            for k in range(1, 3):
                for layout in jordan_data(n):
                    s = auto_surface(g, [list(layout)] * k)
                    if dim_charvar(s) < 0:
                        continue
                    h = mixed_hodge_conjectural(s)
                    assert mixed_hodge_at_q1(h) == poincare_ih(s)
                    assert mixed_hodge_at_v(h, -1) == e_polynomial(s)


# JSON

def test_surface_json_round_trip():
    s = cayley()
    back = surface_from_json(0, surface_to_json(s)["punctures"])
    assert back.jordan == s.jordan
    assert poincare_ih(back) == poincare_ih(s)


def test_surface_json_errors():
    with pytest.raises(ValidationError):
        surface_from_json(0, [{"auto": True}, {"eigenvalues": []}], 2)
    with pytest.raises(ValidationError):
        surface_from_json(0, [{"auto": True}])
    with pytest.raises(ValidationError):
        surface_from_json(0, [{"eigenvalues": [{"torsion": "x", "mult": 1}]}])
    with pytest.raises(ValidationError):
        surface_from_json(0, [{"auto": True, "jordan": [[2]]}], 3)
