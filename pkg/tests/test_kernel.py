from itertools import permutations, product

import pytest

from charvar import cache
from charvar.arith import FieldElem, UniPoly, ZWPoly
from charvar.errors import ValidationError
from charvar.kernel import KernelResult, _memo, hlv_kernel, hook_factor, omega, pair_kernel, specialize_pair
from charvar.partitions import partitions
from charvar.pleth import MultiSymFunc
from charvar.symfunc import to_p

ONE_MINUS = FieldElem(ZWPoly({(2, 0): 1, (0, 0): -1}) * ZWPoly({(0, 0): 1, (0, 2): -1}))
Z_MINUS_W = FieldElem(ZWPoly({(1, 0): 1, (0, 1): -1}))


def schur_probe(lams):
    return MultiSymFunc.from_p_dicts([to_p("s", lam) for lam in lams])


def test_hook_factor_examples():
    assert hook_factor((), 3).is_one()
    assert hook_factor((1,), 0) == FieldElem(1) / ONE_MINUS
    assert hook_factor((1,), 1) == Z_MINUS_W ** 2 / ONE_MINUS


def test_omega_low_degrees():
    om = omega(0, 1, 1)
    assert om[0] == MultiSymFunc.one(1)
    assert om[1] == MultiSymFunc(1, {((1,),): FieldElem(1) / ONE_MINUS})
    om2 = omega(1, 2, 1)
    assert om2[1] == MultiSymFunc(2, {((1,), (1,)): Z_MINUS_W ** 2 / ONE_MINUS})
    assert omega(1, 2, 3).is_homogeneous()


def test_degree_one_closed_form():
    for g in range(4):
        for k in range(1, 4):
            kr = hlv_kernel(1, g, k)
            assert kr.kernel == MultiSymFunc(k, {((1,),) * k: Z_MINUS_W ** (2 * g)})


def test_specialize_pair_examples():
    v = UniPoly.v()
    assert specialize_pair(hlv_kernel(1, 1, 1), schur_probe([(1,)]), -1, v) == UniPoly([1, 2, 1])
    assert specialize_pair(hlv_kernel(1, 0, 3), schur_probe([(1,)] * 3), -1, v) == UniPoly([1])
    assert specialize_pair(hlv_kernel(2, 0, 1), MultiSymFunc(1), -1, v).is_zero()


def test_degree_two_genus_zero_one_point_is_zero():
    # a single regular puncture on the sphere has no rank-two points
    assert hlv_kernel(2, 0, 1).kernel.is_zero()


def test_keys_are_homogeneous():
    for n, g, k in [(2, 0, 3), (3, 1, 2)]:
        for key in hlv_kernel(n, g, k).kernel.coeffs:
            assert all(sum(lam) == n for lam in key)


def test_symmetric_under_alphabet_permutation():
    kr = hlv_kernel(3, 0, 3)
    for perm in permutations(range(3)):
        assert kr.kernel.permute(perm) == kr.kernel


def test_schur_probes_polynomial_nonnegative():
    v = UniPoly.v()
    for n in range(1, 4):
        for g in range(2):
            for k in range(1, 4):
                kr = hlv_kernel(n, g, k)
                for lams in product(partitions(n), repeat=k):
                    p = specialize_pair(kr, schur_probe(lams), -1, v)
                    assert all(c >= 0 and int(c) == c for c in p.coeffs)


def test_pair_kernel_returns_field_element():
    assert isinstance(pair_kernel(hlv_kernel(1, 0, 1), MultiSymFunc(1)), FieldElem)


def test_bad_arguments():
    with pytest.raises(ValidationError):
        hlv_kernel(0, 0, 1)
    with pytest.raises(ValidationError):
        hlv_kernel(1, 0, 0)


def test_json_round_trip_and_disk_cache(tmp_path):
    kr = hlv_kernel(2, 1, 2)
    back = KernelResult.from_json(2, 1, 2, kr.to_json())
    assert back.kernel == kr.kernel
    cache.configure(tmp_path)
    try:
        _memo.pop((2, 1, 2), None)
        hlv_kernel(2, 1, 2)
        before = (tmp_path / "kernel.v1.json").read_bytes()
        _memo.pop((2, 1, 2), None)
        assert hlv_kernel(2, 1, 2).kernel == kr.kernel
        assert (tmp_path / "kernel.v1.json").read_bytes() == before
    finally:
        cache.configure(None)
