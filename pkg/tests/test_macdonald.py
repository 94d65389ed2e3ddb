from fractions import Fraction

from charvar import cache
from charvar.arith import FieldElem, ZWPoly
from charvar.macdonald import _memo, _memo_qt, format_qt, htilde, htilde_oracle, htilde_qt
from charvar.partitions import n_stat, partitions, transpose
from charvar.symfunc import SymFunc1, convert

Q = FieldElem(ZWPoly.monomial(2, 0))
T = FieldElem(ZWPoly.monomial(0, 2))


def test_small_examples():
    assert htilde((1,)).coeffs == {(1,): 1}
    assert htilde((2,)).coeffs == {(2,): 1, (1, 1): Q}
    assert htilde((1, 1)).coeffs == {(2,): 1, (1, 1): T}


def test_oracle_small_examples():
    assert htilde_oracle((1,)).coeffs == {(1,): 1}
    h2 = htilde_oracle((2,))
    assert {k: c.evaluate(1, 1) for k, c in h2.coeffs.items()} == {(2,): 1, (1, 1): 1}
    h21 = htilde_oracle((2, 1))
    assert h21.coeffs[(3,)] == 1
    assert len(h21.coeffs) == 3


def test_dual_construction_up_to_five():
    for n in range(1, 6):
        for lam in partitions(n):
            assert htilde(lam).coeffs == htilde_oracle(lam).coeffs


def test_transpose_symmetry_up_to_six():
    for n in range(1, 7):
        for lam in partitions(n):
            swapped = {k: c.swap() for k, c in htilde(lam).coeffs.items()}
            assert swapped == htilde(transpose(lam)).coeffs


def test_normalization_positivity_and_bottom_coefficient():
    for n in range(1, 7):
        for lam in partitions(n):
            h = htilde(lam).coeffs
            assert h[(n,)] == 1
            for c in h.values():
                assert c.is_poly()
                assert all(Fraction(v).denominator == 1 and v > 0 for v in c.num.terms.values())
            # <H, s_(1^n)> = q^n(lam') t^n(lam)
            assert h[(1,) * n] == FieldElem(ZWPoly.monomial(2 * n_stat(transpose(lam)), 2 * n_stat(lam)))


def test_q_t_zero_slice_is_top_schur():
    for n in range(1, 7):
        for lam in partitions(n):
            at0 = {k: c.evaluate(0, 0) for k, c in htilde(lam).coeffs.items()}
            at0 = {k: v for k, v in at0.items() if v}
            # the oracle's q = t = 0 slice as the reference
            if n <= 5:
                ref = {k: c.evaluate(0, 0) for k, c in htilde_oracle(lam).coeffs.items()}
                assert at0 == {k: v for k, v in ref.items() if v}
            assert at0 == {(n,): 1}


def test_q_t_one_gives_h1_power():
    for n in range(1, 6):
        want = convert(SymFunc1.basis_element("h", (1,) * n), "s").coeffs
        for lam in partitions(n):
            got = {k: c.evaluate(1, 1) for k, c in htilde(lam).coeffs.items()}
            assert got == want


def test_format_qt():
    assert format_qt(Q) == "q"
    assert format_qt(Q * T + T) == "q*t + t"


def test_disk_cache_round_trip(tmp_path):
    cache.configure(tmp_path)
    try:
        _memo.clear()
        _memo_qt.clear()
        first = htilde_qt((2, 1))
        assert cache.load("macdonald", "2,1") is not None
        _memo.clear()
        _memo_qt.clear()
        assert htilde_qt((2, 1)) == first
    finally:
        cache.configure(None)
        _memo.clear()
        _memo_qt.clear()
