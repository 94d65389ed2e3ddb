"""The genus g, k-point Cauchy function and its degree-n log kernel."""

from . import cache
from .arith import FieldElem, ZWPoly, poly_gcd, substitute, poly_assert
from .errors import ValidationError
from .macdonald import htilde_p
from .partitions import partitions, cells, arm_leg
from .pleth import MultiSymFunc, SymSeries, pleth_log, pair_multi

_memo = {}


def _zw(a, b, c=1):
    return ZWPoly.monomial(a, b, c)


def hook_factor(lam, g):
    """``prod_x (z^(2a+1) - w^(2l+1))^(2g) / ((z^(2a+2) - w^(2l)) (z^(2a) - w^(2l+2)))``."""
    lam = tuple(lam)
    num = ZWPoly.const(1)
    den = ZWPoly.const(1)
    for cell in cells(lam):
        a, l = arm_leg(lam, cell)
        if g:
            num = num * (_zw(2 * a + 1, 0) - _zw(0, 2 * l + 1)) ** (2 * g)
        den = den * (_zw(2 * a + 2, 0) - _zw(0, 2 * l)) * (_zw(2 * a, 0) - _zw(0, 2 * l + 2))
    return FieldElem(num, den)


def _lcm(a, b):
    g = poly_gcd(a, b)
    return (a * b).exquo(g) if not g.is_one() else a * b


def _omega_degree(d, g, k):
    """Coefficient of ``s^d`` in the Cauchy function, over one common denominator."""
    lams = partitions(d)
    hooks = {lam: hook_factor(lam, g) for lam in lams}
    common = ZWPoly.const(1)
    for h in hooks.values():
        common = _lcm(common, h.den)
    acc = {}
    for lam in lams:
        h = hooks[lam]
        weight = h.num * common.exquo(h.den)
        hp = {mu: c.num for mu, c in htilde_p(lam).items()}
        keys = {(): weight}
        for _ in range(k):
            nxt = {}
            for key, c in keys.items():
                for mu, e in hp.items():
                    nxt[key + (mu,)] = c * e
            keys = nxt
        for key, c in keys.items():
            acc[key] = acc[key] + c if key in acc else c
    coeffs = {}
    for key, c in acc.items():
        if not c.is_zero():
            coeffs[key] = FieldElem(c, common)
    return MultiSymFunc(k, coeffs, True)


def omega(g, k, n_max):
    """Cauchy function truncated at ``s^n_max``."""
    if k < 1:
        raise ValidationError("need at least one puncture")
    coeffs = [MultiSymFunc.one(k)] + [_omega_degree(d, g, k) for d in range(1, n_max + 1)]
    return SymSeries(k, n_max, coeffs)


class KernelResult:
    """Coefficient of ``s^n`` in ``(z^2-1)(1-w^2) Log Omega``, power-sum multi-basis."""

    __slots__ = ("n", "g", "k", "kernel")

    def __init__(self, n, g, k, kernel):
        self.n = n
        self.g = g
        self.k = k
        self.kernel = kernel

    def to_json(self):
        rows = []
        for key in sorted(self.kernel.coeffs):
            rows.append([[list(lam) for lam in key], self.kernel.coeffs[key].to_json()])
        return rows

    @classmethod
    def from_json(cls, n, g, k, rows):
        coeffs = {tuple(tuple(lam) for lam in key): FieldElem.from_json(c) for key, c in rows}
        return cls(n, g, k, MultiSymFunc(k, coeffs, True))

    def __repr__(self):
        return "KernelResult(n=%d, g=%d, k=%d, %d terms)" % (self.n, self.g, self.k, len(self.kernel.coeffs))


_PREFACTOR = FieldElem(ZWPoly({(2, 0): 1, (0, 0): -1}) * ZWPoly({(0, 0): 1, (0, 2): -1}))


def compute_kernel(n, g, k):
    om = omega(g, k, n)
    lg = pleth_log(om, degrees={n})
    return KernelResult(n, g, k, lg[n].scale(_PREFACTOR))


def hlv_kernel(n, g, k):
    """Memoized, disk-cached degree-``n`` kernel."""
    if n < 1:
        raise ValidationError("kernel degree must be at least 1")
    if g < 0 or k < 1:
        raise ValidationError("need genus >= 0 and at least one puncture")
    key = (n, g, k)
    got = _memo.get(key)
    if got is not None:
        return got
    ckey = "%d,%d,%d" % key
    stored = cache.load("kernel", ckey)
    if stored is not None:
        got = KernelResult.from_json(n, g, k, stored)
    else:
        got = compute_kernel(n, g, k)
        cache.store("kernel", ckey, got.to_json())
    _memo[key] = got
    return got


def persist(n, g, k):
    """Make sure the kernel is on disk, even when it is already memoized."""
    return cache.store("kernel", "%d,%d,%d" % (n, g, k), hlv_kernel(n, g, k).to_json())


def pair_kernel(kr, f):
    """``<f, kernel>`` as a reduced rational function in ``z, w``."""
    val = pair_multi(kr.kernel, f)
    if not isinstance(val, FieldElem):
        val = FieldElem.const(val)
    return val


def specialize_pair(kr, f, z_val, w_val):
    """Pair against ``f``, substitute ``z, w`` and insist on a polynomial in ``v``."""
    if f.is_zero():
        return poly_assert(substitute(FieldElem(0), z_val, w_val))
    return poly_assert(substitute(pair_kernel(kr, f), z_val, w_val))
