"""Symmetric functions in k alphabets, series in s, Adams operators, Exp and Log.

A :class:`MultiSymFunc` is stored in the power-sum multi-basis: the key
``(lam_1, ..., lam_k)`` stands for ``p_{lam_1}[X_1] ... p_{lam_k}[X_k]``.
A :class:`SymSeries` is a list of such coefficients indexed by the power of
``s``; the variable ``s`` never enters the coefficient field.
"""

from fractions import Fraction

from .arith import FieldElem
from .errors import ValidationError
from .partitions import z_lambda
from .symfunc import convert, is_zero


def _merge(a, b):
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b, reverse=True))


def dilate_coeff(c, n):
    if isinstance(c, FieldElem):
        return c.dilate(n)
    return c


def mobius(n):
    result = 1
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            result = -result
        d += 1
    if m > 1:
        result = -result
    return result


class MultiSymFunc:
    """Element of Sym[X_1, ..., X_k] in the power-sum multi-basis."""

    __slots__ = ("k", "coeffs")

    def __init__(self, k, coeffs=None, _clean=False):
        self.k = k
        if coeffs is None:
            coeffs = {}
        elif not _clean:
            coeffs = {tuple(tuple(p) for p in key): c for key, c in coeffs.items() if not is_zero(c)}
            for key in coeffs:
                if len(key) != k:
                    raise ValidationError("key %r does not have %d alphabets" % (key, k))
        self.coeffs = coeffs

    @classmethod
    def one(cls, k):
        return cls(k, {((),) * k: 1}, True)

    @classmethod
    def from_factors(cls, factors):
        """Product ``f_1[X_1] ... f_k[X_k]`` of single-alphabet functions."""
        out = {(): 1}
        for f in factors:
            pc = convert(f, "p").coeffs
            nxt = {}
            for key, c in out.items():
                for lam, d in pc.items():
                    nxt[key + (lam,)] = c * d
            out = nxt
        return cls(len(factors), out)

    @classmethod
    def from_p_dicts(cls, dicts):
        """Like :meth:`from_factors` but each factor is already a p-basis dict."""
        out = {(): 1}
        for pc in dicts:
            nxt = {}
            for key, c in out.items():
                for lam, d in pc.items():
                    nxt[key + (lam,)] = c * d
            out = nxt
        return cls(len(dicts), out)

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, MultiSymFunc):
            return NotImplemented
        return self.k == other.k and self.coeffs == other.coeffs

    def __add__(self, other):
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for key, c in b.items():
            if key in out:
                v = out[key] + c
                if is_zero(v):
                    del out[key]
                else:
                    out[key] = v
            else:
                out[key] = c
        return MultiSymFunc(self.k, out, True)

    def __neg__(self):
        return MultiSymFunc(self.k, {key: -c for key, c in self.coeffs.items()}, True)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if is_zero(c):
            return MultiSymFunc(self.k, {}, True)
        return MultiSymFunc(self.k, {key: v * c for key, v in self.coeffs.items()}, True)

    def __mul__(self, other):
        if not isinstance(other, MultiSymFunc):
            return self.scale(other)
        self._check(other)
        out = {}
        for ka, ca in self.coeffs.items():
            for kb, cb in other.coeffs.items():
                key = tuple(_merge(x, y) for x, y in zip(ka, kb))
                v = ca * cb
                out[key] = out[key] + v if key in out else v
        return MultiSymFunc(self.k, {key: c for key, c in out.items() if not is_zero(c)}, True)

    def adams(self, n):
        if n == 1:
            return self
        return MultiSymFunc(
            self.k,
            {tuple(tuple(n * x for x in lam) for lam in key): dilate_coeff(c, n)
             for key, c in self.coeffs.items()},
            True,
        )

    def map_coeffs(self, fn):
        out = {key: fn(c) for key, c in self.coeffs.items()}
        return MultiSymFunc(self.k, {key: c for key, c in out.items() if not is_zero(c)}, True)

    def permute(self, perm):
        """Relabel alphabets: alphabet ``i`` of the result is alphabet ``perm[i]`` here."""
        return MultiSymFunc(self.k, {tuple(key[p] for p in perm): c for key, c in self.coeffs.items()}, True)

    def component_degrees(self):
        return {tuple(sum(lam) for lam in key) for key in self.coeffs}

    def _check(self, other):
        if self.k != other.k:
            raise ValidationError("alphabet count mismatch: %d vs %d" % (self.k, other.k))

    def __repr__(self):
        return "MultiSymFunc(k=%d, %d terms)" % (self.k, len(self.coeffs))


def pair_multi(f, g):
    """Hall pairing extended multiplicatively to k alphabets."""
    if f.k != g.k:
        raise ValidationError("alphabet count mismatch: %d vs %d" % (f.k, g.k))
    a, b = f.coeffs, g.coeffs
    if len(a) > len(b):
        a, b = b, a
    total = 0
    for key, c in a.items():
        d = b.get(key)
        if d is None:
            continue
        z = 1
        for lam in key:
            z *= z_lambda(lam)
        term = c * d
        term = term * z if z != 1 else term
        total = term + total
    return total


class SymSeries:
    """Truncated series ``sum_d coeffs[d] s^d`` with ``d <= n``."""

    __slots__ = ("k", "n", "coeffs")

    def __init__(self, k, n, coeffs=None):
        self.k = k
        self.n = n
        coeffs = list(coeffs or [])
        if len(coeffs) > n + 1:
            coeffs = coeffs[: n + 1]
        while len(coeffs) < n + 1:
            coeffs.append(MultiSymFunc(k))
        self.coeffs = coeffs

    @classmethod
    def one(cls, k, n):
        return cls(k, n, [MultiSymFunc.one(k)])

    def __getitem__(self, d):
        return self.coeffs[d]

    def __eq__(self, other):
        if not isinstance(other, SymSeries):
            return NotImplemented
        return self.k == other.k and self.n == other.n and self.coeffs == other.coeffs

    def __add__(self, other):
        n = min(self.n, other.n)
        return SymSeries(self.k, n, [self.coeffs[d] + other.coeffs[d] for d in range(n + 1)])

    def __sub__(self, other):
        n = min(self.n, other.n)
        return SymSeries(self.k, n, [self.coeffs[d] - other.coeffs[d] for d in range(n + 1)])

    def __mul__(self, other):
        if not isinstance(other, SymSeries):
            return SymSeries(self.k, self.n, [c.scale(other) for c in self.coeffs])
        n = min(self.n, other.n)
        out = []
        for d in range(n + 1):
            acc = MultiSymFunc(self.k)
            for i in range(d + 1):
                a, b = self.coeffs[i], other.coeffs[d - i]
                if a.coeffs and b.coeffs:
                    acc = acc + a * b
            out.append(acc)
        return SymSeries(self.k, n, out)

    def is_homogeneous(self):
        """True when every alphabet carries degree ``d`` in the ``s^d`` coefficient."""
        return all(degs == {(d,) * self.k} or not degs
                   for d, degs in ((d, c.component_degrees()) for d, c in enumerate(self.coeffs)))

    def __repr__(self):
        return "SymSeries(k=%d, n=%d)" % (self.k, self.n)


def adams(n, f):
    """Adams operator: coefficients dilated, ``p_m -> p_{nm}``, ``s^l -> s^{nl}``."""
    if n < 1:
        raise ValidationError("Adams index must be positive")
    out = [MultiSymFunc(f.k) for _ in range(f.n + 1)]
    for d, c in enumerate(f.coeffs):
        if n * d <= f.n:
            out[n * d] = c.adams(n)
    return SymSeries(f.k, f.n, out)


def _is_one(c, k):
    return c.coeffs.keys() == {((),) * k} and c.coeffs[((),) * k] == 1


def series_log(f):
    """Ordinary logarithm of a series with constant term 1 (Newton recursion)."""
    if not _is_one(f.coeffs[0], f.k):
        raise ValidationError("log needs constant term 1")
    logs = [MultiSymFunc(f.k)]
    for d in range(1, f.n + 1):
        acc = MultiSymFunc(f.k)
        for j in range(1, d):
            if logs[j].coeffs and f.coeffs[d - j].coeffs:
                acc = acc + (logs[j] * f.coeffs[d - j]).scale(j)
        logs.append(f.coeffs[d] - acc.scale(Fraction(1, d)) if acc.coeffs else f.coeffs[d])
    return SymSeries(f.k, f.n, logs)


def series_exp(g):
    """Ordinary exponential of a series without constant term."""
    if g.coeffs[0].coeffs:
        raise ValidationError("exp needs a zero constant term")
    ex = [MultiSymFunc.one(g.k)]
    for d in range(1, g.n + 1):
        acc = MultiSymFunc(g.k)
        for j in range(1, d + 1):
            if g.coeffs[j].coeffs and ex[d - j].coeffs:
                acc = acc + (g.coeffs[j] * ex[d - j]).scale(j)
        ex.append(acc.scale(Fraction(1, d)))
    return SymSeries(g.k, g.n, ex)


def pleth_exp(g):
    if g.coeffs[0].coeffs:
        raise ValidationError("plethystic Exp needs a zero constant term")
    total = SymSeries(g.k, g.n)
    for m in range(1, g.n + 1):
        total = total + adams(m, g) * Fraction(1, m)
    return series_exp(total)


def pleth_log(h, degrees=None):
    """Plethystic logarithm.  ``degrees`` optionally restricts which s-degrees are filled."""
    if not _is_one(h.coeffs[0], h.k):
        raise ValidationError("plethystic Log needs constant term 1")
    lg = series_log(h)
    out = [MultiSymFunc(h.k) for _ in range(h.n + 1)]
    for d in range(1, h.n + 1):
        if degrees is not None and d not in degrees:
            continue
        acc = MultiSymFunc(h.k)
        for m in range(1, d + 1):
            if d % m:
                continue
            mu = mobius(m)
            if mu == 0:
                continue
            term = lg.coeffs[d // m].adams(m)
            acc = acc + term.scale(Fraction(mu, m))
        out[d] = acc
    return SymSeries(h.k, h.n, out)
