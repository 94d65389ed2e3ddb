"""Symmetric functions in one alphabet over an exact coefficient ring.

The power sums are the pivot basis: every element converts to ``p`` and
back through transition tables built once per degree.  Coefficients may be
ints, Fractions or :class:`~charvar.arith.FieldElem` values; the tables
themselves are rational.
"""

from fractions import Fraction
from functools import lru_cache
from threading import Lock

from .arith import FieldElem
from .errors import SizingError, ValidationError
from .partitions import partitions, z_lambda, sign, type_degree

BASES = ("m", "e", "h", "p", "s")
DEFAULT_DEGREE_BOUND = 8


def is_zero(c):
    if isinstance(c, FieldElem):
        return c.is_zero()
    return c == 0


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


# ---------------------------------------------------------------------------
# characters and transition tables
# ---------------------------------------------------------------------------

def _beta(lam, length):
    lam = list(lam) + [0] * (length - len(lam))
    return [lam[i] + length - 1 - i for i in range(length)]


@lru_cache(maxsize=None)
def character(lam, mu):
    """Irreducible character ``chi^lam`` at cycle type ``mu`` (Murnaghan-Nakayama)."""
    if sum(lam) != sum(mu):
        raise ValidationError("character needs |lam| = |mu|")
    if not mu:
        return 1
    r = mu[0]
    rest = mu[1:]
    length = len(lam) + r
    beta = _beta(lam, length)
    present = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in present:
            continue
        # height = number of beta numbers strictly between nb and b
        height = sum(1 for x in beta if nb < x < b)
        new = sorted((nb if x == b else x for x in beta), reverse=True)
        new_lam = tuple(x - (length - 1 - i) for i, x in enumerate(new))
        new_lam = tuple(x for x in new_lam if x > 0)
        total += (-1) ** height * character(new_lam, rest)
    return total


def _merge(a, b):
    return tuple(sorted(a + b, reverse=True))


def _p_product(f, g):
    out = {}
    for ka, ca in f.items():
        for kb, cb in g.items():
            k = _merge(ka, kb)
            out[k] = out.get(k, 0) + ca * cb
    return {k: _norm(c) for k, c in out.items() if c}


def _solve_inverse(mat, keys):
    """Inverse of a square rational matrix given as dict-of-dicts."""
    n = len(keys)
    idx = {k: i for i, k in enumerate(keys)}
    a = [[Fraction(mat[r].get(c, 0)) for c in keys] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(keys)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return {r: {c: _norm(a[idx[r]][n + idx[c]]) for c in keys if a[idx[r]][n + idx[c]] != 0}
            for r in keys}


class _Tables:
    """Per-degree transition tables to and from the power-sum basis.

    ``to_p[basis][lam]`` is the p-expansion of ``basis_lam``;
    ``from_p[basis][mu]`` is the ``basis`` expansion of ``p_mu``.
    """

    def __init__(self, n):
        keys = partitions(n)
        self.keys = keys
        s_to_p = {lam: {mu: _norm(Fraction(character(lam, mu), z_lambda(mu))) for mu in keys
                        if character(lam, mu)} for lam in keys}
        p_to_s = {mu: {lam: character(lam, mu) for lam in keys if character(lam, mu)} for mu in keys}
        h_to_p = {lam: _h_or_e_p(lam, False) for lam in keys}
        e_to_p = {lam: _h_or_e_p(lam, True) for lam in keys}
        # <h_lam, m_mu> = delta: M = ((H Z)^{-1})^T
        hz = {lam: {mu: c * z_lambda(mu) for mu, c in h_to_p[lam].items()} for lam in keys}
        inv = _solve_inverse(hz, keys)
        m_to_p = {mu: {rho: inv[rho][mu] for rho in keys if inv[rho].get(mu)} for mu in keys}
        p_to_m = {mu: {lam: _norm(z_lambda(mu) * h_to_p[lam].get(mu, 0)) for lam in keys
                       if h_to_p[lam].get(mu)} for mu in keys}
        p_to_h = {mu: {lam: _norm(z_lambda(mu) * m_to_p[lam].get(mu, 0)) for lam in keys
                       if m_to_p[lam].get(mu)} for mu in keys}
        p_to_e = {mu: {lam: sign(mu) * c for lam, c in p_to_h[mu].items()} for mu in keys}
        identity = {mu: {mu: 1} for mu in keys}
        self.to_p = {"p": identity, "s": s_to_p, "h": h_to_p, "e": e_to_p, "m": m_to_p}
        self.from_p = {"p": identity, "s": p_to_s, "h": p_to_h, "e": p_to_e, "m": p_to_m}


def _h_or_e_p(lam, signed):
    out = {(): 1}
    for part in lam:
        out = _p_product(out, _single_h_or_e(part, signed))
    return out


@lru_cache(maxsize=None)
def _single_h_or_e_cached(n, signed):
    return tuple((mu, _norm(Fraction(sign(mu) if signed else 1, z_lambda(mu)))) for mu in partitions(n))


def _single_h_or_e(n, signed):
    return dict(_single_h_or_e_cached(n, signed))


_tables = {}
_tables_lock = Lock()


def tables(n):
    t = _tables.get(n)
    if t is None:
        with _tables_lock:
            t = _tables.get(n)
            if t is None:
                t = _Tables(n)
                _tables[n] = t
    return t


def to_p(basis, lam):
    """p-expansion of a single basis element as a dict."""
    return tables(sum(lam)).to_p[basis][lam]


def from_p(basis, mu):
    return tables(sum(mu)).from_p[basis][mu]


# ---------------------------------------------------------------------------
# SymFunc1
# ---------------------------------------------------------------------------

class SymFunc1:
    """Element of Sym[X] stored in one of the bases m, e, h, p, s."""

    __slots__ = ("basis", "coeffs", "degree_bound")

    def __init__(self, basis, coeffs=None, degree_bound=DEFAULT_DEGREE_BOUND):
        if basis not in BASES:
            raise ValidationError("unknown basis %r" % (basis,))
        clean = {}
        for lam, c in (coeffs or {}).items():
            lam = tuple(lam)
            if sum(lam) > degree_bound:
                raise SizingError("degree %d exceeds the bound %d" % (sum(lam), degree_bound))
            if not is_zero(c):
                clean[lam] = _norm(c)
        self.basis = basis
        self.coeffs = clean
        self.degree_bound = degree_bound

    @classmethod
    def basis_element(cls, basis, lam, degree_bound=DEFAULT_DEGREE_BOUND):
        return cls(basis, {tuple(lam): 1}, max(degree_bound, sum(lam)))

    def is_zero(self):
        return not self.coeffs

    def degrees(self):
        return sorted({sum(k) for k in self.coeffs})

    def to_basis(self, target):
        return convert(self, target)

    def __eq__(self, other):
        if not isinstance(other, SymFunc1):
            return NotImplemented
        a = convert(self, "p").coeffs
        b = convert(other, "p").coeffs
        return a == b

    def __add__(self, other):
        other = convert(other, self.basis)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return SymFunc1(self.basis, out, max(self.degree_bound, other.degree_bound))

    def __neg__(self):
        return SymFunc1(self.basis, {k: -c for k, c in self.coeffs.items()}, self.degree_bound)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return SymFunc1(self.basis, {k: v * c for k, v in self.coeffs.items()}, self.degree_bound)

    def __mul__(self, other):
        if isinstance(other, SymFunc1):
            return multiply(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def map_coeffs(self, fn):
        return SymFunc1(self.basis, {k: fn(c) for k, c in self.coeffs.items()}, self.degree_bound)

    def to_json(self):
        terms = []
        for lam in sorted(self.coeffs, key=lambda l: (sum(l), l), reverse=True):
            c = self.coeffs[lam]
            terms.append([list(lam), coeff_to_json(c)])
        return {"basis": self.basis, "terms": terms}

    def __str__(self):
        return render(self)

    def __repr__(self):
        return "SymFunc1(%s)" % render(self)


def coeff_to_json(c):
    if isinstance(c, FieldElem):
        return c.to_json()
    return str(c)


def _coeff_text(c):
    if isinstance(c, FieldElem):
        if c.is_const():
            return str(c.const_value()), False
        return c.format(), True
    return str(c), False


def render(f):
    """Render as ``3*s[2,1] + (z^2)*s[1,1,1]``."""
    if not f.coeffs:
        return "0"
    pieces = []
    for lam in sorted(f.coeffs, key=lambda l: (sum(l), l), reverse=True):
        text, complex_ = _coeff_text(f.coeffs[lam])
        name = "%s[%s]" % (f.basis, ",".join(str(x) for x in lam))
        negative = not complex_ and text.startswith("-")
        if negative:
            text = text[1:]
        if complex_:
            body = "(%s)*%s" % (text, name)
        elif text == "1":
            body = name
        else:
            body = "%s*%s" % (text, name)
        pieces.append(("-" if negative else "+", body))
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sgn, body in pieces[1:]:
        out += " %s %s" % (sgn, body)
    return out


def _expand(coeffs, table_of_degree):
    out = {}
    for lam, c in coeffs.items():
        for mu, t in table_of_degree(lam).items():
            v = c * t
            out[mu] = out[mu] + v if mu in out else v
    return {k: v for k, v in out.items() if not is_zero(v)}


def convert(f, target):
    if target not in BASES:
        raise ValidationError("unknown basis %r" % (target,))
    if f.basis == target:
        return f
    pc = f.coeffs if f.basis == "p" else _expand(f.coeffs, lambda lam: to_p(f.basis, lam))
    if target == "p":
        return SymFunc1("p", pc, f.degree_bound)
    return SymFunc1(target, _expand(pc, lambda mu: from_p(target, mu)), f.degree_bound)


def multiply(f, g):
    """Product, computed in the p basis and returned in the basis of ``f``."""
    bound = max(f.degree_bound, g.degree_bound)
    a = convert(f, "p").coeffs
    b = convert(g, "p").coeffs
    out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            if sum(ka) + sum(kb) > bound:
                raise SizingError("product degree %d exceeds the bound %d" % (sum(ka) + sum(kb), bound))
            k = _merge(ka, kb)
            v = ca * cb
            out[k] = out[k] + v if k in out else v
    return convert(SymFunc1("p", out, bound), f.basis)


def hall_pairing(f, g):
    a = convert(f, "p").coeffs
    b = convert(g, "p").coeffs
    total = 0
    for k, c in a.items():
        d = b.get(k)
        if d is not None:
            total = total + c * d * z_lambda(k)
    return total


@lru_cache(maxsize=None)
def kostka(nu, lam):
    """``<h_nu, s_lam>``: number of SSYT of shape ``lam`` and content ``nu``."""
    nu, lam = tuple(nu), tuple(lam)
    if sum(nu) != sum(lam):
        raise ValidationError("kostka needs |nu| = |lam|, got %r and %r" % (nu, lam))
    hp = to_p("h", nu)
    sp = to_p("s", lam)
    total = sum(Fraction(c) * sp.get(mu, 0) * z_lambda(mu) for mu, c in hp.items())
    assert total.denominator == 1
    return int(total)


def adams_p(mu, d):
    return tuple(d * x for x in mu)


def twisted_schur_p(t):
    """p-expansion of ``prod_i s_{omega_i}[X^{d_i}]`` as a rational dict."""
    out = {(): 1}
    for d, om in t:
        sp = {adams_p(mu, d): c for mu, c in to_p("s", tuple(om)).items()}
        out = _p_product(out, sp)
    return out


def twisted_schur(t, degree_bound=None):
    """Adams-twisted Schur product for the type ``t``, in the s basis."""
    deg = type_degree(t)
    bound = max(deg, degree_bound or DEFAULT_DEGREE_BOUND)
    return convert(SymFunc1("p", twisted_schur_p(t), bound), "s")


def twisted_lr(t):
    """Twisted Littlewood-Richardson coefficients ``rho -> c^rho_omega`` (ints)."""
    f = twisted_schur(t)
    out = {}
    for rho, c in f.coeffs.items():
        c = Fraction(c)
        assert c.denominator == 1
        out[rho] = int(c)
    return out


def schur(lam, degree_bound=DEFAULT_DEGREE_BOUND):
    return SymFunc1.basis_element("s", lam, degree_bound)

