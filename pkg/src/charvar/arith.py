"""Exact arithmetic over Q in the two formal variables z and w.

Three layers live here:

* :class:`ZWPoly` -- sparse bivariate polynomials with rational coefficients,
* :class:`FieldElem` -- reduced rational functions ``num/den`` in canonical form,
* :class:`UniPoly` / :class:`UniRat` -- univariate polynomials and rational
  functions in ``v``, the target of the Poincare specialization.

Coefficients are Python ints whenever possible and :class:`fractions.Fraction`
otherwise; nothing here ever touches floating point.

Canonical form of a :class:`FieldElem`: ``gcd(num, den) = 1`` and the leading
coefficient of ``den`` under graded-lex order (total degree first, then the
exponent of ``z``) equals 1.  Zero is ``0/1``.  Two equal values therefore
always have identical stored representations.
"""

from fractions import Fraction
from math import gcd as igcd, isqrt

from .errors import NotPolynomialError, SpecializationError


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _grlex(key):
    return (key[0] + key[1], key[0])


class ZWPoly:
    """Sparse polynomial in ``z`` and ``w`` with rational coefficients.

    ``terms`` maps exponent pairs ``(e_z, e_w)`` to nonzero coefficients.
    Instances are immutable; every operation returns a new polynomial.
    """

    __slots__ = ("terms", "_hash", "_lead")

    def __init__(self, terms=None, _clean=False):
        if terms is None:
            terms = {}
        elif not _clean:
            terms = {k: _norm(c) for k, c in terms.items() if c != 0}
        self.terms = terms
        self._hash = None
        self._lead = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, c):
        c = _norm(c)
        return cls({(0, 0): c}, True) if c != 0 else cls({}, True)

    @classmethod
    def monomial(cls, ez, ew, c=1):
        c = _norm(c)
        return cls({(ez, ew): c}, True) if c != 0 else cls({}, True)

    @classmethod
    def z(cls):
        return cls.monomial(1, 0)

    @classmethod
    def w(cls):
        return cls.monomial(0, 1)

    # -- predicates and accessors -----------------------------------------
    def is_zero(self):
        return not self.terms

    def is_const(self):
        return not self.terms or (len(self.terms) == 1 and (0, 0) in self.terms)

    def is_one(self):
        return len(self.terms) == 1 and self.terms.get((0, 0)) == 1

    def const_value(self):
        return self.terms.get((0, 0), 0)

    def lead(self):
        """Leading ``(exponent, coefficient)`` under graded-lex order."""
        if self._lead is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading term")
            k = max(self.terms, key=_grlex)
            self._lead = (k, self.terms[k])
        return self._lead

    def degree(self):
        return max((a + b for a, b in self.terms), default=-1)

    def degree_z(self):
        return max((a for a, _ in self.terms), default=-1)

    def degree_w(self):
        return max((b for _, b in self.terms), default=-1)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, ZWPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(0, 0): _norm(other)} if other != 0 else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- ring operations --------------------------------------------------
    def __neg__(self):
        return ZWPoly({k: -c for k, c in self.terms.items()}, True)

    def __add__(self, other):
        if not isinstance(other, ZWPoly):
            other = ZWPoly.const(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for k, c in b.items():
            s = out.get(k)
            if s is None:
                out[k] = c
            else:
                s = _norm(s + c)
                if s:
                    out[k] = s
                else:
                    del out[k]
        return ZWPoly(out, True)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, ZWPoly):
            other = ZWPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return ZWPoly.const(other) - self

    def __mul__(self, other):
        if not isinstance(other, ZWPoly):
            return self.scale(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return ZWPoly({}, True)
        if len(a) < len(b):
            a, b = b, a
        out = {}
        get = out.get
        for (bz, bw), bc in b.items():
            for (az, aw), ac in a.items():
                k = (az + bz, aw + bw)
                out[k] = get(k, 0) + ac * bc
        return ZWPoly({k: _norm(c) for k, c in out.items() if c}, True)

    __rmul__ = __mul__

    def scale(self, c):
        c = _norm(c)
        if c == 0:
            return ZWPoly({}, True)
        if c == 1:
            return self
        return ZWPoly({k: _norm(v * c) for k, v in self.terms.items()}, True)

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = ZWPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, dz, dw):
        """Multiply by the monomial ``z**dz * w**dw``."""
        return ZWPoly({(a + dz, b + dw): c for (a, b), c in self.terms.items()}, True)

    def dilate(self, n):
        """Substitute ``z -> z**n, w -> w**n``."""
        if n == 1:
            return self
        return ZWPoly({(a * n, b * n): c for (a, b), c in self.terms.items()}, True)

    def swap(self):
        """Exchange the roles of ``z`` and ``w``."""
        return ZWPoly({(b, a): c for (a, b), c in self.terms.items()}, True)

    def evaluate(self, z, w):
        zp, wp = {}, {}
        total = 0
        for (a, b), c in self.terms.items():
            if a not in zp:
                zp[a] = z ** a
            if b not in wp:
                wp[b] = w ** b
            total += c * zp[a] * wp[b]
        return total

    # -- division and gcd -------------------------------------------------
    def exquo(self, other):
        """Exact quotient ``self / other``; raises ``ArithmeticError`` otherwise."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return ZWPoly({}, True)
        if other.is_const():
            return self.scale(Fraction(1) / other.const_value())
        cf, f = _primitive(self.terms)
        ch, h = _primitive(other.terms)
        q = _exact_div(f, h)
        if q is None:
            raise ArithmeticError("polynomial division is not exact")
        return ZWPoly(q, True).scale(Fraction(cf) / ch)

    def divides(self, other):
        """True when ``self`` divides ``other`` exactly."""
        if self.is_zero():
            return other.is_zero()
        if other.is_zero() or self.is_const():
            return True
        return _exact_div(_primitive(other.terms)[1], _primitive(self.terms)[1]) is not None

    def monic(self):
        """Scale so that the graded-lex leading coefficient is 1."""
        if self.is_zero():
            return self
        return self.scale(Fraction(1) / self.lead()[1])

    def gcd(self, other):
        return poly_gcd(self, other)

    # -- serialization ----------------------------------------------------
    def to_json(self):
        out = []
        for (a, b), c in sorted(self.terms.items()):
            c = Fraction(c)
            out.append([a, b, str(c.numerator), str(c.denominator)])
        return out

    @classmethod
    def from_json(cls, data):
        return cls({(int(a), int(b)): Fraction(int(n), int(d)) for a, b, n, d in data})

    def __repr__(self):
        return "ZWPoly(%s)" % format_zw(self)

    def __str__(self):
        return format_zw(self)


def format_zw(p, names=("z", "w")):
    if p.is_zero():
        return "0"
    parts = []
    for (a, b), c in sorted(p.terms.items(), key=lambda kc: _grlex(kc[0]), reverse=True):
        mono = []
        if a:
            mono.append(names[0] if a == 1 else "%s^%d" % (names[0], a))
        if b:
            mono.append(names[1] if b == 1 else "%s^%d" % (names[1], b))
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if mono:
            body = "*".join(mono) if mag == 1 else "%s*%s" % (mag, "*".join(mono))
        else:
            body = str(mag)
        parts.append((sign, body))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += " %s %s" % (sign, body)
    return text


# ---------------------------------------------------------------------------
# integer-coefficient kernels used by exquo and gcd
# ---------------------------------------------------------------------------

def _primitive(terms):
    """Split a rational polynomial into ``content * primitive integer part``.

    The integer part has coprime coefficients and a positive graded-lex
    leading coefficient.
    """
    den = 1
    for c in terms.values():
        if type(c) is Fraction:
            d = c.denominator
            den = den * d // igcd(den, d)
    if den == 1:
        ints = terms
    else:
        ints = {k: int(c * den) for k, c in terms.items()}
    g = 0
    for c in ints.values():
        g = igcd(g, c)
        if g == 1:
            break
    lead = ints[max(ints, key=_grlex)]
    if lead < 0:
        g = -g
    if g != 1:
        ints = {k: c // g for k, c in ints.items()}
    return Fraction(g, den), ints


def _exact_div(f, h):
    """Quotient of integer polynomials ``f / h`` or ``None`` if inexact.

    Uses Kronecker substitution ``w -> X**S`` with ``S`` larger than every
    ``z`` degree involved, then checks the quotient's degree bounds so that
    the univariate identity lifts back to the bivariate one.
    """
    dzf = max(a for a, _ in f)
    dwf = max(b for _, b in f)
    dzh = max(a for a, _ in h)
    dwh = max(b for _, b in h)
    if dzh > dzf or dwh > dwf:
        return None
    S = dzf + 1
    size = dzf + dwf * S + 1
    F = [0] * size
    for (a, b), c in f.items():
        F[a + b * S] = c
    H = sorted(((a + b * S, c) for (a, b), c in h.items()), reverse=True)
    hd, hc = H[0]
    rest = H[1:]
    q = {}
    maxqz = dzf - dzh
    maxqw = dwf - dwh
    for i in range(size - 1, hd - 1, -1):
        c = F[i]
        if not c:
            continue
        t, r = divmod(c, hc)
        if r:
            return None
        qi = i - hd
        qb, qa = divmod(qi, S)
        if qa > maxqz or qb > maxqw:
            return None
        q[(qa, qb)] = t
        F[i] = 0
        for j, cj in rest:
            F[qi + j] -= t * cj
    if any(F[:hd]):
        return None
    return q


def _max_norm(f):
    return max(abs(c) for c in f.values())


def _content(f):
    g = 0
    for c in f.values():
        g = igcd(g, c)
    return g


def _sym_digits(value, x):
    """Balanced base-``x`` digits of an integer, least significant first."""
    digits = []
    half = x // 2
    while value:
        d = value % x
        if d > half:
            d -= x
        digits.append(d)
        value = (value - d) // x
    return digits


# univariate integer polynomials are dicts exponent -> int

def _uni_eval(f, x):
    return sum(c * x ** e for e, c in f.items())


def _uni_exact_div(f, h):
    df = max(f)
    dh = max(h)
    if dh > df:
        return None
    F = [0] * (df + 1)
    for e, c in f.items():
        F[e] = c
    H = sorted(h.items(), reverse=True)
    hc = H[0][1]
    rest = H[1:]
    q = {}
    for i in range(df, dh - 1, -1):
        c = F[i]
        if not c:
            continue
        t, r = divmod(c, hc)
        if r:
            return None
        q[i - dh] = t
        F[i] = 0
        for j, cj in rest:
            F[i - dh + j] -= t * cj
    if any(F[:dh]):
        return None
    return q


def _uni_primitive(f):
    g = _content(f)
    if f[max(f)] < 0:
        g = -g
    return {e: c // g for e, c in f.items()}


def _uni_gcd_int(f, g):
    """Full gcd in Z[x] of two nonzero integer polynomials (content included)."""
    cf, cg = _content(f), _content(g)
    c = igcd(cf, cg)
    f = {e: v // cf for e, v in f.items()}
    g = {e: v // cg for e, v in g.items()}
    if max(f) == 0 or max(g) == 0:
        return {0: c}
    h = _uni_heugcd(f, g)
    if h is None:
        h = _uni_euclid(f, g)
    return {e: v * c for e, v in h.items()}


def _uni_heugcd(f, g):
    bound = 2 * min(_max_norm(f), _max_norm(g)) + 29
    x = max(min(bound, 99 * isqrt(bound)), 2)
    for _ in range(6):
        a, b = _uni_eval(f, x), _uni_eval(g, x)
        if a and b:
            h = igcd(a, b)
            cand = {e: d for e, d in enumerate(_sym_digits(h, x)) if d}
            if cand:
                cand = _uni_primitive(cand)
                if _uni_exact_div(f, cand) is not None and _uni_exact_div(g, cand) is not None:
                    return cand
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return None


def _uni_euclid(f, g):
    """Primitive gcd over Q[x] by the Euclidean algorithm (fallback path)."""
    a = {e: Fraction(c) for e, c in f.items()}
    b = {e: Fraction(c) for e, c in g.items()}
    while b:
        db = max(b)
        lb = b[db]
        r = dict(a)
        while r and max(r) >= db:
            dr = max(r)
            t = r[dr] / lb
            for e, c in b.items():
                k = e + dr - db
                v = r.get(k, 0) - t * c
                if v:
                    r[k] = v
                else:
                    r.pop(k, None)
        a, b = b, r
    den = 1
    for c in a.values():
        den = den * c.denominator // igcd(den, c.denominator)
    return _uni_primitive({e: int(c * den) for e, c in a.items()})


def _heugcd(f, g):
    """Heuristic gcd of primitive integer bivariate polynomials.

    Evaluates ``w`` at a large integer, takes a univariate gcd, rebuilds the
    candidate from balanced digits and accepts it only if it divides both
    inputs.  Returns ``None`` after six unlucky evaluation points.
    """
    bound = 2 * min(_max_norm(f), _max_norm(g)) + 29
    x = max(min(bound, 99 * isqrt(bound)), 2)
    for _ in range(6):
        ff, gg = {}, {}
        for (a, b), c in f.items():
            ff[a] = ff.get(a, 0) + c * x ** b
        for (a, b), c in g.items():
            gg[a] = gg.get(a, 0) + c * x ** b
        ff = {e: c for e, c in ff.items() if c}
        gg = {e: c for e, c in gg.items() if c}
        if ff and gg:
            h = _uni_gcd_int(ff, gg)
            cand = {}
            for a, c in h.items():
                for b, d in enumerate(_sym_digits(c, x)):
                    if d:
                        cand[(a, b)] = d
            if cand:
                cand = _primitive(cand)[1]
                if _exact_div(f, cand) is not None and _exact_div(g, cand) is not None:
                    return cand
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return None


# -- recursive primitive PRS: the slow but unconditional fallback -----------

def _as_z_of_w(f):
    out = {}
    for (a, b), c in f.items():
        out.setdefault(a, {})[b] = c
    return out


def _from_z_of_w(F):
    return {(a, b): c for a, coeff in F.items() for b, c in coeff.items()}


def _w_mul(p, q):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _w_add(p, q):
    out = dict(p)
    for e, c in q.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _w_neg(p):
    return {e: -c for e, c in p.items()}


def _w_gcd(p, q):
    if not p:
        return q
    if not q:
        return p
    return _uni_gcd_int(p, q)


def _z_content(F):
    cont = {}
    for coeff in F.values():
        cont = _w_gcd(cont, coeff)
        if max(cont) == 0 and abs(cont[0]) == 1:
            return {0: 1}
    return cont


def _z_divide_content(F, cont):
    return {a: _uni_exact_div(coeff, cont) for a, coeff in F.items()}


def _z_prem(A, B):
    dB = max(B)
    lB = B[dB]
    r = dict(A)
    e = max(A) - dB + 1
    while r and max(r) >= dB:
        dr = max(r)
        lr = r[dr]
        shift = dr - dB
        new = {a: _w_mul(lB, c) for a, c in r.items()}
        for a, c in B.items():
            k = a + shift
            new[k] = _w_add(new.get(k, {}), _w_neg(_w_mul(lr, c)))
        r = {a: c for a, c in new.items() if c}
        e -= 1
    if e > 0:
        factor = {0: 1}
        for _ in range(e):
            factor = _w_mul(factor, lB)
        r = {a: _w_mul(factor, c) for a, c in r.items()}
    return r


def _prs_gcd(f, g):
    F, G = _as_z_of_w(f), _as_z_of_w(g)
    cf, cg = _z_content(F), _z_content(G)
    c = _w_gcd(cf, cg)
    F = _z_divide_content(F, cf)
    G = _z_divide_content(G, cg)
    if max(F) < max(G):
        F, G = G, F
    while G and max(G) > 0:
        R = _z_prem(F, G)
        F = G
        if not R:
            G = R
            break
        G = _z_divide_content(R, _z_content(R))
    if G:
        # a nonzero remainder of z-degree 0 means the primitive parts are coprime
        F = {0: {0: 1}}
    F = _z_divide_content(F, _z_content(F))
    out = _from_z_of_w({a: _w_mul(coeff, c) for a, coeff in F.items()})
    return _primitive(out)[1]


def poly_gcd(a, b, _heuristic=True):
    """Monic gcd of two :class:`ZWPoly` values (graded-lex leading coefficient 1).

    The gcd of zero and zero is zero.
    """
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if a.is_const() or b.is_const():
        return ZWPoly.const(1)
    # pull out the common monomial factor first
    mz = min(min(k[0] for k in a.terms), min(k[0] for k in b.terms))
    mw = min(min(k[1] for k in a.terms), min(k[1] for k in b.terms))
    f = _primitive(a.terms)[1]
    g = _primitive(b.terms)[1]
    fz, fw = min(k[0] for k in f), min(k[1] for k in f)
    gz, gw = min(k[0] for k in g), min(k[1] for k in g)
    f = {(x - fz, y - fw): c for (x, y), c in f.items()}
    g = {(x - gz, y - gw): c for (x, y), c in g.items()}
    if (0, 0) in f and len(f) == 1 or (0, 0) in g and len(g) == 1:
        h = {(0, 0): 1}
    elif f == g:
        h = f
    else:
        h = None
        if _exact_div(f, g) is not None if len(g) <= len(f) else False:
            h = g
        elif len(f) <= len(g) and _exact_div(g, f) is not None:
            h = f
        if h is None and _heuristic:
            h = _heugcd(f, g)
        if h is None:
            h = _prs_gcd(f, g)
    out = ZWPoly({(x + mz, y + mw): c for (x, y), c in h.items()}, True)
    return out.monic()


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------

_ONE = ZWPoly.const(1)
_ZERO = ZWPoly({}, True)


class FieldElem:
    """Reduced rational function ``num/den`` in Q(z, w)."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, _reduced=False):
        if not isinstance(num, ZWPoly):
            num = ZWPoly.const(num)
        if den is None:
            den = _ONE
        elif not isinstance(den, ZWPoly):
            den = ZWPoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = _ZERO, _ONE
        elif not _reduced:
            if not den.is_const():
                g = poly_gcd(num, den)
                if not g.is_one():
                    num = num.exquo(g)
                    den = den.exquo(g)
            lc = den.lead()[1]
            if lc != 1:
                inv = Fraction(1) / lc
                num = num.scale(inv)
                den = den.scale(inv)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        self = object.__new__(cls)
        self.num = num
        self.den = den
        self._hash = None
        return self

    @classmethod
    def from_poly(cls, p):
        return cls._raw(p, _ONE) if not p.is_zero() else cls._raw(_ZERO, _ONE)

    @classmethod
    def const(cls, c):
        return cls.from_poly(ZWPoly.const(c))

    @classmethod
    def z(cls):
        return cls.from_poly(ZWPoly.z())

    @classmethod
    def w(cls):
        return cls.from_poly(ZWPoly.w())

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def is_poly(self):
        return self.den.is_one()

    def is_const(self):
        return self.den.is_one() and self.num.is_const()

    def const_value(self):
        if not self.is_const():
            raise ValueError("not a constant: %s" % self)
        return self.num.const_value()

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.den.is_one() and self.num == other
        if isinstance(other, ZWPoly):
            return self.den.is_one() and self.num == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __neg__(self):
        return FieldElem._raw(-self.num, self.den)

    def __add__(self, other):
        if not isinstance(other, FieldElem):
            if isinstance(other, ZWPoly):
                other = FieldElem.from_poly(other)
            else:
                other = FieldElem.const(other)
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        a, b = self, other
        if a.den == b.den:
            num = a.num + b.num
            if a.den.is_one():
                return FieldElem.from_poly(num)
            return FieldElem(num, a.den)
        if a.den.is_one():
            return FieldElem._raw(a.num * b.den + b.num, b.den)
        if b.den.is_one():
            return FieldElem._raw(a.num + b.num * a.den, a.den)
        g = poly_gcd(a.den, b.den)
        if g.is_one():
            return FieldElem._raw(a.num * b.den + b.num * a.den, a.den * b.den)
        da = a.den.exquo(g)
        db = b.den.exquo(g)
        num = a.num * db + b.num * da
        if num.is_zero():
            return FieldElem._raw(_ZERO, _ONE)
        g2 = poly_gcd(num, g)
        den = da * b.den
        if not g2.is_one():
            num = num.exquo(g2)
            den = den.exquo(g2)
        return FieldElem._raw(num, den).__fix_lead()

    __radd__ = __add__

    def __fix_lead(self):
        lc = self.den.lead()[1]
        if lc == 1:
            return self
        inv = Fraction(1) / lc
        return FieldElem._raw(self.num.scale(inv), self.den.scale(inv))

    def __sub__(self, other):
        if not isinstance(other, FieldElem):
            if isinstance(other, ZWPoly):
                other = FieldElem.from_poly(other)
            else:
                other = FieldElem.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, FieldElem):
            if isinstance(other, ZWPoly):
                other = FieldElem.from_poly(other)
            else:
                return self.scale(other)
        a, b = self, other
        if a.num.is_zero() or b.num.is_zero():
            return FieldElem._raw(_ZERO, _ONE)
        if a.den.is_one() and b.den.is_one():
            return FieldElem._raw(a.num * b.num, _ONE)
        an, ad, bn, bd = a.num, a.den, b.num, b.den
        if not bd.is_one():
            g1 = poly_gcd(an, bd)
            if not g1.is_one():
                an = an.exquo(g1)
                bd = bd.exquo(g1)
        if not ad.is_one():
            g2 = poly_gcd(bn, ad)
            if not g2.is_one():
                bn = bn.exquo(g2)
                ad = ad.exquo(g2)
        return FieldElem._raw(an * bn, ad * bd).__fix_lead()

    __rmul__ = __mul__

    def scale(self, c):
        c = _norm(c)
        if c == 0:
            return FieldElem._raw(_ZERO, _ONE)
        if c == 1:
            return self
        return FieldElem._raw(self.num.scale(c), self.den)

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        num, den = self.den, self.num
        lc = den.lead()[1]
        if lc != 1:
            inv = Fraction(1) / lc
            num, den = num.scale(inv), den.scale(inv)
        return FieldElem._raw(num, den)

    def __truediv__(self, other):
        if not isinstance(other, FieldElem):
            if isinstance(other, ZWPoly):
                other = FieldElem.from_poly(other)
            else:
                if other == 0:
                    raise ZeroDivisionError("division by zero")
                return self.scale(Fraction(1) / Fraction(other))
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return FieldElem._raw(self.num ** e, self.den ** e)

    def dilate(self, n):
        """Adams-style substitution ``z -> z**n, w -> w**n`` (stays reduced)."""
        if n == 1:
            return self
        return FieldElem._raw(self.num.dilate(n), self.den.dilate(n))

    def swap(self):
        """Exchange ``z`` and ``w``."""
        return FieldElem(self.num.swap(), self.den.swap())

    def evaluate(self, z, w):
        d = self.den.evaluate(z, w)
        if d == 0:
            raise SpecializationError("denominator vanishes at (%s, %s)" % (z, w))
        return Fraction(self.num.evaluate(z, w)) / d

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data):
        return cls(ZWPoly.from_json(data["num"]), ZWPoly.from_json(data["den"]))

    def format(self, names=("z", "w")):
        num = format_zw(self.num, names)
        if self.den.is_one():
            return num
        return "(%s)/(%s)" % (num, format_zw(self.den, names))

    def __str__(self):
        return self.format()

    def __repr__(self):
        return "FieldElem(%s)" % self.format()


def field_arith(a, b, op):
    """Dispatch ``add``/``sub``/``mul``/``div`` on two :class:`FieldElem` values."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return a / b
    raise ValueError("unknown operation %r" % (op,))


# ---------------------------------------------------------------------------
# univariate polynomials in v
# ---------------------------------------------------------------------------

class UniPoly:
    """Dense univariate polynomial, coefficients listed from degree 0 upwards."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_norm(Fraction(c)) if type(c) is not int else c for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, e, c=1):
        return cls([0] * e + [c])

    @classmethod
    def v(cls):
        return cls([0, 1])

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return len(self.coeffs) - 1

    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, e):
        return self.coeffs[e] if 0 <= e < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return UniPoly([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        return self + (-other)

    def __rsub__(self, other):
        return UniPoly([other]) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        result = UniPoly([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, e):
        """Multiply by ``v**e``; negative ``e`` requires the low terms to vanish."""
        if e >= 0:
            return UniPoly([0] * e + list(self.coeffs))
        if any(self.coeffs[: -e]):
            raise NotPolynomialError("v^%d * (%s) is not a polynomial" % (e, self))
        return UniPoly(self.coeffs[-e:])

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = [Fraction(c) for c in self.coeffs]
        d = other.degree()
        lc = Fraction(other.lead())
        q = [Fraction(0)] * max(len(r) - d, 0)
        for i in range(len(r) - 1, d - 1, -1):
            c = r[i]
            if c:
                t = c / lc
                q[i - d] = t
                for j, oc in enumerate(other.coeffs):
                    r[i - d + j] -= t * oc
        return UniPoly(q), UniPoly(r[:d] if d > 0 else [])

    def monic(self):
        if self.is_zero():
            return self
        lc = Fraction(self.lead())
        return UniPoly([Fraction(c) / lc for c in self.coeffs])

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def __call__(self, x):
        total = 0
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def terms(self):
        """Nonzero ``(exponent, coefficient)`` pairs in increasing exponent order."""
        return [(e, c) for e, c in enumerate(self.coeffs) if c]

    def to_json(self):
        return [[e, str(c)] for e, c in self.terms()]

    @classmethod
    def from_json(cls, data):
        out = {}
        for e, c in data:
            out[int(e)] = Fraction(c)
        if not out:
            return cls()
        return cls([out.get(i, 0) for i in range(max(out) + 1)])

    def format(self, var="v"):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in reversed(self.terms()):
            mono = "" if e == 0 else (var if e == 1 else "%s^%d" % (var, e))
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else "%s*%s" % (mag, mono))
            parts.append(("-" if c < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += " %s %s" % (sign, body)
        return text

    def __str__(self):
        return self.format()

    def __repr__(self):
        return "UniPoly(%s)" % self.format()


class UniRat:
    """Reduced univariate rational function with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = UniPoly([1])
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = UniPoly(), UniPoly([1])
        else:
            g = num.gcd(den)
            if g.degree() > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
            lc = Fraction(den.lead())
            if lc != 1:
                num = num * (1 / lc)
                den = den * (1 / lc)
        self.num = num
        self.den = den

    def is_poly(self):
        return self.den.degree() == 0

    def __eq__(self, other):
        if isinstance(other, UniRat):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __mul__(self, other):
        return UniRat(self.num * other.num, self.den * other.den)

    def __repr__(self):
        return "UniRat((%s)/(%s))" % (self.num, self.den)


def _uni_power_table(x, n):
    table = [UniPoly([1])]
    for _ in range(n):
        table.append(table[-1] * x)
    return table


def _eval_uni(p, zv, wv):
    zt = _uni_power_table(zv, max(p.degree_z(), 0))
    wt = _uni_power_table(wv, max(p.degree_w(), 0))
    acc = {}
    for (a, b), c in p.terms.items():
        term = zt[a] * wt[b]
        for i, x in enumerate(term.coeffs):
            if x:
                acc[i] = acc.get(i, 0) + c * x
    if not acc:
        return UniPoly()
    return UniPoly([acc.get(i, 0) for i in range(max(acc) + 1)])


def substitute(f, z_val, w_val):
    """Specialize ``f(z, w)`` at univariate polynomials in ``v``.

    Returns a reduced :class:`UniRat`.  Raises :class:`SpecializationError`
    if the denominator vanishes identically after substitution, which means a
    pole was hit before the ``(z^2-1)(1-w^2)`` factors were cleared.
    """
    if not isinstance(z_val, UniPoly):
        z_val = UniPoly([z_val])
    if not isinstance(w_val, UniPoly):
        w_val = UniPoly([w_val])
    den = _eval_uni(f.den, z_val, w_val)
    if den.is_zero():
        raise SpecializationError("denominator %s vanishes after substitution" % f.den)
    num = _eval_uni(f.num, z_val, w_val)
    return UniRat(num, den)


def poly_assert(r):
    """Return ``r`` as a :class:`UniPoly`, raising if a denominator survives."""
    if not r.is_poly():
        raise NotPolynomialError("expected a polynomial, got (%s)/(%s)" % (r.num, r.den))
    return r.num * (1 / Fraction(r.den.lead()))


def substitute_monomial(f, zmap, wmap):
    """Substitute monomials for ``z`` and ``w``, landing in a new Q(u, v).

    ``zmap = (c, eu, ev)`` sends ``z`` to ``c * u**eu * v**ev`` (likewise
    ``wmap``); exponents may be negative.  The result is a :class:`FieldElem`
    whose first slot is ``u`` and second slot is ``v``.
    """
    def image(p):
        out = {}
        for (a, b), c in p.terms.items():
            coeff = c * zmap[0] ** a * wmap[0] ** b
            key = (a * zmap[1] + b * wmap[1], a * zmap[2] + b * wmap[2])
            out[key] = out.get(key, 0) + coeff
        out = {k: c for k, c in out.items() if c}
        if not out:
            return ZWPoly({}, True), 0, 0
        mu = min(k[0] for k in out)
        mv = min(k[1] for k in out)
        return ZWPoly({(k[0] - mu, k[1] - mv): c for k, c in out.items()}), mu, mv

    den, du, dv = image(f.den)
    if den.is_zero():
        raise SpecializationError("denominator %s vanishes after substitution" % f.den)
    num, nu, nv = image(f.num)
    if num.is_zero():
        return FieldElem(0)
    su, sv = nu - du, nv - dv
    num = num.shift(max(su, 0), max(sv, 0))
    den = den.shift(max(-su, 0), max(-sv, 0))
    return FieldElem(num, den)
