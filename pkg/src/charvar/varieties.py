"""Character variety data, genericity, dimensions and the headline polynomials.

Eigenvalues are formal: an :class:`EigenvalueSpec` is a root of unity
``exp(2 pi i torsion)`` times a monomial in independent free symbols, so
every genericity test is exact integer arithmetic.
"""

from fractions import Fraction
from itertools import product

from .arith import FieldElem, UniPoly, UniRat, ZWPoly, substitute, poly_assert, substitute_monomial
from .errors import GenericityError, NotPolynomialError, ValidationError
from .kernel import hlv_kernel, pair_kernel
from .partitions import (as_partition, transpose, partitions, eta_to_types, transpose_type,
                         r_of_type, strata_below, column_slots)
from .pleth import MultiSymFunc
from .symfunc import kostka, twisted_schur_p, to_p


class EigenvalueSpec:
    """``exp(2 pi i torsion) * prod_s x_s^free[s]``; torsion is kept in [0, 1)."""

    __slots__ = ("torsion", "free")

    def __init__(self, torsion=0, free=()):
        t = Fraction(torsion)
        self.torsion = t - (t.numerator // t.denominator)
        free = tuple(int(x) for x in free)
        while free and free[-1] == 0:
            free = free[:-1]
        self.free = free

    def __mul__(self, other):
        n = max(len(self.free), len(other.free))
        a = self.free + (0,) * (n - len(self.free))
        b = other.free + (0,) * (n - len(other.free))
        return EigenvalueSpec(self.torsion + other.torsion, tuple(x + y for x, y in zip(a, b)))

    def __pow__(self, e):
        return EigenvalueSpec(self.torsion * e, tuple(e * x for x in self.free))

    def is_one(self):
        return self.torsion == 0 and not self.free

    def key(self):
        return (self.torsion, self.free)

    def __eq__(self, other):
        return isinstance(other, EigenvalueSpec) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def to_json(self):
        return {"torsion": str(self.torsion), "free": list(self.free)}

    def __repr__(self):
        return "EigenvalueSpec(%s, %s)" % (self.torsion, list(self.free))


ONE = EigenvalueSpec()


class PunctureData:
    """Eigenvalues with multiplicities and Jordan partitions at one puncture."""

    __slots__ = ("eigenvalues",)

    def __init__(self, eigenvalues):
        items = []
        for value, mult, jordan in eigenvalues:
            jordan = as_partition(jordan)
            mult = int(mult)
            if mult <= 0 or sum(jordan) != mult:
                raise ValidationError("Jordan partition %r does not match multiplicity %d" % (jordan, mult))
            items.append((value, mult, jordan))
        if not items:
            raise ValidationError("a puncture needs at least one eigenvalue")
        values = [v for v, _, _ in items if v is not None]
        if len(set(values)) != len(values):
            raise ValidationError("eigenvalues at a puncture must be pairwise distinct")
        self.eigenvalues = tuple(items)

    @property
    def rank(self):
        return sum(m for _, m, _ in self.eigenvalues)

    @property
    def jordan(self):
        return tuple(j for _, _, j in self.eigenvalues)

    def with_jordan(self, jordans):
        return PunctureData([(v, m, j) for (v, m, _), j in zip(self.eigenvalues, jordans)])


class SurfaceData:
    __slots__ = ("genus", "punctures")

    def __init__(self, genus, punctures):
        genus = int(genus)
        if genus < 0:
            raise ValidationError("genus must be nonnegative")
        punctures = tuple(punctures)
        if not punctures:
            raise ValidationError("at least one puncture is required")
        ranks = {p.rank for p in punctures}
        if len(ranks) != 1:
            raise ValidationError("all punctures must have the same rank, got %s" % sorted(ranks))
        self.genus = genus
        self.punctures = punctures

    @property
    def rank(self):
        return self.punctures[0].rank

    @property
    def k(self):
        return len(self.punctures)

    @property
    def jordan(self):
        return tuple(p.jordan for p in self.punctures)

    def with_jordan(self, jordans):
        return SurfaceData(self.genus, [p.with_jordan(j) for p, j in zip(self.punctures, jordans)])


def auto_surface(genus, jordans):
    """Surface data with freshly generated generic eigenvalues.

    ``jordans[j]`` lists the Jordan partitions of puncture ``j``.  Every
    eigenvalue but the last gets its own free symbol (scaled by the last
    multiplicity); the last one absorbs the inverse product and carries the
    torsion, which makes the data generic by construction.
    """
    slots = [(j, i, sum(as_partition(p))) for j, ps in enumerate(jordans) for i, p in enumerate(ps)]
    if not slots:
        raise ValidationError("no eigenvalues given")
    last_mult = slots[-1][2]
    dim = len(slots) - 1
    values = {}
    for idx, (j, i, m) in enumerate(slots[:-1]):
        free = [0] * dim
        free[idx] = last_mult
        values[(j, i)] = EigenvalueSpec(0, free)
    free = [-m for (_, _, m) in slots[:-1]]
    j, i, _ = slots[-1]
    values[(j, i)] = EigenvalueSpec(Fraction(1, last_mult), free)
    punctures = []
    for j, ps in enumerate(jordans):
        punctures.append(PunctureData([(values[(j, i)], sum(as_partition(p)), p) for i, p in enumerate(ps)]))
    return SurfaceData(genus, punctures)


def _submultiset_products(p, r):
    """Products of all size-``r`` sub-multisets of one puncture's eigenvalues."""
    out = set()
    ranges = [range(min(m, r) + 1) for _, m, _ in p.eigenvalues]
    for counts in product(*ranges):
        if sum(counts) != r:
            continue
        acc = ONE
        for c, (v, _, _) in zip(counts, p.eigenvalues):
            if c:
                acc = acc * v ** c
        out.add(acc)
    return out


def genericity_failure(s):
    """``None`` if generic, else a short reason."""
    total = ONE
    for p in s.punctures:
        for v, m, _ in p.eigenvalues:
            if v is None:
                return "eigenvalues missing"
            total = total * v ** m
    if not total.is_one():
        return "the product of all eigenvalues is not 1"
    n = s.rank
    for r in range(1, n):
        acc = {ONE}
        for p in s.punctures:
            prods = _submultiset_products(p, r)
            acc = {a * b for a in acc for b in prods}
        if ONE in acc:
            return "a size-%d sub-multiset choice has product 1" % r
    return None


def is_generic(s):
    return genericity_failure(s) is None


def require_generic(s):
    why = genericity_failure(s)
    if why is not None:
        raise GenericityError("eigenvalue data is not generic: " + why)


def dim_class(p):
    n = p.rank
    return n * n - sum(c * c for _, _, mu in p.eigenvalues for c in transpose(mu))


def _dim_formula(genus, punctures):
    n = punctures[0].rank
    return n * n * (2 * genus - 2) + 2 + sum(dim_class(p) for p in punctures)


def dim_charvar(s):
    require_generic(s)
    return _dim_formula(s.genus, s.punctures)


def _probe(s, single):
    """Product over punctures/eigenvalues of ``single(jordan)`` p-dicts, alphabet per puncture."""
    dicts = []
    for p in s.punctures:
        acc = {(): 1}
        for _, _, mu in p.eigenvalues:
            nxt = {}
            for lam, c in acc.items():
                for nu, d in single(mu).items():
                    key = tuple(sorted(lam + nu, reverse=True))
                    nxt[key] = nxt.get(key, 0) + c * d
            acc = {k: v for k, v in nxt.items() if v}
        dicts.append(acc)
    return MultiSymFunc.from_p_dicts(dicts)


def s_mu_prime(s):
    """``prod_j prod_i s_{mu^{j,i}'}[X_j]`` in the power-sum multi-basis."""
    return _probe(s, lambda mu: to_p("s", transpose(mu)))


def h_mu_prime(s):
    return _probe(s, lambda mu: to_p("h", transpose(mu)))


def _v_shifted(pairing, d):
    """``v^d * pairing(-1, v)`` as a polynomial."""
    r = substitute(pairing, -1, UniPoly.v())
    if d >= 0:
        r = UniRat(r.num.shift(d), r.den)
    else:
        r = UniRat(r.num, r.den.shift(-d))
    return poly_assert(r)


def probe_polynomial(s, probe, d=None):
    """``v^d <probe, kernel(-1, v)>`` with ``d`` defaulting to the dimension."""
    if d is None:
        d = dim_charvar(s)
    kr = hlv_kernel(s.rank, s.genus, s.k)
    return _v_shifted(pair_kernel(kr, probe), d)


def poincare_ih(s):
    require_generic(s)
    return probe_polynomial(s, s_mu_prime(s))


def poincare_ss(genus, nus):
    """Poincare polynomial for semisimple classes with multiplicities ``nus[j]``."""
    jordans = [[(1,) * m for m in as_partition(nu)] for nu in nus]
    s = auto_surface(genus, jordans)
    require_generic(s)
    probe = MultiSymFunc.from_p_dicts([to_p("h", as_partition(nu)) for nu in nus])
    return probe_polynomial(s, probe)


def multiplicity_dim(mu, rho):
    """``prod_{j,i} <h_{mu^{j,i}'}, s_{rho^{j,i}'}>`` for nested Jordan data."""
    if len(mu) != len(rho):
        raise ValidationError("puncture count mismatch")
    out = 1
    for mj, rj in zip(mu, rho):
        if len(mj) != len(rj):
            raise ValidationError("eigenvalue count mismatch")
        for a, b in zip(mj, rj):
            if sum(a) != sum(b):
                raise ValidationError("partition sizes differ: %r vs %r" % (a, b))
            out *= kostka(transpose(tuple(a)), transpose(tuple(b)))
    return out


def strata(s):
    """Jordan data ``rho`` componentwise dominated by that of ``s``."""
    flat = [mu for p in s.punctures for _, _, mu in p.eigenvalues]
    shape = [len(p.eigenvalues) for p in s.punctures]
    out = []
    for choice in strata_below(tuple(flat)):
        nested, pos = [], 0
        for c in shape:
            nested.append(tuple(choice[pos:pos + c]))
            pos += c
        out.append(tuple(nested))
    return out


def resolution_identity_report(s):
    """Both sides of the base-change identity and their difference."""
    require_generic(s)
    d = dim_charvar(s)
    lhs = probe_polynomial(s, h_mu_prime(s), d)
    rhs = UniPoly()
    terms = []
    for rho in strata(s):
        m = multiplicity_dim(s.jordan, rho)
        if not m:
            continue
        sr = s.with_jordan(rho)
        dr = _dim_formula(sr.genus, sr.punctures)
        try:
            pr = probe_polynomial(sr, s_mu_prime(sr), dr)
        except NotPolynomialError:
            return {"ok": False, "lhs": lhs, "rhs": None, "error": "stratum %r is not polynomial" % (rho,)}
        rhs = rhs + pr.shift(d - dr) * m
        terms.append({"rho": rho, "mult": m, "dim": dr, "poincare": pr})
    return {"ok": lhs == rhs, "lhs": lhs, "rhs": rhs, "diff": lhs - rhs, "terms": terms}


def resolution_identity_check(s):
    return resolution_identity_report(s)["ok"]


def _types_for(s, eta):
    if len(eta) != s.k:
        raise ValidationError("eta needs one entry per puncture")
    types = []
    for p, ej in zip(s.punctures, eta):
        if len(ej) != len(p.eigenvalues):
            raise ValidationError("eta needs one entry per eigenvalue")
        types.append([eta_to_types(mu, e) for (_, _, mu), e in zip(p.eigenvalues, ej)])
    return types


def htilde_eta(s, eta):
    """``prod_{j,i} s_{omega'}[X_j]`` for the types attached to ``eta``."""
    types = _types_for(s, eta)
    dicts = []
    for tj in types:
        acc = {(): 1}
        for t in tj:
            nxt = {}
            for lam, c in acc.items():
                for nu, d in twisted_schur_p(transpose_type(t)).items():
                    key = tuple(sorted(lam + nu, reverse=True))
                    nxt[key] = nxt.get(key, 0) + c * d
            acc = {k: v for k, v in nxt.items() if v}
        dicts.append(acc)
    r = sum(r_of_type(t) for tj in types for t in tj)
    return MultiSymFunc.from_p_dicts(dicts), r


def twisted_poincare(s, eta):
    require_generic(s)
    probe, r = htilde_eta(s, eta)
    out = probe_polynomial(s, probe)
    return out * (-1) if r % 2 else out


def trivial_eta_for(s):
    return [[[(1,) * m for _, m in column_slots(mu)] for _, _, mu in p.eigenvalues] for p in s.punctures]


def mixed_hodge_conjectural(s):
    """Conjectural mixed-Hodge polynomial as a ZWPoly in the slots ``(q, v)``."""
    require_generic(s)
    d = dim_charvar(s)
    kr = hlv_kernel(s.rank, s.genus, s.k)
    pairing = pair_kernel(kr, s_mu_prime(s))
    if pairing.is_zero():
        return ZWPoly()
    # u = sqrt(q): z -> -1/u, w -> v u, then multiply by (v u)^d
    f = substitute_monomial(pairing, (-1, -1, 0), (1, 1, 1))
    f = FieldElem(f.num.shift(d, d), f.den)
    if not f.den.is_one():
        raise NotPolynomialError("mixed-Hodge specialization kept a denominator: %s" % f)
    terms = {}
    for (eu, ev), c in f.num.terms.items():
        if eu % 2:
            raise NotPolynomialError("odd power of sqrt(q) survived: u^%d v^%d" % (eu, ev))
        terms[(eu // 2, ev)] = c
    return ZWPoly(terms)


def mixed_hodge_at_q1(h):
    acc = {}
    for (a, b), c in h.terms.items():
        acc[b] = acc.get(b, 0) + c
    return UniPoly([acc.get(i, 0) for i in range(max(acc, default=-1) + 1)])


def mixed_hodge_at_v(h, v):
    acc = {}
    for (a, b), c in h.terms.items():
        acc[a] = acc.get(a, 0) + c * v ** b
    return UniPoly([acc.get(i, 0) for i in range(max(acc, default=-1) + 1)])


def e_polynomial(s):
    """E-polynomial in ``q``: the mixed-Hodge polynomial at ``v = -1``."""
    return mixed_hodge_at_v(mixed_hodge_conjectural(s), -1)


def jordan_data(n):
    """All Jordan data of rank ``n`` at one puncture, up to eigenvalue order."""
    out = []

    def rec(remaining, max_key, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for m in range(remaining, 0, -1):
            for mu in partitions(m):
                key = (m, mu)
                if max_key is not None and key > max_key:
                    continue
                rec(remaining - m, key, acc + [mu])

    rec(n, None, [])
    return out


# ---------------------------------------------------------------------------
# JSON input
# ---------------------------------------------------------------------------

def _parse_eigen(obj):
    try:
        torsion = Fraction(str(obj.get("torsion", "0")))
    except (ValueError, ZeroDivisionError):
        raise ValidationError("bad torsion %r" % (obj.get("torsion"),))
    free = obj.get("free", [])
    if not isinstance(free, list) or not all(isinstance(x, int) for x in free):
        raise ValidationError("free exponents must be a list of integers")
    if "jordan" in obj:
        jordan = as_partition(obj["jordan"])
    elif "mult" in obj:
        jordan = (1,) * int(obj["mult"])
    else:
        raise ValidationError("eigenvalue needs a jordan partition or a mult")
    mult = int(obj.get("mult", sum(jordan)))
    return EigenvalueSpec(torsion, free), mult, jordan


def surface_from_json(genus, punctures, rank=None):
    """Build SurfaceData from the CLI/JSON puncture list.

    A puncture is either ``{"eigenvalues": [...]}`` or ``{"auto": true,
    "jordan": [[...], ...]}``; auto punctures default to regular semisimple
    of the given rank.  Auto and explicit punctures cannot be mixed.
    """
    if not isinstance(punctures, list) or not punctures:
        raise ValidationError("punctures must be a nonempty list")
    autos = [isinstance(p, dict) and bool(p.get("auto")) for p in punctures]
    if any(autos) and not all(autos):
        raise ValidationError("either every puncture is auto or none is")
    if all(autos):
        jordans = []
        for p in punctures:
            if "jordan" in p:
                js = [as_partition(x) for x in p["jordan"]]
            else:
                if rank is None:
                    raise ValidationError("auto punctures without jordan data need --rank")
                js = [(1,)] * int(rank)
            jordans.append(js)
        s = auto_surface(genus, jordans)
    else:
        pds = []
        for p in punctures:
            if not isinstance(p, dict) or not isinstance(p.get("eigenvalues"), list):
                raise ValidationError("each puncture needs an eigenvalues list")
            pds.append(PunctureData([_parse_eigen(e) for e in p["eigenvalues"]]))
        s = SurfaceData(genus, pds)
    if rank is not None and s.rank != int(rank):
        raise ValidationError("puncture data has rank %d but --rank is %d" % (s.rank, int(rank)))
    return s


def surface_to_json(s):
    return {"genus": s.genus, "punctures": [
        {"eigenvalues": [dict(v.to_json(), mult=m, jordan=list(mu)) for v, m, mu in p.eigenvalues]}
        for p in s.punctures]}


__all__ = [
    "EigenvalueSpec", "PunctureData", "SurfaceData", "auto_surface", "is_generic", "genericity_failure",
    "dim_class", "dim_charvar", "s_mu_prime", "h_mu_prime", "poincare_ih", "poincare_ss",
    "multiplicity_dim", "resolution_identity_check", "resolution_identity_report", "twisted_poincare",
    "htilde_eta", "mixed_hodge_conjectural", "e_polynomial", "surface_from_json", "jordan_data",
]
