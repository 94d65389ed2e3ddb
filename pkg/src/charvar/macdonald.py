"""Modified Macdonald polynomials in the Schur basis.

Two independent constructions:

* :func:`htilde` solves the characterizing linear conditions
  ``H[X(1-q)] in span{s_lam : lam >= mu}``,
  ``H[X(1-t)] in span{s_lam : lam >= mu'}``, ``<H, s_(n)> = 1``.
* :func:`htilde_oracle` sums ``q^inv t^maj x^sigma`` over fillings of the
  diagram (French convention) and converts the monomial expansion to Schur.

Results use ``q = z^2`` and ``t = w^2`` so they plug straight into the kernel.
Internally the solve runs with ``q`` in the ``z`` slot and ``t`` in the ``w``
slot, then dilates exponents by two.
"""

from fractions import Fraction
from itertools import permutations

from . import cache
from .arith import FieldElem, ZWPoly, format_zw
from .errors import CharvarError
from .partitions import partitions, transpose, up_set, z_lambda, cells
from .symfunc import SymFunc1, character, convert

_memo = {}
_memo_qt = {}


def _pleth_matrix(n, slot):
    """Schur-basis matrix of ``f -> f[X(1-x)]`` with ``x`` in the given slot.

    ``A[lam][kappa]`` is the coefficient of ``s_lam`` in ``s_kappa[X(1-x)]``.
    """
    keys = partitions(n)
    factor = {}
    for rho in keys:
        poly = ZWPoly.const(1)
        for part in rho:
            mono = ZWPoly.monomial(part, 0) if slot == 0 else ZWPoly.monomial(0, part)
            poly = poly * (ZWPoly.const(1) - mono)
        factor[rho] = poly.scale(Fraction(1, z_lambda(rho)))
    out = {}
    for lam in keys:
        row = {}
        for kap in keys:
            acc = ZWPoly()
            for rho in keys:
                c = character(lam, rho) * character(kap, rho)
                if c:
                    acc = acc + factor[rho].scale(c)
            if not acc.is_zero():
                row[kap] = FieldElem.from_poly(acc)
        out[lam] = row
    return out


def _rref(rows, ncols):
    """Reduced row echelon form over FieldElem; returns (rows, pivot columns)."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(ncols):
        piv = None
        best = None
        for i in range(r, len(rows)):
            e = rows[i][col]
            if not e.is_zero():
                # prefer the simplest pivot to limit expression swell
                size = len(e.num) + len(e.den)
                if best is None or size < best:
                    piv, best = i, size
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [x * inv if not x.is_zero() else x for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][col].is_zero():
                f = rows[i][col]
                rows[i] = [x - f * y if not y.is_zero() else x for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _nullspace(rows, ncols):
    rref, pivots = _rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    zero = FieldElem(0)
    one = FieldElem(1)
    for f in free:
        vec = [zero] * ncols
        vec[f] = one
        for row, p in zip(rref, pivots):
            vec[p] = -row[f]
        basis.append(vec)
    return basis


def _solve_qt(mu):
    """Schur coefficients of H_mu with ``q``, ``t`` in the ``z``, ``w`` slots."""
    n = sum(mu)
    keys = partitions(n)
    idx = {k: i for i, k in enumerate(keys)}
    mut = transpose(mu)
    sides = [(mu, 0), (mut, 1)]
    # solve the side with the larger complement first: fewer survivors
    sides.sort(key=lambda s: len(up_set(s[0])))
    (first, fslot), (second, sslot) = sides
    zero = FieldElem(0)

    def equations(part, slot):
        mat = _pleth_matrix(n, slot)
        allowed = set(up_set(part))
        return [[mat[lam].get(kap, zero) for kap in keys] for lam in keys if lam not in allowed]

    basis = _nullspace(equations(first, fslot), len(keys))
    r = len(basis)
    # second stage: unknowns are the coordinates in `basis`
    rows = []
    for eq in equations(second, sslot):
        row = []
        for b in basis:
            acc = zero
            for x, y in zip(eq, b):
                if not x.is_zero() and not y.is_zero():
                    acc = acc + x * y
            row.append(acc)
        rows.append(row + [zero])
    top = idx[(n,)]
    rows.append([b[top] for b in basis] + [FieldElem(1)])
    rref, pivots = _rref(rows, r + 1)
    if len(pivots) != r or r in pivots:
        raise CharvarError("Macdonald conditions for %r do not determine a unique solution" % (mu,))
    alpha = [None] * r
    for row, p in zip(rref, pivots):
        alpha[p] = row[r]
    out = {}
    for kap in keys:
        acc = zero
        for a, b in zip(alpha, basis):
            if not b[idx[kap]].is_zero():
                acc = acc + a * b[idx[kap]]
        if not acc.is_zero():
            if not acc.is_poly():
                raise CharvarError("non-polynomial Macdonald coefficient for %r" % (mu,))
            out[kap] = acc
    return out


def _to_symfunc(coeffs_qt, n):
    return SymFunc1("s", {k: c.dilate(2) for k, c in coeffs_qt.items()}, max(n, 8))


def _key(mu):
    return ",".join(str(x) for x in mu) or "0"


def htilde_qt(mu):
    """Schur coefficients of ``H_mu`` as FieldElems in ``(q, t)`` slots."""
    mu = tuple(mu)
    got = _memo_qt.get(mu)
    if got is not None:
        return got
    if not mu:
        got = {(): FieldElem(1)}
    else:
        stored = cache.load("macdonald", _key(mu))
        if stored is not None:
            got = {tuple(lam): FieldElem.from_json(c) for lam, c in stored}
        else:
            got = _solve_qt(mu)
            _store(mu, got)
    _memo_qt[mu] = got
    return got


def _store(mu, got):
    return cache.store("macdonald", _key(mu), [[list(lam), got[lam].to_json()] for lam in sorted(got, reverse=True)])


def persist(mu):
    """Make sure the table for ``mu`` is on disk, even when it is already memoized."""
    mu = tuple(mu)
    return _store(mu, htilde_qt(mu)) if mu else False


def htilde(mu):
    """Modified Macdonald polynomial ``H_mu[X; z^2, w^2]`` in the Schur basis."""
    mu = tuple(mu)
    got = _memo.get(mu)
    if got is None:
        got = _to_symfunc(htilde_qt(mu), sum(mu))
        _memo[mu] = got
    return got


def htilde_p(mu):
    """Power-sum expansion of :func:`htilde` as a dict (memoized)."""
    key = ("p", tuple(mu))
    got = _memo.get(key)
    if got is None:
        got = convert(htilde(mu), "p").coeffs
        _memo[key] = got
    return got


# ---------------------------------------------------------------------------
# fillings oracle
# ---------------------------------------------------------------------------

def _filling_stats(mu, cell_list, values):
    """``(inv, maj)`` of a filling in French convention.

    ``cell_list`` holds ``(row, col)`` with row 1 the longest (bottom) row.
    """
    fill = dict(zip(cell_list, values))
    mut = transpose(mu)
    maj = 0
    arm_total = 0
    for (i, j), v in fill.items():
        if i > 1 and v > fill[(i - 1, j)]:
            leg = mut[j - 1] - i
            arm = mu[i - 1] - j
            maj += leg + 1
            arm_total += arm
    # reading order: top row first, left to right
    order = sorted(fill, key=lambda c: (-c[0], c[1]))
    pos = {c: t for t, c in enumerate(order)}
    inv = 0
    for (i, j) in fill:
        for (i2, j2) in fill:
            attack = (i2 == i and j2 != j) or (i2 == i - 1 and j > j2)
            if attack and pos[(i, j)] < pos[(i2, j2)] and fill[(i, j)] > fill[(i2, j2)]:
                inv += 1
    return inv - arm_total, maj


def htilde_oracle_qt(mu):
    """Monomial coefficients (dominant contents) as ZWPolys in ``(q, t)`` slots."""
    mu = tuple(mu)
    n = sum(mu)
    cell_list = [(i, j) for (i, j) in cells(mu)]
    out = {}
    for nu in partitions(n):
        word = []
        for letter, count in enumerate(nu, start=1):
            word.extend([letter] * count)
        acc = {}
        for values in set(permutations(word)):
            inv, maj = _filling_stats(mu, cell_list, values)
            acc[(inv, maj)] = acc.get((inv, maj), 0) + 1
        out[nu] = ZWPoly(acc)
    return out


def htilde_oracle(mu):
    """Fillings-formula construction of ``H_mu[X; z^2, w^2]`` in the Schur basis."""
    mu = tuple(mu)
    n = sum(mu)
    m = htilde_oracle_qt(mu)
    f = SymFunc1("m", {nu: FieldElem.from_poly(c.dilate(2)) for nu, c in m.items()}, max(n, 8))
    return convert(f, "s")


def format_qt(c):
    """Render a coefficient in ``z^2, w^2`` as a polynomial in ``q, t``."""
    if not isinstance(c, FieldElem):
        return str(c)

    def half(p):
        terms = {}
        for (a, b), v in p.terms.items():
            if a % 2 or b % 2:
                raise CharvarError("coefficient is not a function of q and t")
            terms[(a // 2, b // 2)] = v
        return format_zw(ZWPoly(terms), ("q", "t"))

    if c.den.is_one():
        return half(c.num)
    return "(%s)/(%s)" % (half(c.num), half(c.den))
