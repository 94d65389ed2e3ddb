"""Brute-force point counts over prime fields.

Matrices are flat row-major tuples of ints mod ``q``.  A class is described
by :class:`FqClassSpec`: blocks ``(poly, mult, jordan)`` where ``poly`` is a
monic irreducible polynomial over F_q given by its coefficients (constant
term first, leading 1 omitted; an int ``a`` is shorthand for ``x - a``),
``mult`` counts the root multiplicity and ``jordan`` partitions ``mult``.
"""

from collections import Counter
from fractions import Fraction
from itertools import product
from math import prod

from .errors import GenericityError, SizeGuardError, ValidationError
from .partitions import as_partition, down_set

MAX_N = 3
MAX_Q = 17
LOOP_LIMIT = 10 ** 9
SEARCH_LIMIT = 10 ** 6


def is_prime(q):
    return q >= 2 and all(q % d for d in range(2, int(q ** 0.5) + 1))


def _check_q(q):
    if not is_prime(q):
        raise ValidationError("q must be prime, got %r" % (q,))


def group_size(n, q):
    return prod(q ** n - q ** i for i in range(n))


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

def identity(n):
    return tuple(int(i == j) for i in range(n) for j in range(n))


def mat_mul(a, b, n, q):
    return tuple(sum(a[i * n + t] * b[t * n + j] for t in range(n)) % q
                 for i in range(n) for j in range(n))


def mat_add(a, b, q):
    return tuple((x + y) % q for x, y in zip(a, b))


def mat_scale(a, c, q):
    return tuple(x * c % q for x in a)


def rank(a, n, q):
    rows = [list(a[i * n:(i + 1) * n]) for i in range(n)]
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, n) if rows[i][col] % q), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][col], q - 2, q)
        rows[r] = [x * inv % q for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][col] % q:
                f = rows[i][col]
                rows[i] = [(x - f * y) % q for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def det(a, n, q):
    rows = [list(a[i * n:(i + 1) * n]) for i in range(n)]
    d = 1
    for col in range(n):
        piv = next((i for i in range(col, n) if rows[i][col] % q), None)
        if piv is None:
            return 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            d = -d
        d = d * rows[col][col] % q
        inv = pow(rows[col][col], q - 2, q)
        for i in range(col + 1, n):
            f = rows[i][col] * inv % q
            if f:
                rows[i] = [(x - f * y) % q for x, y in zip(rows[i], rows[col])]
    return d % q


def mat_inv(a, n, q):
    rows = [list(a[i * n:(i + 1) * n]) + [int(i == j) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if rows[i][col] % q), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = pow(rows[col][col], q - 2, q)
        rows[col] = [x * inv % q for x in rows[col]]
        for i in range(n):
            if i != col and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(x - f * y) % q for x, y in zip(rows[i], rows[col])]
    return tuple(rows[i][n + j] for i in range(n) for j in range(n))


def trace(a, n, q):
    return sum(a[i * n + i] for i in range(n)) % q


def all_matrices(n, q):
    return (m for m in product(range(q), repeat=n * n))


def gl_elements(n, q):
    guard(q ** (n * n), "GL_%d(F_%d) enumeration" % (n, q))
    return [m for m in all_matrices(n, q) if det(m, n, q)]


def guard(count, what):
    if count > LOOP_LIMIT:
        raise SizeGuardError("%s needs about %d steps, above the limit %d" % (what, count, LOOP_LIMIT))


# ---------------------------------------------------------------------------
# polynomials over F_q (coefficient lists, constant term first)
# ---------------------------------------------------------------------------

def _poly_of(p, q):
    """Monic coefficient list for a block polynomial."""
    if isinstance(p, int):
        return [(-p) % q, 1]
    return [c % q for c in p] + [1]


def _poly_mul(a, b, q):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % q
    return out


def _poly_eval_matrix(coeffs, m, n, q):
    acc = tuple(0 for _ in range(n * n))
    for c in reversed(coeffs):
        acc = mat_add(mat_mul(acc, m, n, q), mat_scale(identity(n), c, q), q)
    return acc


def _is_irreducible(coeffs, q):
    d = len(coeffs) - 1
    if d == 1:
        return True
    if d in (2, 3):
        return all(sum(c * pow(x, i, q) for i, c in enumerate(coeffs)) % q for x in range(q))
    raise ValidationError("only irreducible factors of degree <= 3 are supported")


def _companion(coeffs, q):
    d = len(coeffs) - 1
    m = [[0] * d for _ in range(d)]
    for i in range(1, d):
        m[i][i - 1] = 1
    for i in range(d):
        m[i][d - 1] = (-coeffs[i]) % q
    return m


class FqClassSpec:
    """Conjugacy class of GL_n(F_q) given by elementary-divisor data."""

    def __init__(self, blocks, q):
        _check_q(q)
        self.q = q
        items = []
        for poly, mult, jordan in blocks:
            coeffs = _poly_of(poly, q)
            if coeffs[0] == 0:
                raise ValidationError("eigenvalue 0 is not allowed in GL_n")
            if not _is_irreducible(coeffs, q):
                raise ValidationError("polynomial %r is reducible over F_%d" % (coeffs, q))
            jordan = as_partition(jordan)
            if sum(jordan) != int(mult):
                raise ValidationError("Jordan partition %r does not match multiplicity %r" % (jordan, mult))
            items.append((tuple(coeffs), int(mult), jordan))
        if len({c for c, _, _ in items}) != len(items):
            raise ValidationError("eigenvalues at a puncture must be distinct")
        self.blocks = tuple(items)
        self.n = sum((len(c) - 1) * m for c, m, _ in items)

    @classmethod
    def split(cls, eigen, q):
        """From ``[(eigenvalue, mult, jordan), ...]`` with eigenvalues in F_q."""
        return cls([(int(a) % q, m, j) for a, m, j in eigen], q)

    def charpoly(self):
        out = [1]
        for c, m, _ in self.blocks:
            for _ in range(m):
                out = _poly_mul(out, list(c), self.q)
        return tuple(out)

    def representative(self, jordans=None):
        """Block-diagonal generalized Jordan form."""
        q, n = self.q, self.n
        jordans = jordans or [j for _, _, j in self.blocks]
        m = [[0] * n for _ in range(n)]
        pos = 0
        for (c, _, _), jordan in zip(self.blocks, jordans):
            comp = _companion(list(c), q)
            d = len(comp)
            for size in jordan:
                for b in range(size):
                    base = pos + b * d
                    for i in range(d):
                        for j in range(d):
                            m[base + i][base + j] = comp[i][j]
                    if b + 1 < size:
                        for i in range(d):
                            m[base + i][base + d + i] = 1
                pos += size * d
        return tuple(x for row in m for x in row)

    def closure_jordans(self):
        """Jordan data of every class in the closure (dominance below)."""
        return [list(c) for c in product(*(down_set(j) for _, _, j in self.blocks))]

    def rank_profile(self, m):
        """Ranks of ``f(m)^e`` for every block polynomial ``f`` and ``e <= mult``."""
        n, q = self.n, self.q
        out = []
        for c, mult, _ in self.blocks:
            fm = _poly_eval_matrix(list(c), m, n, q)
            power = fm
            ranks = []
            for _ in range(mult):
                ranks.append(rank(power, n, q))
                power = mat_mul(power, fm, n, q)
            out.append(tuple(ranks))
        return tuple(out)

    def in_closure(self, m):
        """Closure membership via the characteristic polynomial and rank bounds."""
        if _charpoly_matrix(m, self.n, self.q) != self.charpoly():
            return False
        ref = self._ref_profile()
        got = self.rank_profile(m)
        return all(a <= b for ga, ra in zip(got, ref) for a, b in zip(ga, ra))

    def _ref_profile(self):
        if not hasattr(self, "_ref"):
            self._ref = self.rank_profile(self.representative())
        return self._ref

    def centralizer_order(self, jordans=None):
        """Order of the centralizer of the class with the given Jordan data."""
        jordans = jordans or [j for _, _, j in self.blocks]
        out = 1
        for (c, _, _), lam in zip(self.blocks, jordans):
            qd = self.q ** (len(c) - 1)
            # |C(J_lam)| over F_{q^d}: q^(sum lam'_i^2 - sum m_i^2) * prod |GL_{m_i}(q^d)|
            mult = Counter(lam)
            conj = [sum(1 for x in lam if x > j) for j in range(lam[0])] if lam else []
            out *= qd ** (sum(x * x for x in conj) - sum(v * v for v in mult.values()))
            for v in mult.values():
                out *= group_size(v, qd)
        return out

    def class_size(self, jordans=None):
        return group_size(self.n, self.q) // self.centralizer_order(jordans)


def _charpoly_matrix(m, n, q):
    """Characteristic polynomial (constant term first) via Faddeev-LeVerrier-free interpolation."""
    # evaluate det(xI - m) at n+1 points and interpolate; q > n keeps the points distinct
    if q <= n:
        raise ValidationError("q must exceed n for characteristic polynomial interpolation")
    xs = list(range(n + 1))
    ys = [det(tuple(((x if i == j else 0) - m[i * n + j]) % q for i in range(n) for j in range(n)), n, q)
          for x in xs]
    coeffs = [0] * (n + 1)
    for i, xi in enumerate(xs):
        basis = [1]
        denom = 1
        for j, xj in enumerate(xs):
            if j != i:
                basis = _poly_mul(basis, [(-xj) % q, 1], q)
                denom = denom * (xi - xj) % q
        f = ys[i] * pow(denom, q - 2, q) % q
        for t, b in enumerate(basis):
            coeffs[t] = (coeffs[t] + f * b) % q
    return tuple(coeffs)


def _generators(n, q):
    g = 2
    while q > 2 and any(pow(g, (q - 1) // p, q) == 1 for p in _prime_factors(q - 1)):
        g += 1
    gens = []
    d = list(identity(n))
    d[0] = g % q
    gens.append(tuple(d))
    if n > 1:
        e = list(identity(n))
        e[1] = 1
        gens.append(tuple(e))
        cyc = [0] * (n * n)
        for i in range(n):
            cyc[i * n + (i + 1) % n] = 1
        gens.append(tuple(cyc))
        sw = list(identity(n))
        sw[0], sw[1], sw[n], sw[n + 1] = 0, 1, 1, 0
        gens.append(tuple(sw))
    return gens


def _prime_factors(m):
    out, d = set(), 2
    while d * d <= m:
        while m % d == 0:
            out.add(d)
            m //= d
        d += 1
    if m > 1:
        out.add(m)
    return out


def _orbit(rep, n, q):
    gens = [(g, mat_inv(g, n, q)) for g in _generators(n, q)]
    seen = {rep}
    frontier = [rep]
    while frontier:
        nxt = []
        for m in frontier:
            for g, gi in gens:
                c = mat_mul(mat_mul(g, m, n, q), gi, n, q)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return seen


def _check_size(n, q):
    if n > MAX_N or q > MAX_Q:
        raise SizeGuardError("class enumeration is limited to n <= %d and q <= %d" % (MAX_N, MAX_Q))


def class_elements(spec, q=None, jordans=None):
    """All conjugates of the Jordan representative, deduplicated and sorted."""
    q = spec.q if q is None else q
    if q != spec.q:
        raise ValidationError("spec was built for q=%d" % spec.q)
    _check_size(spec.n, q)
    expected = spec.class_size(jordans)
    guard(expected * len(_generators(spec.n, q)), "class enumeration")
    out = _orbit(spec.representative(jordans), spec.n, q)
    assert len(out) == expected, (len(out), expected)
    return sorted(out)


def closure_elements(spec):
    out = []
    for js in spec.closure_jordans():
        out.extend(class_elements(spec, spec.q, js))
    return out


# ---------------------------------------------------------------------------
# genericity over F_q via discrete logs in F_{q^2} or F_{q^6}
# ---------------------------------------------------------------------------

class _ExtField:
    """F_{q^d} as F_q[t]/(f) with f irreducible of degree d; elements are tuples."""

    def __init__(self, q, d):
        self.q, self.d = q, d
        self.modulus = self._find_modulus()
        self.order = q ** d - 1
        self._log = None

    def _find_modulus(self):
        q, d = self.q, self.d
        if d == 1:
            return (0, 1)
        for tail in product(range(q), repeat=d):
            coeffs = list(tail) + [1]
            if coeffs[0] and _irreducible_any(coeffs, q):
                return tuple(coeffs)
        raise AssertionError("no irreducible polynomial found")

    def mul(self, a, b):
        q, d = self.q, self.d
        out = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = (out[i + j] + x * y) % q
        f = self.modulus
        for k in range(len(out) - 1, d - 1, -1):
            c = out[k]
            if c:
                for i in range(d + 1):
                    out[k - d + i] = (out[k - d + i] - c * f[i]) % q
        return tuple(out[:d])

    def one(self):
        return (1,) + (0,) * (self.d - 1)

    def from_int(self, a):
        return (a % self.q,) + (0,) * (self.d - 1)

    def logs(self):
        if self._log is None:
            for cand in product(range(self.q), repeat=self.d):
                if not any(cand):
                    continue
                table = {}
                x = self.one()
                for e in range(self.order):
                    if x in table:
                        break
                    table[x] = e
                    x = self.mul(x, cand)
                if len(table) == self.order:
                    self._log = table
                    break
        return self._log

    def roots(self, coeffs):
        """Roots of a polynomial with F_q coefficients inside this field."""
        out = []
        for x in self.logs():
            acc = (0,) * self.d
            for c in reversed(coeffs):
                acc = self.mul(acc, x)
                acc = tuple((u + v) % self.q for u, v in zip(acc, self.from_int(c)))
            if not any(acc):
                out.append(x)
        return out


def _irreducible_any(coeffs, q):
    d = len(coeffs) - 1
    if d <= 3:
        return all(sum(c * pow(x, i, q) for i, c in enumerate(coeffs)) % q for x in range(q))
    raise ValidationError("extension degree too large")


_fields = {}


def _field(q, d):
    key = (q, d)
    if key not in _fields:
        _fields[key] = _ExtField(q, d)
    return _fields[key]


def root_logs(specs):
    """Discrete logs (mod the field order) of the roots at each puncture, with multiplicity."""
    q = specs[0].q
    degs = {len(c) - 1 for s in specs for c, _, _ in s.blocks}
    d = 1
    for x in degs:
        d = d * x // _gcd(d, x)
    fld = _field(q, d)
    log = fld.logs()
    out = []
    for s in specs:
        roots = []
        for c, mult, _ in s.blocks:
            for r in fld.roots(list(c)):
                roots.append((log[r], mult))
        out.append(roots)
    return out, fld.order


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def fq_genericity_failure(specs):
    if not specs:
        raise ValidationError("need at least one puncture")
    n = specs[0].n
    if any(s.n != n for s in specs):
        raise ValidationError("all punctures must have the same rank")
    logs, order = root_logs(specs)
    total = sum(e * m for roots in logs for e, m in roots) % order
    if total:
        return "the product of all eigenvalues is not 1"
    for r in range(1, n):
        acc = {0}
        for roots in logs:
            sums = set()
            for counts in product(*(range(min(m, r) + 1) for _, m in roots)):
                if sum(counts) == r:
                    sums.add(sum(c * e for c, (e, _) in zip(counts, roots)) % order)
            acc = {(a + b) % order for a in acc for b in sums}
        if 0 in acc:
            return "a size-%d sub-multiset choice has product 1" % r
    return None


def fq_is_generic(specs):
    return fq_genericity_failure(specs) is None


# ---------------------------------------------------------------------------
# counting
# ---------------------------------------------------------------------------

def _convolve(dist, elements, n, q):
    out = Counter()
    for m, c in dist.items():
        for x in elements:
            out[mat_mul(m, x, n, q)] += c
    return out


def commutator_distribution(n, q):
    """``M -> #{(A, B) in GL_n^2 : A B A^-1 B^-1 = M}``."""
    if n == 1:
        return Counter({identity(1): (q - 1) ** 2})
    g = gl_elements(n, q)
    guard(len(g) ** 2, "commutator histogram")
    inv = {a: mat_inv(a, n, q) for a in g}
    out = Counter()
    for a in g:
        for b in g:
            out[mat_mul(mat_mul(a, b, n, q), mat_mul(inv[a], inv[b], n, q), n, q)] += 1
    return out


def count_solutions(g, specs):
    """Number of tuples ``(A_1, B_1, ..., X_k)`` satisfying the surface relation."""
    q = specs[0].q
    n = specs[0].n
    _check_size(n, q)
    first = specs[0]
    total = 0
    # X_1 is fixed to one representative per class in its closure, weighted by class size
    for js in first.closure_jordans():
        weight = first.class_size(js)
        dist = Counter({first.representative(js): 1})
        if g == 0:
            middle = specs[1:-1]
            for s in middle:
                elems = closure_elements(s)
                guard(len(dist) * len(elems), "convolution")
                dist = _convolve(dist, elems, n, q)
            if len(specs) == 1:
                count = dist.get(identity(n), 0)
            else:
                last = specs[-1]
                count = sum(c for m, c in dist.items() if last.in_closure(mat_inv(m, n, q)))
        else:
            for s in specs[1:]:
                elems = closure_elements(s)
                guard(len(dist) * len(elems), "convolution")
                dist = _convolve(dist, elems, n, q)
            comm = commutator_distribution(n, q)
            handles = Counter({identity(n): 1})
            for _ in range(g):
                guard(len(handles) * len(comm), "handle convolution")
                nxt = Counter()
                for m, c in handles.items():
                    for x, d in comm.items():
                        nxt[mat_mul(m, x, n, q)] += c * d
                handles = nxt
            count = sum(c * handles.get(mat_inv(m, n, q), 0) for m, c in dist.items())
        total += weight * count
    return total


def count_points(g, q, specs):
    """Points of the character variety over F_q: solutions divided by |PGL_n(F_q)|."""
    _check_q(q)
    if not specs:
        raise ValidationError("need at least one puncture")
    if any(s.q != q for s in specs):
        raise ValidationError("every class must be defined over F_%d" % q)
    why = fq_genericity_failure(specs)
    if why is not None:
        raise GenericityError("classes are not generic over F_%d: %s" % (q, why))
    n = specs[0].n
    sols = count_solutions(g, specs)
    pgl = group_size(n, q) // (q - 1)
    if sols % pgl:
        raise GenericityError("solution count %d is not divisible by |PGL_%d(F_%d)| = %d" % (sols, n, q, pgl))
    return sols // pgl


# ---------------------------------------------------------------------------
# cubic surfaces
# ---------------------------------------------------------------------------

def fricke_coefficients(trace_params, q=None):
    """Constants ``(A, B, C, D)`` of the cubic for traces ``(t1, t2, t3, t123)``."""
    a, b, c, d = trace_params
    A = -a * d - b * c
    B = -b * d - a * c
    C = -c * d - a * b
    D = a * b * c * d + a * a + b * b + c * c + d * d - 4
    if q is not None:
        return tuple(v % q for v in (A, B, C, D))
    return A, B, C, D


def fricke_count(q, trace_params, dets=None):
    """Points of the trace cubic over F_q.

    With ``dets`` omitted the matrices are in SL_2 and the equation is
    ``xyz + x^2 + y^2 + z^2 + Ax + By + Cz + D = 0``.  With determinants
    ``(d1, d2, d3)`` the general GL_2 relation ``T^2 - S T + F = 0`` is used,
    where ``T = tr(X1 X2 X3)``; it reduces to the former when all are 1.
    """
    _check_q(q)
    a, b, c, t = (v % q for v in trace_params)
    if dets is None:
        A, B, C, D = fricke_coefficients((a, b, c, t), q)
        count = 0
        for x in range(q):
            for y in range(q):
                base = (x * x + y * y + A * x + B * y + D) % q
                lin = (x * y + C) % q
                for z in range(q):
                    if (base + z * (lin + z)) % q == 0:
                        count += 1
        return count
    al, be, ga = (v % q for v in dets)
    count = 0
    for x in range(q):
        for y in range(q):
            for z in range(q):
                s = a * x + b * y + c * z - a * b * c
                f = (a * a * be * ga + b * b * al * ga + c * c * al * be + x * x * al + y * y * be
                     + z * z * ga - a * b * z * ga - b * c * x * al - a * c * y * be + x * y * z
                     - 4 * al * be * ga)
                if (t * t - s * t + f) % q == 0:
                    count += 1
    return count


def trace_params_for(specs):
    """``(tr X1, tr X2, tr X3, tr X1X2X3)`` and determinants for rank-2, four-puncture data."""
    if len(specs) != 4 or any(s.n != 2 for s in specs):
        raise ValidationError("trace coordinates need four rank-2 classes")
    q = specs[0].q
    traces, dets = [], []
    for s in specs:
        cp = s.charpoly()
        traces.append((-cp[1]) % q)
        dets.append(cp[0] % q)
    inv4 = pow(dets[3], q - 2, q)
    t123 = traces[3] * inv4 % q
    return (traces[0], traces[1], traces[2], t123), tuple(dets[:3])


# ---------------------------------------------------------------------------
# interpolation
# ---------------------------------------------------------------------------

def lagrange(points):
    """Exact interpolating polynomial through ``(x, y)`` pairs; coefficients low to high."""
    xs = [Fraction(x) for x, _ in points]
    coeffs = [Fraction(0)] * len(points)
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xs[j] * basis[t + 1]
            denom *= xs[i] - xj
        for t, bcoef in enumerate(basis):
            coeffs[t] += Fraction(yi) * bcoef / denom
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return [c.numerator if c.denominator == 1 else c for c in coeffs]


def eval_poly(coeffs, x):
    total = 0
    for c in reversed(coeffs):
        total = total * x + c
    return total


def find_generic_split(q, jordans_per_puncture, limit=1):
    """Search for generic eigenvalue choices in F_q^* for the given Jordan layout.

    ``jordans_per_puncture[j]`` lists Jordan partitions; returns up to
    ``limit`` lists of FqClassSpec.
    """
    _check_q(q)
    found = []
    choices = []
    for js in jordans_per_puncture:
        m = len(js)
        opts = [c for c in product(range(1, q), repeat=m) if len(set(c)) == m]
        choices.append(opts)
    for steps, combo in enumerate(product(*choices)):
        if steps > SEARCH_LIMIT:
            raise SizeGuardError("no generic data found within %d candidates" % SEARCH_LIMIT)
        specs = [FqClassSpec.split([(a, sum(j), j) for a, j in zip(vals, js)], q)
                 for vals, js in zip(combo, jordans_per_puncture)]
        if fq_is_generic(specs):
            found.append(specs)
            if len(found) >= limit:
                break
    return found


def regular_semisimple_rank2(q):
    """Every regular semisimple class of GL_2(F_q), split and non-split."""
    _check_q(q)
    out = []
    for a in range(1, q):
        for b in range(a + 1, q):
            out.append(FqClassSpec.split([(a, 1, (1,)), (b, 1, (1,))], q))
    for c0 in range(1, q):
        for c1 in range(q):
            if _is_irreducible([c0, c1, 1], q):
                out.append(FqClassSpec([([c0, c1], 1, (1,))], q))
    return out


def find_generic(candidates, limit=1):
    """Generic tuples drawn from per-puncture candidate class lists."""
    found = []
    for steps, combo in enumerate(product(*candidates)):
        if steps > SEARCH_LIMIT:
            raise SizeGuardError("no generic data found within %d candidates" % SEARCH_LIMIT)
        if fq_is_generic(list(combo)):
            found.append(list(combo))
            if len(found) >= limit:
                break
    return found
