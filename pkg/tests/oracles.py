"""Independent brute-force oracles shared by the test modules."""

from fractions import Fraction
from itertools import permutations, product
from math import factorial

import sympy

from charvar.partitions import column_slots, partitions, transpose


def cycle_type(perm):
    seen = set()
    out = []
    for i in range(len(perm)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        out.append(length)
    return tuple(sorted(out, reverse=True))


def perm_sign(perm):
    return (-1) ** (len(perm) - len(cycle_type(perm)))


def compose(a, b):
    """``(a o b)(i) = a[b[i]]``."""
    return tuple(a[b[i]] for i in range(len(a)))


def schur_poly(lam, nvars):
    """Bialternant formula in ``nvars`` sympy symbols."""
    xs = sympy.symbols("x0:%d" % nvars)
    lam = list(lam) + [0] * (nvars - len(lam))
    num = sympy.Matrix(nvars, nvars, lambda i, j: xs[j] ** (lam[i] + nvars - 1 - i))
    den = sympy.Matrix(nvars, nvars, lambda i, j: xs[j] ** (nvars - 1 - i))
    return xs, sympy.cancel(num.det() / den.det())


def power_sum_poly(lam, xs):
    out = sympy.Integer(1)
    for part in lam:
        out *= sum(x ** part for x in xs)
    return out


def character_by_schur(lam, rho):
    """``chi^lam(rho)`` as the coefficient extraction ``<p_rho, s_lam>`` in enough variables."""
    n = sum(lam)
    xs, s = schur_poly(lam, n)
    # chi^lam(rho) = coefficient of x^(lam + delta) in p_rho * a_delta
    delta = [n - 1 - i for i in range(n)]
    vand = sympy.Matrix(n, n, lambda i, j: xs[j] ** delta[i]).det()
    expr = sympy.Poly(sympy.expand(power_sum_poly(rho, xs) * vand), *xs)
    target = tuple(list(lam) + [0] * (n - len(lam)))
    mono = tuple(a + b for a, b in zip(target, delta))
    return expr.coeff_monomial(mono)


def weyl_block_data(mu):
    """Young subgroup of ``transpose(mu)`` and the block permutations generating its normalizer quotient.

    Columns of equal length form slots; the relative Weyl group permutes
    whole blocks of equal size within each slot.
    """
    blocks = []
    pos = 0
    slots = []
    for a, m in column_slots(mu):
        slot = []
        for _ in range(m):
            slot.append(list(range(pos, pos + a)))
            pos += a
        slots.append(slot)
        blocks.extend(slot)
    return slots, blocks, pos


def young_subgroup(blocks, n):
    out = []
    for parts in product(*(permutations(b) for b in blocks)):
        perm = list(range(n))
        for b, img in zip(blocks, parts):
            for src, dst in zip(b, img):
                perm[src] = dst
        out.append(tuple(perm))
    return out


def block_permutations(slots, n):
    """Permutations moving whole blocks within each slot, indexed by per-slot block orders."""
    out = []
    for orders in product(*(permutations(range(len(s))) for s in slots)):
        perm = list(range(n))
        for slot, order in zip(slots, orders):
            for src_idx, dst_idx in enumerate(order):
                for a, b in zip(slot[src_idx], slot[dst_idx]):
                    perm[a] = b
        out.append(tuple(perm))
    return out


def invariant_multiplicity(mu, rho, chi):
    """Dimension of the invariants of the relative Weyl group on ``Hom(S^{rho'}, C[S_n / Y])``.

    The block permutation ``w`` acts by right multiplication twisted by its
    sign; ``chi(lam, cycle_type)`` evaluates irreducible characters.
    """
    slots, blocks, n = weyl_block_data(mu)
    ys = young_subgroup(blocks, n)
    ws = block_permutations(slots, n)
    lam = transpose(rho)
    total = Fraction(0)
    for w in ws:
        sw = perm_sign(w)
        for y in ys:
            total += sw * chi(lam, cycle_type(compose(y, w)))
    return total / (len(ys) * len(ws))


def weyl_trace(mu, rho, w_index, chi):
    slots, blocks, n = weyl_block_data(mu)
    ys = young_subgroup(blocks, n)
    w = block_permutations(slots, n)[w_index]
    lam = transpose(rho)
    return Fraction(perm_sign(w) * sum(chi(lam, cycle_type(compose(y, w))) for y in ys), len(ys))


def all_types(n):
    """Every type of degree ``n``: multisets of ``(d, omega)`` with ``sum d |omega| = n``."""
    atoms = [(d, om) for d in range(1, n + 1) for m in range(1, n // d + 1) for om in partitions(m)]
    atoms.sort(reverse=True)
    out = []

    def rec(start, remaining, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for i in range(start, len(atoms)):
            d, om = atoms[i]
            size = d * sum(om)
            if size <= remaining:
                rec(i, remaining - size, acc + [atoms[i]])

    rec(0, n, [])
    return out


def brute_class_size(n, q, rep, det, mat_mul, mat_inv, identity_entries):
    """Conjugacy class size by conjugating with every element of GL_n(F_q)."""
    seen = set()
    for entries in product(range(q), repeat=n * n):
        if det(entries, n, q):
            seen.add(mat_mul(mat_mul(entries, rep, n, q), mat_inv(entries, n, q), n, q))
    return seen


def factorial_ratio(n, k):
    return factorial(n) // factorial(k)
