"""Partitions, Young diagram statistics, dominance order and types.

A partition is a tuple of weakly decreasing positive ints; ``()`` is the
partition of 0.  Cells are 1-based ``(row, col)`` pairs in English notation.

A type is a tuple of pairs ``(d, omega)`` with ``d`` a positive int and
``omega`` a partition; its degree is ``sum(d * |omega|)``.
"""

from functools import lru_cache
from itertools import product
from math import factorial

from .errors import ValidationError


def as_partition(parts):
    """Validate and normalize a sequence into a partition tuple."""
    p = tuple(int(x) for x in parts)
    if any(x <= 0 for x in p):
        raise ValidationError("partition parts must be positive: %r" % (list(parts),))
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValidationError("partition parts must be weakly decreasing: %r" % (list(parts),))
    return p


@lru_cache(maxsize=None)
def partitions(n, max_part=None):
    """All partitions of ``n`` in reverse lexicographic order, ``(n)`` first."""
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def size(p):
    return sum(p)


@lru_cache(maxsize=None)
def transpose(p):
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def cells(p):
    """Cells of the diagram as 1-based ``(row, col)`` pairs, row by row."""
    return [(i + 1, j + 1) for i, row in enumerate(p) for j in range(row)]


def arm_leg(p, cell):
    row, col = cell
    if row < 1 or row > len(p) or col < 1 or col > p[row - 1]:
        raise ValidationError("cell %r lies outside the diagram of %r" % (cell, p))
    return p[row - 1] - col, transpose(p)[col - 1] - row


def n_stat(p):
    """``n(p) = sum (i-1) p_i``."""
    return sum(i * x for i, x in enumerate(p))


def dominance_leq(a, b):
    if sum(a) != sum(b):
        return False
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa > sb:
            return False
    return True


@lru_cache(maxsize=None)
def down_set(p):
    """Partitions of ``|p|`` dominated by ``p``, in reverse lexicographic order."""
    return tuple(x for x in partitions(sum(p)) if dominance_leq(x, p))


@lru_cache(maxsize=None)
def up_set(p):
    """Partitions of ``|p|`` dominating ``p``, in reverse lexicographic order."""
    return tuple(x for x in partitions(sum(p)) if dominance_leq(p, x))


def multiplicities(p):
    """Map part -> multiplicity."""
    out = {}
    for x in p:
        out[x] = out.get(x, 0) + 1
    return out


@lru_cache(maxsize=None)
def z_lambda(p):
    out = 1
    for part, m in multiplicities(p).items():
        out *= part ** m * factorial(m)
    return out


def sign(p):
    """Sign of a permutation of cycle type ``p``."""
    return -1 if (sum(p) - len(p)) % 2 else 1


def r_of_type(t):
    return sum((d - 1) * sum(om) for d, om in t)


def type_degree(t):
    return sum(d * sum(om) for d, om in t)


def transpose_type(t):
    return tuple((d, transpose(om)) for d, om in t)


def column_slots(mu):
    """Distinct parts of ``transpose(mu)`` in decreasing order with multiplicities.

    Returns a list of ``(a_r, m_r)``: ``a_r`` is a column length and ``m_r``
    the number of columns of that length.
    """
    mult = multiplicities(transpose(mu))
    return [(a, mult[a]) for a in sorted(mult, reverse=True)]


def eta_to_types(mu, eta):
    """Type attached to one eigenvalue of a relative Weyl group class.

    ``eta`` lists one partition per column slot of ``mu`` (see
    :func:`column_slots`); the result has one pair ``(eta_r_s, (1^a_r))``
    per part ``s`` of every ``eta_r``.
    """
    slots = column_slots(mu)
    eta = [tuple(e) for e in eta]
    if len(eta) != len(slots):
        raise ValidationError(
            "eta has %d slots but transpose(%r) has %d distinct parts" % (len(eta), mu, len(slots)))
    out = []
    for (a, m), e in zip(slots, eta):
        e = as_partition(e)
        if sum(e) != m:
            raise ValidationError("eta slot %r must partition %d" % (e, m))
        for part in e:
            out.append((part, (1,) * a))
    return tuple(out)


def trivial_eta(mu):
    """The identity class: every slot gets ``(1, ..., 1)``."""
    return [(1,) * m for _, m in column_slots(mu)]


def all_etas(mu):
    """Every conjugacy class label of the relative Weyl group of ``mu``."""
    choices = [partitions(m) for _, m in column_slots(mu)]
    return [list(c) for c in product(*choices)]


def weyl_order(mu):
    out = 1
    for _, m in column_slots(mu):
        out *= factorial(m)
    return out


def eta_class_size(mu, eta):
    """Number of elements in the class ``eta`` of the relative Weyl group."""
    out = 1
    for (_, m), e in zip(column_slots(mu), eta):
        out *= factorial(m) // z_lambda(tuple(e))
    return out


def strata_below(mu):
    """All multipartitions componentwise dominated by ``mu``, ``mu`` first."""
    return [tuple(c) for c in product(*(down_set(tuple(p)) for p in mu))]


def ssyt(shape, content):
    """Generate semistandard tableaux of ``shape`` with the given content.

    Tableaux are tuples of rows.  Used as an independent Kostka oracle.
    """
    shape = tuple(shape)
    content = tuple(content)
    if sum(shape) != sum(content):
        return

    def fill(letter, current):
        # place all copies of `letter` as a horizontal strip on top of `current`
        if letter > len(content):
            if tuple(len(r) for r in current) == shape:
                yield tuple(tuple(r) for r in current)
            return
        count = content[letter - 1]
        lengths = [len(r) for r in current]

        def strips(row, remaining, adds):
            if row == len(shape):
                if remaining == 0:
                    yield adds
                return
            cur = lengths[row]
            upper = shape[row]
            if row > 0:
                # horizontal strip: cannot go past the previous row's old length
                upper = min(upper, lengths[row - 1])
            for k in range(min(remaining, upper - cur), -1, -1):
                yield from strips(row + 1, remaining - k, adds + [k])

        for adds in strips(0, count, []):
            nxt = [list(r) + [letter] * k for r, k in zip(current, adds)]
            yield from fill(letter + 1, nxt)

    yield from fill(1, [[] for _ in shape])
