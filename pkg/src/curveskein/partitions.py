"""Partitions as sorted tuples, with the hook and content statistics used
throughout the skein and Hilbert computations."""

from __future__ import annotations

from functools import cache

from .errors import InputError


def partition(parts):
    """Validate and normalize to a weakly decreasing tuple without zeros."""
    p = tuple(int(x) for x in parts if int(x) != 0)
    if any(x < 0 for x in p):
        raise InputError("negative part in %r" % (parts,))
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        p = tuple(sorted(p, reverse=True))
    return p


def size(lam):
    return sum(lam)


def transpose(lam):
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > i) for i in range(lam[0]))


def contents(lam):
    """Cell contents j - i, rows then columns, zero based."""
    return [j - i for i, r in enumerate(lam) for j in range(r)]


def hooks(lam):
    """Hook lengths of all cells."""
    t = transpose(lam)
    return [lam[i] - j + t[j] - i - 1
            for i, r in enumerate(lam) for j in range(r)]


def kappa(lam):
    """Sum over cells of 2 * content."""
    return 2 * sum(contents(lam))


def hook_sum(lam):
    return sum(hooks(lam))


def dot(a, b):
    """Sum_i a_i * b_i over the shorter length."""
    return sum(x * y for x, y in zip(a, b))


def contains(lam, mu):
    """Containment of Young diagrams."""
    return len(mu) <= len(lam) and all(
        lam[i] >= mu[i] for i in range(len(mu)))


def dominance_leq(a, b):
    """a <= b in dominance order; both must have equal size."""
    if sum(a) != sum(b):
        return False
    ta = tb = 0
    for i in range(max(len(a), len(b))):
        ta += a[i] if i < len(a) else 0
        tb += b[i] if i < len(b) else 0
        if ta > tb:
            return False
    return True


def union_multiset(parts_lists):
    """Partition whose parts are the multiset union of the given tuples."""
    out = []
    for p in parts_lists:
        out.extend(p)
    return tuple(sorted(out, reverse=True))


def scale(lam, m):
    """Each part repeated m times (multiset power)."""
    return tuple(sorted((x for x in lam for _ in range(m)), reverse=True))


@cache
def partitions_of(n, max_part=None):
    """All partitions of n, parts bounded by max_part, as sorted tuples."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    if max_part is None or max_part > n:
        max_part = n
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def sub_partitions(lam):
    """All mu contained in lam, by decreasing size of mu."""
    rows = [list(range(lam[i], -1, -1)) for i in range(len(lam))]

    def rec(i, prev):
        if i == len(rows):
            yield ()
            return
        for x in rows[i]:
            if x > prev:
                continue
            for rest in rec(i + 1, x):
                yield (x,) + rest

    out = {partition(p) for p in rec(0, lam[0] if lam else 0)}
    return sorted(out, key=lambda p: (-sum(p), p))


def z_order(rho):
    """Centralizer order of the conjugacy class with cycle type rho."""
    z = 1
    prev = None
    run = 0
    for x in sorted(rho):
        z *= x
        if x == prev:
            run += 1
        else:
            run = 1
        prev = x
        z *= run
    return z
