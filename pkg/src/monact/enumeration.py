"""Exhaustive enumeration of small monoids with zero, acts over them, and
left congruences, each up to isomorphism.

Canonical forms pin the structure we are not allowed to move (identity at
index 0 and zero at index 1 for monoids, theta at index 0 for ACT0 acts) and
minimize the table encoding over relabelings of the remaining indices.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from .core import (
    Act,
    ActCongruence,
    Category,
    Monoid,
    empty_act,
    make_act,
    make_congruence,
    regular_act,
    validate_monoid,
    zero_set,
)
from .errors import BoundTooLarge, ZeroEqualsOne

MAX_MONOID_SIZE = 6
MAX_ACT_SIZE = 6

_ELEMENT_NAMES = ("1", "0", "a", "b", "c", "d")


def _relabel_mul(table, perm):
    """perm maps old index -> new index; returns the relabeled table."""
    n = len(table)
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    return tuple(tuple(perm[table[inv[x]][inv[y]]] for y in range(n))
                 for x in range(n))


def canonical_monoid_key(m: Monoid) -> tuple:
    """Minimal table encoding over relabelings fixing one at 0, zero at 1."""
    n = m.size
    rest = [x for x in range(n) if x not in (m.one, m.zero)]
    best = None
    for order in itertools.permutations(rest):
        perm = [0] * n
        perm[m.one] = 0
        perm[m.zero] = 1
        for i, x in enumerate(order):
            perm[x] = i + 2
        enc = _relabel_mul(m.mul, perm)
        if best is None or enc < best:
            best = enc
    return best


def enumerate_monoids_with_zero(n: int) -> list[Monoid]:
    """All monoids with zero of order exactly n, 0 != 1, up to isomorphism."""
    if n == 1:
        raise ZeroEqualsOne()
    if n < 1 or n > MAX_MONOID_SIZE:
        raise BoundTooLarge(f"monoid size must be between 2 and {MAX_MONOID_SIZE}")
    labels = _ELEMENT_NAMES[:n]
    one, zero = 0, 1
    # rows/columns of 1 and 0 are forced; the free slots are products of the
    # remaining n-2 elements
    table = [[None] * n for _ in range(n)]
    for x in range(n):
        table[one][x] = table[x][one] = x
        table[zero][x] = table[x][zero] = zero
    free = [(x, y) for x in range(2, n) for y in range(2, n)]
    found: list[tuple] = []

    def assoc_ok(x, y):
        # check every triple whose evaluation is now fully determined
        for a in range(n):
            for b in range(n):
                ab = table[a][b]
                if ab is None:
                    continue
                for c in range(n):
                    bc = table[b][c]
                    if bc is None:
                        continue
                    left = table[ab][c]
                    right = table[a][bc]
                    if left is not None and right is not None and left != right:
                        return False
        return True

    def search(i):
        if i == len(free):
            found.append(tuple(tuple(row) for row in table))
            return
        x, y = free[i]
        for v in range(n):
            table[x][y] = v
            if assoc_ok(x, y):
                search(i + 1)
        table[x][y] = None

    search(0)
    seen = set()
    out = []
    for tbl in found:
        m = validate_monoid(labels, tbl, one, zero)
        key = canonical_monoid_key(m)
        if key not in seen:
            seen.add(key)
            out.append((key, m))
    out.sort(key=lambda kv: kv[0])
    return [m for _, m in out]


def enumerate_monoids_with_zero_upto(n: int) -> list[Monoid]:
    out = []
    for k in range(2, n + 1):
        out.extend(enumerate_monoids_with_zero(k))
    return out


# ---------------------------------------------------------------------------
# acts


def _relabel_action(table, perm):
    """Relabel the act carrier; rows (monoid elements) stay put."""
    k = len(table[0])
    inv = [0] * k
    for old, new in enumerate(perm):
        inv[new] = old
    return tuple(tuple(perm[row[inv[x]]] for x in range(k)) for row in table)


def canonical_act_key(act: Act) -> tuple:
    """Minimal action-table encoding over carrier relabelings; for ACT0 acts
    theta is pinned at index 0."""
    k = act.size
    if k == 0:
        return ()
    if act.category is Category.ACT0:
        rest = [x for x in range(k) if x != act.zero]
        perms = []
        for order in itertools.permutations(rest):
            perm = [0] * k
            perm[act.zero] = 0
            for i, x in enumerate(order):
                perm[x] = i + 1
            perms.append(perm)
    else:
        perms = list(itertools.permutations(range(k)))
    return min(_relabel_action(act.action, perm) for perm in perms)


@lru_cache(maxsize=512)
def _act_tables(monoid: Monoid, k: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All total action tables of size k over the monoid (not deduplicated).

    An action table is a monoid homomorphism into the full transformation
    monoid T_k; we backtrack over the images of a generating sequence with
    numpy-filtered candidate sets and closure propagation in between."""
    if k == 0:
        return (tuple(() for _ in monoid.elements()),)
    n = monoid.size
    mul = monoid.mul
    trans = np.array(list(itertools.product(range(k), repeat=k)), dtype=np.int16)
    trans_sq = np.take_along_axis(trans, trans, axis=1)  # f o f, rowwise
    ident = tuple(range(k))
    order = [monoid.zero] + [x for x in range(n)
                             if x not in (monoid.one, monoid.zero)]
    results: list[tuple] = []

    def compose(f, g):
        return tuple(f[g[x]] for x in range(k))

    def propagate(phi):
        changed = True
        while changed:
            changed = False
            items = list(phi.items())
            for u, fu in items:
                for v, fv in items:
                    w = mul[u][v]
                    comp = compose(fu, fv)
                    if w in phi:
                        if phi[w] != comp:
                            return None
                    else:
                        phi[w] = comp
                        changed = True
        return phi

    def search(phi):
        if len(phi) == n:
            results.append(tuple(phi[s] for s in range(n)))
            return
        s = next(x for x in order if x not in phi)
        mask = np.ones(len(trans), dtype=bool)
        # one-sided products with already decided elements
        for u, fu in phi.items():
            w = mul[u][s]
            if w != s and w in phi:
                target = np.array(phi[w], dtype=np.int16)
                fu_arr = np.array(fu, dtype=np.int16)
                mask &= (fu_arr[trans] == target).all(axis=1)
            w = mul[s][u]
            if w != s and w in phi:
                target = np.array(phi[w], dtype=np.int16)
                mask &= (trans[:, list(fu)] == target).all(axis=1)
        # the square of s
        ss = mul[s][s]
        if ss == s:
            mask &= (trans_sq == trans).all(axis=1)
        elif ss in phi:
            target = np.array(phi[ss], dtype=np.int16)
            mask &= (trans_sq == target).all(axis=1)
        for idx in np.nonzero(mask)[0]:
            nxt = dict(phi)
            nxt[s] = tuple(int(v) for v in trans[idx])
            nxt = propagate(nxt)
            if nxt is not None:
                search(nxt)

    search(propagate({monoid.one: ident}))
    return tuple(results)


def _act_labels(k: int, category: Category) -> tuple[str, ...]:
    if category is Category.ACT0:
        return ("θ",) + tuple(f"x{i}" for i in range(1, k))
    return tuple(f"x{i}" for i in range(k))


@lru_cache(maxsize=512)
def _acts_of_size(monoid: Monoid, k: int, category: Category) -> tuple[Act, ...]:
    if k == 0:
        return (empty_act(monoid),) if category is Category.ACTO else ()
    zrow_idx = monoid.zero
    seen = set()
    canon = []
    for table in _act_tables(monoid, k):
        if category is Category.ACT0:
            zeros = set(table[zrow_idx])
            if len(zeros) != 1:
                continue
            probe = Act(monoid, _act_labels(k, category), table, category,
                        next(iter(zeros)))
        else:
            probe = Act(monoid, _act_labels(k, category), table, category, None)
        key = canonical_act_key(probe)
        if key not in seen:
            seen.add(key)
            canon.append(key)
    canon.sort()
    out = []
    labels = _act_labels(k, category)
    for key in canon:
        zero = key[zrow_idx][0] if category is Category.ACT0 else None
        # ACT0 canonical form pins theta at 0
        out.append(make_act(monoid, labels, key, category, zero))
    return tuple(out)


def enumerate_acts(monoid: Monoid, m: int, category: Category) -> list[Act]:
    """All acts of size <= m up to isomorphism, deterministic order.  In ACTO
    the empty act comes first."""
    if m > MAX_ACT_SIZE:
        raise BoundTooLarge(f"act size capped at {MAX_ACT_SIZE}")
    lo = 0 if category is Category.ACTO else 1
    out: list[Act] = []
    for k in range(lo, m + 1):
        out.extend(_acts_of_size(monoid, k, category))
    return out


# ---------------------------------------------------------------------------
# left congruences


def _set_partitions(n: int):
    """Restricted-growth strings: all partitions of {0..n-1}."""
    if n == 0:
        yield ()
        return
    rgs = [0] * n

    def rec(i, mx):
        if i == n:
            yield tuple(rgs)
            return
        for b in range(mx + 2):
            rgs[i] = b
            yield from rec(i + 1, max(mx, b))

    yield from rec(1, 0)


def enumerate_left_congruences(monoid: Monoid) -> list[ActCongruence]:
    """All left-compatible partitions of S as a left act over itself."""
    if monoid.size > MAX_MONOID_SIZE:
        raise BoundTooLarge(f"monoid size capped at {MAX_MONOID_SIZE}")
    act = regular_act(monoid, Category.ACTO)
    out = []
    for blocks in _set_partitions(monoid.size):
        compatible = all(
            blocks[monoid.mul[s][a]] == blocks[monoid.mul[s][b]]
            for a in monoid.elements() for b in monoid.elements()
            if blocks[a] == blocks[b]
            for s in monoid.elements())
        if compatible:
            out.append(make_congruence(act, blocks))
    return out
