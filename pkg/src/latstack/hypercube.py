"""Powers of chains and the coordinate sublattices representing stacked lattices.

Tuples are coordinate vectors ``(x_1, ..., x_n)`` with ``0 <= x_i <= h``.
``x_1`` is the leftmost coordinate; the column embedding prepends a 0.
"""

import os
from itertools import combinations_with_replacement, product

import numpy as np

from .errors import SizeError
from .lax import Square, StackingTower, make_map
from .poset import IsoWitness, Poset

__all__ = [
    "DEFAULT_BUDGET",
    "default_budget",
    "TuplePoset",
    "HypercubeLattice",
    "StarSublattice",
    "RowStarSublattice",
    "satisfies_star",
    "satisfies_row_star",
    "check_star_prime",
    "chain",
    "power",
    "star_sublattice",
    "row_star_sublattice",
    "column_embeddings",
    "row_embeddings",
    "column_square",
    "row_square",
    "column_tower",
    "row_tower",
    "canonical_iso",
    "row_canonical_iso",
    "closed_under_ambient_ops",
]

DEFAULT_BUDGET = 1 << 20


def default_budget():
    env = os.environ.get("LATSTACK_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _check_budget(height, dim, budget):
    budget = default_budget() if budget is None else budget
    ambient = (height + 1) ** dim
    if ambient > budget:
        raise SizeError(f"ambient C^{dim}_{height} has {ambient} elements, budget is {budget}")
    return ambient


class TuplePoset(Poset):
    """Induced subposet of the product order on ``{0..height}^dim``.

    Ids follow lexicographic order of the tuples.  Covers are computed from
    the member set itself (see :meth:`_compute_upper_covers`), never assumed
    to be unit steps.
    """

    def __init__(self, tuples, height, dim):
        tuples = sorted(tuple(int(c) for c in t) for t in tuples)
        super().__init__(size=len(tuples), labels=None)
        self.tuples = tuple(tuples)
        self.height = height
        self.dim = dim
        self.index = {t: i for i, t in enumerate(self.tuples)}

    def label(self, x):
        return "".join(map(str, self.tuples[x])) if self.height < 10 else ",".join(
            map(str, self.tuples[x])
        )

    @property
    def labels(self):
        return tuple(self.label(x) for x in range(self.size))

    @labels.setter
    def labels(self, value):
        pass

    def parent_id(self, x):
        """Base-(height+1) code of the tuple inside the full hypercube."""
        code = 0
        for c in self.tuples[x]:
            code = code * (self.height + 1) + c
        return code

    @property
    def parent_ids(self):
        return tuple(self.parent_id(x) for x in range(self.size))

    def coords(self):
        return np.asarray(self.tuples, dtype=np.int64).reshape(self.size, self.dim)

    def _build_matrix(self):
        t = self.coords()
        return (t[:, None, :] <= t[None, :, :]).all(axis=2)

    def le(self, x, y):
        return all(a <= b for a, b in zip(self.tuples[x], self.tuples[y]))

    def _compute_topological_order(self):
        return tuple(sorted(range(self.size), key=lambda i: sum(self.tuples[i])))

    def _closure(self):
        """Least member above each ambient point, memoised on demand.

        For a meet-closed member set containing the top, the least member above
        a non-member z is the meet of the least members above z + e_i.
        Returns None when that meet is not a member (not meet-closed).
        """
        index, h, d = self.index, self.height, self.dim
        memo = {}

        def up(z):
            if z in index:
                return z
            if z in memo:
                return memo[z]
            best = None
            for i in range(d):
                if z[i] < h:
                    c = up(z[:i] + (z[i] + 1,) + z[i + 1:])
                    if c is None:
                        best = None
                        break
                    best = c if best is None else tuple(map(min, best, c))
            if best is not None and best not in index:
                best = None
            memo[z] = best
            return best

        return up

    def _compute_upper_covers(self):
        up = self._closure()
        h, d = self.height, self.dim
        result = []
        for t in self.tuples:
            cands = set()
            for i in range(d):
                if t[i] < h:
                    c = up(t[:i] + (t[i] + 1,) + t[i + 1:])
                    if c is None:
                        return super()._compute_upper_covers()
                    cands.add(c)
            # keep the minimal candidates
            mins = [
                c for c in cands
                if not any(o != c and all(a <= b for a, b in zip(o, c)) for o in cands)
            ]
            result.append(tuple(sorted(self.index[c] for c in mins)))
        return tuple(result)

    def meet(self, x, y):
        t = tuple(map(min, self.tuples[x], self.tuples[y]))
        if t in self.index:
            return self.index[t]
        return super().meet(x, y)

    def join(self, x, y):
        t = tuple(map(max, self.tuples[x], self.tuples[y]))
        if t in self.index:
            return self.index[t]
        return super().join(x, y)

    def id_of(self, t):
        return self.index[tuple(t)]


class HypercubeLattice(TuplePoset):
    """C^n_m with componentwise order."""

    def __init__(self, m, n):
        self.m, self.n = m, n
        super().__init__(product(range(m + 1), repeat=n), m, n)

    def encode(self, t):
        return self.id_of(t)


class StarSublattice(TuplePoset):
    """Tuples of C^n_{k+m} satisfying (*)."""

    def __init__(self, k, n, m, tuples):
        self.k, self.n, self.m = k, n, m
        super().__init__(tuples, k + m, n)


class RowStarSublattice(TuplePoset):
    """Tuples of C^{n+k}_m satisfying the row condition."""

    def __init__(self, n, k, m, tuples):
        self.n, self.k, self.m = n, k, m
        super().__init__(tuples, m, n + k)


def satisfies_star(t, k):
    """x_{i+1} < k forces x_i <= x_{i+1}."""
    return all(b >= k or a <= b for a, b in zip(t, t[1:]))


def satisfies_row_star(t, n):
    """Every x_i (i <= n) is below x_{n+1} <= x_{n+2} <= ... (1-based)."""
    tail = t[n:]
    if not tail:
        return True
    if any(a > b for a, b in zip(tail, tail[1:])):
        return False
    return all(x <= tail[0] for x in t[:n])


def check_star_prime(t, k):
    """Each x_i is either k + 1 or below every later coordinate."""
    return all(
        x == k + 1 or all(x <= y for y in t[i + 1:]) for i, x in enumerate(t)
    )


def chain(m):
    return HypercubeLattice(m, 1)


def power(m, n, budget=None):
    _check_budget(m, n, budget)
    return HypercubeLattice(m, n)


def _star_tuples(k, n, h):
    if n == 0:
        yield ()
        return
    # extend right to left: x_i is constrained by x_{i+1}
    def rec(suffix):
        if len(suffix) == n:
            yield suffix
            return
        nxt = suffix[0]
        top = h if nxt >= k else nxt
        for x in range(top + 1):
            yield from rec((x,) + suffix)

    for last in range(h + 1):
        yield from rec((last,))


def star_sublattice(k, n, m, budget=None):
    _check_budget(k + m, n, budget)
    return StarSublattice(k, n, m, _star_tuples(k, n, k + m))


def _row_star_tuples(n, k, m):
    if k == 0:
        yield from product(range(m + 1), repeat=n)
        return
    for tail in combinations_with_replacement(range(m + 1), k):
        for head in product(range(tail[0] + 1), repeat=n):
            yield head + tail


def row_star_sublattice(n, k, m, budget=None):
    _check_budget(m, n + k, budget)
    return RowStarSublattice(n, k, m, _row_star_tuples(n, k, m))


def _tuple_map(src, dst, fn):
    return make_map(src, dst, [dst.id_of(fn(t)) for t in src.tuples])


def column_embeddings(k, n, m, budget=None):
    """(vertical, horizontal) out of C^{n*}_{k+m}.

    vertical adds 1 to every coordinate, landing in C^{n*}_{k+1+m};
    horizontal prepends 0, landing in C^{n+1*}_{k+m}.
    """
    src = star_sublattice(k, n, m, budget)
    vert = _tuple_map(src, star_sublattice(k + 1, n, m, budget), lambda t: tuple(c + 1 for c in t))
    horiz = _tuple_map(src, star_sublattice(k, n + 1, m, budget), lambda t: (0,) + t)
    return vert, horiz


def row_embeddings(n, k, m, budget=None):
    """(append, lift) out of C^{n+k star}_m.

    append adds a last coordinate equal to m; lift keeps coordinates and
    raises the height to m + 1.
    """
    src = row_star_sublattice(n, k, m, budget)
    app = _tuple_map(src, row_star_sublattice(n, k + 1, m, budget), lambda t: t + (m,))
    lift = _tuple_map(src, row_star_sublattice(n, k, m + 1, budget), lambda t: t)
    return app, lift


def column_square(k, n, m, budget=None):
    """Square C^{n*}_{k+m}, C^{n+1*}_{k+m}, C^{n*}_{k+1+m}, C^{n+1*}_{k+1+m}.

    Horizontal legs prepend 0, vertical legs add 1 to every coordinate.
    """
    big_k = star_sublattice(k, n, m, budget)
    big_m = star_sublattice(k, n + 1, m, budget)
    big_n = star_sublattice(k + 1, n, m, budget)
    big_l = star_sublattice(k + 1, n + 1, m, budget)
    shift = lambda t: tuple(c + 1 for c in t)
    prepend = lambda t: (0,) + t
    return Square(
        f=_tuple_map(big_k, big_m, prepend),
        g=_tuple_map(big_k, big_n, shift),
        f_prime=_tuple_map(big_n, big_l, prepend),
        g_prime=_tuple_map(big_m, big_l, shift),
    )


def row_square(n, k, m, budget=None):
    """Square C^{n+k*}_m, C^{n+k*}_{m+1}, C^{n+k+1*}_m, C^{n+k+1*}_{m+1}.

    Horizontal legs raise the height, vertical legs append the old height.
    """
    big_k = row_star_sublattice(n, k, m, budget)
    big_m = row_star_sublattice(n, k, m + 1, budget)
    big_n = row_star_sublattice(n, k + 1, m, budget)
    big_l = row_star_sublattice(n, k + 1, m + 1, budget)
    same = lambda t: t
    return Square(
        f=_tuple_map(big_k, big_m, same),
        g=_tuple_map(big_k, big_n, lambda t: t + (m,)),
        f_prime=_tuple_map(big_n, big_l, same),
        g_prime=_tuple_map(big_m, big_l, lambda t: t + (m + 1,)),
    )


def column_tower(k, n, m, budget=None):
    """Stacking tower over C^0_m -> C^1_m -> ... -> C^n_m (prepend 0)."""
    cubes = [power(m, j, budget) for j in range(n + 1)]
    maps = [_tuple_map(cubes[j], cubes[j + 1], lambda t: (0,) + t) for j in range(n)]
    return StackingTower(maps, k, n, first=cubes[0])


def row_tower(k, n, m, budget=None):
    """Stacking tower over C^n_0 -> C^n_1 -> ... -> C^n_m (inclusions)."""
    cubes = [power(h, n, budget) for h in range(m + 1)]
    maps = [_tuple_map(cubes[h], cubes[h + 1], lambda t: t) for h in range(m)]
    return StackingTower(maps, k, m, first=cubes[0])


def _tower_tuple(tower, level, stage, e, step):
    if level == 0:
        return tower.level(0).posets[stage].tuples[e]
    lax = tower.level(level).sums[stage]
    x, j = lax.tag(e)
    inner = _tower_tuple(tower, level - 1, j, x, step)
    return step(inner, j, stage)


def _column_step(inner, j, stage):
    return (0,) * (stage - j) + tuple(c + 1 for c in inner)


def _row_step(inner, j, stage):
    return inner + (j,)


def canonical_iso(k, n, m, budget=None, tower=None):
    """Witness d_{k,n,m}: Sigma^k_n C^n_m -> C^{n*}_{k+m}.

    Built level by level: a tagged element (x, j) of Sigma^k_n goes to the
    image of x under d_{k-1,j,m}, shifted up by one and padded with n - j
    leading zeros.  Returns ``(witness, stacked, star)``.
    """
    tower = tower or column_tower(k, n, m, budget)
    star = star_sublattice(k, n, m, budget)
    stacked = tower.poset(k, n)
    forward = [star.id_of(_tower_tuple(tower, k, n, e, _column_step)) for e in range(stacked.size)]
    return IsoWitness.from_forward(forward), stacked, star


def row_canonical_iso(k, n, m, budget=None, tower=None):
    """Witness Sigma^k_m C^n_m -> C^{n+k star}_m; (x, j) maps to d(x) with j appended."""
    tower = tower or row_tower(k, n, m, budget)
    star = row_star_sublattice(n, k, m, budget)
    stacked = tower.poset(k, m)
    forward = [star.id_of(_tower_tuple(tower, k, m, e, _row_step)) for e in range(stacked.size)]
    return IsoWitness.from_forward(forward), stacked, star


def closed_under_ambient_ops(p):
    """True iff componentwise min and max of members stay members."""
    ts = p.tuples
    index = p.index
    for i, a in enumerate(ts):
        for b in ts[i + 1:]:
            if tuple(map(min, a, b)) not in index or tuple(map(max, a, b)) not in index:
                return False
    return True
