"""Monotone maps, concrete lax sums, iterated stacking and lax pushouts."""

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    CompositionError,
    NotInImageError,
    NotLatticeError,
    NotMonotoneError,
    SeriesAxiomError,
)
from .poset import Poset, bottom_top, meet_join_tables

__all__ = [
    "MonotoneMap",
    "make_map",
    "identity_map",
    "compose",
    "map_properties",
    "LaxSum",
    "lax_sum",
    "induced_map",
    "StackingTower",
    "iterate_stacking",
    "LatticeSeries",
    "TransportContext",
    "transport",
    "lax_sum_meet_join",
    "LaxPushout",
    "Square",
    "lax_pushout",
    "verify_lax_pushout",
    "pushout_square",
]


@dataclass(frozen=True, eq=False)
class MonotoneMap:
    source: Poset
    target: Poset
    assign: tuple

    def __call__(self, x):
        return self.assign[x]

    @property
    def array(self):
        return np.asarray(self.assign, dtype=np.int64)

    def image(self):
        return set(self.assign)


def make_map(source, target, assign, check=True):
    """Build a monotone map, checking monotonicity on cover pairs."""
    assign = tuple(int(a) for a in assign)
    if len(assign) != source.size:
        raise ValueError(f"assignment has {len(assign)} entries, source has {source.size}")
    for a in assign:
        if not 0 <= a < target.size:
            raise ValueError(f"target id {a} out of range")
    if check:
        # the order is the transitive closure of its covers
        for x, ups in enumerate(source.upper_covers()):
            for y in ups:
                if not target.le(assign[x], assign[y]):
                    raise NotMonotoneError(
                        f"{x} <= {y} but {assign[x]} is not <= {assign[y]}", pair=(x, y)
                    )
    return MonotoneMap(source, target, assign)


def identity_map(p):
    return MonotoneMap(p, p, tuple(range(p.size)))


def compose(g, f):
    """g after f."""
    if f.target is not g.source:
        raise CompositionError("maps do not compose")
    return MonotoneMap(f.source, g.target, tuple(g.assign[a] for a in f.assign))


def _order_reflecting(f):
    a = f.array
    return bool(np.array_equal(f.target.matrix[np.ix_(a, a)], f.source.matrix))


def _down_closed_image(f):
    img = np.zeros(f.target.size, dtype=bool)
    img[f.array] = True
    below = f.target.matrix[:, img].any(axis=1)
    return bool(not (below & ~img).any())


def map_properties(f):
    """Exhaustively computed flags for ``f``.

    The join and bottom flags need lattice structure on both ends and raise
    :class:`NotLatticeError` otherwise.
    """
    smeet, sjoin = meet_join_tables(f.source)
    tmeet, tjoin = meet_join_tables(f.target)
    a = f.array
    join_ok = bool(np.array_equal(a[sjoin], tjoin[np.ix_(a, a)]))
    try:
        sb, _ = bottom_top(f.source)
        tb, _ = bottom_top(f.target)
    except Exception as exc:  # a lattice always has both extrema
        raise NotLatticeError(str(exc)) from exc
    return {
        "order_reflecting": _order_reflecting(f),
        "down_closed_image": _down_closed_image(f),
        "join_preserving": join_ok,
        "bottom_preserving": f.assign[sb] == tb,
    }


class LaxSum:
    """Concrete lax sum of ``M_0 -> M_1 -> ... -> M_n``.

    Element ``(x, j)`` has id ``offsets[j] + x``.
    """

    def __init__(self, posets, maps):
        self.posets = tuple(posets)
        self.maps = tuple(maps)
        sizes = [p.size for p in self.posets]
        self.offsets = tuple(int(v) for v in np.concatenate([[0], np.cumsum(sizes)]))
        total = self.offsets[-1]
        self.stage_of = tuple(j for j, s in enumerate(sizes) for _ in range(s))
        self.inner_of = tuple(x for s in sizes for x in range(s))
        self._composites = {}
        m = np.zeros((total, total), dtype=bool)
        for j in range(len(self.posets)):
            for l in range(j, len(self.posets)):
                comp = self.composite(j, l)
                block = self.posets[l].matrix[comp, :]
                m[self.offsets[j]:self.offsets[j + 1], self.offsets[l]:self.offsets[l + 1]] = block
        labels = [
            f"({self.posets[j].label(x)},{j})" for j, x in zip(self.stage_of, self.inner_of)
        ]
        self.carrier = Poset(m, labels=labels)
        self.injections = tuple(
            MonotoneMap(p, self.carrier, tuple(range(self.offsets[j], self.offsets[j + 1])))
            for j, p in enumerate(self.posets)
        )

    @property
    def n(self):
        return len(self.posets) - 1

    def composite(self, j, l):
        """Index array of f_{l-1} o ... o f_j on M_j."""
        key = (j, l)
        if key not in self._composites:
            if l < j:
                raise ValueError("composite goes forward only")
            if l == j:
                comp = np.arange(self.posets[j].size, dtype=np.int64)
            else:
                comp = self.maps[l - 1].array[self.composite(j, l - 1)]
            self._composites[key] = comp
        return self._composites[key]

    def element(self, x, j):
        return self.offsets[j] + x

    def tag(self, e):
        return self.inner_of[e], self.stage_of[e]


def lax_sum(maps, first=None):
    """Lax sum of a composable sequence of maps.

    ``first`` supplies ``M_0`` when ``maps`` is empty.
    """
    maps = list(maps)
    if not maps:
        if first is None:
            raise CompositionError("an empty map sequence needs the poset M_0")
        return LaxSum([first], [])
    if first is not None and maps[0].source is not first:
        raise CompositionError("first poset is not the source of f_0")
    for f, g in zip(maps, maps[1:]):
        if f.target is not g.source:
            raise CompositionError("target of f_j is not the source of f_{j+1}")
    posets = [maps[0].source] + [f.target for f in maps]
    return LaxSum(posets, maps)


def induced_map(prev, f_n, nxt=None):
    """The map f'_n sending (x, j) to (x, j); returns ``(map, next_sum)``."""
    if f_n.source is not prev.posets[-1]:
        raise CompositionError("f_n must start at the last stage of the lax sum")
    if nxt is None:
        nxt = LaxSum(prev.posets + (f_n.target,), prev.maps + (f_n,))
    # ids of (x, j) agree because offsets are prefix sums
    return MonotoneMap(prev.carrier, nxt.carrier, tuple(range(prev.carrier.size))), nxt


@dataclass
class _Level:
    posets: list
    maps: list
    sums: list = field(default_factory=list)  # LaxSum per stage (levels >= 1)


class StackingTower:
    """All partial sums Sigma^j_i for j <= k, i <= n of a base series.

    ``level(j).posets[i]`` is Sigma^j_i and ``level(j).maps[i]`` the map
    Sigma^j_i -> Sigma^j_{i+1}.  For j >= 1, ``level(j).sums[i]`` is the
    :class:`LaxSum` whose carrier is Sigma^j_i.
    """

    def __init__(self, base_maps, k, n, first=None):
        base_maps = list(base_maps)[:n]
        if len(base_maps) < n:
            raise CompositionError(f"need {n} base maps, got {len(base_maps)}")
        if n == 0 and first is None:
            raise CompositionError("n = 0 needs the poset L_0")
        posets = [first if first is not None else base_maps[0].source]
        posets += [f.target for f in base_maps]
        self.k = k
        self.n = n
        self.levels = [_Level(posets, base_maps)]
        for _ in range(k):
            prev = self.levels[-1]
            first_sum = LaxSum([prev.posets[0]], [])
            sums = [first_sum]
            maps = []
            for i in range(n):
                f, nxt = induced_map(sums[-1], prev.maps[i])
                sums.append(nxt)
                maps.append(f)
            self.levels.append(_Level([s.carrier for s in sums], maps, sums))

    def level(self, j):
        return self.levels[j]

    def poset(self, j=None, i=None):
        j = self.k if j is None else j
        i = self.n if i is None else i
        return self.levels[j].posets[i]

    def squares(self):
        """Every square Sigma^j_i, Sigma^j_{i+1}, Sigma^{j+1}_i, Sigma^{j+1}_{i+1}."""
        for j in range(self.k):
            lo, hi = self.levels[j], self.levels[j + 1]
            for i in range(self.n):
                f = lo.maps[i]
                g = hi.sums[i].injections[i]
                f2 = hi.maps[i]
                g2 = hi.sums[i + 1].injections[i + 1]
                yield (j, i), Square(f=f, g=g, f_prime=f2, g_prime=g2)


def iterate_stacking(base_maps, k, n, first=None):
    """Sigma^k_n L_n; k = 0 returns L_n itself."""
    return StackingTower(base_maps, k, n, first=first).poset()


class LatticeSeries:
    """Lattices M_0..M_n with join/bottom-preserving, order-reflecting maps
    that have down-closed images.  All axioms are checked on construction."""

    def __init__(self, maps, first=None):
        self.sum = lax_sum(maps, first=first)
        self.lattices = self.sum.posets
        self.maps = self.sum.maps
        for i, f in enumerate(self.maps):
            try:
                props = map_properties(f)
            except NotLatticeError as exc:
                raise SeriesAxiomError(f"stage {i}: {exc}") from exc
            bad = [name for name, ok in props.items() if not ok]
            if bad:
                raise SeriesAxiomError(f"map f_{i} fails: {', '.join(bad)}")
        for i, p in enumerate(self.lattices):
            try:
                meet_join_tables(p)
            except NotLatticeError as exc:
                raise SeriesAxiomError(f"M_{i} is not a lattice: {exc}") from exc


class TransportContext:
    """x^k and x^(-j) over a composable sequence of maps."""

    def __init__(self, series):
        if isinstance(series, LatticeSeries):
            self.sum = series.sum
        elif isinstance(series, LaxSum):
            self.sum = series
        else:
            self.sum = lax_sum(series)
        self._preimages = {}

    def up(self, x, j, k):
        if k < j:
            raise ValueError("upward transport needs k >= j")
        return int(self.sum.composite(j, k)[x])

    def down(self, y, k, j):
        if j > k:
            raise ValueError("downward transport needs j <= k")
        key = (j, k)
        if key not in self._preimages:
            comp = self.sum.composite(j, k)
            inv = {}
            for x, v in enumerate(comp):
                inv.setdefault(int(v), []).append(x)
            self._preimages[key] = inv
        hits = self._preimages[key].get(y, [])
        if len(hits) != 1:
            raise NotInImageError(f"element {y} of M_{k} has {len(hits)} preimages in M_{j}")
        return hits[0]


def transport(ctx, x, stage, to):
    """x^to for to >= stage, x^(-to) for to < stage."""
    if to >= stage:
        return ctx.up(x, stage, to)
    return ctx.down(x, stage, to)


def lax_sum_meet_join(s, a, b, ctx=None):
    """Meet and join in a lax sum from the stagewise formulas."""
    ctx = ctx or TransportContext(s)
    lax = ctx.sum
    (x, j), (y, k) = lax.tag(a), lax.tag(b)
    if j > k:
        (x, j), (y, k) = (y, k), (x, j)
    mk = lax.posets[k]
    xk = ctx.up(x, j, k)
    join = lax.element(mk.join(xk, y), k)
    try:
        z = ctx.down(mk.meet(xk, y), k, j)
    except NotInImageError as exc:
        raise SeriesAxiomError(str(exc)) from exc
    return lax.element(z, j), join


@dataclass(frozen=True, eq=False)
class Square:
    """f: K -> M, g: K -> N, f_prime: N -> L, g_prime: M -> L."""

    f: MonotoneMap
    g: MonotoneMap
    f_prime: MonotoneMap
    g_prime: MonotoneMap


@dataclass(frozen=True, eq=False)
class LaxPushout:
    carrier: Poset
    leg_f_prime: MonotoneMap
    leg_g_prime: MonotoneMap
    over: tuple

    @property
    def square(self):
        f, g = self.over
        return Square(f, g, self.leg_f_prime, self.leg_g_prime)


def lax_pushout(f, g):
    """Concrete lax pushout of the span ``M <-f- K -g-> N``.

    Elements (a, 1) for a in N take ids 0..|N|-1, elements (b, 2) follow.
    """
    if f.source is not g.source:
        raise CompositionError("span legs need a shared source")
    big_m, big_n = f.target, g.target
    nn, nm = big_n.size, big_m.size
    below_g = big_n.matrix[:, g.array]  # a <= g(c)
    above_f = big_m.matrix[f.array, :]  # f(c) <= b
    cross = (below_g.astype(np.float32) @ above_f.astype(np.float32)) > 0
    mat = np.zeros((nn + nm, nn + nm), dtype=bool)
    mat[:nn, :nn] = big_n.matrix
    mat[nn:, nn:] = big_m.matrix
    mat[:nn, nn:] = cross
    labels = [f"({big_n.label(a)},1)" for a in range(nn)]
    labels += [f"({big_m.label(b)},2)" for b in range(nm)]
    carrier = Poset(mat, labels=labels)
    fp = MonotoneMap(big_n, carrier, tuple(range(nn)))
    gp = MonotoneMap(big_m, carrier, tuple(range(nn, nn + nm)))
    return LaxPushout(carrier, fp, gp, (f, g))


def verify_lax_pushout(sq):
    """Check the defining conditions of a lax pushout on a square."""
    f, g, fp, gp = sq.f, sq.g, sq.f_prime, sq.g_prime
    try:
        if not (f.source is g.source and fp.source is g.target and gp.source is f.target):
            return False
        if fp.target is not gp.target:
            return False
    except AttributeError:
        return False
    big_l = fp.target
    for h in (f, g, fp, gp):
        src = h.source.matrix
        img = h.target.matrix[np.ix_(h.array, h.array)]
        if (src & ~img).any():  # not monotone
            return False
    if not (_order_reflecting(fp) and _order_reflecting(gp)):
        return False
    ifp, igp = set(fp.assign), set(gp.assign)
    if ifp & igp or len(ifp | igp) != big_l.size:
        return False
    if not _down_closed_image(fp):
        return False
    lhs = big_l.matrix[np.ix_(fp.array, gp.array)]
    below_g = g.target.matrix[:, g.array]
    above_f = f.target.matrix[f.array, :]
    rhs = (below_g.astype(np.float32) @ above_f.astype(np.float32)) > 0
    return bool(np.array_equal(lhs, rhs))


def pushout_square(sq):
    """Isomorphism check data: the concrete pushout of (f, g) and the forward
    assignment from its carrier into ``sq.f_prime.target``."""
    po = lax_pushout(sq.f, sq.g)
    forward = list(sq.f_prime.assign) + list(sq.g_prime.assign)
    return po, forward
