"""Exact maximal-chain counts and the closed forms they are checked against."""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import factorial, prod

from .errors import CapExceededError, SizeError
from .hypercube import row_star_sublattice, star_sublattice
from .poset import bottom_top

__all__ = [
    "OVER_BUDGET",
    "count_maximal_chains",
    "enumerate_maximal_chains",
    "catalan_kdim",
    "odd_double_factorial",
    "m_partition_count",
    "hypercube_count",
    "central_multinomial",
    "kreweras",
    "falling",
    "height_sequences",
    "path_weight",
    "weighted_dyck_sum",
    "SequenceGrid",
    "cell_count",
    "grid",
]

OVER_BUDGET = "OVER_BUDGET"


def count_maximal_chains(p):
    """Saturated bottom-to-top chains: c(bottom) = 1, c(x) = sum of c over lower covers."""
    bottom, top = bottom_top(p)
    lower = p.lower_covers()
    c = [0] * p.size
    c[bottom] = 1
    for x in p.topological_order():
        if x != bottom:
            c[x] = sum(c[y] for y in lower[x])
    return c[top]


def enumerate_maximal_chains(p, cap=10_000):
    """All maximal chains as id lists, bottom to top, in cover-choice order."""
    total = count_maximal_chains(p)
    if total > cap:
        raise CapExceededError(total, cap)
    bottom, top = bottom_top(p)
    upper = p.upper_covers()
    chains = []
    path = [bottom]

    def walk(x):
        if x == top:
            chains.append(list(path))
            return
        for y in upper[x]:
            path.append(y)
            walk(y)
            path.pop()

    walk(bottom)
    return chains


def catalan_kdim(k, n):
    """(kn)! 0! 1! ... (k-1)! / (n! (n+1)! ... (n+k-1)!).

    For k <= 3 the numerator superfactorial equals (k-1)!; from k = 4 on it
    does not, and only the product form gives integers matching the DP.
    """
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    num = prod(factorial(i) for i in range(k)) * factorial(k * n)
    return num // prod(factorial(n + i) for i in range(k))


def odd_double_factorial(n):
    """(2n-1)!! = (2n)! / (2^n n!), with (-1)!! = 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return factorial(2 * n) // (2 ** n * factorial(n))


def m_partition_count(m, n):
    """(mn)! / ((m!)^n n!)."""
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    return factorial(m * n) // (factorial(m) ** n * factorial(n))


def hypercube_count(m, n):
    """(mn)! / (m!)^n, the maximal chains of C^n_m."""
    if m < 0 or n < 0:
        raise ValueError("need m, n >= 0")
    return factorial(m * n) // factorial(m) ** n


def central_multinomial(r, m):
    """(rm)! / (m!)^r."""
    return hypercube_count(m, r)


def kreweras(m):
    """(3m)! 4^m / ((m+1)! (2m+1)!)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return factorial(3 * m) * 4 ** m // (factorial(m + 1) * factorial(2 * m + 1))


def falling(x, r):
    out = 1
    for i in range(r):
        out *= x - i
    return out


def height_sequences(n):
    """All 0 = i_0 <= i_1 <= ... <= i_n = n with i_j <= j."""
    seq = [0]

    def rec(j):
        if j == n:
            if seq[-1] == n:
                yield tuple(seq)
            return
        lo = seq[-1]
        for v in range(lo, j + 2):
            seq.append(v)
            yield from rec(j + 1)
            seq.pop()

    if n == 0:
        yield (0,)
        return
    yield from rec(0)


def path_weight(i):
    """Product over j of (j + 1 - i_j) falling (i_{j+1} - i_j)."""
    return prod(falling(j + 1 - i[j], i[j + 1] - i[j]) for j in range(len(i) - 1))


def weighted_dyck_sum(n):
    return sum(path_weight(i) for i in height_sequences(n))


@dataclass
class SequenceGrid:
    """Chain counts keyed by parameter tuples.

    ``axis`` is ``"column"`` (rows keyed by (m, k), columns over n) or
    ``"row"`` (rows keyed by (n, k), columns over m).  A cell is an int or
    :data:`OVER_BUDGET`.
    """

    axis: str
    rows: list
    columns: list
    cells: list

    @property
    def group_name(self):
        return "m" if self.axis == "column" else "n"

    @property
    def index_name(self):
        return "n" if self.axis == "column" else "m"

    def cell(self, group, k, index):
        r = self.rows.index((group, k))
        return self.cells[r][self.columns.index(index)]

    def sequence(self, group, k):
        return self.cells[self.rows.index((group, k))]


def cell_count(axis, k, n, m, budget=None):
    """#Sigma^k_n C^n_m (column) or #Sigma^k_m C^n_m (row) via the coordinate representation."""
    if axis == "column":
        p = star_sublattice(k, n, m, budget)
    elif axis == "row":
        p = row_star_sublattice(n, k, m, budget)
    else:
        raise ValueError(f"unknown axis {axis!r}")
    return count_maximal_chains(p)


def _cell(args):
    axis, k, n, m, budget = args
    try:
        return cell_count(axis, k, n, m, budget)
    except SizeError:
        return OVER_BUDGET


def grid(axis, ks, ns, ms, budget=None, workers=1):
    """Table of counts; cells over the element budget are marked, not fatal."""
    ks, ns, ms = list(ks), list(ns), list(ms)
    if axis == "column":
        rows = [(m, k) for m in ms for k in ks]
        columns = ns
        jobs = [(axis, k, n, m, budget) for (m, k) in rows for n in ns]
    elif axis == "row":
        rows = [(n, k) for n in ns for k in ks]
        columns = ms
        jobs = [(axis, k, n, m, budget) for (n, k) in rows for m in ms]
    else:
        raise ValueError(f"unknown axis {axis!r}")
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            flat = list(pool.map(_cell, jobs))
    else:
        flat = [_cell(j) for j in jobs]
    width = len(columns)
    cells = [flat[r * width:(r + 1) * width] for r in range(len(rows))]
    return SequenceGrid(axis, rows, columns, cells)
