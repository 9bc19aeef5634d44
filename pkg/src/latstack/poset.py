"""Finite posets with dense integer ids.

A :class:`Poset` stores its order as a boolean ``size x size`` matrix where
``matrix[x, y]`` means ``x <= y``.  Subclasses may compute the order on demand
(see :mod:`latstack.hypercube`) and only materialise the matrix when a caller
asks for it.
"""

from dataclasses import dataclass
from itertools import product as _iproduct

import numpy as np

from .errors import CycleError, NoExtremumError, NotLatticeError, RangeError

__all__ = [
    "Poset",
    "IsoWitness",
    "poset_from_relation",
    "poset_from_covers",
    "covers",
    "bottom_top",
    "meet_join",
    "is_lattice",
    "is_distributive",
    "is_distributive_textbook",
    "meet_join_tables",
    "product",
    "verify_iso",
    "transitive_closure",
    "check_order_axioms",
]


def transitive_closure(rel):
    """Reflexive-transitive closure of a square boolean matrix."""
    m = np.array(rel, dtype=bool, copy=True)
    n = m.shape[0]
    np.fill_diagonal(m, True)
    if n == 0:
        return m
    # repeated squaring; float matmul goes through BLAS
    while True:
        f = m.astype(np.float32)
        nxt = (f @ f) > 0
        if np.array_equal(nxt, m):
            return m
        m = nxt


class Poset:
    """Immutable finite poset on ids ``0..size-1``."""

    def __init__(self, matrix=None, labels=None, size=None):
        if matrix is not None:
            matrix = np.asarray(matrix, dtype=bool)
            if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
                raise ValueError("order matrix must be square")
            matrix.setflags(write=False)
            size = matrix.shape[0]
        elif size is None:
            raise ValueError("need a matrix or an explicit size")
        self._size = int(size)
        self._matrix = matrix
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != self._size:
                raise ValueError("labels length does not match size")
        self.labels = labels
        self._upper = None
        self._lower = None
        self._topo = None
        self._tables = None
        self._bt = None

    # order queries

    @property
    def size(self):
        return self._size

    def __len__(self):
        return self._size

    @property
    def matrix(self):
        if self._matrix is None:
            m = self._build_matrix()
            m.setflags(write=False)
            self._matrix = m
        return self._matrix

    def _build_matrix(self):
        raise NotImplementedError

    def le(self, x, y):
        return bool(self.matrix[x, y])

    def lt(self, x, y):
        return x != y and self.le(x, y)

    def label(self, x):
        return str(x) if self.labels is None else self.labels[x]

    # covers

    def upper_covers(self):
        """Tuple of upper-cover id tuples, one per element."""
        if self._upper is None:
            self._upper = self._compute_upper_covers()
        return self._upper

    def lower_covers(self):
        if self._lower is None:
            low = [[] for _ in range(self._size)]
            for x, ups in enumerate(self.upper_covers()):
                for y in ups:
                    low[y].append(x)
            self._lower = tuple(tuple(v) for v in low)
        return self._lower

    def _compute_upper_covers(self):
        m = self.matrix
        n = self._size
        strict = m & ~np.eye(n, dtype=bool)
        f = strict.astype(np.float32)
        between = (f @ f) > 0
        cov = strict & ~between
        return tuple(tuple(int(y) for y in np.flatnonzero(row)) for row in cov)

    def topological_order(self):
        """Ids sorted so that x < y implies x comes first."""
        if self._topo is None:
            self._topo = self._compute_topological_order()
        return self._topo

    def _compute_topological_order(self):
        below = self.matrix.sum(axis=0)
        return tuple(int(i) for i in np.argsort(below, kind="stable"))

    # lattice helpers, overridable

    def meet(self, x, y):
        return _generic_bound(self, x, y, lower=True)

    def join(self, x, y):
        return _generic_bound(self, x, y, lower=False)

    def __repr__(self):
        return f"{type(self).__name__}(size={self._size})"


def _generic_bound(p, x, y, lower):
    m = p.matrix
    if lower:
        bounds = m[:, x] & m[:, y]
    else:
        bounds = m[x, :] & m[y, :]
    ids = np.flatnonzero(bounds)
    if len(ids) == 0:
        raise NotLatticeError(f"no common {'lower' if lower else 'upper'} bound for {x}, {y}")
    for c in ids:
        if lower and m[ids, c].all():
            return int(c)
        if not lower and m[c, ids].all():
            return int(c)
    kind = "meet" if lower else "join"
    raise NotLatticeError(f"{kind} of {x} and {y} does not exist")


def check_order_axioms(p):
    """Raise if the order matrix is not a partial order."""
    m = p.matrix
    if not m.diagonal().all():
        raise ValueError("order is not reflexive")
    off = m & m.T & ~np.eye(p.size, dtype=bool)
    if off.any():
        x, y = np.argwhere(off)[0]
        raise CycleError(f"antisymmetry fails for {int(x)} and {int(y)}")
    f = m.astype(np.float32)
    if (((f @ f) > 0) & ~m).any():
        raise ValueError("order is not transitive")
    return True


def poset_from_relation(size, pairs, labels=None):
    """Poset generated by ``pairs`` (reflexive-transitive closure)."""
    if size < 0:
        raise RangeError("size must be nonnegative")
    rel = np.zeros((size, size), dtype=bool)
    for a, b in pairs:
        if not (0 <= a < size and 0 <= b < size):
            raise RangeError(f"pair ({a}, {b}) out of range for size {size}")
        rel[a, b] = True
    m = transitive_closure(rel)
    off = m & m.T & ~np.eye(size, dtype=bool)
    if off.any():
        x, y = np.argwhere(off)[0]
        raise CycleError(f"relation forces {int(x)} <= {int(y)} <= {int(x)}")
    return Poset(m, labels=labels)


def poset_from_covers(size, cover_pairs, labels=None):
    return poset_from_relation(size, cover_pairs, labels=labels)


def covers(p):
    """Set of cover pairs ``(x, y)`` with ``y`` covering ``x``."""
    return {(x, y) for x, ups in enumerate(p.upper_covers()) for y in ups}


def bottom_top(p):
    if p._bt is None:
        minimal = [x for x, low in enumerate(p.lower_covers()) if not low]
        maximal = [x for x, up in enumerate(p.upper_covers()) if not up]
        if len(minimal) != 1 or len(maximal) != 1:
            raise NoExtremumError(
                f"{len(minimal)} minimal and {len(maximal)} maximal elements"
            )
        p._bt = (minimal[0], maximal[0])
    return p._bt


def meet_join(p, x, y):
    return p.meet(x, y), p.join(x, y)


def meet_join_tables(p):
    """Full meet and join tables as int arrays; raises NotLatticeError."""
    if p._tables is not None:
        return p._tables
    m = p.matrix
    n = p.size
    if n == 0:
        p._tables = (np.zeros((0, 0), int), np.zeros((0, 0), int))
        return p._tables
    rank = np.empty(n, dtype=np.int64)
    rank[list(p.topological_order())] = np.arange(n)
    meet = np.empty((n, n), dtype=np.int64)
    join = np.empty((n, n), dtype=np.int64)
    for x in range(n):
        lb = m[:, x][:, None] & m  # column y: common lower bounds of x, y
        if not lb.any(axis=0).all():
            raise NotLatticeError(f"element {x} lacks a common lower bound")
        cand = np.argmax(np.where(lb, rank[:, None], -1), axis=0)
        if (lb & ~m[:, cand]).any():
            y = int(np.flatnonzero((lb & ~m[:, cand]).any(axis=0))[0])
            raise NotLatticeError(f"meet of {x} and {y} does not exist")
        meet[x] = cand
        ub = m[x, :][:, None] & m.T  # column y: common upper bounds
        if not ub.any(axis=0).all():
            raise NotLatticeError(f"element {x} lacks a common upper bound")
        cand = np.argmax(np.where(ub, -rank[:, None], -n - 1), axis=0)
        if (ub & ~m[cand, :].T).any():
            y = int(np.flatnonzero((ub & ~m[cand, :].T).any(axis=0))[0])
            raise NotLatticeError(f"join of {x} and {y} does not exist")
        join[x] = cand
    meet.setflags(write=False)
    join.setflags(write=False)
    p._tables = (meet, join)
    return p._tables


def is_lattice(p):
    if p.size == 0:
        return False
    try:
        meet_join_tables(p)
    except NotLatticeError:
        return False
    return True


def is_distributive(p):
    """Median identity (x^y)v(y^z)v(z^x) == (xvy)^(yvz)^(zvx) for all triples."""
    meet, join = meet_join_tables(p)
    n = p.size
    for x in range(n):
        mx = meet[x]  # x ^ y over y
        jx = join[x]
        # lhs[y, z] = (x^y) v (y^z) v (z^x)
        lhs = join[join[mx[:, None], meet], mx[None, :]]
        rhs = meet[meet[jx[:, None], join], jx[None, :]]
        if not np.array_equal(lhs, rhs):
            return False
    return True


def is_distributive_textbook(p):
    """x ^ (y v z) == (x ^ y) v (x ^ z) for all triples."""
    meet, join = meet_join_tables(p)
    for x in range(p.size):
        lhs = meet[x][join]
        rhs = join[meet[x][:, None], meet[x][None, :]]
        if not np.array_equal(lhs, rhs):
            return False
    return True


def product(p, q):
    """Cartesian product with componentwise order; id of (a, b) is a*|q| + b."""
    m = np.kron(p.matrix.astype(np.uint8), q.matrix.astype(np.uint8)).astype(bool)
    labels = [f"({p.label(a)},{q.label(b)})" for a, b in _iproduct(range(p.size), range(q.size))]
    return Poset(m, labels=labels)


@dataclass(frozen=True)
class IsoWitness:
    forward: tuple
    backward: tuple

    @classmethod
    def from_forward(cls, forward):
        forward = tuple(int(v) for v in forward)
        backward = [None] * len(forward)
        for x, y in enumerate(forward):
            if not 0 <= y < len(forward) or backward[y] is not None:
                return cls(forward, tuple(backward))
            backward[y] = x
        return cls(forward, tuple(backward))

    @classmethod
    def identity(cls, size):
        ids = tuple(range(size))
        return cls(ids, ids)


def verify_iso(a, b, w):
    n = a.size
    if b.size != n or len(w.forward) != n or len(w.backward) != n:
        return False
    if any(v is None for v in w.backward):
        return False
    fwd = np.asarray(w.forward, dtype=np.int64)
    bwd = np.asarray(w.backward, dtype=np.int64)
    if fwd.min(initial=0) < 0 or fwd.max(initial=0) >= n:
        return False
    if not (np.array_equal(bwd[fwd], np.arange(n)) and np.array_equal(fwd[bwd], np.arange(n))):
        return False
    return bool(np.array_equal(a.matrix, b.matrix[np.ix_(fwd, fwd)]))
