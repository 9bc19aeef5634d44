"""Bijections between maximal chains and words, set partitions, lattice walks
and Hermite histories.

Chains are sequences of coordinate tuples listed bottom to top, each step
raising one coordinate by one.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import (
    ChoiceOutOfRangeError,
    InvalidPartitionError,
    InvalidWalkError,
    InvalidWordError,
    NotMaximalError,
)
from .hypercube import satisfies_row_star, satisfies_star

__all__ = [
    "DIAG",
    "MPartition",
    "HermiteHistory",
    "chain_steps",
    "chain_to_word",
    "word_to_chain",
    "is_stack_word",
    "stack_words",
    "chain_to_partition",
    "partition_to_chain",
    "m_partitions",
    "chain_to_walk",
    "walk_to_chain",
    "lattice_walks",
    "history_to_involution",
    "hermite_histories",
    "dyck_paths",
]

DIAG = 0


def chain_steps(chain, height, member=None):
    """Coordinate index (0-based) raised at each step; validates maximality."""
    chain = [tuple(t) for t in chain]
    if not chain:
        raise NotMaximalError("empty chain")
    dim = len(chain[0])
    if any(c != 0 for c in chain[0]) or any(c != height for c in chain[-1]):
        raise NotMaximalError("chain must run from the bottom to the top")
    steps = []
    for a, b in zip(chain, chain[1:]):
        diff = [j for j in range(dim) if a[j] != b[j]]
        if len(diff) != 1 or b[diff[0]] != a[diff[0]] + 1:
            raise NotMaximalError(f"{a} -> {b} is not a unit step")
        steps.append(diff[0])
    if member is not None:
        for t in chain:
            if not member(t):
                raise NotMaximalError(f"{t} is outside the lattice")
    return steps


# words: maximal chains of Sigma^k_n C^n_1 inside C^{n*}_{k+1}

def chain_to_word(chain, k):
    """Letters (1-based) read from the top of the chain downwards."""
    steps = chain_steps(chain, k + 1, lambda t: satisfies_star(t, k))
    return tuple(i + 1 for i in reversed(steps))


def is_stack_word(word, k, n):
    try:
        _check_word(word, k, n)
    except InvalidWordError:
        return False
    return True


def _check_word(word, k, n):
    if len(word) != (k + 1) * n:
        raise InvalidWordError(f"word has length {len(word)}, expected {(k + 1) * n}")
    seen = [0] * (n + 1)
    for pos, a in enumerate(word):
        if not 1 <= a <= n:
            raise InvalidWordError(f"letter {a} outside 1..{n}", prefix=tuple(word[:pos + 1]))
        seen[a] += 1
        if seen[a] > k + 1:
            raise InvalidWordError(f"letter {a} occurs more than {k + 1} times", prefix=tuple(word[:pos + 1]))
        # an occurring letter must be at least as frequent as every later letter
        for i in range(1, n + 1):
            if seen[i] and any(seen[i] < seen[j] for j in range(i + 1, n + 1)):
                raise InvalidWordError("prefix condition fails", prefix=tuple(word[:pos + 1]))


def word_to_chain(word, k, n):
    word = tuple(word)
    _check_word(word, k, n)
    x = [k + 1] * n
    down = [tuple(x)]
    for a in word:
        x[a - 1] -= 1
        down.append(tuple(x))
    chain = down[::-1]
    for t in chain:
        if not satisfies_star(t, k):
            raise InvalidWordError(f"tuple {t} violates the column condition")
    return chain


def stack_words(k, n):
    """Enumerate valid words directly, pruning on the prefix condition."""
    seen = [0] * (n + 1)
    word = []
    total = (k + 1) * n

    def ok():
        for i in range(1, n + 1):
            if seen[i] and any(seen[i] < seen[j] for j in range(i + 1, n + 1)):
                return False
        return True

    def rec():
        if len(word) == total:
            yield tuple(word)
            return
        for a in range(1, n + 1):
            if seen[a] <= k:
                seen[a] += 1
                word.append(a)
                if ok():
                    yield from rec()
                word.pop()
                seen[a] -= 1

    yield from rec()


# m-partitions: maximal chains of Sigma_n C^n_{m-1} inside C^{n*}_m (k = 1)

@dataclass(frozen=True)
class MPartition:
    """Blocks of {1..mn}, each sorted, blocks sorted by least element."""

    blocks: tuple

    @classmethod
    def of(cls, blocks):
        return cls(tuple(sorted(tuple(sorted(b)) for b in blocks)))

    def __iter__(self):
        return iter(self.blocks)


def chain_to_partition(chain, m):
    """Group the chain's mn steps by coordinate.

    Steps are labelled from the top of the chain: the last step is 1 and the
    first step is mn.
    """
    steps = chain_steps(chain, m, lambda t: satisfies_star(t, 1))
    total = len(steps)
    blocks = {}
    for t, coord in enumerate(steps):
        blocks.setdefault(coord, []).append(total - t)
    return MPartition.of(blocks.values())


def _check_partition(p, n, m):
    blocks = [tuple(b) for b in p]
    if len(blocks) != n or any(len(b) != m for b in blocks):
        raise InvalidPartitionError(f"need {n} blocks of size {m}")
    flat = sorted(x for b in blocks for x in b)
    if flat != list(range(1, m * n + 1)):
        raise InvalidPartitionError(f"blocks do not partition 1..{m * n}")
    return blocks


def partition_to_chain(p, n, m):
    """Inverse of :func:`chain_to_partition`.

    The block fired first in time (largest label) drives coordinate n, the
    next one coordinate n - 1, and so on.
    """
    blocks = _check_partition(p, n, m)
    order = sorted(blocks, key=max, reverse=True)
    coord_of = {}
    for c, b in zip(range(n - 1, -1, -1), order):
        for label in b:
            coord_of[label] = c
    x = [0] * n
    chain = [tuple(x)]
    for t in range(m * n):
        x[coord_of[m * n - t]] += 1
        chain.append(tuple(x))
    return chain


def m_partitions(m, n):
    """All partitions of {1..mn} into n blocks of size m."""
    def rec(rest):
        if not rest:
            yield ()
            return
        first, others = rest[0], rest[1:]
        for mates in combinations(others, m - 1):
            block = (first,) + mates
            left = tuple(x for x in others if x not in mates)
            for tail in rec(left):
                yield (block,) + tail

    for blocks in rec(tuple(range(1, m * n + 1))):
        yield MPartition.of(blocks)


# walks: maximal chains of Sigma_m C^n_m inside C^{n+1 star}_m

def chain_to_walk(chain, n, m):
    """DOWN_i (encoded i) for a raise of coordinate i <= n, DIAG (0) for coordinate n+1."""
    if m == 0:
        chain_steps(chain, 0)
        return ()
    steps = chain_steps(chain, m, lambda t: satisfies_row_star(t, n))
    return tuple(DIAG if c == n else c + 1 for c in steps)


def _walk_positions(walk, n, m):
    pos = [0] * n
    out = [tuple(pos)]
    for s in walk:
        if s == DIAG:
            pos = [p + 1 for p in pos]
        elif 1 <= s <= n:
            pos[s - 1] -= 1
        else:
            raise InvalidWalkError(f"unknown step {s}")
        if any(p < 0 or p > m for p in pos):
            raise InvalidWalkError(f"walk leaves the box at {tuple(pos)}")
        out.append(tuple(pos))
    return out


def walk_to_chain(walk, n, m):
    walk = tuple(walk)
    if len(walk) != (n + 1) * m:
        raise InvalidWalkError(f"walk has length {len(walk)}, expected {(n + 1) * m}")
    pos = _walk_positions(walk, n, m)
    if any(pos[-1]):
        raise InvalidWalkError("walk does not return to the origin")
    x = [0] * (n + 1)
    chain = [tuple(x)]
    for s in walk:
        x[n if s == DIAG else s - 1] += 1
        chain.append(tuple(x))
    if any(c != m for c in x):
        raise InvalidWalkError("walk does not reach the top")
    return chain


def lattice_walks(n, m):
    """Closed walks of length (n+1)m in the box with DIAG / DOWN_i steps."""
    total = (n + 1) * m
    walk = []

    def rec(pos):
        left = total - len(walk)
        if left == 0:
            if not any(pos):
                yield tuple(walk)
            return
        # returning needs one DOWN per unit of height
        if sum(pos) > left:
            return
        if max(pos, default=0) < m:
            walk.append(DIAG)
            yield from rec([p + 1 for p in pos])
            walk.pop()
        for i in range(n):
            if pos[i] > 0:
                walk.append(i + 1)
                nxt = list(pos)
                nxt[i] -= 1
                yield from rec(nxt)
                walk.pop()

    if n == 0:
        yield (DIAG,) * m
        return
    yield from rec([0] * n)


# Hermite histories

@dataclass(frozen=True)
class HermiteHistory:
    """Dyck path as a string of 'U'/'D' plus one choice per up-step.

    The choice at an up-step ranges over 1..h, h being the height reached
    by that up-step.
    """

    path: str
    choices: tuple

    def up_positions(self):
        return [i + 1 for i, s in enumerate(self.path) if s == "U"]

    def weights(self):
        h, out = 0, []
        for s in self.path:
            h += 1 if s == "U" else -1
            if s == "U":
                out.append(h)
        return out


def dyck_paths(n):
    def rec(prefix, up, down):
        if up == down == n:
            yield prefix
            return
        if up < n:
            yield from rec(prefix + "U", up + 1, down)
        if down < up:
            yield from rec(prefix + "D", up, down + 1)

    yield from rec("", 0, 0)


def hermite_histories(n):
    for path in dyck_paths(n):
        weights = HermiteHistory(path, ()).weights()

        def rec(i, acc):
            if i == len(weights):
                yield HermiteHistory(path, tuple(acc))
                return
            for c in range(1, weights[i] + 1):
                acc.append(c)
                yield from rec(i + 1, acc)
                acc.pop()

        yield from rec(0, [])


def history_to_involution(h):
    """Pair up-steps with down-steps, right to left, counting options from the right."""
    path = h.path
    height = 0
    for s in path:
        height += 1 if s == "U" else -1
        if height < 0 or s not in "UD":
            raise ChoiceOutOfRangeError("path is not a Dyck path")
    if height != 0:
        raise ChoiceOutOfRangeError("path does not return to level 0")
    ups = h.up_positions()
    if len(h.choices) != len(ups):
        raise ChoiceOutOfRangeError("need one choice per up-step")
    free = [i + 1 for i, s in enumerate(path) if s == "D"]
    pairs = []
    for pos, choice in sorted(zip(ups, h.choices), reverse=True):
        options = [d for d in free if d > pos]
        if not 1 <= choice <= len(options):
            raise ChoiceOutOfRangeError(
                f"choice {choice} at up-step {pos} outside 1..{len(options)}"
            )
        d = options[-choice]
        free.remove(d)
        pairs.append((pos, d))
    return MPartition.of(pairs)
