import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from latstack import (
    DIAG,
    HermiteHistory,
    MPartition,
    chain_to_partition,
    chain_to_walk,
    chain_to_word,
    count_maximal_chains,
    enumerate_maximal_chains,
    hermite_histories,
    history_to_involution,
    is_stack_word,
    lattice_walks,
    m_partition_count,
    m_partitions,
    odd_double_factorial,
    partition_to_chain,
    row_star_sublattice,
    satisfies_star,
    stack_words,
    star_sublattice,
    walk_to_chain,
    word_to_chain,
)
from latstack.errors import (
    ChoiceOutOfRangeError,
    InvalidPartitionError,
    InvalidWalkError,
    InvalidWordError,
    NotMaximalError,
)


def tuple_chains(p, cap=5000):
    return [[p.tuples[i] for i in c] for c in enumerate_maximal_chains(p, cap)]


def brute_words(k, n):
    """Every arrangement of the multiset, filtered by the prefix rule."""
    letters = [i for i in range(1, n + 1) for _ in range(k + 1)]
    out = set()
    for w in set(itertools.permutations(letters)):
        seen = [0] * (n + 1)
        ok = True
        for a in w:
            seen[a] += 1
            if any(seen[i] and seen[i] < seen[j] for i in range(1, n + 1) for j in range(i + 1, n + 1)):
                ok = False
                break
        if ok:
            out.add(w)
    return out


GOLDEN_CHAIN = [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (3, 2), (3, 3)]
GOLDEN_WORD = (2, 1, 1, 2, 1, 2)

WALK_DISPLAY = """0000000 0000001 0000011 0000111 0000112 0001112 0011112 0012112
0012122 0022122 0122122 0122222 0222222 1222222 2222222""".split()
PAIRING = MPartition.of([(11, 14), (8, 10), (7, 13), (6, 9), (4, 12), (3, 5), (1, 2)])


# words


def test_golden_word():
    assert chain_to_word(GOLDEN_CHAIN, 2) == GOLDEN_WORD
    assert word_to_chain(GOLDEN_WORD, 2, 2) == GOLDEN_CHAIN


def test_word_small_cases():
    c = word_to_chain((1, 1), 1, 1)
    assert c == [(0,), (1,), (2,)]
    assert chain_to_word(c, 1) == (1, 1)
    assert len(list(stack_words(2, 2))) == 7


def test_invalid_words():
    with pytest.raises(InvalidWordError) as exc:
        word_to_chain((1, 2, 2, 2, 1, 1), 2, 2)
    assert exc.value.prefix
    assert is_stack_word((2, 1, 1, 2), 1, 2)
    assert not is_stack_word((2, 2, 1, 1), 1, 2)
    with pytest.raises(InvalidWordError):
        word_to_chain((1, 1, 1), 1, 1)


@pytest.mark.parametrize("k,n", [(k, n) for k in range(3) for n in range(4) if (k + 1) * n <= 8])
def test_words_match_brute_force(k, n):
    assert set(stack_words(k, n)) == brute_words(k, n)


@pytest.mark.parametrize("k,n", [(k, n) for k in range(4) for n in range(4)])
def test_word_bijection(k, n):
    p = star_sublattice(k, n, 1)
    chains = tuple_chains(p)
    words = set(stack_words(k, n))
    assert len(words) == count_maximal_chains(p)
    assert {chain_to_word(c, k) for c in chains} == words
    for w in words:
        c = word_to_chain(w, k, n)
        assert chain_to_word(c, k) == w
        assert all(satisfies_star(t, k) for t in c)


def test_chain_validation():
    with pytest.raises(NotMaximalError):
        chain_to_word([(0, 0), (1, 1), (2, 2)], 1)
    with pytest.raises(NotMaximalError):
        # (2, 0) violates the star condition for k = 1
        chain_to_word([(0, 0), (1, 0), (2, 0), (2, 1), (2, 2)], 1)


# partitions


def test_golden_partition_walk():
    chain = [tuple(int(c) for c in s) for s in WALK_DISPLAY]
    assert chain_to_partition(chain, 2) == PAIRING
    assert partition_to_chain(PAIRING, 7, 2) == chain


def test_partition_small_cases():
    assert chain_to_partition([(0,), (1,), (2,)], 2) == MPartition.of([(1, 2)])
    assert partition_to_chain(MPartition.of([(1, 2)]), 1, 2) == [(0,), (1,), (2,)]
    assert len(list(m_partitions(3, 2))) == 10


def test_invalid_partitions():
    with pytest.raises(InvalidPartitionError):
        partition_to_chain(MPartition.of([(1, 2), (2, 3)]), 2, 2)
    with pytest.raises(InvalidPartitionError):
        partition_to_chain(MPartition.of([(1, 2, 3)]), 2, 2)


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 5) for n in range(5) if m * n <= 12])
def test_partition_bijection(m, n):
    parts = list(m_partitions(m, n))
    assert len(set(parts)) == len(parts) == m_partition_count(m, n)
    p = star_sublattice(1, n, m - 1)
    assert count_maximal_chains(p) == len(parts)
    chains = tuple_chains(p, cap=20000)
    assert {chain_to_partition(c, m) for c in chains} == set(parts)
    for c in chains:
        assert partition_to_chain(chain_to_partition(c, m), n, m) == c


# walks


def test_walk_small_cases():
    p = row_star_sublattice(1, 1, 1)
    (c,) = tuple_chains(p)
    assert chain_to_walk(c, 1, 1) == (DIAG, 1)
    assert walk_to_chain((DIAG, 1), 1, 1) == c
    assert chain_to_walk([(0, 0, 0)], 2, 0) == ()
    with pytest.raises(InvalidWalkError):
        walk_to_chain((1, DIAG), 1, 1)
    assert len(set(lattice_walks(2, 2))) == 16


@pytest.mark.parametrize("n,m", [(n, m) for n in range(4) for m in range(6)])
def test_walk_bijection(n, m):
    p = row_star_sublattice(n, 1, m)
    total = count_maximal_chains(p)
    if total > 5000:
        pytest.skip("over the enumeration bound")
    walks = set(lattice_walks(n, m))
    assert len(walks) == total
    chains = tuple_chains(p)
    assert {chain_to_walk(c, n, m) for c in chains} == walks
    for w in walks:
        assert chain_to_walk(walk_to_chain(w, n, m), n, m) == w


def test_walk_count_192():
    walks = list(lattice_walks(2, 3))
    assert len(walks) == 192
    assert all(chain_to_walk(walk_to_chain(w, 2, 3), 2, 3) == w for w in walks)


# Hermite histories


def test_golden_history():
    h = HermiteHistory("UDUUDUUUDDUDDD", (1, 1, 1, 2, 1, 3, 1))
    assert h.up_positions() == [1, 3, 4, 6, 7, 8, 11]
    assert history_to_involution(h) == PAIRING
    assert history_to_involution(HermiteHistory("UD", (1,))) == MPartition.of([(1, 2)])


def test_history_errors():
    with pytest.raises(ChoiceOutOfRangeError):
        history_to_involution(HermiteHistory("UD", (2,)))
    with pytest.raises(ChoiceOutOfRangeError):
        history_to_involution(HermiteHistory("DU", (1,)))


@pytest.mark.parametrize("n", range(6))
def test_histories_hit_every_involution_once(n):
    invs = [history_to_involution(h) for h in hermite_histories(n)]
    assert len(invs) == len(set(invs)) == odd_double_factorial(n)
    assert set(invs) == set(m_partitions(2, n))


@given(st.integers(1, 5).flatmap(lambda n: st.sampled_from(list(hermite_histories(n)))))
def test_history_blocks_are_pairs(h):
    inv = history_to_involution(h)
    assert all(len(b) == 2 and b[0] < b[1] for b in inv)
    # each up-step opens exactly one arc
    assert sorted(b[0] for b in inv) == h.up_positions()
