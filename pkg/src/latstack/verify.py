"""Self-check suites run by ``latstack verify``.

Each suite yields :class:`Check` records; a suite passes when every record
does.  Ranges are chosen to finish in seconds on a laptop.
"""

from dataclasses import dataclass

from . import bijections as bj
from .counting import (
    catalan_kdim,
    cell_count,
    central_multinomial,
    count_maximal_chains,
    enumerate_maximal_chains,
    hypercube_count,
    kreweras,
    m_partition_count,
    odd_double_factorial,
    weighted_dyck_sum,
)
from .hypercube import (
    canonical_iso,
    closed_under_ambient_ops,
    column_square,
    column_tower,
    row_canonical_iso,
    row_square,
    row_star_sublattice,
    row_tower,
    star_sublattice,
)
from .lax import verify_lax_pushout
from .poset import is_distributive, is_lattice, verify_iso

SUITES = ("formulas", "representations", "structure", "bijections")


@dataclass
class Check:
    suite: str
    name: str
    ok: bool
    detail: str = ""


def _eq(suite, name, got, want):
    return Check(suite, name, got == want, f"got {got}, expected {want}")


def formulas(max_n=6, max_m=3, max_k=4):
    s = "formulas"
    for n in range(max_n + 1):
        for k in range(1, max_k + 1):
            yield _eq(s, f"catalan k={k} n={n}", cell_count("column", k, n, 0), catalan_kdim(k, n))
        for m in range(max_m + 1):
            yield _eq(s, f"hypercube m={m} n={n}", cell_count("column", 0, n, m), hypercube_count(m, n))
            yield _eq(
                s, f"m-partitions m={m + 1} n={n}", cell_count("column", 1, n, m), m_partition_count(m + 1, n)
            )
        yield _eq(s, f"double factorial n={n}", cell_count("column", 1, n, 1), odd_double_factorial(n))
    for m in range(max_n + 1):
        yield _eq(s, f"kreweras m={m}", cell_count("row", 1, 2, m), kreweras(m))
        yield _eq(s, f"central binomial m={m}", cell_count("row", 0, 2, m), central_multinomial(2, m))
        yield _eq(s, f"central trinomial m={m}", cell_count("row", 0, 3, m), central_multinomial(3, m))
    for n in range(11):
        yield _eq(s, f"weighted dyck n={n}", weighted_dyck_sum(n), odd_double_factorial(n))


def _param_cells(max_k, max_m, max_n):
    for k in range(max_k + 1):
        for m in range(max_m + 1):
            for n in range(max_n + 1):
                yield k, n, m


def representations(limit=2000, max_k=3, max_m=3, max_n=5):
    s = "representations"
    for k, n, m in _param_cells(max_k, max_m, max_n):
        if (k + m + 1) ** n <= limit:
            w, stacked, star = canonical_iso(k, n, m)
            ok = verify_iso(stacked, star, w)
            same = count_maximal_chains(stacked) == count_maximal_chains(star)
            yield Check(s, f"column k={k} n={n} m={m}", ok and same)
        if (m + 1) ** (n + k) <= limit:
            w, stacked, star = row_canonical_iso(k, n, m)
            ok = verify_iso(stacked, star, w)
            same = count_maximal_chains(stacked) == count_maximal_chains(star)
            yield Check(s, f"row k={k} n={n} m={m}", ok and same)


def structure(max_elements=500, max_k=3, max_m=2, max_n=4):
    s = "structure"
    for k in range(max_k + 1):
        for m in range(max_m + 1):
            for n in range(max_n + 1):
                if (k + m + 1) ** n <= 2000:
                    p = star_sublattice(k, n, m)
                    yield Check(s, f"closure column k={k} n={n} m={m}", closed_under_ambient_ops(p))
                    if p.size <= max_elements:
                        yield Check(
                            s, f"distributive column k={k} n={n} m={m}", is_lattice(p) and is_distributive(p)
                        )
                    yield Check(s, f"square column k={k} n={n} m={m}", verify_lax_pushout(column_square(k, n, m)))
                if (m + 1) ** (n + k) <= 2000:
                    p = row_star_sublattice(n, k, m)
                    yield Check(s, f"closure row n={n} k={k} m={m}", closed_under_ambient_ops(p))
                    if p.size <= max_elements:
                        yield Check(s, f"distributive row n={n} k={k} m={m}", is_lattice(p) and is_distributive(p))
                    yield Check(s, f"square row n={n} k={k} m={m}", verify_lax_pushout(row_square(n, k, m)))
    for k, n, m in [(2, 3, 1), (3, 3, 0), (2, 2, 2)]:
        tower = column_tower(k, n, m)
        for (j, i), sq in tower.squares():
            yield Check(s, f"tower column {k},{n},{m} square {j},{i}", verify_lax_pushout(sq))
        for j in range(k + 1):
            for i in range(n + 1):
                p = tower.poset(j, i)
                if p.size <= max_elements:
                    yield Check(s, f"stacked column Sigma^{j}_{i} m={m}", is_lattice(p) and is_distributive(p))
    for k, n, m in [(2, 1, 3), (2, 2, 2)]:
        tower = row_tower(k, n, m)
        for (j, i), sq in tower.squares():
            yield Check(s, f"tower row {k},{n},{m} square {j},{i}", verify_lax_pushout(sq))


def bijections(max_chains=5000):
    s = "bijections"
    for k in range(4):
        for n in range(5):
            p = star_sublattice(k, n, 1)
            words = set(bj.stack_words(k, n))
            yield _eq(s, f"word count k={k} n={n}", len(words), count_maximal_chains(p))
            if len(words) <= max_chains:
                chains = [[p.tuples[i] for i in c] for c in enumerate_maximal_chains(p, max_chains)]
                images = {bj.chain_to_word(c, k) for c in chains}
                back = all(bj.word_to_chain(bj.chain_to_word(c, k), k, n) == c for c in chains)
                yield Check(s, f"words round trip k={k} n={n}", images == words and back)
    for m in range(1, 13):
        for n in range(0, 13 // m + 1):
            if m * n > 12:
                continue
            parts = list(bj.m_partitions(m, n))
            yield _eq(s, f"partition count m={m} n={n}", len(parts), m_partition_count(m, n))
            if len(parts) <= max_chains:
                back = all(bj.chain_to_partition(bj.partition_to_chain(q, n, m), m) == q for q in parts)
                yield Check(s, f"partitions round trip m={m} n={n}", back)
    for n in range(4):
        for m in range(7):
            p = row_star_sublattice(n, 1, m)
            total = count_maximal_chains(p)
            if total > max_chains:
                continue
            walks = set(bj.lattice_walks(n, m))
            yield _eq(s, f"walk count n={n} m={m}", len(walks), total)
            back = all(bj.chain_to_walk(bj.walk_to_chain(w, n, m), n, m) == w for w in walks)
            yield Check(s, f"walks round trip n={n} m={m}", back)
    for n in range(6):
        invs = [bj.history_to_involution(h) for h in bj.hermite_histories(n)]
        yield _eq(s, f"hermite histories n={n}", (len(invs), len(set(invs))), (odd_double_factorial(n),) * 2)


def run(suite="all"):
    names = SUITES if suite == "all" else (suite,)
    table = {
        "formulas": formulas,
        "representations": representations,
        "structure": structure,
        "bijections": bijections,
    }
    for name in names:
        yield from table[name]()
