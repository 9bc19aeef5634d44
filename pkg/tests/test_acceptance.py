"""Acceptance gate: one check per criterion, each printing a PASS/FAIL line.

Run with ``pytest -v -s tests/test_acceptance.py`` or directly with
``python3 tests/test_acceptance.py``.
"""

import json
import sys
import tempfile
import time
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tables import COLUMN_TABLE, ROW_TABLE  # noqa: E402

from latstack import bijections as bj  # noqa: E402
from latstack.cli import main  # noqa: E402
from latstack.counting import (  # noqa: E402
    catalan_kdim,
    cell_count,
    central_multinomial,
    count_maximal_chains,
    enumerate_maximal_chains,
    hypercube_count,
    kreweras,
    m_partition_count,
    odd_double_factorial,
    path_weight,
    weighted_dyck_sum,
)
from latstack.hypercube import (  # noqa: E402
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
from latstack.lax import verify_lax_pushout  # noqa: E402
from latstack.poset import is_distributive, is_lattice, poset_from_relation, verify_iso  # noqa: E402

# Parameter ranges for criteria whose quantifiers are open-ended.
MAX_K, MAX_M, MAX_N = 4, 4, 7
REP_LIMIT = 2000  # criterion 4 ambient bound, as stated
FORMULA_AMBIENT = 20000  # "in budget" for criterion 3
STRUCT_AMBIENT = 2000  # sublattices and squares checked in criterion 6
LATTICE_LIMIT = 500
ORACLE_SIZE, ORACLE_CHAINS = 200, 5000


def _grid_via_cli(axis, ks, ns, ms):
    with tempfile.TemporaryDirectory() as tmp:
        out = Path(tmp) / "grid.json"
        code = main(["grid", "--axis", axis, "--k", ks, "--n", ns, "--m", ms, "--format", "json", "--out", str(out)])
        assert code == 0
        return json.loads(out.read_text())


def criterion_1():
    doc = _grid_via_cli("column", "0..4", "0..5", "0..3")
    bad = [
        (r["m"], r["k"]) for r in doc["rows"] if [int(v) for v in r["values"]] != COLUMN_TABLE[r["m"]][r["k"]]
    ]
    return not bad and len(doc["rows"]) == 20, f"mismatched rows {bad}" if bad else "20 rows x 6 columns"


def criterion_2():
    doc = _grid_via_cli("row", "0..4", "0..3", "0..5")
    bad = [
        (r["n"], r["k"]) for r in doc["rows"] if [int(v) for v in r["values"]] != ROW_TABLE[r["n"]][r["k"]]
    ]
    pinned = ROW_TABLE[1][1][3] == 5
    return not bad and pinned and len(doc["rows"]) == 20, f"mismatched rows {bad}" if bad else "20 rows x 6 columns"


def criterion_3():
    checks = []

    def col(k, n, m, want, label):
        if (k + m + 1) ** n <= FORMULA_AMBIENT:
            checks.append((label, cell_count("column", k, n, m) == want))

    def row(k, n, m, want, label):
        if (m + 1) ** (n + k) <= FORMULA_AMBIENT:
            checks.append((label, cell_count("row", k, n, m) == want))

    for n in range(MAX_N + 2):
        for k in range(1, MAX_K + 2):
            col(k, n, 0, catalan_kdim(k, n), f"catalan k={k} n={n}")
        for m in range(MAX_M + 1):
            col(0, n, m, hypercube_count(m, n), f"hypercube m={m} n={n}")
            col(1, n, m, m_partition_count(m + 1, n), f"m-partitions m={m + 1} n={n}")
        col(1, n, 1, odd_double_factorial(n), f"double factorial n={n}")
    for m in range(12):
        row(1, 2, m, kreweras(m), f"kreweras m={m}")
        row(0, 2, m, central_multinomial(2, m), f"(2m)!/(m!)^2 m={m}")
        row(0, 3, m, central_multinomial(3, m), f"(3m)!/(m!)^3 m={m}")
    bad = [label for label, ok in checks if not ok]
    return not bad, f"{len(checks)} cells" + (f", failing {bad}" if bad else "")


def criterion_4():
    cells, bad = 0, []
    for k in range(MAX_K + 1):
        for m in range(MAX_M + 1):
            for n in range(MAX_N + 1):
                if (k + m + 1) ** n <= REP_LIMIT:
                    w, stacked, star = canonical_iso(k, n, m)
                    cells += 1
                    if not (verify_iso(stacked, star, w) and count_maximal_chains(stacked) == count_maximal_chains(star)):
                        bad.append(("column", k, n, m))
                if (m + 1) ** (n + k) <= REP_LIMIT:
                    w, stacked, star = row_canonical_iso(k, n, m)
                    cells += 1
                    if not (verify_iso(stacked, star, w) and count_maximal_chains(stacked) == count_maximal_chains(star)):
                        bad.append(("row", k, n, m))
    return not bad, f"{cells} cells" + (f", failing {bad}" if bad else "")


def _chains(p, cap):
    return [[p.tuples[i] for i in c] for c in enumerate_maximal_chains(p, cap)]


def criterion_5():
    bad = []
    # words, k <= 3, n <= 4
    for k in range(4):
        for n in range(5):
            p = star_sublattice(k, n, 1)
            total = count_maximal_chains(p)
            words = set(bj.stack_words(k, n))
            chains = _chains(p, total)
            ok = len(words) == total
            ok = ok and all(bj.chain_to_word(bj.word_to_chain(w, k, n), k) == w for w in words)
            ok = ok and all(bj.word_to_chain(bj.chain_to_word(c, k), k, n) == c for c in chains)
            if not ok:
                bad.append(("words", k, n))
    # m-partitions, mn <= 12
    for m in range(1, 13):
        for n in range(12 // m + 1):
            parts = list(bj.m_partitions(m, n))
            p = star_sublattice(1, n, m - 1)
            total = count_maximal_chains(p)
            ok = len(set(parts)) == len(parts) == total
            ok = ok and all(bj.chain_to_partition(bj.partition_to_chain(q, n, m), m) == q for q in parts)
            if ok and total <= 20000:
                chains = _chains(p, total)
                ok = all(bj.partition_to_chain(bj.chain_to_partition(c, m), n, m) == c for c in chains)
            if not ok:
                bad.append(("partitions", m, n))
    # walks, instances with at most 5000 chains
    walk_cases = 0
    for n in range(MAX_N + 1):
        for m in range(12):
            if (m + 1) ** (n + 1) > 10 ** 6:
                break
            p = row_star_sublattice(n, 1, m)
            total = count_maximal_chains(p)
            if total > 5000:
                break
            walk_cases += 1
            walks = set(bj.lattice_walks(n, m))
            chains = _chains(p, total)
            ok = len(walks) == total
            ok = ok and all(bj.chain_to_walk(bj.walk_to_chain(w, n, m), n, m) == w for w in walks)
            ok = ok and all(bj.walk_to_chain(bj.chain_to_walk(c, n, m), n, m) == c for c in chains)
            if not ok:
                bad.append(("walks", n, m))
    # Hermite histories, n <= 5
    for n in range(6):
        invs = [bj.history_to_involution(h) for h in bj.hermite_histories(n)]
        if not (len(invs) == len(set(invs)) == odd_double_factorial(n) and set(invs) == set(bj.m_partitions(2, n))):
            bad.append(("histories", n))
    return not bad, f"{walk_cases} walk instances" + (f", failing {bad}" if bad else "")


def criterion_6():
    bad, counts = [], {"lattices": 0, "squares": 0, "sublattices": 0}
    for k in range(MAX_K + 1):
        for m in range(MAX_M + 1):
            for n in range(MAX_N + 1):
                if (k + m + 1) ** n <= STRUCT_AMBIENT:
                    p = star_sublattice(k, n, m)
                    counts["sublattices"] += 1
                    if not closed_under_ambient_ops(p):
                        bad.append(("closure column", k, n, m))
                if (k + m + 2) ** (n + 1) <= STRUCT_AMBIENT:
                    counts["squares"] += 1
                    if not verify_lax_pushout(column_square(k, n, m)):
                        bad.append(("column square", k, n, m))
                if (m + 1) ** (n + k) <= STRUCT_AMBIENT:
                    p = row_star_sublattice(n, k, m)
                    counts["sublattices"] += 1
                    if not closed_under_ambient_ops(p):
                        bad.append(("closure row", n, k, m))
                if (m + 2) ** (n + k + 1) <= STRUCT_AMBIENT:
                    counts["squares"] += 1
                    if not verify_lax_pushout(row_square(n, k, m)):
                        bad.append(("row square", n, k, m))
    # stacked lattices Sigma^j_i and every square of their towers
    for build, axis in ((column_tower, "column"), (row_tower, "row")):
        for k in range(MAX_K + 1):
            for m in range(MAX_M + 1):
                for n in range(MAX_N + 1):
                    if axis == "column" and (k + m + 1) ** n > STRUCT_AMBIENT:
                        continue
                    if axis == "row" and (m + 1) ** (n + k) > STRUCT_AMBIENT:
                        continue
                    tower = build(k, n, m)
                    for level in tower.levels:
                        for p in level.posets:
                            if p.size <= LATTICE_LIMIT:
                                counts["lattices"] += 1
                                if not (is_lattice(p) and is_distributive(p)):
                                    bad.append((axis, "lattice", k, n, m))
                    for _, sq in tower.squares():
                        counts["squares"] += 1
                        if not verify_lax_pushout(sq):
                            bad.append((axis, "tower square", k, n, m))
    detail = ", ".join(f"{v} {name}" for name, v in counts.items())
    return not bad, detail + (f", failing {bad[:5]}" if bad else "")


def criterion_7():
    ok = all(weighted_dyck_sum(n) == odd_double_factorial(n) for n in range(11))
    ok = ok and path_weight((0, 0, 0, 1, 1, 4, 6, 7)) == 144
    return ok, "n = 0..10, pinned weight 144"


def _dfs_count(p):
    n = p.size
    le = [[p.le(x, y) for y in range(n)] for x in range(n)]
    ups = [
        [y for y in range(n) if y != x and le[x][y] and not any(z != x and z != y and le[x][z] and le[z][y] for z in range(n))]
        for x in range(n)
    ]

    @lru_cache(maxsize=None)
    def paths(x):
        return 1 if not ups[x] else sum(paths(y) for y in ups[x])

    bottom = next(x for x in range(n) if all(le[x]))
    return paths(bottom)


def _oracle_posets():
    for k in range(MAX_K + 1):
        for m in range(MAX_M + 1):
            for n in range(MAX_N + 1):
                if (k + m + 1) ** n <= 10 ** 4:
                    yield star_sublattice(k, n, m)
                if (m + 1) ** (n + k) <= 10 ** 4:
                    yield row_star_sublattice(n, k, m)
                if (k + m + 1) ** n <= 10 ** 3:
                    yield column_tower(k, n, m).poset()
    yield poset_from_relation(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    yield poset_from_relation(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])


def criterion_8():
    tested, bad = 0, []
    for p in _oracle_posets():
        if p.size > ORACLE_SIZE:
            continue
        dp = count_maximal_chains(p)
        if dp > ORACLE_CHAINS:
            continue
        tested += 1
        if dp != _dfs_count(p) or dp != len(enumerate_maximal_chains(p, ORACLE_CHAINS)):
            bad.append(p)
    return not bad and tested > 0, f"{tested} posets" + (f", {len(bad)} failing" if bad else "")


CRITERIA = [
    (1, "column table reproduction", criterion_1),
    (2, "row table reproduction", criterion_2),
    (3, "closed forms agree with DP", criterion_3),
    (4, "stacked and coordinate representations agree", criterion_4),
    (5, "bijection round trips", criterion_5),
    (6, "lattice, distributivity, pushout squares, closure", criterion_6),
    (7, "weighted Dyck sums", criterion_7),
    (8, "DP equals DFS enumeration", criterion_8),
]


def _line(num, name, ok, detail, seconds):
    return f"criterion {num} [{'PASS' if ok else 'FAIL'}] {name}: {detail} ({seconds:.1f}s)"


@pytest.mark.parametrize("num, name, fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num, name, fn, capsys):
    start = time.perf_counter()
    ok, detail = fn()
    with capsys.disabled():
        print("\n" + _line(num, name, ok, detail, time.perf_counter() - start))
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for num, name, fn in CRITERIA:
        start = time.perf_counter()
        ok, detail = fn()
        failed += not ok
        print(_line(num, name, ok, detail, time.perf_counter() - start), flush=True)
    sys.exit(1 if failed else 0)
