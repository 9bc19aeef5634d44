"""Finite lattices built by lax stacking, their hypercube models and chain counts."""

from .bijections import (
    DIAG,
    HermiteHistory,
    MPartition,
    chain_to_partition,
    chain_to_walk,
    chain_to_word,
    dyck_paths,
    hermite_histories,
    history_to_involution,
    is_stack_word,
    lattice_walks,
    m_partitions,
    partition_to_chain,
    stack_words,
    walk_to_chain,
    word_to_chain,
)
from .counting import (
    OVER_BUDGET,
    SequenceGrid,
    catalan_kdim,
    cell_count,
    central_multinomial,
    count_maximal_chains,
    enumerate_maximal_chains,
    grid,
    hypercube_count,
    kreweras,
    m_partition_count,
    odd_double_factorial,
    path_weight,
    weighted_dyck_sum,
)
from .errors import *  # noqa: F401,F403
from .hypercube import (
    HypercubeLattice,
    RowStarSublattice,
    StarSublattice,
    TuplePoset,
    canonical_iso,
    chain,
    check_star_prime,
    closed_under_ambient_ops,
    column_square,
    column_tower,
    power,
    row_canonical_iso,
    row_square,
    row_star_sublattice,
    row_tower,
    satisfies_row_star,
    satisfies_star,
    star_sublattice,
)
from .io import export_dot, read_poset, render_grid, write_poset
from .lax import (
    LatticeSeries,
    LaxPushout,
    LaxSum,
    MonotoneMap,
    Square,
    StackingTower,
    TransportContext,
    compose,
    identity_map,
    induced_map,
    iterate_stacking,
    lax_pushout,
    lax_sum,
    lax_sum_meet_join,
    make_map,
    map_properties,
    pushout_square,
    transport,
    verify_lax_pushout,
)
from .poset import (
    IsoWitness,
    Poset,
    bottom_top,
    covers,
    is_distributive,
    is_lattice,
    meet_join,
    meet_join_tables,
    poset_from_covers,
    poset_from_relation,
    product,
    verify_iso,
)

__version__ = "0.1.0"
