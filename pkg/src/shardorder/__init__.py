"""
Lattice of permutation pre-orders (shard intersections of the braid
arrangement), with the permutation/pre-order bijection, an edge labeling
with chain and Moebius machinery, and the sortable/noncrossing sublattice.
"""

from .errors import (
    CrossingPartitionError,
    IncomparableError,
    InvalidPreorderError,
    ResourceLimitError,
    ShardOrderError,
)
from .perms import (
    BarredPattern,
    DescendingRun,
    Permutation,
    all_permutations,
    contains_barred_pattern,
    descending_runs,
    descents,
    identity,
    inversions,
    is_indecomposable,
    reversal,
)
from .preorders import (
    Block,
    BlockOrder,
    Preorder,
    Violation,
    axiom_violations,
    block_order,
    blocks,
    is_permutation_preorder,
    lam,
    mu,
    placements,
    preorder_from_json,
    preorder_to_json,
)
from .shards import (
    Shard,
    ShardIntersection,
    enumerate_shards,
    intersect,
    lower_shards,
    parse_shard,
    to_preorder,
)
from .lattice import Interval, OmegaLattice, build_lattice, covers_up, join, leq
from .shelling import (
    LabeledChain,
    chain_report,
    combinable_pairs,
    count_decreasing_chains,
    edge_label,
    increasing_chain,
    merged_pair,
    mobius,
)
from .sortable import (
    Barring,
    CoxeterElement,
    CycleOrder,
    all_coxeter_elements,
    barring_of,
    cycle_of,
    is_c_sortable,
    is_noncrossing_preorder,
    linear_coxeter,
    noncrossing_order_of_partition,
    noncrossing_preorders,
    reversed_coxeter,
    sortable_permutations,
)

__all__ = [
    "BarredPattern",
    "Barring",
    "Block",
    "BlockOrder",
    "CoxeterElement",
    "CrossingPartitionError",
    "CycleOrder",
    "DescendingRun",
    "IncomparableError",
    "Interval",
    "InvalidPreorderError",
    "LabeledChain",
    "OmegaLattice",
    "Permutation",
    "Preorder",
    "ResourceLimitError",
    "Shard",
    "ShardIntersection",
    "ShardOrderError",
    "Violation",
    "all_coxeter_elements",
    "all_permutations",
    "axiom_violations",
    "barring_of",
    "block_order",
    "blocks",
    "build_lattice",
    "chain_report",
    "combinable_pairs",
    "contains_barred_pattern",
    "count_decreasing_chains",
    "covers_up",
    "cycle_of",
    "descending_runs",
    "descents",
    "edge_label",
    "enumerate_shards",
    "identity",
    "increasing_chain",
    "intersect",
    "inversions",
    "is_c_sortable",
    "is_indecomposable",
    "is_noncrossing_preorder",
    "is_permutation_preorder",
    "join",
    "lam",
    "leq",
    "linear_coxeter",
    "lower_shards",
    "merged_pair",
    "mobius",
    "mu",
    "noncrossing_order_of_partition",
    "noncrossing_preorders",
    "parse_shard",
    "placements",
    "preorder_from_json",
    "preorder_to_json",
    "reversal",
    "reversed_coxeter",
    "sortable_permutations",
    "to_preorder",
]

__version__ = "0.1.0"
