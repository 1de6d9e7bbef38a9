"""Exact enumeration and counting of graph compositions.

A composition of a labelled graph is a partition of its vertices into
blocks that each induce a connected subgraph. The package provides the
graph types and family builders, a streaming enumerator, a memoized
bitmask counter (compiled kernel with a pure-Python fallback), a naive
cross-checking oracle, every relevant closed form and recurrence, and a
verification harness plus CLI tying them together.
"""

from .counting import (
    NAIVE_VERTEX_CAP,
    Composition,
    CountResult,
    connected_subsets_containing,
    count_compositions,
    enumerate_compositions,
    kernel_backend,
    naive_count_via_set_partitions,
)
from .formulas import (
    KmnCoefficientRow,
    LadderSplit,
    bell,
    closed_form_count,
    complementary_bell,
    cycle_count_via_lyndon,
    divisors,
    integer_compositions,
    kmn_coefficient_row,
    kmn_count,
    kmn_count_direct,
    ladder_count,
    ladder_split,
    lucas_number,
    lyndon_compositions,
    lyndon_count,
    mobius,
    sqrt10_convergent_denominator,
    wheel_count_formula,
    wheel_count_recurrence,
)
from .graphs import (
    FAMILY_NAMES,
    ORACLE_VERTEX_CAP,
    Graph,
    VertexSet,
    build_family,
    build_graph,
    complete_bipartite_graph,
    complete_graph,
    complete_minus_edge_graph,
    cycle_graph,
    delete_edges,
    disjoint_union,
    graph_from_edgelist,
    graph_from_json,
    graph_to_json,
    is_connected_induced,
    join_at_vertex,
    join_by_bridge,
    ladder_graph,
    load_graph,
    path_graph,
    petersen_graph,
    star_graph,
    tree_from_parents,
    wheel_graph,
)

__version__ = "0.1.0"
