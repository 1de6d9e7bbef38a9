"""Exact enumeration and counting of graph compositions.

A composition of a graph is a partition of its vertex set into blocks,
each of which induces a connected subgraph. Three independent routes are
provided: a streaming enumerator, a memoized bitmask counter (the fast
path, backed by the selected kernel), and a deliberately naive oracle
that filters every set partition. The three agree; the test suite leans
on that.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._kernel import connected_subsets as _kernel_subsets
from ._kernel import count_masks as _kernel_count
from ._kernel import kernel_backend
from .graphs import ORACLE_VERTEX_CAP, Graph, VertexSet, _as_mask, is_connected_induced

#: Largest vertex count the set-partition oracle accepts (B(12) is ~4.2M).
NAIVE_VERTEX_CAP = 12

__all__ = [
    "Composition",
    "CountResult",
    "NAIVE_VERTEX_CAP",
    "connected_subsets_containing",
    "count_compositions",
    "enumerate_compositions",
    "kernel_backend",
    "naive_count_via_set_partitions",
]


@dataclass(frozen=True)
class Composition:
    """A partition of V(G) into connected blocks, ordered by minimum element."""

    blocks: tuple[VertexSet, ...]

    @classmethod
    def from_masks(cls, masks) -> "Composition":
        return cls(tuple(VertexSet.from_mask(m) for m in masks))

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    def __str__(self) -> str:
        return "|".join(",".join(str(v) for v in block) for block in self.blocks)


@dataclass(frozen=True)
class CountResult:
    """An exact composition count plus a fingerprint of the counted graph."""

    value: int
    num_vertices: int
    num_edges: int


def _check_cap(g: Graph):
    if g.num_vertices > ORACLE_VERTEX_CAP:
        raise ValueError(
            f"graph has {g.num_vertices} vertices; the engine caps at {ORACLE_VERTEX_CAP}"
        )


def connected_subsets_containing(g: Graph, allowed, anchor: int):
    """Yield every connected subset S with ``anchor in S <= allowed``.

    Duplicate-free and deterministic; smaller sets come out before their
    supersets along each growth branch.
    """
    _check_cap(g)
    g._check_vertex(anchor)
    allowed_mask = _as_mask(allowed)
    if allowed_mask >> g.num_vertices:
        raise ValueError("allowed set contains indices outside the graph")
    for mask in _kernel_subsets(g.adjacency_masks, allowed_mask, anchor):
        yield VertexSet.from_mask(mask)


def enumerate_compositions(g: Graph):
    """Stream every composition of ``g`` exactly once, in canonical form.

    The block containing the least unassigned vertex is chosen first, so
    blocks are emitted sorted by minimum element. The empty graph yields
    the single empty composition.
    """
    _check_cap(g)
    return _enumerate(g.adjacency_masks, (1 << g.num_vertices) - 1)


def _enumerate(adj, full: int):
    blocks: list[int] = []

    def peel(rest: int):
        if not rest:
            yield Composition.from_masks(blocks)
            return
        anchor = (rest & -rest).bit_length() - 1
        for block in _kernel_subsets(adj, rest, anchor):
            blocks.append(block)
            yield from peel(rest ^ block)
            blocks.pop()

    yield from peel(full)


def count_compositions(g: Graph) -> CountResult:
    """Exact composition count via the memoized bitmask kernel."""
    _check_cap(g)
    value = _kernel_count(g.adjacency_masks, (1 << g.num_vertices) - 1)
    return CountResult(value=value, num_vertices=g.num_vertices, num_edges=g.num_edges)


def _restricted_growth_strings(n: int):
    """All restricted growth strings of length n (one per set partition)."""
    if n == 0:
        yield []
        return
    word = [0] * n

    def extend(i: int, top: int):
        if i == n:
            yield word
            return
        for label in range(top + 2):
            word[i] = label
            yield from extend(i + 1, top if label <= top else label)

    yield from extend(1, 0)


def naive_count_via_set_partitions(g: Graph) -> int:
    """Independent counting oracle: filter all set partitions of V(G).

    Enumerates every partition via restricted growth strings and keeps
    those whose blocks all induce connected subgraphs. Shares nothing with
    the memoized counter beyond ``is_connected_induced``.
    """
    n = g.num_vertices
    if n > NAIVE_VERTEX_CAP:
        raise ValueError(
            f"graph has {n} vertices; the set-partition oracle caps at {NAIVE_VERTEX_CAP}"
        )
    total = 0
    for word in _restricted_growth_strings(n):
        masks = [0] * (max(word) + 1 if word else 0)
        for vertex, label in enumerate(word):
            masks[label] |= 1 << vertex
        if all(is_connected_induced(g, VertexSet.from_mask(m)) for m in masks):
            total += 1
    return total
