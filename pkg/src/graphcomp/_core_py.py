"""Pure-Python counting kernels.

Fallback twin of the compiled module ``graphcomp._core``; both expose the
same two functions with identical output, including ordering. Masks are
plain integers, counts are exact (arbitrary precision).
"""

from __future__ import annotations


def connected_subsets(adj, allowed: int, anchor: int) -> list[int]:
    """All masks S with anchor in S, S within ``allowed``, S inducing a
    connected subgraph of the graph described by the neighbor masks ``adj``.

    Grows a block from the anchor one boundary vertex at a time, always
    branching on the least eligible boundary vertex: first the branch that
    bans it, then the branch that adds it. Every subset is produced exactly
    once, in a deterministic order, without bookkeeping of seen sets.
    """
    if not (allowed >> anchor) & 1:
        raise ValueError(f"anchor {anchor} not in the allowed set")
    out: list[int] = []

    def grow(block: int, reach: int, banned: int):
        boundary = reach & allowed & ~block & ~banned
        if not boundary:
            out.append(block)
            return
        low = boundary & -boundary
        grow(block, reach, banned | low)
        grow(block | low, reach | adj[low.bit_length() - 1], banned)

    grow(1 << anchor, adj[anchor], 0)
    return out


def count_masks(adj, full: int) -> int:
    """Number of partitions of ``full`` into connected blocks.

    Memoized on the set of still-unassigned vertices: peel off every
    connected block containing the least remaining vertex and recurse on
    the rest.
    """
    memo = {0: 1}

    def count(rest: int) -> int:
        cached = memo.get(rest)
        if cached is not None:
            return cached
        anchor = (rest & -rest).bit_length() - 1
        total = 0
        for block in connected_subsets(adj, rest, anchor):
            total += count(rest ^ block)
        memo[rest] = total
        return total

    return count(full)
