# cython: language_level=3
# cython: boundscheck=False, wraparound=False
"""Compiled counting kernels.

Twin of ``graphcomp._core_py`` with the hot bit-twiddling loops lowered to
C. Masks are machine words (hence the 64-vertex limit); the partition
counts themselves stay Python integers so results are exact at any size.
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    int __builtin_ctzll(unsigned long long)


cdef void _grow(uint64_t* adj, uint64_t allowed, uint64_t block,
                uint64_t reach, uint64_t banned, list out):
    cdef uint64_t boundary = reach & allowed & ~block & ~banned
    cdef uint64_t low
    if boundary == 0:
        out.append(block)
        return
    low = boundary & (~boundary + 1)
    _grow(adj, allowed, block, reach, banned | low, out)
    _grow(adj, allowed, block | low, reach | adj[__builtin_ctzll(low)], banned, out)


cdef int _load_adj(object adj, uint64_t* buf) except -1:
    cdef int n = len(adj)
    cdef int i
    if n > 64:
        raise ValueError("compiled kernel is limited to 64 vertices")
    for i in range(n):
        buf[i] = adj[i]
    return n


def connected_subsets(adj, allowed, int anchor):
    """All masks of connected subsets of ``allowed`` containing ``anchor``."""
    cdef uint64_t buf[64]
    _load_adj(adj, buf)
    cdef uint64_t allowed_c = allowed
    if not (allowed_c >> anchor) & 1:
        raise ValueError(f"anchor {anchor} not in the allowed set")
    out = []
    _grow(buf, allowed_c, <uint64_t>1 << anchor, buf[anchor], 0, out)
    return out


cdef object _count(uint64_t* adj, uint64_t rest, dict memo):
    if rest == 0:
        return 1
    cached = memo.get(rest)
    if cached is not None:
        return cached
    cdef int anchor = __builtin_ctzll(rest)
    blocks = []
    _grow(adj, rest, <uint64_t>1 << anchor, adj[anchor], 0, blocks)
    total = 0
    cdef uint64_t block_c
    for block in blocks:
        block_c = block
        total = total + _count(adj, rest ^ block_c, memo)
    memo[rest] = total
    return total


def count_masks(adj, full):
    """Number of partitions of the mask ``full`` into connected blocks."""
    cdef uint64_t buf[64]
    _load_adj(adj, buf)
    memo = {}
    return _count(buf, <uint64_t>full, memo)
