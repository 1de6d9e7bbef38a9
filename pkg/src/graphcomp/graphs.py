"""Labelled simple graphs with bitset adjacency: families, surgery, file I/O.

Vertices are 0-based contiguous integers. Adjacency is stored as one
neighbor bitmask per vertex, which keeps the counting kernels branch-free
and lets a vertex set fit in a single machine word for graphs of up to
64 vertices (the cap enforced by the enumeration engines).
"""

from __future__ import annotations

import json
from collections.abc import Iterable

#: Largest vertex count accepted by the exact enumeration/counting engines.
ORACLE_VERTEX_CAP = 64


class VertexSet:
    """Immutable set of vertex indices backed by an integer bitmask.

    Supports union, intersection, difference, cardinality, membership,
    minimum element, and ascending iteration.
    """

    __slots__ = ("mask",)

    def __init__(self, vertices: Iterable[int] = ()):
        mask = 0
        for v in vertices:
            if v < 0:
                raise ValueError(f"vertex index must be nonnegative, got {v}")
            mask |= 1 << v
        self.mask = mask

    @classmethod
    def from_mask(cls, mask: int) -> "VertexSet":
        if mask < 0:
            raise ValueError("bitmask must be nonnegative")
        s = object.__new__(cls)
        s.mask = mask
        return s

    def __contains__(self, v) -> bool:
        return isinstance(v, int) and v >= 0 and (self.mask >> v) & 1 == 1

    def __iter__(self):
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, VertexSet):
            return self.mask == other.mask
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.mask)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.mask & ~other.mask)

    def issubset(self, other: "VertexSet") -> bool:
        return self.mask & ~other.mask == 0

    def min(self) -> int:
        """Smallest member; the anchor used when peeling off blocks."""
        if not self.mask:
            raise ValueError("minimum of an empty vertex set")
        return (self.mask & -self.mask).bit_length() - 1

    def __repr__(self) -> str:
        return f"VertexSet([{', '.join(str(v) for v in self)}])"


def _as_mask(s) -> int:
    if isinstance(s, VertexSet):
        return s.mask
    return VertexSet(s).mask


class Graph:
    """Immutable labelled simple undirected graph.

    Safe to share between threads: nothing is mutated after construction.
    """

    __slots__ = ("num_vertices", "num_edges", "_adj")

    def __init__(self, num_vertices: int, edges: Iterable[tuple[int, int]] = ()):
        if num_vertices < 0:
            raise ValueError(f"vertex count must be nonnegative, got {num_vertices}")
        adj = [0] * num_vertices
        seen = set()
        count = 0
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise ValueError(
                    f"edge ({u}, {v}) out of range for {num_vertices} vertices"
                )
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add(key)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            count += 1
        self.num_vertices = num_vertices
        self.num_edges = count
        self._adj = tuple(adj)

    @property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks (the kernel-facing representation)."""
        return self._adj

    def neighbors(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return VertexSet.from_mask(self._adj[v])

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return (self._adj[u] >> v) & 1 == 1

    def edges(self):
        """Edges as (u, v) pairs with u < v, ascending."""
        for u in range(self.num_vertices):
            rest = self._adj[u] >> (u + 1)
            while rest:
                low = rest & -rest
                yield (u, u + low.bit_length())
                rest ^= low

    def vertex_set(self) -> VertexSet:
        return VertexSet.from_mask((1 << self.num_vertices) - 1)

    def _check_vertex(self, v: int):
        if not (0 <= v < self.num_vertices):
            raise ValueError(f"vertex {v} out of range for {self.num_vertices} vertices")

    def __eq__(self, other) -> bool:
        if isinstance(other, Graph):
            return self.num_vertices == other.num_vertices and self._adj == other._adj
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num_vertices, self._adj))

    def __repr__(self) -> str:
        return f"Graph(num_vertices={self.num_vertices}, num_edges={self.num_edges})"


def build_graph(num_vertices: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validated construction from an edge list (order irrelevant)."""
    return Graph(num_vertices, edges)


def is_connected_induced(g: Graph, s) -> bool:
    """True iff the subgraph induced by the nonempty set ``s`` is connected."""
    mask = _as_mask(s)
    if mask == 0:
        raise ValueError("connectivity of the empty vertex set is undefined")
    if mask >> g.num_vertices:
        raise ValueError("vertex set contains indices outside the graph")
    adj = g._adj
    seen = mask & -mask
    frontier = seen
    while frontier:
        reach = 0
        m = frontier
        while m:
            low = m & -m
            reach |= adj[low.bit_length() - 1]
            m ^= low
        frontier = reach & mask & ~seen
        seen |= frontier
    return seen == mask


# ---------------------------------------------------------------------------
# Graph surgery


def delete_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    """Remove the listed edges; every one must be present."""
    doomed = set()
    for u, v in edges:
        if not (0 <= u < g.num_vertices and 0 <= v < g.num_vertices) or not g.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) not present")
        doomed.add((u, v) if u < v else (v, u))
    remaining = [e for e in g.edges() if e not in doomed]
    return Graph(g.num_vertices, remaining)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Side-by-side union; vertices of ``g2`` are shifted by ``|V(g1)|``."""
    n1 = g1.num_vertices
    edges = list(g1.edges())
    edges.extend((u + n1, v + n1) for u, v in g2.edges())
    return Graph(n1 + g2.num_vertices, edges)


def join_at_vertex(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    """Glue the two graphs by identifying ``v1`` with ``v2``.

    Labels of ``g1`` are kept; the remaining vertices of ``g2`` take fresh
    labels in ascending order.
    """
    g1._check_vertex(v1)
    g2._check_vertex(v2)
    n1 = g1.num_vertices
    relabel = {}
    nxt = n1
    for w in range(g2.num_vertices):
        if w == v2:
            relabel[w] = v1
        else:
            relabel[w] = nxt
            nxt += 1
    edges = list(g1.edges())
    edges.extend((relabel[u], relabel[w]) for u, w in g2.edges())
    return Graph(n1 + g2.num_vertices - 1, edges)


def join_by_bridge(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    """Disjoint union plus the single cut edge from ``v1`` to ``v2``."""
    g1._check_vertex(v1)
    g2._check_vertex(v2)
    g = disjoint_union(g1, g2)
    return Graph(g.num_vertices, list(g.edges()) + [(v1, g1.num_vertices + v2)])


# ---------------------------------------------------------------------------
# Graph families


def path_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError("path needs n >= 0")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError("complete graph needs n >= 0")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_minus_edge_graph(n: int) -> Graph:
    """Complete graph on n vertices with the edge (0, 1) removed."""
    if n < 2:
        raise ValueError("complete graph minus an edge needs n >= 2")
    return delete_edges(complete_graph(n), [(0, 1)])


def star_graph(n: int) -> Graph:
    """Center at vertex 0 joined to n-1 outer vertices."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    return Graph(n, [(0, v) for v in range(1, n)])


def tree_from_parents(parents: Iterable[int]) -> Graph:
    """Tree on len(parents)+1 vertices; ``parents[k]`` is the parent of k+1.

    Requires parents[k] <= k, so vertex labels are a topological order.
    """
    parents = list(parents)
    for k, p in enumerate(parents):
        if not (0 <= p <= k):
            raise ValueError(f"parent of vertex {k + 1} must lie in 0..{k}, got {p}")
    return Graph(len(parents) + 1, [(p, k + 1) for k, p in enumerate(parents)])


def wheel_graph(n: int) -> Graph:
    """Hub at index n-1 joined to a rim cycle on 0..n-2.

    Degenerate small cases: n=1 is a single vertex, n=2 a single edge,
    n=3 a triangle.
    """
    if n < 1:
        raise ValueError("wheel needs n >= 1")
    rim = n - 1
    edges = [(i, (i + 1) % rim) for i in range(rim)] if rim >= 3 else []
    if rim == 2:
        edges = [(0, 1)]
    edges.extend((v, n - 1) for v in range(rim))
    return Graph(n, edges)


def ladder_graph(n: int) -> Graph:
    """2 x n grid; rung i occupies vertices 2i and 2i+1."""
    if n < 1:
        raise ValueError("ladder needs n >= 1")
    edges = [(2 * i, 2 * i + 1) for i in range(n)]
    for i in range(n - 1):
        edges.append((2 * i, 2 * i + 2))
        edges.append((2 * i + 1, 2 * i + 3))
    return Graph(2 * n, edges)


def complete_bipartite_graph(m: int, n: int) -> Graph:
    """Parts 0..m-1 and m..m+n-1 with all mn cross edges."""
    if m < 0 or n < 0:
        raise ValueError("complete bipartite graph needs m, n >= 0")
    return Graph(m + n, [(u, m + v) for u in range(m) for v in range(n)])


def petersen_graph() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges.extend((5 + i, 5 + (i + 2) % 5) for i in range(5))
    edges.extend((i, i + 5) for i in range(5))
    return Graph(10, edges)


FAMILY_NAMES = (
    "path",
    "cycle",
    "complete",
    "complete-minus-edge",
    "star",
    "tree",
    "wheel",
    "ladder",
    "kmn",
    "petersen",
)


def build_family(kind: str, n: int | None = None, m: int | None = None,
                 parents: Iterable[int] | None = None) -> Graph:
    """Build a named family member; see FAMILY_NAMES for the accepted kinds."""
    kind = kind.strip().lower().replace("_", "-")
    if kind == "complete-bipartite":
        kind = "kmn"
    if kind == "tree":
        if parents is None:
            raise ValueError("tree requires a parent list")
        return tree_from_parents(parents)
    if kind == "petersen":
        return petersen_graph()
    if kind == "kmn":
        if m is None or n is None:
            raise ValueError("kmn requires both m and n")
        return complete_bipartite_graph(m, n)
    if n is None:
        raise ValueError(f"{kind} requires a size n")
    builders = {
        "path": path_graph,
        "cycle": cycle_graph,
        "complete": complete_graph,
        "complete-minus-edge": complete_minus_edge_graph,
        "star": star_graph,
        "wheel": wheel_graph,
        "ladder": ladder_graph,
    }
    if kind not in builders:
        raise ValueError(f"unknown family {kind!r}")
    return builders[kind](n)


# ---------------------------------------------------------------------------
# File formats


def graph_to_json(g: Graph) -> str:
    return json.dumps({"vertices": g.num_vertices, "edges": [list(e) for e in g.edges()]})


def graph_from_json(text: str) -> Graph:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON graph: {exc}") from None
    if not isinstance(payload, dict):
        raise ValueError("JSON graph must be an object")
    try:
        num_vertices = payload["vertices"]
        edges = payload["edges"]
    except KeyError as exc:
        raise ValueError(f"JSON graph missing key {exc}") from None
    if not isinstance(num_vertices, int) or isinstance(num_vertices, bool):
        raise ValueError("'vertices' must be an integer")
    pairs = []
    for e in edges:
        if not (isinstance(e, (list, tuple)) and len(e) == 2):
            raise ValueError(f"edge entry {e!r} is not a pair")
        pairs.append((e[0], e[1]))
    return Graph(num_vertices, pairs)


def graph_from_edgelist(text: str) -> Graph:
    """Parse the plain-text format: 'vertices N' header, then 'u v' lines.

    Lines starting with '#' and blank lines are ignored.
    """
    num_vertices = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if num_vertices is None:
            if len(fields) != 2 or fields[0] != "vertices":
                raise ValueError(f"line {lineno}: expected 'vertices N' header")
            num_vertices = int(fields[1])
            continue
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected 'u v'")
        edges.append((int(fields[0]), int(fields[1])))
    if num_vertices is None:
        raise ValueError("missing 'vertices N' header")
    return Graph(num_vertices, edges)


def load_graph(path: str, fmt: str | None = None) -> Graph:
    """Read a graph file; format inferred from the suffix unless forced."""
    if fmt is None:
        fmt = "json" if str(path).endswith(".json") else "edgelist"
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if fmt == "json":
        return graph_from_json(text)
    if fmt == "edgelist":
        return graph_from_edgelist(text)
    raise ValueError(f"unknown graph format {fmt!r}")
