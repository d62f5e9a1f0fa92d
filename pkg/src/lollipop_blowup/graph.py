"""Immutable simple graphs on vertices ``0..n-1`` with bitset adjacency.

Every graph here is undirected, loopless and without multi-edges.  Row ``v``
of :attr:`Graph.adj` is an ``int`` whose bit ``u`` is set iff ``uv`` is an
edge.  Operations never mutate a graph; they build a new one.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "make_basic",
    "disjoint_union",
    "copies",
    "join",
    "complete_multipartite",
    "turan",
    "turan_part_sizes",
    "is_k_colorable",
    "chromatic_number",
    "bits",
]


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Undirected simple graph.

    Build one with :meth:`from_edges` (or the generators in this module);
    the raw constructor validates symmetry and irreflexivity.
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        adj = tuple(int(row) for row in adj)
        for v, row in enumerate(adj):
            if row & ~full or row < 0:
                raise ValueError(f"row {v} references a vertex outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at {v}-{u}")
        self.n = n
        self.adj = adj
        self._hash = None

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # skips validation; callers guarantee a symmetric loopless tuple
        g = object.__new__(cls)
        g.n = n
        g.adj = adj
        g._hash = None
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} outside 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, [full & ~(1 << v) for v in range(n)])

    # -- basic queries -------------------------------------------------
    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self.adj):
            for v in bits(row >> (u + 1)):
                yield u, u + 1 + v

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def non_edges(self) -> Iterator[tuple[int, int]]:
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            missing = full & ~row & ~((1 << (u + 1)) - 1)
            for v in bits(missing):
                yield u, v

    def is_independent(self, vertices: Iterable[int]) -> bool:
        mask = 0
        for v in vertices:
            mask |= 1 << v
        return all(not (self.adj[v] & mask) for v in bits(mask))

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = 0
        out = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(list(bits(comp)))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    # -- derived graphs ------------------------------------------------
    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError("self-loop")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph._trusted(self.n, tuple(adj))

    def remove_edge(self, u: int, v: int) -> "Graph":
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph._trusted(self.n, tuple(adj))

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        rows = tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj))
        return Graph._trusted(self.n, rows)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on ``vertices``; vertex ``vertices[i]`` becomes ``i``."""
        pos = {v: i for i, v in enumerate(vertices)}
        if len(pos) != len(vertices):
            raise ValueError("repeated vertex")
        adj = [0] * len(vertices)
        for i, v in enumerate(vertices):
            row = 0
            for u in bits(self.adj[v]):
                j = pos.get(u)
                if j is not None:
                    row |= 1 << j
            adj[i] = row
        return Graph._trusted(len(vertices), tuple(adj))

    def delete_vertices(self, vertices: Iterable[int]) -> "Graph":
        drop = set(vertices)
        return self.induced([v for v in range(self.n) if v not in drop])

    def without_isolated(self) -> "Graph":
        return self.induced([v for v in range(self.n) if self.adj[v]])

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``order[i]`` is new vertex ``i``."""
        if sorted(order) != list(range(self.n)):
            raise ValueError("order must be a permutation of the vertices")
        return self.induced(order)

    # -- dunder --------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def make_basic(kind: str, size: int) -> Graph:
    """Named small graphs, following the usual order conventions.

    ``path``/``cycle``/``complete``/``independent`` take the order;
    ``star`` takes the number of leaves (``S_n`` has ``n + 1`` vertices)
    and ``matching`` the number of edges (``M_k`` has ``2k`` vertices).
    """
    if size < 1:
        raise ValueError(f"size must be positive, got {size}")
    if kind == "path":
        return Graph.from_edges(size, ((i, i + 1) for i in range(size - 1)))
    if kind == "cycle":
        if size < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return Graph.from_edges(size, ((i, (i + 1) % size) for i in range(size)))
    if kind == "star":
        return Graph.from_edges(size + 1, ((0, i) for i in range(1, size + 1)))
    if kind == "complete":
        return Graph.complete(size)
    if kind == "independent":
        return Graph.empty(size)
    if kind == "matching":
        return Graph.from_edges(2 * size, ((2 * i, 2 * i + 1) for i in range(size)))
    raise ValueError(f"unknown graph kind {kind!r}")


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``g`` on ``0..n(g)-1`` and ``h`` shifted by ``n(g)``, no cross edges."""
    shift = g.n
    return Graph._trusted(g.n + h.n, tuple(list(g.adj) + [row << shift for row in h.adj]))


def copies(k: int, h: Graph) -> Graph:
    if k < 1:
        raise ValueError("need at least one copy")
    out = h
    for _ in range(k - 1):
        out = disjoint_union(out, h)
    return out


def join(g: Graph, h: Graph) -> Graph:
    shift = g.n
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << h.n) - 1) << shift
    adj = [row | h_mask for row in g.adj] + [(row << shift) | g_mask for row in h.adj]
    return Graph._trusted(g.n + h.n, tuple(adj))


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph; parts are consecutive label blocks."""
    if any(s < 0 for s in sizes):
        raise ValueError("part sizes must be non-negative")
    n = sum(sizes)
    full = (1 << n) - 1
    adj = []
    start = 0
    for s in sizes:
        part = ((1 << s) - 1) << start
        adj.extend([full & ~part] * s)
        start += s
    return Graph._trusted(n, tuple(adj))


def turan_part_sizes(n: int, p: int) -> list[int]:
    """Part sizes of ``T_p(n)``, larger parts first."""
    if p < 1:
        raise ValueError("the Turán graph needs p >= 1 parts")
    if n < 0:
        raise ValueError("order must be non-negative")
    q, r = divmod(n, p)
    return [q + 1] * r + [q] * (p - r)


def turan(n: int, p: int) -> Graph:
    return complete_multipartite(turan_part_sizes(n, p))


def is_k_colorable(g: Graph, k: int) -> bool:
    """Exact k-colourability by backtracking (small graphs only)."""
    if g.n == 0:
        return True
    if k <= 0:
        return False
    if k == 1:
        return g.num_edges() == 0
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    color = [-1] * g.n

    def place(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {color[u] for u in bits(g.adj[v]) if color[u] >= 0}
        # a fresh colour is only worth trying once
        used = max(color) + 1
        for c in range(min(k, used + 1)):
            if c not in taken:
                color[v] = c
                if place(i + 1):
                    return True
        color[v] = -1
        return False

    return place(0)


def chromatic_number(g: Graph) -> int:
    for k in range(g.n + 1):
        if is_k_colorable(g, k):
            return k
    return g.n  # unreachable
