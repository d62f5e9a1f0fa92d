"""Edge blow-ups, vertex splits, split families and decomposition families."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Optional, Sequence

from .canon import GraphFamily
from .containment import SearchBudgetExceeded, subgraph_contains
from .generation import generate_graphs
from .graph import Graph, complete_multipartite, disjoint_union, is_k_colorable, join

__all__ = [
    "BlowupResult",
    "blowup",
    "blowup_edge_count",
    "split_vertex",
    "vertex_split",
    "split_family",
    "decomposition_host",
    "decomposition_member_check",
    "decomposition_family_bruteforce",
    "SPLIT_SIZE_CAP",
]

SPLIT_SIZE_CAP = 12


@dataclass(frozen=True)
class BlowupResult:
    graph: Graph
    base_map: tuple[int, ...]
    edge_cliques: tuple[tuple[int, ...], ...]
    base_edges: tuple[tuple[int, int], ...]


def blowup(base: Graph, p: int) -> BlowupResult:
    """Replace every edge of ``base`` by a ``K_{p+1}`` with fresh vertices.

    Base vertices keep their labels; the ``p - 1`` fresh vertices of the
    ``j``-th edge (in ``base.edges()`` order) are
    ``n + j(p-1), ..., n + (j+1)(p-1) - 1``.
    """
    if p < 2:
        raise ValueError("need p >= 2")
    base_edges = tuple(base.edges())
    n = base.n + len(base_edges) * (p - 1)
    edges = []
    cliques = []
    nxt = base.n
    for u, v in base_edges:
        fresh = tuple(range(nxt, nxt + p - 1))
        nxt += p - 1
        members = (u, v) + fresh
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                edges.append((a, b))
        cliques.append(fresh)
    return BlowupResult(
        Graph.from_edges(n, edges), tuple(range(base.n)), tuple(cliques), base_edges
    )


def blowup_edge_count(base: Graph, p: int) -> int:
    """Edges of the blow-up: ``C(p+1, 2)`` per base edge.

    Two base edges share at most one vertex and fresh vertices are private,
    so no edge lies in two of the cliques.
    """
    return base.num_edges() * comb(p + 1, 2)


def split_vertex(g: Graph, v: int) -> Graph:
    """Split ``v`` (degree >= 2) into ``d(v)`` pendant vertices.

    ``v`` keeps its edge to its lowest neighbour; copies for the other
    neighbours are appended as new vertices, so other labels are unchanged.
    """
    nbrs = g.neighbors(v)
    if len(nbrs) < 2:
        raise ValueError(f"vertex {v} has degree {len(nbrs)}; splitting needs degree >= 2")
    edges = [(a, b) for a, b in g.edges() if v not in (a, b)]
    edges.append((v, nbrs[0]))
    for i, u in enumerate(nbrs[1:]):
        edges.append((g.n + i, u))
    return Graph.from_edges(g.n + len(nbrs) - 1, edges)


def vertex_split(base: Graph, U: Iterable[int], order: Optional[Sequence[int]] = None) -> Graph:
    """Split every vertex of ``U``, one at a time (``order`` or ascending)."""
    U = sorted(set(U))
    for v in U:
        if not 0 <= v < base.n:
            raise ValueError(f"vertex {v} not in graph")
        if base.degree(v) < 2:
            raise ValueError(f"vertex {v} has degree {base.degree(v)}; splitting needs degree >= 2")
    seq = U if order is None else list(order)
    if sorted(seq) != U:
        raise ValueError("order must list exactly the vertices of U")
    g = base
    for v in seq:
        g = split_vertex(g, v)
    return g


def split_family(base: Graph, mode: str = "all", p: Optional[int] = None,
                 *, max_n: int = SPLIT_SIZE_CAP) -> GraphFamily:
    """All graphs from splitting an admissible vertex set, up to isomorphism.

    ``mode``: ``"all"`` (any set), ``"independent"`` (independent sets) or
    ``"chi"`` (sets inducing a subgraph of chromatic number at most ``p``).
    Only vertices of degree >= 2 can be split; the empty set is allowed.
    """
    if base.n > max_n:
        raise ValueError(f"base has {base.n} vertices; subset enumeration is capped at {max_n}")
    if mode == "chi":
        if p is None or p < 1:
            raise ValueError("mode 'chi' needs p >= 1")
    elif mode not in ("all", "independent"):
        raise ValueError(f"unknown split mode {mode!r}")
    splittable = [v for v in range(base.n) if base.degree(v) >= 2]
    fam = GraphFamily()
    for sel in range(1 << len(splittable)):
        U = [v for i, v in enumerate(splittable) if sel >> i & 1]
        if mode == "independent" and not base.is_independent(U):
            continue
        if mode == "chi" and not is_k_colorable(base.induced(U), p):
            continue
        fam.add(vertex_split(base, U))
    return fam


def decomposition_host(M: Graph, p: int, t: int) -> Graph:
    """``(M u I_t) v K_{p-1}(t, ..., t)``; ``M`` keeps labels ``0..n(M)-1``."""
    if p < 2:
        raise ValueError("need p >= 2")
    if t < 0:
        raise ValueError("need t >= 0")
    return join(disjoint_union(M, Graph.empty(t)), complete_multipartite([t] * (p - 1)))


def decomposition_member_check(M: Graph, L: Graph, p: int, t: int,
                               *, budget: Optional[int] = None) -> bool:
    """Does ``L`` embed in ``(M u I_t) v K_{p-1}(t, ..., t)``?

    Raises :class:`SearchBudgetExceeded` rather than guessing when the
    search is cut off.
    """
    return subgraph_contains(decomposition_host(M, p, t), L, budget=budget) is not None


def decomposition_family_bruteforce(
    L: Graph,
    p: int,
    max_m_vertices: int = 8,
    t_max: Optional[int] = None,
    *,
    budget: Optional[int] = None,
) -> GraphFamily:
    """Minimal graphs ``M`` (no isolated vertices, at most ``max_m_vertices``).

    Membership is monotone in ``t`` and in ``M``, so only ``t = t_max`` is
    tested.  Candidates come out of the generator in order of edge count; a
    candidate containing an already accepted member is a non-minimal
    member and is skipped.  Each accepted member is then re-checked to fail
    after deleting any single edge.  If any check is cut off by ``budget``
    the family is returned with ``partial=True``.
    """
    if t_max is None:
        t_max = L.n
    if t_max < L.n:
        raise ValueError(f"t_max must be at least |V(L)| = {L.n}")
    found: list[Graph] = []
    fam = GraphFamily()
    for g in generate_graphs(max_m_vertices):
        M = g.without_isolated()
        if any(subgraph_contains(M, member) is not None for member in found):
            continue
        try:
            if not decomposition_member_check(M, L, p, t_max, budget=budget):
                continue
            minimal = not any(
                decomposition_member_check(M.remove_edge(a, b).without_isolated(), L, p, t_max,
                                           budget=budget)
                for a, b in M.edges()
            )
        except SearchBudgetExceeded:
            fam.partial = True
            continue
        if minimal:
            found.append(M)
            fam.add(M)
    return fam
