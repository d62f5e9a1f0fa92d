"""Isomorph-free generation of graphs on n vertices by canonical augmentation.

Graphs are grown one edge at a time.  A child ``G + e`` is kept only if
deleting its canonical edge (the last edge in canonical order) gives a graph
isomorphic to the parent, so every isomorphism class is produced from
exactly one parent class; duplicates from the same parent are dropped by
code.
"""

from __future__ import annotations

from typing import Callable, Iterator, Optional

from .canon import _code, canonical_form, canonical_labeling
from .graph import Graph, bits

__all__ = ["generate_graphs", "graph_counts"]


def _canonical_edge(g: Graph, order: list[int]) -> tuple[int, int]:
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    for j in range(g.n - 1, 0, -1):
        v = order[j]
        earlier = [pos[u] for u in bits(g.adj[v]) if pos[u] < j]
        if earlier:
            return order[max(earlier)], v
    raise ValueError("graph has no edges")


def generate_graphs(
    n: int, accept: Optional[Callable[[Graph], bool]] = None
) -> Iterator[Graph]:
    """Yield one graph per isomorphism class on ``n`` vertices, by edge count.

    ``accept`` prunes the generation tree: rejected graphs are neither yielded
    nor extended.  It must be closed under taking subgraphs (e.g. "is
    H-free"), otherwise classes whose canonical parent is rejected are lost.
    """
    root = Graph.empty(n)
    if accept is not None and not accept(root):
        return
    level = [root]
    while level:
        yield from level
        nxt = []
        for parent in level:
            parent_code = canonical_form(parent)
            seen = set()
            for u, v in parent.non_edges():
                child = parent.add_edge(u, v)
                order = canonical_labeling(child)
                code = _code(child.adj, order)
                if code in seen:
                    continue
                a, b = _canonical_edge(child, order)
                if {a, b} != {u, v}:
                    if canonical_form(child.remove_edge(a, b)) != parent_code:
                        continue
                seen.add(code)
                if accept is None or accept(child):
                    nxt.append(child)
        level = nxt


def graph_counts(n: int) -> dict[int, int]:
    """Number of isomorphism classes on ``n`` vertices per edge count."""
    counts: dict[int, int] = {}
    for g in generate_graphs(n):
        m = g.num_edges()
        counts[m] = counts.get(m, 0) + 1
    return counts
