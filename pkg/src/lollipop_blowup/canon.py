"""Canonical labelling, isomorphism testing and isomorphism-free families.

The default method is individualisation/refinement: colour refinement to an
equitable ordered partition, then branch on the first smallest non-singleton
cell and keep the least adjacency code over all leaves.  Two prunings keep
the tree small:

* only one vertex per twin class is individualised in a cell (swapping two
  twins is an automorphism that fixes everything already individualised);
* graphs whose graph or complement is disconnected are labelled component by
  component, components sorted by their own canonical codes.

``method="exhaustive"`` minimises the code over all ``n!`` orders.  It is
slow and exists as an independent oracle for tests.
"""

from __future__ import annotations

from itertools import permutations
from typing import Callable, Iterable, Iterator, Sequence, Union

from .graph import Graph, bits

__all__ = [
    "CanonicalCode",
    "canonical_labeling",
    "canonical_form",
    "is_isomorphic",
    "twin_classes",
    "GraphFamily",
    "CANON_SIZE_CAP",
    "EXHAUSTIVE_SIZE_CAP",
]

#: ``(n, code)``; the code packs the upper triangle of the relabelled matrix.
CanonicalCode = tuple[int, int]

CANON_SIZE_CAP = 128
EXHAUSTIVE_SIZE_CAP = 10


def _code(adj: Sequence[int], order: Sequence[int]) -> int:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    code = 0
    for j, v in enumerate(order):
        row = 0
        for u in bits(adj[v]):
            if pos[u] < j:
                row |= 1 << pos[u]
        code = (code << j) | row
    return code


def twin_classes(g: Graph) -> list[int]:
    """Twin-class representative (the least member) of every vertex.

    ``u`` and ``v`` are twins when ``N(u) - {v} == N(v) - {u}``.  Open twins
    (non-adjacent) and closed twins (adjacent) never mix, so each relation is
    an equivalence and together they partition the vertices.
    """
    rep = list(range(g.n))
    first_open: dict[int, int] = {}
    first_closed: dict[int, int] = {}
    for v, row in enumerate(g.adj):
        closed = row | (1 << v)
        if row in first_open:
            rep[v] = first_open[row]
        elif closed in first_closed:
            rep[v] = first_closed[closed]
        else:
            first_open[row] = v
            first_closed[closed] = v
    return rep


def _refine(adj: Sequence[int], cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new: list[tuple[int, ...]] = []
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            sig = {v: tuple((adj[v] & m).bit_count() for m in masks) for v in cell}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                new.append(cell)
                continue
            for key in keys:
                new.append(tuple(v for v in cell if sig[v] == key))
        if len(new) == len(cells):
            return new
        cells = new


def _search_labeling(g: Graph) -> list[int]:
    adj = g.adj
    twin = twin_classes(g)
    best_code = None
    best_order: list[int] = []

    def descend(cells: list[tuple[int, ...]]) -> None:
        nonlocal best_code, best_order
        cells = _refine(adj, cells)
        target = -1
        size = g.n + 1
        for i, cell in enumerate(cells):
            if 1 < len(cell) < size:
                target, size = i, len(cell)
        if target < 0:
            order = [cell[0] for cell in cells]
            code = _code(adj, order)
            if best_code is None or code < best_code:
                best_code, best_order = code, order
            return
        cell = cells[target]
        tried = set()
        for v in cell:
            if twin[v] in tried:
                continue
            tried.add(twin[v])
            rest = tuple(u for u in cell if u != v)
            descend(cells[:target] + [(v,), rest] + cells[target + 1:])

    descend([tuple(range(g.n))])
    return best_order


def _labeling_by_parts(g: Graph, parts: list[list[int]], within: Graph) -> list[int]:
    keyed = []
    for part in parts:
        sub = within.induced(part)
        lab = canonical_labeling(sub)
        keyed.append(((len(part), _code(sub.adj, lab)), [part[i] for i in lab]))
    keyed.sort(key=lambda item: item[0])
    return [v for _, order in keyed for v in order]


def canonical_labeling(g: Graph, *, max_n: int = CANON_SIZE_CAP) -> list[int]:
    """A vertex order ``order`` such that ``g.relabel(order)`` is canonical.

    Isomorphic graphs give identical relabelled graphs.
    """
    if g.n > max_n:
        raise ValueError(f"graph has {g.n} vertices, above the canonicalisation cap {max_n}")
    if g.n <= 1:
        return list(range(g.n))
    comps = g.components()
    if len(comps) > 1:
        return _labeling_by_parts(g, comps, g)
    co = g.complement()
    co_comps = co.components()
    if len(co_comps) > 1:
        return _labeling_by_parts(g, co_comps, co)
    return _search_labeling(g)


def _exhaustive_code(g: Graph) -> int:
    if g.n > EXHAUSTIVE_SIZE_CAP:
        raise ValueError(
            f"exhaustive canonicalisation is capped at {EXHAUSTIVE_SIZE_CAP} vertices"
        )
    return min(_code(g.adj, order) for order in permutations(range(g.n)))


def canonical_form(g: Graph, method: str = "refine", *, max_n: int = CANON_SIZE_CAP) -> CanonicalCode:
    """Isomorphism-invariant key of ``g``.

    Codes from the two methods are not comparable with each other; mix them
    only through :func:`is_isomorphic`.
    """
    if method == "refine":
        return g.n, _code(g.adj, canonical_labeling(g, max_n=max_n))
    if method == "exhaustive":
        return g.n, _exhaustive_code(g)
    raise ValueError(f"unknown canonicalisation method {method!r}")


def is_isomorphic(g: Graph, h: Graph, method: str = "refine") -> bool:
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g, method) == canonical_form(h, method)


GraphOrCode = Union[Graph, CanonicalCode]


class GraphFamily:
    """Graphs up to isomorphism, keyed by canonical code.

    The first graph added for an isomorphism class is kept as its
    representative.  ``partial`` marks families produced by a search that
    could not decide every candidate.
    """

    def __init__(self, graphs: Iterable[Graph] = (), *, partial: bool = False):
        self._members: dict[CanonicalCode, Graph] = {}
        self.partial = partial
        for g in graphs:
            self.add(g)

    def add(self, g: Graph) -> bool:
        """Insert ``g``; return False if an isomorphic member already exists."""
        code = canonical_form(g)
        if code in self._members:
            return False
        self._members[code] = g
        return True

    def codes(self) -> frozenset:
        return frozenset(self._members)

    def get(self, code: CanonicalCode) -> Graph:
        return self._members[code]

    def filter(self, keep: Callable[[Graph], bool]) -> "GraphFamily":
        out = GraphFamily(partial=self.partial)
        out._members = {c: g for c, g in self._members.items() if keep(g)}
        return out

    def issubset(self, other: "GraphFamily") -> bool:
        return self.codes() <= other.codes()

    def __contains__(self, item: GraphOrCode) -> bool:
        code = canonical_form(item) if isinstance(item, Graph) else item
        return code in self._members

    def __iter__(self) -> Iterator[Graph]:
        for code in sorted(self._members):
            yield self._members[code]

    def __len__(self) -> int:
        return len(self._members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GraphFamily):
            return NotImplemented
        return self.codes() == other.codes()

    def __repr__(self) -> str:
        flag = ", partial" if self.partial else ""
        return f"GraphFamily({len(self)} graphs{flag})"
