"""Desk-scale ground truth: exact small Turán numbers and structural checks."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .canon import CanonicalCode, GraphFamily, canonical_form
from .containment import SearchBudgetExceeded, blowup_contains, subgraph_contains
from .generation import generate_graphs
from .graph import Graph

__all__ = [
    "TuranResult",
    "ex_bruteforce",
    "SaturationReport",
    "saturation_report",
    "random_maximal_lowerbound",
    "SymmetryWitness",
    "symmetric_check",
    "Decomposition",
    "dnpr_check",
    "verify_decomposition",
    "EX_SIZE_CAP",
    "DNPR_SIZE_CAP",
    "DNPR_R_CAP",
]

EX_SIZE_CAP = 9
DNPR_SIZE_CAP = 20
DNPR_R_CAP = 4


@dataclass
class TuranResult:
    n: int
    pattern_code: CanonicalCode
    max_edges: int
    witnesses: GraphFamily
    exhaustive: bool = True


def ex_bruteforce(n: int, pattern: Graph, *, max_n: int = EX_SIZE_CAP,
                  budget: Optional[int] = None) -> TuranResult:
    """``ex(n, pattern)`` and all extremal graphs, by exhaustive generation.

    Pattern-freeness is closed under subgraphs, so the generation tree is
    cut at the first graph containing the pattern.  A containment check that
    runs out of ``budget`` propagates :class:`SearchBudgetExceeded`.
    """
    if n > max_n:
        raise ValueError(f"exhaustive search is capped at n={max_n}; got n={n}")
    if n < 0:
        raise ValueError("order must be non-negative")
    if pattern.num_edges() == 0 and pattern.n <= n:
        raise ValueError("every graph on n vertices contains an edgeless pattern this small")

    if pattern.n > n:
        def free(g: Graph) -> bool:
            return True
    else:
        def free(g: Graph) -> bool:
            return subgraph_contains(g, pattern, budget=budget) is None

    best = -1
    witnesses: list[Graph] = []
    for g in generate_graphs(n, free):
        m = g.num_edges()
        if m > best:
            best, witnesses = m, []
        witnesses.append(g)
    return TuranResult(n, canonical_form(pattern), best, GraphFamily(witnesses))


@dataclass
class SaturationReport:
    """Outcome of adding each probed non-edge to ``graph``.

    ``probes`` lists ``(u, v, outcome)`` with outcome ``"creates"`` (the
    blow-up appears), ``"free"`` or ``"undecided"`` (budget exhausted).
    """

    k: int
    l: int
    p: int
    n: int
    edges: int
    base_free: Optional[bool]
    probes: list[tuple[int, int, str]] = field(default_factory=list)

    @property
    def counts(self) -> dict[str, int]:
        out = {"creates": 0, "free": 0, "undecided": 0}
        for _, _, outcome in self.probes:
            out[outcome] += 1
        return out

    def to_json(self) -> str:
        return json.dumps(
            {
                "k": self.k, "l": self.l, "p": self.p, "n": self.n, "edges": self.edges,
                "base_free": self.base_free, "counts": self.counts,
                "probes": [list(pr) for pr in self.probes],
            },
            sort_keys=True,
        )


def saturation_report(
    g: Graph,
    k: int,
    l: int,
    p: int,
    *,
    edges: Optional[Iterable[tuple[int, int]]] = None,
    sample: Optional[int] = None,
    seed: int = 0,
    budget: Optional[int] = None,
) -> SaturationReport:
    """Probe non-edges of ``g`` for whether adding them creates ``C_{k,l}^{p+1}``.

    By default every non-edge is probed; ``edges`` gives an explicit list
    and ``sample`` draws that many non-edges with ``random.Random(seed)``.
    Probes are reported in sorted order.
    """
    if edges is None:
        pool = list(g.non_edges())
        if sample is not None and sample < len(pool):
            pool = sorted(random.Random(seed).sample(pool, sample))
    else:
        pool = sorted((min(u, v), max(u, v)) for u, v in edges)
        for u, v in pool:
            if u == v or g.has_edge(u, v):
                raise ValueError(f"{u}-{v} is not a non-edge")
    try:
        base_free: Optional[bool] = blowup_contains(g, k, l, p, budget=budget) is None
    except SearchBudgetExceeded:
        base_free = None
    report = SaturationReport(k, l, p, g.n, g.num_edges(), base_free)
    for u, v in pool:
        try:
            hit = blowup_contains(g.add_edge(u, v), k, l, p, budget=budget)
            outcome = "free" if hit is None else "creates"
        except SearchBudgetExceeded:
            outcome = "undecided"
        report.probes.append((u, v, outcome))
    return report


def random_maximal_lowerbound(n: int, pattern: Graph, seed: int, iters: int = 1,
                              *, budget: Optional[int] = None) -> Graph:
    """Pattern-free graph grown by random greedy edge additions.

    Each of ``iters`` runs visits all vertex pairs in a seeded random order
    and keeps an edge when the graph stays pattern-free; the best run wins
    (earliest on ties).  A pair whose check runs out of ``budget`` is left
    out, so the result is always certified pattern-free.
    """
    rng = random.Random(seed)
    best: Optional[Graph] = None
    for _ in range(max(iters, 1)):
        pairs = list(combinations(range(n), 2))
        rng.shuffle(pairs)
        g = Graph.empty(n)
        for u, v in pairs:
            h = g.add_edge(u, v)
            try:
                if subgraph_contains(h, pattern, budget=budget) is None:
                    g = h
            except SearchBudgetExceeded:
                pass
        if best is None or g.num_edges() > best.num_edges():
            best = g
    return best


@dataclass(frozen=True)
class SymmetryWitness:
    """``omega`` maps each vertex of the first subgraph to its partner."""

    omega: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.omega)


def symmetric_check(g: Graph, h1: Iterable[int], h2: Iterable[int]) -> Optional[SymmetryWitness]:
    """Are the subgraphs induced on ``h1`` and ``h2`` symmetric in ``g``?

    Equal vertex sets are symmetric via the identity.  Otherwise the sets
    must be disjoint with no edges between them, and some isomorphism
    ``h1 -> h2`` must preserve adjacency to every vertex outside both.
    """
    a, b = sorted(set(h1)), sorted(set(h2))
    if a == b:
        return SymmetryWitness(tuple((x, x) for x in a))
    if len(a) != len(b) or set(a) & set(b):
        return None
    amask = sum(1 << x for x in a)
    bmask = sum(1 << x for x in b)
    if any(g.adj[x] & bmask for x in a):
        return None
    outside = ((1 << g.n) - 1) & ~amask & ~bmask
    sig = {x: (g.adj[x] & outside, (g.adj[x] & (amask | bmask)).bit_count()) for x in a + b}
    omega: dict[int, int] = {}
    taken = 0

    def extend(i: int) -> bool:
        nonlocal taken
        if i == len(a):
            return True
        x = a[i]
        for y in b:
            if taken >> y & 1 or sig[y] != sig[x]:
                continue
            if any(g.has_edge(x, w) != g.has_edge(y, omega[w]) for w in a[:i]):
                continue
            omega[x] = y
            taken |= 1 << y
            if extend(i + 1):
                return True
            taken &= ~(1 << y)
            del omega[x]
        return False

    if not extend(0):
        return None
    return SymmetryWitness(tuple(sorted(omega.items())))


@dataclass(frozen=True)
class Decomposition:
    """A witness that ``g`` lies in ``D(n, p, r)``.

    ``classes[i]`` is ``A_i``; ``blocks[i]`` lists the vertex sets of the
    pairwise symmetric copies of the block of class ``i``.  ``joined_to_all`` holds the
    exceptional vertices joined to all of ``G'``, ``no_neighbour_in[i]`` the
    remaining exceptional vertices with no neighbour in ``A_i``.
    """

    exceptional: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    blocks: tuple[tuple[tuple[int, ...], ...], ...]
    joined_to_all: tuple[int, ...]
    no_neighbour_in: tuple[tuple[int, ...], ...]


def _class_blocks(g: Graph, cls: Sequence[int]) -> Optional[tuple[tuple[int, ...], ...]]:
    sub = g.induced(list(cls))
    comps = [tuple(cls[i] for i in comp) for comp in sub.components()]
    first = canonical_form(g.induced(list(comps[0])))
    if any(canonical_form(g.induced(list(c))) != first for c in comps[1:]):
        return None
    for c1, c2 in combinations(comps, 2):
        if symmetric_check(g, c1, c2) is None:
            return None
    return tuple(comps)


def _finish(g: Graph, exceptional: Sequence[int], classes: list[tuple[int, ...]],
            blocks: list[tuple[tuple[int, ...], ...]]) -> Decomposition:
    order = sorted(range(len(classes)), key=lambda i: classes[i][0])
    classes = [classes[i] for i in order]
    blocks = [blocks[i] for i in order]
    rest = sum(1 << v for c in classes for v in c)
    joined = tuple(x for x in exceptional if g.adj[x] & rest == rest)
    class_masks = [sum(1 << v for v in c) for c in classes]
    isolated = tuple(
        tuple(x for x in exceptional if x not in joined and not g.adj[x] & m) for m in class_masks
    )
    return Decomposition(tuple(exceptional), tuple(classes), tuple(blocks), joined, isolated)


def dnpr_check(g: Graph, p: int, r: int, *, max_n: int = DNPR_SIZE_CAP,
               max_r: int = DNPR_R_CAP) -> Optional[Decomposition]:
    """Search for a ``D(n, p, r)`` decomposition of ``g``.

    Exceptional sets are tried by size, then lexicographically.  A first
    pass looks only for single-vertex blocks (``G'`` complete ``p``-partite);
    if none exists, a second pass allows arbitrary blocks.  Classes are
    unions of components of the complement of ``G'``, since vertices in
    different classes are always adjacent.
    """
    if g.n > max_n:
        raise ValueError(f"decomposition search is capped at n={max_n}")
    if r > max_r or r < 0:
        raise ValueError(f"need 0 <= r <= {max_r}")
    if p < 1:
        raise ValueError("need p >= 1")
    n = g.n
    lo, hi = n / p - r, n / p + r

    def size_ok(s: int) -> bool:
        return s > 0 and lo <= s <= hi

    candidates = [X for size in range(min(r, n) + 1) for X in combinations(range(n), size)]

    for X in candidates:
        R = [v for v in range(n) if v not in X]
        co = g.induced(R).complement()
        parts = [tuple(R[i] for i in comp) for comp in co.components()]
        if len(parts) != p or not all(size_ok(len(c)) for c in parts):
            continue
        if not all(g.is_independent(c) for c in parts):
            continue
        blocks = [_class_blocks(g, c) for c in parts]
        if all(b is not None for b in blocks):
            return _finish(g, X, parts, blocks)  # type: ignore[arg-type]

    for X in candidates:
        R = [v for v in range(n) if v not in X]
        co = g.induced(R).complement()
        parts = sorted(
            (tuple(R[i] for i in comp) for comp in co.components()),
            key=lambda c: (-len(c), c[0]),
        )
        if len(parts) < p:
            continue
        assign: list[list[tuple[int, ...]]] = []

        def place(i: int) -> Optional[Decomposition]:
            if i == len(parts):
                if len(assign) != p:
                    return None
                classes = [tuple(sorted(v for c in group for v in c)) for group in assign]
                if not all(size_ok(len(c)) for c in classes):
                    return None
                blocks = [_class_blocks(g, c) for c in classes]
                if any(b is None for b in blocks):
                    return None
                return _finish(g, X, classes, blocks)  # type: ignore[arg-type]
            if len(assign) + (len(parts) - i) < p:
                return None
            part = parts[i]
            for group in assign:
                if sum(map(len, group)) + len(part) <= hi:
                    group.append(part)
                    found = place(i + 1)
                    group.pop()
                    if found is not None:
                        return found
            if len(assign) < p and len(part) <= hi:
                assign.append([part])
                found = place(i + 1)
                assign.pop()
                if found is not None:
                    return found
            return None

        found = place(0)
        if found is not None:
            return found
    return None


def verify_decomposition(g: Graph, dec: Decomposition, p: int, r: int) -> bool:
    """Re-check a decomposition directly against the definition."""
    n = g.n
    if len(dec.exceptional) > r or len(dec.classes) != p:
        return False
    covered = sorted(dec.exceptional + tuple(v for c in dec.classes for v in c))
    if covered != list(range(n)):
        return False
    if any(abs(len(c) - n / p) > r for c in dec.classes):
        return False
    for c1, c2 in combinations(dec.classes, 2):
        if any(not g.has_edge(x, y) for x in c1 for y in c2):
            return False
    for cls, blocks in zip(dec.classes, dec.blocks):
        if sorted(v for b in blocks for v in b) != sorted(cls):
            return False
        for b in blocks:
            if not g.induced(list(b)).is_connected():
                return False
        for b1, b2 in combinations(blocks, 2):
            if any(g.has_edge(x, y) for x in b1 for y in b2):
                return False
            if symmetric_check(g, b1, b2) is None:
                return False
    rest = sum(1 << v for c in dec.classes for v in c)
    if set(dec.joined_to_all) != {x for x in dec.exceptional if g.adj[x] & rest == rest}:
        return False
    for cls, lonely in zip(dec.classes, dec.no_neighbour_in):
        m = sum(1 << v for v in cls)
        expect = {x for x in dec.exceptional if x not in dec.joined_to_all and not g.adj[x] & m}
        if set(lonely) != expect:
            return False
    return True

