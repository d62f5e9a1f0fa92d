"""Subgraph containment (non-induced), blow-up embedding and vertex covers.

Both searches can exploit twins of the host: if two unused host vertices
have the same neighbourhood apart from each other, swapping them is an
automorphism fixing the partial map, so only the lower one is tried.  For
the constructions studied here (a clique joined to a complete multipartite
graph) this collapses each class to a single choice.

A search that runs out of its node budget raises
:class:`SearchBudgetExceeded` instead of answering.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .canon import twin_classes
from .constructions import ConstructionSpec, LollipopParams, lollipop
from .graph import Graph, bits

__all__ = [
    "SearchBudgetExceeded",
    "Embedding",
    "BlowupEmbedding",
    "FreenessCertificate",
    "subgraph_contains",
    "blowup_contains",
    "verify_embedding",
    "verify_blowup_embedding",
    "max_bipartite_matching",
    "min_vertex_cover",
    "freeness_certificate",
    "VC_SIZE_CAP",
]

VC_SIZE_CAP = 24


class SearchBudgetExceeded(RuntimeError):
    """The search hit its node budget before reaching an answer."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes


@dataclass(frozen=True)
class Embedding:
    """``mapping[i]`` is the host image of pattern vertex ``i``."""

    mapping: tuple[int, ...]


@dataclass(frozen=True)
class BlowupEmbedding:
    """Witness for ``C_{k,l}^{p+1}`` in a host.

    ``base_map[i]`` is the image of lollipop vertex ``i``; ``apex_sets[j]``
    holds the ``p - 1`` extra clique vertices of the ``j``-th base edge, in
    the order of ``lollipop(k, l).edges()``.
    """

    k: int
    l: int
    p: int
    base_map: tuple[int, ...]
    apex_sets: tuple[tuple[int, ...], ...]

    def as_mapping(self) -> tuple[int, ...]:
        """The same witness as a map from the vertices of ``blowup(...).graph``."""
        return self.base_map + tuple(v for apex in self.apex_sets for v in apex)


def verify_embedding(host: Graph, pattern: Graph, mapping) -> bool:
    if len(mapping) != pattern.n or len(set(mapping)) != pattern.n:
        return False
    if any(not 0 <= x < host.n for x in mapping):
        return False
    return all(host.has_edge(mapping[u], mapping[v]) for u, v in pattern.edges())


def verify_blowup_embedding(host: Graph, emb: BlowupEmbedding) -> bool:
    base = lollipop(emb.k, emb.l)
    base_edges = list(base.edges())
    if len(emb.base_map) != base.n or len(emb.apex_sets) != len(base_edges):
        return False
    images = list(emb.base_map) + [v for apex in emb.apex_sets for v in apex]
    if len(set(images)) != len(images) or any(not 0 <= v < host.n for v in images):
        return False
    for (a, b), apex in zip(base_edges, emb.apex_sets):
        if len(apex) != emb.p - 1:
            return False
        clique = [emb.base_map[a], emb.base_map[b], *apex]
        for i, x in enumerate(clique):
            for y in clique[i + 1:]:
                if not host.has_edge(x, y):
                    return False
    return True


def _twin_lower_masks(host: Graph) -> list[int]:
    rep = twin_classes(host)
    lower = [0] * host.n
    seen: dict[int, int] = {}
    for x in range(host.n):
        r = rep[x]
        lower[x] = seen.get(r, 0)
        seen[r] = lower[x] | (1 << x)
    return lower


def _pattern_order(pattern: Graph) -> list[int]:
    deg = pattern.degrees()
    order: list[int] = []
    placed = 0
    remaining = set(range(pattern.n))
    while remaining:
        best = max(
            remaining,
            key=lambda u: ((pattern.adj[u] & placed).bit_count(), deg[u], -u),
        )
        order.append(best)
        placed |= 1 << best
        remaining.remove(best)
    return order


class _Counter:
    __slots__ = ("nodes", "budget")

    def __init__(self, budget: Optional[int]):
        self.nodes = 0
        self.budget = budget

    def tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise SearchBudgetExceeded(self.nodes)


def subgraph_contains(
    host: Graph,
    pattern: Graph,
    *,
    budget: Optional[int] = None,
    host_symmetry: bool = True,
) -> Optional[Embedding]:
    """Find a copy of ``pattern`` in ``host`` (not necessarily induced).

    Returns a verified :class:`Embedding`, or None when no copy exists.
    Pattern vertices are matched most-connected first; every assignment
    immediately narrows the candidate sets of the pattern neighbours still
    unmatched (intersection of host neighbourhoods) and backtracks as soon
    as one of them empties.
    """
    np_ = pattern.n
    if np_ == 0:
        return Embedding(())
    if np_ > host.n or pattern.num_edges() > host.num_edges():
        return None
    hadj = host.adj
    hdeg = host.degrees()
    pdeg = pattern.degrees()
    # the i-th largest pattern degree cannot exceed the i-th largest host degree
    if any(a > b for a, b in zip(sorted(pdeg, reverse=True), sorted(hdeg, reverse=True))):
        return None
    order = _pattern_order(pattern)
    rank = {u: i for i, u in enumerate(order)}
    later_nbrs = [[w for w in bits(pattern.adj[u]) if rank[w] > rank[u]] for u in range(np_)]
    domains = []
    for u in range(np_):
        mask = 0
        for x in range(host.n):
            if hdeg[x] >= pdeg[u]:
                mask |= 1 << x
        domains.append(mask)
    lower = _twin_lower_masks(host) if host_symmetry else [0] * host.n
    mapping = [-1] * np_
    counter = _Counter(budget)

    def dfs(i: int, used: int, dom: list[int]) -> bool:
        counter.tick()
        if i == np_:
            return True
        u = order[i]
        cand = dom[u] & ~used
        for x in bits(cand):
            if lower[x] & ~used:
                continue
            bx = 1 << x
            now_used = used | bx
            new = dom
            ok = True
            if later_nbrs[u]:
                new = list(dom)
                for w in later_nbrs[u]:
                    d = new[w] & hadj[x]
                    if not d & ~now_used:
                        ok = False
                        break
                    new[w] = d
            if ok:
                mapping[u] = x
                if dfs(i + 1, now_used, new):
                    return True
        mapping[u] = -1
        return False

    if not dfs(0, 0, domains):
        return None
    emb = Embedding(tuple(mapping))
    if not verify_embedding(host, pattern, emb.mapping):
        raise AssertionError("search produced an invalid embedding")
    return emb


def _has_clique(adj, mask: int, r: int) -> bool:
    if r <= 0:
        return True
    if mask.bit_count() < r:
        return False
    for x in bits(mask):
        mask &= ~(1 << x)
        if _has_clique(adj, mask & adj[x], r - 1):
            return True
    return False


def _cliques(adj, mask: int, r: int, taken: int, lower: list[int]):
    """Yield ``r``-cliques inside ``mask`` as (tuple, bitmask), lowest twins only.

    ``taken`` holds vertices already used elsewhere; a vertex is skipped if
    one of its lower twins is neither taken nor in the clique so far.
    """
    if r == 0:
        yield (), 0
        return
    for x in bits(mask):
        if lower[x] & ~taken:
            continue
        bx = 1 << x
        rest = mask & adj[x] & ~((bx << 1) - 1)
        for tail, tail_mask in _cliques(adj, rest, r - 1, taken | bx, lower):
            yield (x,) + tail, bx | tail_mask


def max_bipartite_matching(candidates: list[int]) -> Optional[list[int]]:
    """Assign distinct right-vertices to all left-vertices, or None.

    ``candidates[i]`` is the bitmask of right-vertices allowed for left
    vertex ``i``.  Augmenting paths (Kuhn); fine for a few dozen vertices.
    """
    owner: dict[int, int] = {}
    match = [-1] * len(candidates)

    def augment(i: int, seen: int) -> tuple[bool, int]:
        for x in bits(candidates[i] & ~seen):
            seen |= 1 << x
            j = owner.get(x)
            if j is None:
                owner[x] = i
                match[i] = x
                return True, seen
            ok, seen = augment(j, seen)
            if ok:
                owner[x] = i
                match[i] = x
                return True, seen
        return False, seen

    for i in range(len(candidates)):
        ok, _ = augment(i, 0)
        if not ok:
            return None
    return match


def blowup_contains(
    host: Graph,
    k: int,
    l: int,
    p: int,
    *,
    budget: Optional[int] = None,
    host_symmetry: bool = True,
) -> Optional[BlowupEmbedding]:
    """Find ``C_{k,l}^{p+1}`` in ``host`` as a lollipop plus disjoint apex sets.

    Phase one embeds the base lollipop using only host edges that lie in
    some ``(p+1)``-clique; phase two picks the ``p - 1`` apex vertices of
    every base edge.  For ``p = 2`` phase two is a bipartite matching of base
    edges to common neighbours, which decides it outright; for larger ``p``
    it backtracks, always extending the base edge with the fewest free
    common neighbours.

    Without host symmetry the cycle direction is fixed instead
    (``image(1) < image(k-1)``); the two reductions are not combined.
    """
    LollipopParams(k, l)
    if p < 2:
        raise ValueError("need p >= 2")
    base = lollipop(k, l)
    base_edges = list(base.edges())
    if host.n < base.n + len(base_edges) * (p - 1):
        return None
    hadj = host.adj
    counter = _Counter(budget)
    lower = _twin_lower_masks(host) if host_symmetry else [0] * host.n

    ok_adj = [0] * host.n
    for x, y in host.edges():
        if _has_clique(hadj, hadj[x] & hadj[y], p - 1):
            ok_adj[x] |= 1 << y
            ok_adj[y] |= 1 << x

    # base order: centre, cycle 1..k-1, then the path; back[i] = earlier neighbours
    order = list(range(base.n))
    back = [[w for w in bits(base.adj[v]) if w < v] for v in order]
    need = base.degrees()
    deg_ok = [m.bit_count() for m in ok_adj]
    base_map = [-1] * base.n

    def apex_phase(used: int) -> Optional[tuple[tuple[int, ...], ...]]:
        pairs = [(base_map[a], base_map[b]) for a, b in base_edges]
        common = [hadj[x] & hadj[y] & ~used for x, y in pairs]
        if p == 2:
            counter.tick()
            match = max_bipartite_matching(common)
            return None if match is None else tuple((x,) for x in match)
        chosen: list[Optional[tuple[int, ...]]] = [None] * len(pairs)

        def assign(remaining: list[int], taken: int) -> bool:
            counter.tick()
            if not remaining:
                return True
            best, best_size = -1, None
            for j in remaining:
                free = common[j] & ~taken
                if not _has_clique(hadj, free, p - 1):
                    return False
                size = free.bit_count()
                if best_size is None or size < best_size:
                    best, best_size = j, size
            rest = [j for j in remaining if j != best]
            for clique, mask in _cliques(hadj, common[best] & ~taken, p - 1, taken, lower):
                chosen[best] = clique
                if assign(rest, taken | mask):
                    return True
            chosen[best] = None
            return False

        if assign(list(range(len(pairs))), used):
            return tuple(chosen)  # type: ignore[arg-type]
        return None

    def place(i: int, used: int) -> Optional[tuple[tuple[int, ...], ...]]:
        counter.tick()
        if i == base.n:
            return apex_phase(used)
        v = order[i]
        cand = ~used & ((1 << host.n) - 1)
        for w in back[v]:
            cand &= ok_adj[base_map[w]]
        for x in bits(cand):
            if deg_ok[x] < need[v] or lower[x] & ~used:
                continue
            if not host_symmetry and v == k - 1 and x < base_map[1]:
                continue
            base_map[v] = x
            found = place(i + 1, used | (1 << x))
            if found is not None:
                return found
        base_map[v] = -1
        return None

    apex = place(0, 0)
    if apex is None:
        return None
    emb = BlowupEmbedding(k, l, p, tuple(base_map), apex)
    if not verify_blowup_embedding(host, emb):
        raise AssertionError("search produced an invalid blow-up embedding")
    return emb


def min_vertex_cover(g: Graph, *, max_n: int = VC_SIZE_CAP) -> tuple[int, list[int]]:
    """Exact minimum vertex cover by branch and bound.

    Branches on a maximum-degree vertex ``v``: either ``v`` is in the cover
    or all of ``N(v)`` is.  Pendant edges are resolved greedily by taking the
    non-leaf endpoint.
    """
    if g.n > max_n:
        raise ValueError(f"graph has {g.n} vertices, above the vertex-cover cap {max_n}")
    adj = g.adj
    best_mask = (1 << g.n) - 1
    best_size = g.n

    def solve(alive: int, cover: int, size: int) -> None:
        nonlocal best_mask, best_size
        while True:
            pendant = None
            top, top_deg, edges2 = -1, 0, 0
            for v in bits(alive):
                d = (adj[v] & alive).bit_count()
                edges2 += d
                if d == 1 and pendant is None:
                    pendant = v
                if d > top_deg:
                    top, top_deg = v, d
            if top_deg == 0:
                if size < best_size:
                    best_size, best_mask = size, cover
                return
            # every cover vertex removes at most top_deg of the remaining edges
            if size + -(-(edges2 // 2) // top_deg) >= best_size:
                return
            if pendant is None:
                break
            u = (adj[pendant] & alive).bit_length() - 1
            cover |= 1 << u
            size += 1
            alive &= ~(1 << u)
        nbrs = adj[top] & alive
        solve(alive & ~(1 << top), cover | (1 << top), size + 1)
        solve(alive & ~nbrs & ~(1 << top), cover | nbrs, size + nbrs.bit_count())

    solve((1 << g.n) - 1, 0, 0)
    return best_size, list(bits(best_mask))


@dataclass(frozen=True)
class FreenessCertificate:
    """Why ``spec`` cannot host ``C_{k,l}^{p+1}``.

    ``kind == "clique-count"``: every ``(p+1)``-clique of the host meets
    ``Q`` (all but one for ``H'``) and a vertex of ``Q`` lies in at most three
    cliques of the blow-up (the centre) and otherwise at most two, so at most
    ``budget = 2(|Q|-1) + 3`` (``+1`` for ``H'``) of the ``demand = k + l``
    cliques can be placed.

    ``kind == "vertex-cover"``: the cliques would force ``Q`` (plus one
    endpoint of the extra edge for ``H'``) to contain a vertex cover of
    ``C_{k,l}``; ``budget`` is that size and ``demand`` the minimum cover.
    """

    host: ConstructionSpec
    k: int
    l: int
    p: int
    kind: str
    q_size: int
    budget: int
    demand: int

    @property
    def valid(self) -> bool:
        return self.budget < self.demand


def freeness_certificate(
    spec: ConstructionSpec, k: int, l: int, p: int
) -> Optional[FreenessCertificate]:
    """Counting or vertex-cover certificate that ``realize(spec)`` is blow-up free.

    The parity of ``(k, l)`` picks the argument: ``k`` odd and ``l`` even
    uses the vertex cover, every other case the clique count.  Returns None
    when the chosen inequality fails, which says nothing about containment.
    """
    if spec.variant not in ("H", "Hprime"):
        raise ValueError("certificates exist only for H and H' hosts")
    if spec.p != p:
        raise ValueError(f"host has {spec.p} classes but the blow-up uses p={p}")
    LollipopParams(k, l)
    q_size = spec.q - 1
    extra = 1 if spec.variant == "Hprime" else 0
    if k % 2 == 1 and l % 2 == 0:
        demand, _ = min_vertex_cover(lollipop(k, l))
        cert = FreenessCertificate(spec, k, l, p, "vertex-cover", q_size, q_size + extra, demand)
    else:
        budget = (2 * (q_size - 1) + 3 if q_size else 0) + extra
        cert = FreenessCertificate(spec, k, l, p, "clique-count", q_size, budget, k + l)
    return cert if cert.valid else None
